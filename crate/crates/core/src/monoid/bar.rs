//! Bar constructions of a finite monoid.

use crate::error::{Error, Result};
use crate::simplicial::bisimplicial::{materialize_bi, ConstantVertical, LabeledBi};
use crate::simplicial::{
    materialize, materialize_real, Labeled, RealSimplicialObject, RealStructure, SimplicialMap, SimplicialObject,
};

use super::finite::FiniteMonoid;

/// All words of length `len` over `0..size`, lexicographically.
pub fn words(size: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..size).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// `BM`: `B_n M = M^n`. Inner faces multiply neighbours, outer faces drop
/// an end, degeneracies insert the unit. The real structure is
/// `w(m_1, ..., m_n) = (m̄_n, ..., m̄_1)`.
#[derive(Clone, Copy, Debug)]
pub struct Bar<'a>(pub &'a FiniteMonoid);

impl SimplicialObject for Bar<'_> {
    type Simplex = Vec<usize>;

    fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        words(self.0.size(), n)
    }

    fn face(&self, n: usize, i: usize, x: &Vec<usize>) -> Vec<usize> {
        let mut y = x.clone();
        if i == 0 {
            y.remove(0);
        } else if i == n {
            y.pop();
        } else {
            let merged = self.0.mul(y[i - 1], y[i]);
            y[i - 1] = merged;
            y.remove(i);
        }
        y
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Vec<usize>) -> Vec<usize> {
        let mut y = x.clone();
        y.insert(j, self.0.unit());
        y
    }
}

impl RealSimplicialObject for Bar<'_> {
    fn reverse(&self, _n: usize, x: &Vec<usize>) -> Vec<usize> {
        x.iter().rev().map(|&m| self.0.inv(m)).collect()
    }
}

pub fn bar(m: &FiniteMonoid, d: usize) -> Labeled<Vec<usize>> {
    materialize(&Bar(m), d).expect("bar construction of a valid monoid")
}

/// `BM` with its real structure, validated against every relation.
pub fn real_bar(m: &FiniteMonoid, d: usize) -> Result<(Labeled<Vec<usize>>, RealStructure)> {
    materialize_real(&Bar(m), d)
}

/// A set with a right action `x · m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightAction {
    names: Vec<String>,
    /// `act[x][m] = x · m`
    act: Vec<Vec<usize>>,
}

impl RightAction {
    pub fn new(m: &FiniteMonoid, names: Vec<String>, act: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if act.len() != n || act.iter().any(|row| row.len() != m.size() || row.iter().any(|&y| y >= n)) {
            return Err(Error::ActionLaw(format!("right action table must be {n}x{} with entries below {n}", m.size())));
        }
        for x in 0..n {
            if act[x][m.unit()] != x {
                return Err(Error::ActionLaw(format!("unit does not fix {x}")));
            }
            for a in m.elements() {
                for b in m.elements() {
                    if act[act[x][a]][b] != act[x][m.mul(a, b)] {
                        return Err(Error::ActionLaw(format!("(x a) b != x (a b) for x={x}, a={a}, b={b}")));
                    }
                }
            }
        }
        Ok(Self { names, act })
    }

    pub fn point(m: &FiniteMonoid) -> Self {
        Self {
            names: vec!["*".into()],
            act: vec![vec![0; m.size()]],
        }
    }

    /// `M` acting on itself from the right.
    pub fn regular(m: &FiniteMonoid) -> Self {
        Self {
            names: m.names().to_vec(),
            act: m.elements().map(|x| m.elements().map(|a| m.mul(x, a)).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn act(&self, x: usize, m: usize) -> usize {
        self.act[x][m]
    }
}

/// A set with a left action `m · y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAction {
    names: Vec<String>,
    /// `act[m][y] = m · y`
    act: Vec<Vec<usize>>,
}

impl LeftAction {
    pub fn new(m: &FiniteMonoid, names: Vec<String>, act: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if act.len() != m.size() || act.iter().any(|row| row.len() != n || row.iter().any(|&y| y >= n)) {
            return Err(Error::ActionLaw(format!("left action table must be {}x{n} with entries below {n}", m.size())));
        }
        for y in 0..n {
            if act[m.unit()][y] != y {
                return Err(Error::ActionLaw(format!("unit does not fix {y}")));
            }
            for a in m.elements() {
                for b in m.elements() {
                    if act[a][act[b][y]] != act[m.mul(a, b)][y] {
                        return Err(Error::ActionLaw(format!("a (b y) != (a b) y for a={a}, b={b}, y={y}")));
                    }
                }
            }
        }
        Ok(Self { names, act })
    }

    pub fn point(m: &FiniteMonoid) -> Self {
        Self {
            names: vec!["*".into()],
            act: vec![vec![0]; m.size()],
        }
    }

    /// `M` acting on itself from the left.
    pub fn regular(m: &FiniteMonoid) -> Self {
        Self {
            names: m.names().to_vec(),
            act: m.elements().map(|a| m.elements().map(|y| m.mul(a, y)).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn act(&self, m: usize, y: usize) -> usize {
        self.act[m][y]
    }

    pub fn name(&self, y: usize) -> &str {
        &self.names[y]
    }
}

/// `M^{C_2} = {m : m = m̄}` with the twisted action `(m, n) -> m n m̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedFixedSet {
    /// Monoid elements, in increasing order.
    pub elements: Vec<usize>,
    pub action: LeftAction,
}

impl TwistedFixedSet {
    pub fn new(m: &FiniteMonoid) -> Result<Self> {
        let elements = m.self_conjugate();
        let index = |x: usize| elements.iter().position(|&y| y == x);
        let act = m
            .elements()
            .map(|a| {
                elements
                    .iter()
                    .map(|&n| {
                        let image = m.mul(m.mul(a, n), m.inv(a));
                        index(image).ok_or_else(|| Error::ActionLaw(format!("{a} n {a}̄ leaves the fixed set for n = {n}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let names = elements.iter().map(|&e| m.name(e).to_string()).collect();
        let action = LeftAction::new(m, names, act)?;
        Ok(Self { elements, action })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Position of a monoid element in the fixed set.
    pub fn index_of(&self, m: usize) -> Option<usize> {
        self.elements.iter().position(|&x| x == m)
    }
}

/// `B(X, M, Y)`: level `p` is `X × M^p × Y`, written `[x, m_1, ..., m_p, y]`.
/// `d_0` acts on `x`, `d_p` acts on `y`.
#[derive(Clone, Copy, Debug)]
pub struct TwoSidedBar<'a> {
    pub x: &'a RightAction,
    pub m: &'a FiniteMonoid,
    pub y: &'a LeftAction,
}

impl SimplicialObject for TwoSidedBar<'_> {
    type Simplex = Vec<usize>;

    fn simplices(&self, p: usize) -> Vec<Vec<usize>> {
        let middles = words(self.m.size(), p);
        let mut out = Vec::with_capacity(self.x.size() * middles.len() * self.y.size());
        for x in 0..self.x.size() {
            for w in &middles {
                for y in 0..self.y.size() {
                    let mut s = Vec::with_capacity(p + 2);
                    s.push(x);
                    s.extend_from_slice(w);
                    s.push(y);
                    out.push(s);
                }
            }
        }
        out
    }

    fn face(&self, p: usize, i: usize, s: &Vec<usize>) -> Vec<usize> {
        let mut t = s.clone();
        if i == 0 {
            t[0] = self.x.act(s[0], s[1]);
            t.remove(1);
        } else if i == p {
            t[p + 1] = self.y.act(s[p], s[p + 1]);
            t.remove(p);
        } else {
            t[i] = self.m.mul(s[i], s[i + 1]);
            t.remove(i + 1);
        }
        t
    }

    fn degeneracy(&self, _p: usize, j: usize, s: &Vec<usize>) -> Vec<usize> {
        let mut t = s.clone();
        t.insert(j + 1, self.m.unit());
        t
    }
}

pub fn two_sided_bar(x: &RightAction, m: &FiniteMonoid, y: &LeftAction, d: usize) -> Labeled<Vec<usize>> {
    materialize(&TwoSidedBar { x, m, y }, d).expect("two-sided bar construction of valid actions")
}

/// `B(X, M, Y) -> B M`, forgetting the two end labels.
pub fn bar_projection(x: &RightAction, m: &FiniteMonoid, y: &LeftAction, d: usize) -> Result<SimplicialMap> {
    let total = two_sided_bar(x, m, y, d);
    let base = bar(m, d);
    SimplicialMap::from_fn(total.set.clone(), base.set.clone(), |n, s| {
        let label = total.label(n, s);
        base.id(n, &label[1..=n].to_vec()).expect("middle word is a bar simplex")
    })
}

/// The same construction viewed as a bisimplicial set, constant in the
/// vertical direction; its diagonal is [`two_sided_bar`].
pub fn two_sided_bar_bisimplicial(
    x: &RightAction,
    m: &FiniteMonoid,
    y: &LeftAction,
    d: usize,
) -> LabeledBi<Vec<usize>> {
    materialize_bi(&ConstantVertical(TwoSidedBar { x, m, y }), d, d).expect("two-sided bar construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{homology_through, AbelianGroup};
    use crate::monoid::finite::{corpus, cyclic, max_monoid, symmetric3, trivial};
    use crate::simplicial::diagonal;

    #[test]
    fn trivial_bar_is_a_point() {
        assert_eq!(bar(&trivial(), 3).set.counts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn nondegenerate_counts() {
        let c2 = bar(&cyclic(2), 4);
        let c3 = bar(&cyclic(3), 4);
        for n in 0..=4 {
            assert_eq!(c2.set.nondegenerate(n).len(), 1);
            assert_eq!(c3.set.nondegenerate(n).len(), 1 << n);
        }
    }

    #[test]
    fn real_bar_examples() {
        let (labeled, real) = real_bar(&cyclic(2), 2).unwrap();
        let gg = labeled.id(2, &vec![1, 1]).unwrap();
        assert_eq!(real.w(2, gg), gg);
        let s3 = symmetric3();
        let (labeled, real) = real_bar(&s3, 2).unwrap();
        for a in s3.elements() {
            for b in s3.elements() {
                let x = labeled.id(2, &vec![a, b]).unwrap();
                assert_eq!(labeled.label(2, real.w(2, x)), &vec![s3.inv(b), s3.inv(a)]);
            }
        }
    }

    #[test]
    fn real_bar_passes_for_corpus() {
        for (name, m) in corpus() {
            assert!(real_bar(&m, 3).is_ok(), "{name}");
        }
    }

    #[test]
    fn two_sided_bar_specializations() {
        let m = cyclic(3);
        let plain = two_sided_bar(&RightAction::point(&m), &m, &LeftAction::point(&m), 3);
        assert_eq!(plain.set, bar(&m, 3).set);
        let s3 = symmetric3();
        let fixed = TwistedFixedSet::new(&s3).unwrap();
        let b = two_sided_bar(&RightAction::point(&s3), &s3, &fixed.action, 2);
        for p in 0..=2 {
            assert_eq!(b.set.count(p), 6usize.pow(p as u32) * 4);
        }
    }

    #[test]
    fn free_two_sided_bar_is_acyclic() {
        let m = cyclic(2);
        let b = two_sided_bar(&RightAction::regular(&m), &m, &LeftAction::point(&m), 3);
        let h = homology_through(&b.set, 2).unwrap();
        assert_eq!(h, vec![AbelianGroup::free(1), AbelianGroup::trivial(), AbelianGroup::trivial()]);
    }

    #[test]
    fn projection_from_the_contractible_bar_is_a_homology_fibration() {
        let m = cyclic(2);
        let f = bar_projection(&RightAction::regular(&m), &m, &LeftAction::point(&m), 3).unwrap();
        let report = crate::simplicial::check_homology_fibration(&f, 2, None).unwrap();
        assert!(report.holds() && report.complete);
    }

    #[test]
    fn bisimplicial_diagonal_is_the_simplicial_bar() {
        let m = max_monoid();
        let fixed = TwistedFixedSet::new(&m).unwrap();
        let x = RightAction::regular(&m);
        let b = two_sided_bar_bisimplicial(&x, &m, &fixed.action, 2);
        assert_eq!(diagonal(&b.set, 2).unwrap(), two_sided_bar(&x, &m, &fixed.action, 2).set);
    }

    #[test]
    fn bad_actions_are_rejected() {
        let m = cyclic(2);
        // the nontrivial element must not act trivially on one side only
        assert!(LeftAction::new(&m, vec!["a".into(), "b".into()], vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(RightAction::new(&m, vec!["a".into()], vec![vec![0, 0]]).is_ok());
    }
}
