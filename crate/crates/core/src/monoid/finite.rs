//! Finite monoids with anti-involution, given by tables.

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite monoid `M` with an anti-involution `m -> m̄`:
/// `m̄̄ = m`, `(ab)‾ = b̄ ā` and `ē = e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteMonoid {
    names: Vec<String>,
    unit: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteMonoid {
    /// Builds and validates a monoid.
    pub fn new(names: Vec<String>, unit: usize, mul: Vec<Vec<usize>>, inv: Vec<usize>) -> Result<Self> {
        validate(&names, unit, &mul, &inv)?;
        Ok(Self { names, unit, mul, inv })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// The anti-involution.
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn product(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements.into_iter().fold(self.unit, |acc, m| self.mul(acc, m))
    }

    pub fn power(&self, a: usize, n: usize) -> usize {
        (0..n).fold(self.unit, |acc, _| self.mul(acc, a))
    }

    /// First pair with `ab != ba`, if any.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        self.elements()
            .flat_map(|a| (a + 1..self.size()).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    pub fn require_commutative(&self) -> Result<()> {
        match self.noncommuting_pair() {
            Some((a, b)) => Err(Error::NotCommutative { a, b }),
            None => Ok(()),
        }
    }

    pub fn two_sided_inverse(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    /// Every element invertible.
    pub fn is_group(&self) -> bool {
        self.elements().all(|a| self.two_sided_inverse(a).is_some())
    }

    /// Elements with `m = m̄`.
    pub fn self_conjugate(&self) -> Vec<usize> {
        self.elements().filter(|&m| self.inv(m) == m).collect()
    }
}

/// Exhaustive check of the monoid and anti-involution axioms; the error
/// carries a counterexample.
pub fn validate(names: &[String], unit: usize, mul: &[Vec<usize>], inv: &[usize]) -> Result<()> {
    let n = names.len();
    if n == 0 {
        return Err(Error::MonoidAxiom("a monoid has at least one element".into()));
    }
    if unit >= n {
        return Err(Error::MonoidAxiom(format!("unit {unit} is not an element")));
    }
    if mul.len() != n || mul.iter().any(|row| row.len() != n) {
        return Err(Error::MonoidAxiom(format!("multiplication table must be {n}x{n}")));
    }
    if inv.len() != n {
        return Err(Error::MonoidAxiom(format!("involution table must have {n} entries")));
    }
    if let Some((a, b)) = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| mul[a][b] >= n) {
        return Err(Error::MonoidAxiom(format!("{a}*{b} is not an element")));
    }
    if let Some(a) = (0..n).find(|&a| inv[a] >= n) {
        return Err(Error::MonoidAxiom(format!("inv({a}) is not an element")));
    }
    if let Some(a) = (0..n).find(|&a| mul[unit][a] != a || mul[a][unit] != a) {
        return Err(Error::MonoidAxiom(format!("{unit} is not a two-sided unit: fails on {a}")));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(Error::MonoidAxiom(format!("associativity fails on ({a}, {b}, {c})")));
                }
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| inv[inv[a]] != a) {
        return Err(Error::MonoidAxiom(format!("involution is not involutive on {a}")));
    }
    for a in 0..n {
        for b in 0..n {
            if inv[mul[a][b]] != mul[inv[b]][inv[a]] {
                return Err(Error::AntiInvolution { a, b });
            }
        }
    }
    if inv[unit] != unit {
        return Err(Error::MonoidAxiom("involution does not fix the unit".into()));
    }
    Ok(())
}

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::new(named(&["e"]), 0, vec![vec![0]], vec![0]).expect("trivial monoid")
}

/// The cyclic group of order `n` with the identity involution.
pub fn cyclic(n: usize) -> FiniteMonoid {
    let names = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteMonoid::new(names, 0, mul, (0..n).collect()).expect("cyclic group")
}

/// Permutations of three letters, `(a*b)(x) = a(b(x))`, lexicographic
/// order, with the involution `g -> g^{-1}`.
pub fn symmetric3() -> FiniteMonoid {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let names = named(&["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("permutation");
    let mul = perms
        .iter()
        .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect();
    let inv = perms
        .iter()
        .map(|a| {
            let mut r = [0; 3];
            for (x, &y) in a.iter().enumerate() {
                r[y] = x;
            }
            index(r)
        })
        .collect();
    FiniteMonoid::new(names, 0, mul, inv).expect("symmetric group")
}

/// `{0, 1}` under `max`, unit 0, identity involution.
pub fn max_monoid() -> FiniteMonoid {
    FiniteMonoid::new(named(&["0", "1"]), 0, vec![vec![0, 1], vec![1, 1]], vec![0, 1]).expect("max monoid")
}

/// The standard test monoids, by name.
pub fn corpus() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("trivial", trivial()),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("S3", symmetric3()),
        ("max01", max_monoid()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid() {
        for (name, m) in corpus() {
            assert_eq!(m.inv(m.unit()), m.unit(), "{name}");
        }
        assert!(symmetric3().is_group());
        assert!(!max_monoid().is_group());
    }

    #[test]
    fn s3_with_identity_involution_is_rejected() {
        let s3 = symmetric3();
        let err = validate(s3.names(), 0, &s3.mul, &(0..6).collect::<Vec<_>>()).unwrap_err();
        let Error::AntiInvolution { a, b } = err else { panic!("{err}") };
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
    }

    #[test]
    fn s3_inversion() {
        let s3 = symmetric3();
        for g in s3.elements() {
            assert_eq!(s3.mul(g, s3.inv(g)), s3.unit());
        }
        // e and the three transpositions
        assert_eq!(s3.self_conjugate().len(), 4);
    }

    #[test]
    fn broken_tables_are_reported() {
        let names = named(&["a", "b"]);
        assert!(validate(&names, 0, &[vec![0, 1], vec![1, 1]], &[0, 1]).is_ok());
        // no unit
        assert!(matches!(validate(&names, 0, &[vec![1, 1], vec![1, 1]], &[0, 1]), Err(Error::MonoidAxiom(_))));
        // involution fails to fix the unit
        assert!(validate(&names, 0, &[vec![0, 1], vec![1, 0]], &[1, 0]).is_err());
    }
}
