//! Explicit homology presentations and maps induced by simplicial maps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::{SimplicialMap, SimplicialSet};

use super::chains::{normalized_chains, ChainComplex};
use super::group::AbelianGroup;
use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;

/// `H_q` with chosen cycle representatives for its canonical generators and
/// a way to express any cycle in those generators.
///
/// Generators are ordered as in [`AbelianGroup`]: torsion summands first,
/// then free ones.
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    pub degree: usize,
    pub group: AbelianGroup,
    /// Cycles, in the nondegenerate basis of `C_q`.
    generators: Vec<Vec<BigInt>>,
    /// Rows give the generator coordinates of a cycle.
    reducer: IntegerMatrix,
    /// Order of each generator, zero for free ones.
    moduli: Vec<BigInt>,
}

impl HomologyPresentation {
    pub fn compute(c: &ChainComplex, q: usize) -> Result<Self> {
        let group = c.homology(q)?;
        if group.is_trivial() {
            return Ok(Self {
                degree: q,
                group,
                generators: vec![],
                reducer: IntegerMatrix::zeros(0, c.rank(q)),
                moduli: vec![],
            });
        }
        let dq = c.boundary(q).to_dense();
        let s1 = smith_normal_form(&dq);
        let r1 = s1.rank();
        let dim = c.rank(q);
        let kernel = s1.v.select_columns(r1..dim);
        let kernel_coords = s1.v_inv.select_rows(r1..dim);
        let relations = &kernel_coords * &c.boundary(q + 1).to_dense();
        let s2 = smith_normal_form(&relations);
        let k = dim - r1;
        let mut torsion_idx = vec![];
        let mut free_idx = vec![];
        for i in 0..k {
            match s2.invariants.get(i) {
                Some(d) if d.is_one() => {}
                Some(_) => torsion_idx.push(i),
                None => free_idx.push(i),
            }
        }
        let order: Vec<usize> = torsion_idx.iter().chain(&free_idx).copied().collect();
        let moduli: Vec<BigInt> = order
            .iter()
            .map(|&i| s2.invariants.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect();
        let generators = order
            .iter()
            .map(|&i| kernel.apply(&s2.u_inv.column(i)))
            .collect();
        let reducer = (&s2.u * &kernel_coords).select_rows(order.iter().copied());
        let found = AbelianGroup::from_invariants(free_idx.len(), torsion_idx.iter().map(|&i| s2.invariants[i].clone()));
        assert_eq!(found, group, "presentation disagrees with the invariant computation");
        Ok(Self {
            degree: q,
            group,
            generators,
            reducer,
            moduli,
        })
    }

    pub fn generator(&self, i: usize) -> &[BigInt] {
        &self.generators[i]
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    /// Generator coordinates of a cycle, torsion coordinates reduced.
    pub fn reduce(&self, cycle: &[BigInt]) -> Vec<BigInt> {
        let mut c = self.reducer.apply(cycle);
        for (x, m) in c.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *x = x.mod_floor(m);
            }
        }
        c
    }
}

/// Normalized chains and presentations `H_0..H_d` of one simplicial set.
#[derive(Clone, Debug)]
pub struct HomologyData {
    pub chains: ChainComplex,
    pub presentations: Vec<HomologyPresentation>,
}

impl HomologyData {
    pub fn compute(x: &SimplicialSet, d: usize) -> Result<Self> {
        let chains = normalized_chains(x, d)?;
        let presentations = (0..=d)
            .map(|q| HomologyPresentation::compute(&chains, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { chains, presentations })
    }

    pub fn groups(&self) -> Vec<AbelianGroup> {
        self.presentations.iter().map(|p| p.group.clone()).collect()
    }
}

/// A homomorphism between presented groups: column `j` holds the target
/// coordinates of the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyMap {
    pub degree: usize,
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub matrix: IntegerMatrix,
}

impl HomologyMap {
    fn target_moduli(&self) -> Vec<BigInt> {
        let mut m = self.target.torsion.clone();
        m.extend(std::iter::repeat_n(BigInt::zero(), self.target.free_rank));
        m
    }

    fn reduce_column(&self, col: &mut [BigInt]) {
        for (x, m) in col.iter_mut().zip(self.target_moduli()) {
            if !m.is_zero() {
                *x = x.mod_floor(&m);
            }
        }
    }

    /// Surjectivity: the columns together with the target relations span
    /// the whole coordinate lattice.
    pub fn is_surjective(&self) -> bool {
        let g = self.target.generators();
        if g == 0 {
            return true;
        }
        let relations = IntegerMatrix::diagonal(&self.target_moduli());
        let all = self.matrix.hstack(&relations).expect("same number of rows");
        let s = smith_normal_form(&all);
        s.rank() == g && s.invariants.iter().all(One::is_one)
    }

    /// Isomorphism test: equal groups and a surjection (finitely generated
    /// abelian groups are Hopfian).
    pub fn is_isomorphism(&self) -> bool {
        self.source == self.target && self.is_surjective()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomologyMap) -> Result<HomologyMap> {
        if self.target != other.source {
            return Err(Error::Dimension("homology maps are not composable".into()));
        }
        let mut matrix = &other.matrix * &self.matrix;
        let mut composite = HomologyMap {
            degree: self.degree,
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: IntegerMatrix::zeros(0, 0),
        };
        for j in 0..matrix.cols() {
            let mut col = matrix.column(j);
            composite.reduce_column(&mut col);
            for (i, v) in col.into_iter().enumerate() {
                matrix[(i, j)] = v;
            }
        }
        composite.matrix = matrix;
        Ok(composite)
    }
}

/// The map on `H_q` induced by a chain-level map that sends each
/// nondegenerate source simplex to a target simplex (degenerate images
/// vanish in normalized chains).
pub fn map_on_homology(
    source: &HomologyData,
    target: &HomologyData,
    q: usize,
    simplex_image: impl Fn(usize) -> usize,
) -> Result<HomologyMap> {
    let sp = source.presentations.get(q).ok_or(Error::DegreeOutOfRange {
        degree: q,
        max: source.presentations.len().saturating_sub(1),
    })?;
    let tp = target.presentations.get(q).ok_or(Error::DegreeOutOfRange {
        degree: q,
        max: target.presentations.len().saturating_sub(1),
    })?;
    let basis = source.chains.basis(q);
    let mut matrix = IntegerMatrix::zeros(tp.group.generators(), sp.group.generators());
    for j in 0..sp.group.generators() {
        let mut image = vec![BigInt::zero(); target.chains.rank(q)];
        for (k, c) in sp.generator(j).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(pos) = target.chains.position(q, simplex_image(basis[k])) {
                image[pos] += c;
            }
        }
        let coords = tp.reduce(&image);
        // the image of a torsion generator must be killed by its order
        let order = &sp.moduli()[j];
        if !order.is_zero() {
            for (x, m) in coords.iter().zip(tp.moduli()) {
                let scaled = x * order;
                let vanishes = if m.is_zero() { scaled.is_zero() } else { scaled.is_multiple_of(m) };
                if !vanishes {
                    return Err(Error::IllDefinedMap(format!(
                        "generator {j} of H_{q} has order {order} but its image does not"
                    )));
                }
            }
        }
        for (i, v) in coords.into_iter().enumerate() {
            matrix[(i, j)] = v;
        }
    }
    Ok(HomologyMap {
        degree: q,
        source: sp.group.clone(),
        target: tp.group.clone(),
        matrix,
    })
}

/// `f_*: H_q(X) -> H_q(Y)`.
pub fn induced_map(f: &SimplicialMap, q: usize) -> Result<HomologyMap> {
    let source = HomologyData::compute(&f.source().truncate(q + 1)?, q)?;
    let target = HomologyData::compute(&f.target().truncate(q + 1)?, q)?;
    map_on_homology(&source, &target, q, |x| f.apply(q, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub degree: usize,
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub isomorphism: bool,
}

/// Outcome of a homology-equivalence test through a degree budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub holds: bool,
    pub failing_degree: Option<usize>,
    pub degrees: Vec<DegreeComparison>,
}

impl EquivalenceReport {
    pub fn witness(&self) -> Option<String> {
        let d = self.failing_degree?;
        let c = &self.degrees[d];
        Some(if c.source != c.target {
            format!("H_{d}: {} vs {}", c.source, c.target)
        } else {
            format!("H_{d}: induced map on {} is not surjective", c.source)
        })
    }
}

/// Compares a chain-level map degree by degree. Presentations are only built
/// in degrees where the groups agree and are nontrivial.
pub fn compare_homology(
    source: &ChainComplex,
    target: &ChainComplex,
    budget: usize,
    simplex_image: impl Fn(usize, usize) -> usize,
) -> Result<EquivalenceReport> {
    let mut degrees = Vec::new();
    let mut failing_degree = None;
    for q in 0..=budget {
        let (gs, gt) = (source.homology(q)?, target.homology(q)?);
        let isomorphism = if gs != gt {
            false
        } else if gs.is_trivial() {
            true
        } else {
            let sp = HomologyData {
                chains: source.clone(),
                presentations: presentations_at(source, q)?,
            };
            let tp = HomologyData {
                chains: target.clone(),
                presentations: presentations_at(target, q)?,
            };
            map_on_homology(&sp, &tp, q, |x| simplex_image(q, x))?.is_isomorphism()
        };
        if !isomorphism && failing_degree.is_none() {
            failing_degree = Some(q);
        }
        degrees.push(DegreeComparison {
            degree: q,
            source: gs,
            target: gt,
            isomorphism,
        });
    }
    Ok(EquivalenceReport {
        holds: failing_degree.is_none(),
        failing_degree,
        degrees,
    })
}

/// Presentations with trivial placeholders below `q`, so that index `q`
/// is the real one.
fn presentations_at(c: &ChainComplex, q: usize) -> Result<Vec<HomologyPresentation>> {
    let mut out: Vec<HomologyPresentation> = (0..q)
        .map(|k| HomologyPresentation {
            degree: k,
            group: AbelianGroup::trivial(),
            generators: vec![],
            reducer: IntegerMatrix::zeros(0, c.rank(k)),
            moduli: vec![],
        })
        .collect();
    out.push(HomologyPresentation::compute(c, q)?);
    Ok(out)
}

/// Whether `f` induces isomorphisms on `H_0..H_budget`; both sides must be
/// truncated at `budget + 1` or above.
pub fn is_homology_equivalence(f: &SimplicialMap, budget: usize) -> Result<EquivalenceReport> {
    let source = normalized_chains(f.source(), budget)?;
    let target = normalized_chains(f.target(), budget)?;
    compare_homology(&source, &target, budget, |n, x| f.apply(n, x))
}
