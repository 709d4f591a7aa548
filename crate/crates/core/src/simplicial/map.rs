use crate::error::{Error, Result};

use super::set::SimplicialSet;

/// A simplicial map between table-backed simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    /// `maps[n][x]` is the image of the degree-`n` simplex `x`.
    maps: Vec<Vec<usize>>,
}

impl SimplicialMap {
    /// Validates shapes and commutation with every face and degeneracy on
    /// the source's degrees.
    pub fn new(source: SimplicialSet, target: SimplicialSet, maps: Vec<Vec<usize>>) -> Result<Self> {
        let top = source.max_degree();
        target.require(top, "simplicial map")?;
        if maps.len() != top + 1 {
            return Err(Error::Dimension(format!("map given in {} degrees, source has {}", maps.len(), top + 1)));
        }
        for n in 0..=top {
            if maps[n].len() != source.count(n) {
                return Err(Error::Dimension(format!("map table at degree {n}")));
            }
            if let Some(x) = maps[n].iter().position(|&y| y >= target.count(n)) {
                return Err(Error::Malformed(format!("image of simplex {x} at degree {n} is missing from the target")));
            }
        }
        for n in 0..=top {
            for x in 0..source.count(n) {
                let fx = maps[n][x];
                if n > 0 {
                    if let Some(i) = (0..=n).find(|&i| maps[n - 1][source.face(n, i, x)] != target.face(n, i, fx)) {
                        return Err(Error::NotSimplicial {
                            operator: format!("d_{i}"),
                            degree: n,
                            simplex: x,
                        });
                    }
                }
                if n < top {
                    if let Some(j) = (0..=n).find(|&j| maps[n + 1][source.degeneracy(n, j, x)] != target.degeneracy(n, j, fx)) {
                        return Err(Error::NotSimplicial {
                            operator: format!("s_{j}"),
                            degree: n,
                            simplex: x,
                        });
                    }
                }
            }
        }
        Ok(Self { source, target, maps })
    }

    /// Tabulates `f` and validates the result.
    pub fn from_fn(
        source: SimplicialSet,
        target: SimplicialSet,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let maps = source
            .counts()
            .iter()
            .enumerate()
            .map(|(n, &c)| (0..c).map(|x| f(n, x)).collect())
            .collect();
        Self::new(source, target, maps)
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        let maps = x.counts().iter().map(|&c| (0..c).collect()).collect();
        Self {
            source: x.clone(),
            target: x.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.maps[n][x]
    }

    pub fn table(&self, n: usize) -> &[usize] {
        &self.maps[n]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target.counts()[..=self.source.max_degree()] != other.source.counts()[..=self.source.max_degree()] {
            return Err(Error::Dimension("maps are not composable".into()));
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(n, level)| level.iter().map(|&y| other.maps[n][y]).collect())
            .collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            maps,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructions::{point, representable};

    #[test]
    fn vertex_inclusions_are_simplicial() {
        let d1 = representable(1, 2);
        for v in 0..2 {
            let f = SimplicialMap::from_fn(point(2), d1.set.clone(), |n, _| d1.id(n, &vec![v; n + 1]).unwrap());
            assert!(f.is_ok());
        }
    }

    #[test]
    fn non_simplicial_map_is_rejected() {
        let d1 = representable(1, 1);
        // vertices swapped, edges fixed
        let err = SimplicialMap::new(d1.set.clone(), d1.set.clone(), vec![vec![1, 0], vec![0, 1, 2]]);
        assert!(matches!(err, Err(Error::NotSimplicial { .. })));
    }

    #[test]
    fn composition_with_identity() {
        let d1 = representable(1, 2).set;
        let id = SimplicialMap::identity(&d1);
        assert_eq!(id.then(&id).unwrap(), id);
    }
}
