use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use crate::error::Result;

use super::set::SimplicialSet;

/// Path components of a simplicial set, as a partition of its vertices.
///
/// Components are listed in order of their smallest vertex, each sorted.
pub fn pi0(x: &SimplicialSet) -> Result<Vec<Vec<usize>>> {
    x.require(1, "pi0")?;
    let mut uf = UnionFind::<usize>::new(x.count(0));
    for e in 0..x.count(1) {
        uf.union(x.face(1, 0, e), x.face(1, 1, e));
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..x.count(0) {
        classes.entry(uf.find(v)).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    Ok(out)
}
