use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::matrix::serialize_bigints;

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`
/// in invariant-factor form: every `t_i > 1` and `t_i | t_{i+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: vec![],
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_invariants(0, [BigInt::from(order)])
    }

    /// Canonical form from a free rank and arbitrary positive diagonal
    /// entries of a relation matrix. Entries equal to 1 are dropped; the rest
    /// are brought into divisibility-chain form.
    pub fn from_invariants(free_rank: usize, diagonal: impl IntoIterator<Item = BigInt>) -> Self {
        use num_integer::Integer;
        let mut entries: Vec<BigInt> = diagonal.into_iter().filter(|d| !d.is_one()).collect();
        // repeatedly replace (a, b) by (gcd, lcm) until the chain divides
        let n = entries.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (entries[i].clone(), entries[j].clone());
                entries[i] = a.gcd(&b);
                entries[j] = a.lcm(&b);
            }
        }
        entries.retain(|d| !d.is_one());
        Self {
            free_rank,
            torsion: entries,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators in the canonical presentation.
    pub fn generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        Self::from_invariants(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut k = 0;
        while k < self.torsion.len() {
            let t = &self.torsion[k];
            let run = self.torsion[k..].iter().take_while(|&s| s == t).count();
            parts.push(if run == 1 { format!("Z/{t}") } else { format!("(Z/{t})^{run}") });
            k += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let g = AbelianGroup::from_invariants(1, [2, 3, 1].map(BigInt::from));
        assert_eq!(g.torsion, vec![BigInt::from(6)]);
        assert_eq!(g.to_string(), "Z + Z/6");
        let h = AbelianGroup::from_invariants(0, [4, 2, 2].map(BigInt::from));
        assert_eq!(h.to_string(), "(Z/2)^2 + Z/4");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
    }

    #[test]
    fn direct_sum_is_canonical() {
        let g = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(3));
        assert_eq!(g, AbelianGroup::cyclic(6));
    }
}
