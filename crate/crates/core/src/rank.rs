use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The rank `n` of `A_n^(1)`. Quiver vertices are residues mod `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank(n));
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// `n + 1`, the number of vertices of the cyclic quiver.
    pub fn modulus(self) -> i64 {
        self.0 as i64 + 1
    }

    pub fn residue(self, k: i64) -> u32 {
        k.rem_euclid(self.modulus()) as u32
    }

    /// Kronecker symbol mod `n + 1`.
    pub fn delta(self, k: i64, l: i64) -> i64 {
        ((k - l).rem_euclid(self.modulus()) == 0) as i64
    }

    /// Cartan integer `a_kl = 2δ(k,l) − δ(k,l+1) − δ(k,l−1)`.
    pub fn cartan(self, k: i64, l: i64) -> i64 {
        2 * self.delta(k, l) - self.delta(k, l + 1) - self.delta(k, l - 1)
    }

    /// `w − C v` for vectors indexed by residues `0..=n`.
    pub fn w_minus_cv(self, w: &[i64], v: &[i64]) -> Vec<i64> {
        let m = self.modulus() as usize;
        (0..m)
            .map(|k| {
                let cv: i64 = (0..m).map(|l| self.cartan(k as i64, l as i64) * v[l]).sum();
                w[k] - cv
            })
            .collect()
    }
}

impl TryFrom<u32> for Rank {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self> {
        Rank::new(n)
    }
}

impl From<Rank> for u32 {
    fn from(r: Rank) -> u32 {
        r.0
    }
}

/// Which quiver a multisegment or dimension vector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuiverType {
    /// The `A_infinity` quiver with vertex set `Z`.
    Infinite,
    /// The cyclic quiver with vertex set `Z/(n+1)Z`.
    Cyclic(Rank),
}

impl QuiverType {
    pub fn cyclic(n: u32) -> Result<Self> {
        Ok(QuiverType::Cyclic(Rank::new(n)?))
    }

    pub fn rank(self) -> Option<Rank> {
        match self {
            QuiverType::Infinite => None,
            QuiverType::Cyclic(r) => Some(r),
        }
    }

    /// The vertex carrying the integer position `r`.
    pub fn vertex(self, r: i64) -> i64 {
        match self {
            QuiverType::Infinite => r,
            QuiverType::Cyclic(rank) => rank.residue(r) as i64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a1_cartan_has_double_edge() {
        let r = Rank::new(1).unwrap();
        assert_eq!(r.cartan(0, 0), 2);
        assert_eq!(r.cartan(0, 1), -2);
        assert_eq!(r.cartan(1, 0), -2);
    }

    #[test]
    fn affine_a2_cartan() {
        let r = Rank::new(2).unwrap();
        let rows: Vec<Vec<i64>> = (0..3).map(|k| (0..3).map(|l| r.cartan(k, l)).collect()).collect();
        assert_eq!(rows, vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    }

    #[test]
    fn zero_rank_rejected() {
        assert_eq!(Rank::new(0), Err(Error::ZeroRank(0)));
        assert!(serde_json::from_str::<Rank>("0").is_err());
    }

    #[test]
    fn residues_are_nonnegative() {
        let r = Rank::new(2).unwrap();
        assert_eq!(r.residue(-1), 2);
        assert_eq!(r.residue(-3), 0);
        assert_eq!(r.residue(7), 1);
    }
}
