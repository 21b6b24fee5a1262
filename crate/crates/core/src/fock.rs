//! The level-one Fock representation of the `A_infinity` algebra.
//!
//! Basis vectors are indexed by Young diagrams. `F_k` adds the box of content
//! `k` when one is addable, `E_k` removes it when removable, and `H_k` acts by
//! the weight `u_k = δ(k,0) − 2v_k + v_{k−1} + v_{k+1}` where `v` counts boxes
//! by content. All structure constants are 1; coefficients are exact rationals.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partitions::YoungDiagram;

/// A finite linear combination of Young diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<YoungDiagram, BigRational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector of `y`.
    pub fn basis(y: YoungDiagram) -> Self {
        let mut v = FockVector::zero();
        v.add_term(y, BigRational::one());
        v
    }

    /// The highest weight vector, indexed by the empty diagram.
    pub fn vacuum() -> Self {
        FockVector::basis(YoungDiagram::empty())
    }

    pub fn add_term(&mut self, y: YoungDiagram, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(y) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, y: &YoungDiagram) -> BigRational {
        self.terms.get(y).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> FockVector {
        let mut out = FockVector::zero();
        for (y, a) in self.iter() {
            out.add_term(y.clone(), a * c);
        }
        out
    }

    fn map_basis(&self, op: impl Fn(&YoungDiagram) -> Option<(YoungDiagram, BigRational)>) -> FockVector {
        let mut out = FockVector::zero();
        for (y, a) in self.iter() {
            if let Some((z, c)) = op(y) {
                out.add_term(z, a * c);
            }
        }
        out
    }

    /// `F_k`: add the box of content `k`.
    pub fn f_op(&self, k: i64) -> FockVector {
        self.map_basis(|y| y.addable_row(k).map(|r| (y.with_box_in_row(r), BigRational::one())))
    }

    /// `E_k`: remove the box of content `k`.
    pub fn e_op(&self, k: i64) -> FockVector {
        self.map_basis(|y| {
            y.removable_row(k)
                .map(|r| (y.without_box_in_row(r), BigRational::one()))
        })
    }

    /// `H_k`: multiply each basis vector by its weight `u_k`.
    pub fn h_op(&self, k: i64) -> FockVector {
        self.map_basis(|y| Some((y.clone(), BigRational::from_integer(weight_at(y, k).into()))))
    }
}

impl std::ops::Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (y, c) in rhs.iter() {
            out.add_term(y.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (y, c) in rhs.iter() {
            out.add_term(y.clone(), -c.clone());
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (y, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{y}")?;
        }
        Ok(())
    }
}

/// Serialized as `[{"parts":[…],"coeff":"p/q"}, …]` in diagram order.
impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            parts: &'a YoungDiagram,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (y, c) in self.iter() {
            seq.serialize_element(&Term {
                parts: y,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

fn content_count(y: &YoungDiagram, k: i64) -> i64 {
    y.contents().filter(|&c| c == k).count() as i64
}

/// `u_k(Y) = δ(k,0) − 2v_k + v_{k−1} + v_{k+1}`.
pub fn weight_at(y: &YoungDiagram, k: i64) -> i64 {
    (k == 0) as i64 - 2 * content_count(y, k) + content_count(y, k - 1) + content_count(y, k + 1)
}

/// The finitely supported map `k ↦ u_k(Y)`, zero entries omitted.
pub fn weight_inf(y: &YoungDiagram) -> BTreeMap<i64, i64> {
    let lo = -(y.num_rows() as i64) - 1;
    let hi = y.first_row() as i64 + 1;
    (lo.min(-1)..=hi.max(1))
        .map(|k| (k, weight_at(y, k)))
        .filter(|&(_, u)| u != 0)
        .collect()
}
