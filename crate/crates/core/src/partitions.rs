//! Young diagrams, charged Maya diagrams, basic paths and level-one weights.
//!
//! A charged Maya diagram is stored as its (shape, charge) pair. For a shape
//! `λ` with conjugate `λ'` and charge `γ` the underlying bijection is
//!
//! ```text
//! m(j)  = γ + j − λ'_{j+1}     (j ≥ 0)
//! m(−i) = γ + λ_i − i          (i ≥ 1)
//! ```
//!
//! which is the signature rule `r_j = m(j) − m(j−1) − 1` read off the
//! nonnegative half, with the negative half the increasing enumeration of the
//! complement.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, QuiverType, Rank, Result};

/// A partition `[l_1, …, l_s]` with `l_1 ≥ … ≥ l_s > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    /// Builds a diagram from weakly decreasing parts. Trailing zeros are
    /// dropped; any other ordering violation is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows, `s`.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `l_i` for 1-based `i`, zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.first_row() as usize;
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&l| l as usize >= c).count() as u32)
            .collect();
        YoungDiagram { parts }
    }

    /// Contents `c − i` of all boxes, row by row (rows and columns 1-based).
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &l)| {
            let i = r as i64 + 1;
            (1..=l as i64).map(move |c| c - i)
        })
    }

    /// The 0-based row in which a box of content `k` can be added, if any.
    pub fn addable_row(&self, k: i64) -> Option<usize> {
        let s = self.parts.len();
        for r in 0..=s {
            let l = self.part(r + 1);
            let content = l as i64 + 1 - (r as i64 + 1);
            let fits = r == 0 || self.part(r) > l;
            if fits && content == k {
                return Some(r);
            }
        }
        None
    }

    /// The 0-based row whose last box has content `k` and can be removed.
    pub fn removable_row(&self, k: i64) -> Option<usize> {
        let s = self.parts.len();
        (0..s).find(|&r| {
            let l = self.parts[r];
            let content = l as i64 - (r as i64 + 1);
            content == k && self.part(r + 2) < l
        })
    }

    pub(crate) fn with_box_in_row(&self, r: usize) -> YoungDiagram {
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        debug_assert!(YoungDiagram::new(parts.clone()).is_ok());
        YoungDiagram { parts }
    }

    pub(crate) fn without_box_in_row(&self, r: usize) -> YoungDiagram {
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        debug_assert!(YoungDiagram::new(parts.clone()).is_ok());
        YoungDiagram { parts }
    }

    /// Whether `l_i > l_{i+n}` for all `i`, i.e. no part occurs more than `n` times.
    pub fn is_n_reduced(&self, n: Rank) -> bool {
        let n = n.n() as usize;
        (1..=self.parts.len()).all(|i| self.part(i) > self.part(i + n))
    }

    /// All diagrams with exactly `size` boxes, in reverse lexicographic order.
    pub fn of_size(size: u32) -> Vec<YoungDiagram> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All diagrams with at most `max_size` boxes, ordered by size.
    pub fn up_to(max_size: u32) -> Vec<YoungDiagram> {
        (0..=max_size).flat_map(YoungDiagram::of_size).collect()
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(parts)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(y: YoungDiagram) -> Vec<u32> {
        y.parts
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A Maya diagram of charge `γ`, stored as its (shape, charge) pair.
///
/// The derived `Ord` is a canonical sort order only; the Maya partial order
/// is [`ChargedMaya::leq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "MayaRecord", into = "MayaRecord")]
pub struct ChargedMaya {
    charge: i64,
    shape: YoungDiagram,
    conj: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MayaRecord {
    parts: YoungDiagram,
    charge: i64,
}

impl From<MayaRecord> for ChargedMaya {
    fn from(r: MayaRecord) -> Self {
        ChargedMaya::new(r.parts, r.charge)
    }
}

impl From<ChargedMaya> for MayaRecord {
    fn from(m: ChargedMaya) -> Self {
        MayaRecord {
            parts: m.shape,
            charge: m.charge,
        }
    }
}

impl ChargedMaya {
    pub fn new(shape: YoungDiagram, charge: i64) -> Self {
        let conj = shape.conjugate().parts;
        ChargedMaya { charge, shape, conj }
    }

    /// The vacuum diagram `m(j) = j + γ`.
    pub fn vacuum(charge: i64) -> Self {
        ChargedMaya::new(YoungDiagram::empty(), charge)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    fn conj_part(&self, i: usize) -> i64 {
        self.conj.get(i - 1).copied().unwrap_or(0) as i64
    }

    /// `m(j)`.
    pub fn eval(&self, j: i64) -> i64 {
        if j >= 0 {
            self.charge + j - self.conj_part(j as usize + 1)
        } else {
            let i = (-j) as usize;
            self.charge + self.shape.part(i) as i64 - i as i64
        }
    }

    /// `m(j) = j + γ` whenever `|j| ≥` this bound.
    pub fn stabilization_bound(&self) -> i64 {
        (self.shape.first_row() as i64).max(self.shape.num_rows() as i64 + 1)
    }

    /// `m[r]`: the same shape with charge `γ + r`.
    pub fn shift(&self, r: i64) -> ChargedMaya {
        ChargedMaya {
            charge: self.charge + r,
            shape: self.shape.clone(),
            conj: self.conj.clone(),
        }
    }

    /// The Maya order: `m(j) ≤ m'(j)` for all `j ≥ 0`.
    pub fn leq(&self, other: &ChargedMaya) -> bool {
        let width = self.shape.first_row().max(other.shape.first_row()) as i64;
        let pointwise = self.charge <= other.charge && (0..width).all(|j| self.eval(j) <= other.eval(j));
        debug_assert_eq!(pointwise, self.contains_infinite(other));
        pointwise
    }

    /// Containment of the associated infinite Young diagrams: a quadrant above
    /// height `γ` with the rows of the shape hanging below it.
    pub fn contains_infinite(&self, other: &ChargedMaya) -> bool {
        if self.charge > other.charge {
            return false;
        }
        let offset = (other.charge - self.charge) as usize;
        let rows = self.shape.num_rows().max(other.shape.num_rows());
        (1..=rows + 1).all(|i| self.shape.part(i) >= other.shape.part(i + offset))
    }

    /// `γ ≤ γ'` and `m(j−γ) ≥ m'(j−γ')` for all `j < γ`.
    pub fn leq_via_negative_half(&self, other: &ChargedMaya) -> bool {
        if self.charge > other.charge {
            return false;
        }
        let depth = self.shape.num_rows().max(other.shape.num_rows()) as i64 + 1;
        (self.charge - depth..self.charge).all(|j| self.eval(j - self.charge) >= other.eval(j - other.charge))
    }

    /// Recovers `(Y, γ)` from `m(0), …, m(K−1)`, with `m(j) = j + γ` for `j ≥ K`.
    pub fn from_values(values: &[i64], charge: i64) -> Result<ChargedMaya> {
        let k = values.len() as i64;
        let mut seq = values.to_vec();
        seq.push(k + charge);
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadMaya(format!(
                "values {values:?} with charge {charge} are not strictly increasing"
            )));
        }
        let conj: Vec<u32> = values
            .iter()
            .enumerate()
            .map(|(j, &m)| (j as i64 + charge - m) as u32)
            .filter(|&c| c > 0)
            .collect();
        let shape = YoungDiagram::new(conj)?.conjugate();
        Ok(ChargedMaya::new(shape, charge))
    }
}

impl fmt::Display for ChargedMaya {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.shape, self.charge)
    }
}

/// A level-one path `(λ_0, λ_1, …)` with entries in `0..=n`, equal to the
/// (possibly shifted) ground state `(j + offset) mod (n+1)` past its prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct BasicPath {
    n: Rank,
    offset: u32,
    prefix: Vec<u32>,
}

/// The offset is written as `"charge"` and omitted when zero.
#[derive(Serialize, Deserialize)]
struct PathRecord {
    n: Rank,
    #[serde(default, skip_serializing_if = "is_zero")]
    charge: u32,
    prefix: Vec<u32>,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

impl TryFrom<PathRecord> for BasicPath {
    type Error = Error;
    fn try_from(r: PathRecord) -> Result<Self> {
        BasicPath::new(r.n, r.charge, r.prefix)
    }
}

impl From<BasicPath> for PathRecord {
    fn from(p: BasicPath) -> Self {
        PathRecord {
            n: p.n,
            charge: p.offset,
            prefix: p.prefix,
        }
    }
}

impl BasicPath {
    /// Builds a path from explicit leading entries; the tail is ground state
    /// shifted by `offset`.
    pub fn new(n: Rank, offset: u32, entries: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e > n.n()) {
            return Err(Error::ResidueOutOfRange { residue: bad, n: n.n() });
        }
        let offset = n.residue(offset as i64);
        let mut path = BasicPath {
            n,
            offset,
            prefix: entries,
        };
        path.trim();
        Ok(path)
    }

    pub fn ground(n: Rank) -> Self {
        BasicPath {
            n,
            offset: 0,
            prefix: Vec::new(),
        }
    }

    fn trim(&mut self) {
        while let Some(&last) = self.prefix.last() {
            let j = self.prefix.len() as i64 - 1;
            if last == self.n.residue(j + self.offset as i64) {
                self.prefix.pop();
            } else {
                break;
            }
        }
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    /// Entries past this index agree with the ground state.
    pub fn agreement_bound(&self) -> usize {
        self.prefix.len()
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn entry(&self, j: usize) -> u32 {
        match self.prefix.get(j) {
            Some(&e) => e,
            None => self.n.residue(j as i64 + self.offset as i64),
        }
    }
}

/// `(m(0) mod n+1, m(1) mod n+1, …)`.
pub fn basic_path(m: &ChargedMaya, n: Rank) -> BasicPath {
    let bound = m.shape().first_row() as i64;
    let entries = (0..bound).map(|j| n.residue(m.eval(j))).collect();
    BasicPath::new(n, n.residue(m.charge()), entries).expect("residues are in range")
}

/// A finitely supported vertex → dimension map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimVector {
    kind: QuiverType,
    counts: BTreeMap<i64, u64>,
}

impl DimVector {
    pub fn zero(kind: QuiverType) -> Self {
        DimVector {
            kind,
            counts: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> QuiverType {
        self.kind
    }

    /// Adds `count` to the vertex of position `r` (reduced mod n+1 when cyclic).
    pub fn add(&mut self, r: i64, count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(self.kind.vertex(r)).or_insert(0) += count;
    }

    pub fn get(&self, vertex: i64) -> u64 {
        self.counts.get(&self.kind.vertex(vertex)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Nonzero entries in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Dense vector over `0..=n`. Panics for the infinite quiver.
    pub fn to_residue_vec(&self) -> Vec<i64> {
        let rank = self.kind.rank().expect("dense residue vector needs the cyclic quiver");
        (0..rank.modulus()).map(|k| self.get(k) as i64).collect()
    }
}

impl std::ops::AddAssign<&DimVector> for DimVector {
    fn add_assign(&mut self, rhs: &DimVector) {
        assert_eq!(self.kind, rhs.kind);
        for (k, v) in rhs.iter() {
            self.add(k, v);
        }
    }
}

/// `H_k`-eigenvalues `u_0, …, u_n` together with the `d`-eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    pub h: Vec<i64>,
    pub deg: i64,
}

impl AffineWeight {
    /// `Σ_k u_k`.
    pub fn level(&self) -> i64 {
        self.h.iter().sum()
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, u) in self.h.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, ";{}", self.deg)
    }
}

/// Box-content counts of `Y`: `v_j = #{boxes of content j}` (or `≡ j mod n+1`).
pub fn dim_vector_level1(y: &YoungDiagram, kind: QuiverType) -> DimVector {
    let mut v = DimVector::zero(kind);
    for c in y.contents() {
        v.add(c, 1);
    }
    v
}

/// `Δ_k(Y) = δ(k,−s) + Σ_i (δ(k, l_i−i+1) − δ(k, l_i−i))`.
pub fn delta_weight(y: &YoungDiagram, n: Rank, k: i64) -> i64 {
    let s = y.num_rows() as i64;
    let mut total = n.delta(k, -s);
    for (r, &l) in y.parts().iter().enumerate() {
        let i = r as i64 + 1;
        total += n.delta(k, l as i64 - i + 1) - n.delta(k, l as i64 - i);
    }
    total
}

/// Level-one energy `ω(Y) = Σ_{k≥1} k (H(λ_{k−1}, λ_k) − H(g_{k−1}, g_k))` of the
/// basic path of `(Y, 0)`, with `H(λ, μ) = 1` iff `λ ≥ μ`.
pub fn energy_level1(y: &YoungDiagram, n: Rank) -> Result<i64> {
    if !y.is_n_reduced(n) {
        return Err(Error::NotReduced(y.to_string(), n.n()));
    }
    let path = basic_path(&ChargedMaya::new(y.clone(), 0), n);
    let ground = |j: usize| n.residue(j as i64);
    let h = |a: u32, b: u32| (a >= b) as i64;
    let bound = path.agreement_bound();
    Ok((1..=bound)
        .map(|k| {
            let here = h(path.entry(k - 1), path.entry(k));
            let vac = h(ground(k - 1), ground(k));
            k as i64 * (here - vac)
        })
        .sum())
}

/// The weight `(Λ_0 − C v, −v_0)` of the level-one component indexed by `Y`.
pub fn level1_weight(y: &YoungDiagram, n: Rank) -> AffineWeight {
    let v = dim_vector_level1(y, QuiverType::Cyclic(n)).to_residue_vec();
    let mut w = vec![0; n.modulus() as usize];
    w[0] = 1;
    AffineWeight {
        h: n.w_minus_cv(&w, &v),
        deg: -v[0],
    }
}
