//! Segment multisets on the infinite and cyclic type A quivers, and their
//! greedy decomposition into ordered tuples of charged Maya diagrams.
//!
//! A segment `(lo, hi)` is the indecomposable nilpotent string with vertices
//! `lo..=hi` and arrows pointing from `hi` down to `lo`. The diagram `(Y, γ)`
//! contributes one segment per row: row `i` of length `l_i` becomes
//! `(γ + 1 − i, γ + l_i − i)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{ChargedMaya, DimVector, YoungDiagram};
use crate::{Error, QuiverType, Rank, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::BadSegment { lo, hi });
        }
        Ok(Segment { lo, hi })
    }

    /// Number of vertices.
    pub fn len(&self) -> u32 {
        (self.hi - self.lo + 1) as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn translate(&self, r: i64) -> Segment {
        Segment {
            lo: self.lo + r,
            hi: self.hi + r,
        }
    }

    /// The representative used in `kind`: unchanged for the infinite quiver,
    /// translated so that `lo ∈ [0, n]` for the cyclic one.
    pub fn canonical(&self, kind: QuiverType) -> Segment {
        match kind {
            QuiverType::Infinite => *self,
            QuiverType::Cyclic(n) => {
                let m = n.modulus();
                self.translate(-self.lo.div_euclid(m) * m)
            }
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// A finitely supported multiplicity function on segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MultisetRecord", into = "MultisetRecord")]
pub struct SegmentMultiset {
    kind: QuiverType,
    mult: BTreeMap<Segment, u64>,
}

#[derive(Serialize, Deserialize)]
struct MultisetRecord {
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    segments: Vec<SegmentEntry>,
}

#[derive(Serialize, Deserialize)]
struct SegmentEntry {
    lo: i64,
    hi: i64,
    mult: u64,
}

impl TryFrom<MultisetRecord> for SegmentMultiset {
    type Error = Error;
    fn try_from(r: MultisetRecord) -> Result<Self> {
        let kind = match (r.mode.as_str(), r.n) {
            ("inf", _) => QuiverType::Infinite,
            ("cyclic", Some(n)) => QuiverType::cyclic(n)?,
            ("cyclic", None) => return Err(Error::Invalid("cyclic mode needs \"n\"".into())),
            (other, _) => return Err(Error::Invalid(format!("unknown mode {other:?}"))),
        };
        let mut f = SegmentMultiset::new(kind);
        for e in r.segments {
            f.insert(Segment::new(e.lo, e.hi)?, e.mult);
        }
        Ok(f)
    }
}

impl From<SegmentMultiset> for MultisetRecord {
    fn from(f: SegmentMultiset) -> Self {
        let (mode, n) = match f.kind {
            QuiverType::Infinite => ("inf", None),
            QuiverType::Cyclic(n) => ("cyclic", Some(n.n())),
        };
        MultisetRecord {
            mode: mode.into(),
            n,
            segments: f
                .mult
                .iter()
                .map(|(s, &mult)| SegmentEntry {
                    lo: s.lo,
                    hi: s.hi,
                    mult,
                })
                .collect(),
        }
    }
}

impl SegmentMultiset {
    pub fn new(kind: QuiverType) -> Self {
        SegmentMultiset {
            kind,
            mult: BTreeMap::new(),
        }
    }

    pub fn from_segments(kind: QuiverType, segments: impl IntoIterator<Item = Segment>) -> Self {
        let mut f = SegmentMultiset::new(kind);
        for s in segments {
            f.insert(s, 1);
        }
        f
    }

    pub fn kind(&self) -> QuiverType {
        self.kind
    }

    /// Adds `count` copies of `s` (canonicalized for the cyclic quiver).
    pub fn insert(&mut self, s: Segment, count: u64) {
        if count > 0 {
            *self.mult.entry(s.canonical(self.kind)).or_insert(0) += count;
        }
    }

    /// Removes one copy of `s`; returns false if it was absent.
    pub fn remove_one(&mut self, s: Segment) -> bool {
        let key = s.canonical(self.kind);
        match self.mult.get_mut(&key) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.mult.remove(&key);
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, s: Segment) -> u64 {
        self.mult.get(&s.canonical(self.kind)).copied().unwrap_or(0)
    }

    /// Distinct segments with their multiplicities, in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (Segment, u64)> + '_ {
        self.mult.iter().map(|(&s, &c)| (s, c))
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Number of segments counted with multiplicity.
    pub fn count(&self) -> u64 {
        self.mult.values().sum()
    }

    /// `dim V = Σ_r v_r`.
    pub fn total_dim(&self) -> u64 {
        self.iter().map(|(s, c)| s.len() as u64 * c).sum()
    }

    /// `v_i = Σ f(k',k) #{r ∈ [k',k] : r ≡ i}` (exact vertex counts when infinite).
    pub fn dim_vector(&self) -> DimVector {
        let mut v = DimVector::zero(self.kind);
        for (s, c) in self.iter() {
            for r in s.lo..=s.hi {
                v.add(r, c);
            }
        }
        v
    }

    /// Whether no segment length occurs at all `n + 1` translation residues.
    pub fn is_aperiodic(&self) -> Result<bool> {
        let n = self.kind.rank().ok_or(Error::NeedsCyclic)?;
        let mut residues: BTreeMap<u32, u64> = BTreeMap::new();
        for (s, _) in self.iter() {
            *residues.entry(s.len()).or_insert(0) += 1;
        }
        Ok(residues.values().all(|&k| k < n.modulus() as u64))
    }

    /// Lengths whose segments occupy every residue class.
    pub(crate) fn periodic_lengths(&self) -> Vec<u32> {
        let Some(n) = self.kind.rank() else {
            return Vec::new();
        };
        let mut residues: BTreeMap<u32, u64> = BTreeMap::new();
        for (s, _) in self.iter() {
            *residues.entry(s.len()).or_insert(0) += 1;
        }
        residues
            .into_iter()
            .filter(|&(_, k)| k == n.modulus() as u64)
            .map(|(l, _)| l)
            .collect()
    }

    /// Longest remaining segment whose leftmost vertex is `lo` (mod `n+1` if cyclic).
    fn longest_from(&self, lo: i64) -> Option<Segment> {
        let start = Segment { lo, hi: lo }.canonical(self.kind);
        let shift = lo - start.lo;
        self.mult
            .range(
                start..=Segment {
                    lo: start.lo,
                    hi: i64::MAX,
                },
            )
            .next_back()
            .map(|(s, _)| s.translate(shift))
    }
}

impl fmt::Display for SegmentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            if c > 1 {
                write!(f, "x{c}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Every multiset of total dimension `≤ max_dim`. On the infinite quiver the
/// segments are confined to the vertex window `lo..=hi`.
pub fn multisets_up_to(kind: QuiverType, max_dim: u64, window: (i64, i64)) -> Vec<SegmentMultiset> {
    let segments: Vec<Segment> = match kind {
        QuiverType::Cyclic(n) => (0..n.modulus())
            .flat_map(|lo| (1..=max_dim as i64).map(move |len| Segment { lo, hi: lo + len - 1 }))
            .collect(),
        QuiverType::Infinite => (window.0..=window.1)
            .flat_map(|lo| (lo..=window.1).map(move |hi| Segment { lo, hi }))
            .filter(|s| s.len() as u64 <= max_dim)
            .collect(),
    };
    fn rec(segments: &[Segment], budget: u64, cur: &mut SegmentMultiset, out: &mut Vec<SegmentMultiset>) {
        let Some((first, rest)) = segments.split_first() else {
            out.push(cur.clone());
            return;
        };
        rec(rest, budget, cur, out);
        let len = first.len() as u64;
        let mut used = 0;
        while len * (used + 1) <= budget {
            cur.insert(*first, 1);
            used += 1;
            rec(rest, budget - len * used, cur, out);
        }
        for _ in 0..used {
            cur.remove_one(*first);
        }
    }
    let mut out = Vec::new();
    rec(&segments, max_dim, &mut SegmentMultiset::new(kind), &mut out);
    out
}

/// An ordered tuple `(m_1, …, m_l)` of charged Maya diagrams with weakly
/// increasing charges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<ChargedMaya>", into = "Vec<ChargedMaya>")]
pub struct MayaTuple {
    entries: Vec<ChargedMaya>,
}

impl MayaTuple {
    pub fn new(entries: Vec<ChargedMaya>) -> Result<Self> {
        let charges: Vec<i64> = entries.iter().map(|m| m.charge()).collect();
        check_charges(&charges)?;
        Ok(MayaTuple { entries })
    }

    /// `((φ, γ_1), …, (φ, γ_l))`.
    pub fn vacuum(charges: &[i64]) -> Result<Self> {
        MayaTuple::new(charges.iter().map(|&g| ChargedMaya::vacuum(g)).collect())
    }

    pub fn entries(&self) -> &[ChargedMaya] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn charges(&self) -> Vec<i64> {
        self.entries.iter().map(|m| m.charge()).collect()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|m| m.shape().size()).sum()
    }

    /// `m_1 ≤ … ≤ m_l`, and also `m_l ≤ m_1[n+1]` on the cyclic quiver.
    pub fn is_chain_ordered(&self, kind: QuiverType) -> bool {
        let linear = self.entries.windows(2).all(|w| w[0].leq(&w[1]));
        match (kind, self.entries.first(), self.entries.last()) {
            (QuiverType::Cyclic(n), Some(first), Some(last)) => linear && last.leq(&first.shift(n.modulus())),
            _ => linear,
        }
    }

    /// The product order `m_j ≤ m'_j` for all `j`.
    pub fn leq(&self, other: &MayaTuple) -> Result<bool> {
        if self.charges() != other.charges() {
            return Err(Error::ChargeMismatch(self.charges(), other.charges()));
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a.leq(b)))
    }
}

impl TryFrom<Vec<ChargedMaya>> for MayaTuple {
    type Error = Error;
    fn try_from(entries: Vec<ChargedMaya>) -> Result<Self> {
        MayaTuple::new(entries)
    }
}

impl From<MayaTuple> for Vec<ChargedMaya> {
    fn from(t: MayaTuple) -> Self {
        t.entries
    }
}

impl fmt::Display for MayaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_charges(charges: &[i64]) -> Result<()> {
    if charges.is_empty() || charges.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadCharges(charges.to_vec()));
    }
    Ok(())
}

/// Rows of a tuple as `(top-edge height, length)` pairs with multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowMultiset {
    rows: BTreeMap<(i64, u32), u64>,
}

impl RowMultiset {
    pub fn insert(&mut self, height: i64, len: u32) {
        *self.rows.entry((height, len)).or_insert(0) += 1;
    }

    pub fn count(&self, height: i64, len: u32) -> u64 {
        self.rows.get(&(height, len)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, u32), u64)> + '_ {
        self.rows.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The lowest height `k` with `(k + i, len)` present for all `0 ≤ i ≤ n`.
    pub fn full_run(&self, n: Rank) -> Option<(i64, u32)> {
        self.rows
            .keys()
            .copied()
            .find(|&(k, len)| (0..n.modulus()).all(|i| self.count(k + i, len) > 0))
    }
}

/// `A^γ_Y = {(γ + 1 − i, γ + l_i − i)}`.
pub fn segments_of_charged_young(m: &ChargedMaya, kind: QuiverType) -> SegmentMultiset {
    let mut f = SegmentMultiset::new(kind);
    add_rows(&mut f, m);
    f
}

fn add_rows(f: &mut SegmentMultiset, m: &ChargedMaya) {
    let g = m.charge();
    for (r, &l) in m.shape().parts().iter().enumerate() {
        let i = r as i64 + 1;
        f.insert(
            Segment {
                lo: g + 1 - i,
                hi: g + l as i64 - i,
            },
            1,
        );
    }
}

/// The union with multiplicity of the row segments of every entry.
pub fn segments_of_tuple(t: &MayaTuple, kind: QuiverType) -> SegmentMultiset {
    let mut f = SegmentMultiset::new(kind);
    for m in t.entries() {
        add_rows(&mut f, m);
    }
    f
}

/// `{(γ_j − i + 1, l_i)}` over all rows of all entries.
pub fn row_multiset(t: &MayaTuple) -> RowMultiset {
    let mut r = RowMultiset::default();
    for m in t.entries() {
        for (i, &l) in m.shape().parts().iter().enumerate() {
            r.insert(m.charge() - i as i64, l);
        }
    }
    r
}

/// No run `{(k + i, l) : 0 ≤ i ≤ n}` is contained in the row multiset.
pub fn is_n_reduced_tuple(t: &MayaTuple, n: Rank) -> bool {
    row_multiset(t).full_run(n).is_none()
}

/// Outcome of the greedy decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Tuple(MayaTuple),
    /// The multiset corresponds to no chain-ordered tuple with these charges.
    Undecomposable(String),
}

impl Decomposition {
    pub fn tuple(&self) -> Option<&MayaTuple> {
        match self {
            Decomposition::Tuple(t) => Some(t),
            Decomposition::Undecomposable(_) => None,
        }
    }

    pub fn into_tuple(self) -> Option<MayaTuple> {
        match self {
            Decomposition::Tuple(t) => Some(t),
            Decomposition::Undecomposable(_) => None,
        }
    }

    pub fn is_tuple(&self) -> bool {
        matches!(self, Decomposition::Tuple(_))
    }
}

/// Greedy decomposition of `f` for the charges `γ_1 ≤ … ≤ γ_l`.
///
/// Charges are visited in rounds. On round `p` each surviving charge `γ_j`
/// takes the longest remaining segment with leftmost vertex `γ_j − p + 1`
/// (mod `n + 1` on the cyclic quiver); a charge that finds nothing drops out
/// for good. The result is a tuple only if every segment is used, every
/// charge received weakly decreasing lengths, and the tuple is chain-ordered.
///
/// Within a round, higher charges choose first and equal charges choose in
/// tuple order. This only matters on the cyclic quiver when `γ_l = γ_1 + n + 1`,
/// where the chain condition makes the shape at `γ_l` contain the one at `γ_1`.
pub fn canonical_tuple(f: &SegmentMultiset, charges: &[i64]) -> Result<Decomposition> {
    check_charges(charges)?;
    let kind = f.kind();
    let mut rest = f.clone();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); charges.len()];
    let mut alive = vec![true; charges.len()];
    let mut order: Vec<usize> = (0..charges.len()).collect();
    order.sort_by_key(|&j| (std::cmp::Reverse(charges[j]), j));
    let mut round: i64 = 0;
    while !rest.is_empty() && alive.iter().any(|&a| a) {
        for &j in &order {
            let g = charges[j];
            if !alive[j] {
                continue;
            }
            match rest.longest_from(g - round) {
                Some(s) => {
                    rest.remove_one(s);
                    rows[j].push(s.len());
                }
                None => alive[j] = false,
            }
        }
        round += 1;
    }
    if !rest.is_empty() {
        return Ok(Decomposition::Undecomposable(format!(
            "segments {rest} left after the greedy pass"
        )));
    }
    let mut entries = Vec::with_capacity(charges.len());
    for (parts, &g) in rows.into_iter().zip(charges) {
        match YoungDiagram::new(parts) {
            Ok(y) => entries.push(ChargedMaya::new(y, g)),
            Err(e) => {
                return Ok(Decomposition::Undecomposable(format!(
                    "charge {g} received row lengths out of order: {e}"
                )))
            }
        }
    }
    let t = MayaTuple::new(entries)?;
    if !t.is_chain_ordered(kind) {
        return Ok(Decomposition::Undecomposable(format!(
            "greedy tuple {t} is not chain-ordered"
        )));
    }
    debug_assert_eq!(&segments_of_tuple(&t, kind), f);
    Ok(Decomposition::Tuple(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dim_vector_level1;

    fn y(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn cm(parts: &[u32], g: i64) -> ChargedMaya {
        ChargedMaya::new(y(parts), g)
    }

    fn seg(lo: i64, hi: i64) -> Segment {
        Segment::new(lo, hi).unwrap()
    }

    fn cyc(n: u32) -> QuiverType {
        QuiverType::cyclic(n).unwrap()
    }

    fn tuple(entries: &[(&[u32], i64)]) -> MayaTuple {
        MayaTuple::new(entries.iter().map(|&(p, g)| cm(p, g)).collect()).unwrap()
    }

    #[test]
    fn charged_young_segments() {
        let inf = QuiverType::Infinite;
        assert!(segments_of_charged_young(&ChargedMaya::vacuum(5), inf).is_empty());
        assert_eq!(
            segments_of_charged_young(&cm(&[1], 0), inf),
            SegmentMultiset::from_segments(inf, [seg(0, 0)])
        );
        assert_eq!(
            segments_of_charged_young(&cm(&[3, 1], 2), inf),
            SegmentMultiset::from_segments(inf, [seg(2, 4), seg(1, 1)])
        );
    }

    #[test]
    fn segment_contents_match_box_contents() {
        // Each row segment covers exactly the contents of that row, shifted by the charge.
        for shape in YoungDiagram::up_to(8) {
            for g in -2..=2 {
                let f = segments_of_charged_young(&ChargedMaya::new(shape.clone(), g), QuiverType::Infinite);
                let mut from_segments: Vec<i64> = f
                    .iter()
                    .flat_map(|(s, c)| (0..c).flat_map(move |_| s.lo..=s.hi))
                    .collect();
                let mut from_boxes: Vec<i64> = shape.contents().map(|c| c + g).collect();
                from_segments.sort();
                from_boxes.sort();
                assert_eq!(from_segments, from_boxes);
            }
        }
    }

    #[test]
    fn greedy_tie_at_full_charge_spread() {
        // Charges 0 and 2 share residue 0 when n = 1; the longer row belongs to charge 2.
        let t = tuple(&[(&[3], 0), (&[4], 2)]);
        let f = segments_of_tuple(&t, cyc(1));
        assert_eq!(f, SegmentMultiset::from_segments(cyc(1), [seg(0, 2), seg(0, 3)]));
        assert_eq!(canonical_tuple(&f, &[0, 2]).unwrap().into_tuple(), Some(t));
    }

    fn nested_staircases() -> SegmentMultiset {
        SegmentMultiset::from_segments(
            QuiverType::Infinite,
            [(-1, 1), (-2, -1), (-3, -3), (1, 4), (0, 2), (-1, 0), (-2, -2)].map(|(a, b)| seg(a, b)),
        )
    }

    #[test]
    fn nested_staircases_tuples_share_segments() {
        let inf = QuiverType::Infinite;
        let a = tuple(&[(&[3, 2, 1], -1), (&[4, 3, 2, 1], 1)]);
        let b = tuple(&[(&[2, 1], -1), (&[4, 3, 3, 2, 1], 1)]);
        assert_eq!(segments_of_tuple(&a, inf), nested_staircases());
        assert_eq!(segments_of_tuple(&b, inf), nested_staircases());
        assert!(a.is_chain_ordered(inf));
    }

    #[test]
    fn nested_staircases_greedy() {
        let got = canonical_tuple(&nested_staircases(), &[-1, 1]).unwrap();
        assert_eq!(
            got,
            Decomposition::Tuple(tuple(&[(&[3, 2, 1], -1), (&[4, 3, 2, 1], 1)]))
        );
    }

    #[test]
    fn greedy_small_cases() {
        let inf = QuiverType::Infinite;
        let empty = SegmentMultiset::new(inf);
        assert_eq!(
            canonical_tuple(&empty, &[0, 0]).unwrap(),
            Decomposition::Tuple(MayaTuple::vacuum(&[0, 0]).unwrap())
        );
        let f = SegmentMultiset::from_segments(inf, [seg(1, 1)]);
        assert!(!canonical_tuple(&f, &[0]).unwrap().is_tuple());
        assert!(canonical_tuple(&f, &[1, 0]).is_err());
    }

    #[test]
    fn tuple_segments_cyclic() {
        assert!(segments_of_tuple(&MayaTuple::vacuum(&[0, 1]).unwrap(), cyc(1)).is_empty());
        let f = segments_of_tuple(&tuple(&[(&[1], 0)]), cyc(1));
        assert_eq!(f, SegmentMultiset::from_segments(cyc(1), [seg(0, 0)]));
        let g = SegmentMultiset::from_segments(cyc(1), [seg(-1, -1)]);
        assert_eq!(g.iter().next().unwrap().0, seg(1, 1));
    }

    #[test]
    fn aperiodicity() {
        assert_eq!(SegmentMultiset::new(cyc(1)).is_aperiodic(), Ok(true));
        let f = SegmentMultiset::from_segments(cyc(1), [seg(0, 0), seg(1, 1)]);
        assert_eq!(f.is_aperiodic(), Ok(false));
        let f = SegmentMultiset::from_segments(cyc(1), [seg(0, 1), seg(1, 1)]);
        assert_eq!(f.is_aperiodic(), Ok(true));
        let f = SegmentMultiset::new(QuiverType::Infinite);
        assert_eq!(f.is_aperiodic(), Err(Error::NeedsCyclic));
    }

    #[test]
    fn dim_vectors() {
        assert_eq!(SegmentMultiset::new(cyc(1)).dim_vector().total(), 0);
        let f = SegmentMultiset::from_segments(cyc(1), [seg(0, 2)]);
        assert_eq!(f.dim_vector().to_residue_vec(), vec![2, 1]);
        let mut f = SegmentMultiset::new(cyc(2));
        f.insert(seg(0, 0), 3);
        assert_eq!(f.dim_vector().to_residue_vec(), vec![3, 0, 0]);
    }

    #[test]
    fn dim_vector_is_additive_over_entries() {
        let t = tuple(&[(&[2, 1], 0), (&[3], 1)]);
        let f = segments_of_tuple(&t, cyc(2));
        let mut expected = DimVector::zero(cyc(2));
        for m in t.entries() {
            let mut v = DimVector::zero(cyc(2));
            for c in m.shape().contents() {
                v.add(c + m.charge(), 1);
            }
            expected += &v;
        }
        assert_eq!(f.dim_vector(), expected);
        assert_eq!(
            segments_of_tuple(&tuple(&[(&[2, 1], 0)]), cyc(2)).dim_vector(),
            dim_vector_level1(&y(&[2, 1]), cyc(2))
        );
    }

    #[test]
    fn rows_and_reduction() {
        assert!(row_multiset(&MayaTuple::vacuum(&[0]).unwrap()).is_empty());
        let r = row_multiset(&tuple(&[(&[1, 1], 0)]));
        assert_eq!((r.count(0, 1), r.count(-1, 1)), (1, 1));
        let r = row_multiset(&tuple(&[(&[2], 3)]));
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![((3, 2), 1)]);

        let n1 = Rank::new(1).unwrap();
        assert!(is_n_reduced_tuple(&MayaTuple::vacuum(&[0, 1]).unwrap(), n1));
        assert!(!is_n_reduced_tuple(&tuple(&[(&[1, 1], 0)]), n1));
        assert!(is_n_reduced_tuple(&tuple(&[(&[2, 1], 0)]), n1));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets_up_to(cyc(1), 10, (0, 0)).len(), 1215);
        assert_eq!(multisets_up_to(cyc(2), 7, (0, 0)).len(), 844);
        let inf = multisets_up_to(QuiverType::Infinite, 3, (0, 1));
        // a(0,0) + b(0,1) + c(1,1) with a + 2b + c ≤ 3: ten with b = 0, three with b = 1.
        assert_eq!(inf.len(), 13);
        assert!(inf.iter().all(|f| f.total_dim() <= 3));
    }

    #[test]
    fn json_layout() {
        let f = SegmentMultiset::from_segments(cyc(1), [seg(0, 1), seg(0, 1), seg(1, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"mode":"cyclic","n":1,"segments":[{"lo":0,"hi":1,"mult":2},{"lo":1,"hi":1,"mult":1}]}"#
        );
        assert_eq!(serde_json::from_str::<SegmentMultiset>(&s).unwrap(), f);
        let inf: SegmentMultiset =
            serde_json::from_str(r#"{"mode":"inf","segments":[{"lo":-1,"hi":0,"mult":1}]}"#).unwrap();
        assert_eq!(inf.kind(), QuiverType::Infinite);
        let t = tuple(&[(&[1], 0), (&[], 1)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"[{"parts":[1],"charge":0},{"parts":[],"charge":1}]"#);
        assert!(serde_json::from_str::<MayaTuple>(r#"[{"parts":[],"charge":1},{"parts":[],"charge":0}]"#).is_err());
    }
}
