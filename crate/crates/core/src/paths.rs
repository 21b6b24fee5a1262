//! Level-`l` paths for `A_n^(1)`, their energies and weights, and the lift
//! calculus relating them to chain-ordered Maya tuples.
//!
//! A path is a sequence of size-`l` residue multisets `η(0), η(1), …` that
//! eventually agrees with the ground path `η_Λ(k) = {γ_1 + k, …, γ_l + k}`.
//! A lift of `η` is a chain-ordered tuple `m_1 ≤ … ≤ m_l ≤ m_1[n+1]` whose
//! values `m_j(k)` reduce to `η(k)`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assignment::{min_cost_exhaustive, min_cost_hungarian};
use crate::multisegments::{
    canonical_tuple, check_charges, is_n_reduced_tuple, segments_of_tuple, MayaTuple, SegmentMultiset,
};
use crate::partitions::{AffineWeight, ChargedMaya, YoungDiagram};
use crate::{Error, QuiverType, Rank, Result};

/// `Λ = Λ_{γ_1} + … + Λ_{γ_l}` with `γ_1 ≤ … ≤ γ_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HighestWeight {
    n: Rank,
    charges: Vec<i64>,
}

impl HighestWeight {
    pub fn new(n: Rank, charges: Vec<i64>) -> Result<Self> {
        check_charges(&charges)?;
        Ok(HighestWeight { n, charges })
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    /// `η_Λ(k)` as a sorted residue multiset.
    pub fn ground_step(&self, k: i64) -> Vec<u32> {
        let mut s: Vec<u32> = self.charges.iter().map(|&g| self.n.residue(g + k)).collect();
        s.sort_unstable();
        s
    }

    /// Multiplicity of each residue among the charges, i.e. the `H_k`-values of `Λ`.
    pub fn residue_counts(&self) -> Vec<i64> {
        let mut w = vec![0; self.n.modulus() as usize];
        for &g in &self.charges {
            w[self.n.residue(g) as usize] += 1;
        }
        w
    }

    pub fn weight(&self) -> AffineWeight {
        AffineWeight {
            h: self.residue_counts(),
            deg: 0,
        }
    }

    /// Chain-ordered tuples exist only when `γ_l − γ_1 ≤ n + 1`.
    pub fn check_spread(&self) -> Result<()> {
        let spread = self.charges[self.charges.len() - 1] - self.charges[0];
        if spread > self.n.modulus() {
            return Err(Error::ChargeSpread {
                charges: self.charges.clone(),
                modulus: self.n.modulus(),
            });
        }
        Ok(())
    }
}

/// A `Λ`-path, stored as the steps before its agreement bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct LevelPath {
    hw: HighestWeight,
    prefix: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct PathRecord {
    n: Rank,
    charges: Vec<i64>,
    prefix: Vec<Vec<u32>>,
}

impl TryFrom<PathRecord> for LevelPath {
    type Error = Error;
    fn try_from(r: PathRecord) -> Result<Self> {
        LevelPath::new(HighestWeight::new(r.n, r.charges)?, r.prefix)
    }
}

impl From<LevelPath> for PathRecord {
    fn from(p: LevelPath) -> Self {
        PathRecord {
            n: p.hw.n,
            charges: p.hw.charges,
            prefix: p.prefix,
        }
    }
}

impl LevelPath {
    /// Builds a path from its leading steps; later steps follow `η_Λ`.
    pub fn new(hw: HighestWeight, steps: Vec<Vec<u32>>) -> Result<Self> {
        let l = hw.level();
        let n = hw.rank().n();
        let mut prefix = Vec::with_capacity(steps.len());
        for mut s in steps {
            if s.len() != l {
                return Err(Error::SizeMismatch(s.len(), l));
            }
            if let Some(&bad) = s.iter().find(|&&r| r > n) {
                return Err(Error::ResidueOutOfRange { residue: bad, n });
            }
            s.sort_unstable();
            prefix.push(s);
        }
        while let Some(last) = prefix.last() {
            if *last == hw.ground_step(prefix.len() as i64 - 1) {
                prefix.pop();
            } else {
                break;
            }
        }
        Ok(LevelPath { hw, prefix })
    }

    pub fn ground(hw: &HighestWeight) -> Self {
        LevelPath {
            hw: hw.clone(),
            prefix: Vec::new(),
        }
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.hw
    }

    /// `η(k) = η_Λ(k)` for all `k ≥` this bound.
    pub fn agreement_bound(&self) -> usize {
        self.prefix.len()
    }

    pub fn prefix(&self) -> &[Vec<u32>] {
        &self.prefix
    }

    pub fn step(&self, k: usize) -> Vec<u32> {
        match self.prefix.get(k) {
            Some(s) => s.clone(),
            None => self.hw.ground_step(k as i64),
        }
    }
}

impl fmt::Display for LevelPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self
            .prefix
            .iter()
            .map(|s| s.iter().map(|r| r.to_string()).join(""))
            .collect();
        write!(f, "<{}|ground>", steps.join(" "))
    }
}

fn theta_cost(alpha: &[u32], beta: &[u32]) -> Vec<Vec<i64>> {
    alpha
        .iter()
        .map(|&mu| beta.iter().map(|&nu| (mu >= nu) as i64).collect())
        .collect()
}

/// `H(α, β) = min_σ Σ_i θ(μ_i − ν_σ(i))` with `θ(x) = 1` iff `x ≥ 0`.
pub fn h_energy(alpha: &[u32], beta: &[u32], n: Rank) -> Result<i64> {
    if alpha.len() != beta.len() {
        return Err(Error::SizeMismatch(alpha.len(), beta.len()));
    }
    if let Some(&bad) = alpha.iter().chain(beta).find(|&&r| r > n.n()) {
        return Err(Error::ResidueOutOfRange { residue: bad, n: n.n() });
    }
    let cost = theta_cost(alpha, beta);
    Ok(if alpha.len() <= 8 {
        min_cost_exhaustive(&cost)
    } else {
        min_cost_hungarian(&cost)
    })
}

fn h_unchecked(alpha: &[u32], beta: &[u32], n: Rank) -> i64 {
    h_energy(alpha, beta, n).expect("steps are validated on construction")
}

/// `ω(η) = Σ_{k≥1} k (H(η(k−1), η(k)) − H(η_Λ(k−1), η_Λ(k)))`.
pub fn path_energy(eta: &LevelPath) -> i64 {
    let n = eta.hw.rank();
    let bound = eta.agreement_bound();
    (1..=bound)
        .map(|k| {
            let here = h_unchecked(&eta.step(k - 1), &eta.step(k), n);
            let ground = h_unchecked(&eta.hw.ground_step(k as i64 - 1), &eta.hw.ground_step(k as i64), n);
            k as i64 * (here - ground)
        })
        .sum()
}

/// `λ_η = Λ + Σ_k π(η(k) − η_Λ(k)) − ω(η) δ`, paired with `H_0, …, H_n` and `d`.
pub fn path_weight(eta: &LevelPath) -> AffineWeight {
    let n = eta.hw.rank();
    let m = n.modulus() as usize;
    let mut h = eta.hw.residue_counts();
    for k in 0..eta.agreement_bound() {
        let mut signed = vec![0i64; m];
        for r in eta.step(k) {
            signed[r as usize] += 1;
        }
        for r in eta.hw.ground_step(k as i64) {
            signed[r as usize] -= 1;
        }
        for (mu, &c) in signed.iter().enumerate() {
            if c != 0 {
                // ε_μ contributes Λ_{μ+1} − Λ_μ, entering with a minus sign.
                h[(mu + 1) % m] -= c;
                h[mu] += c;
            }
        }
    }
    AffineWeight {
        h,
        deg: -path_energy(eta),
    }
}

/// `η(k) = {m_1(k), …, m_l(k)} mod n+1`.
pub fn path_of_tuple(t: &MayaTuple, n: Rank) -> Result<LevelPath> {
    let hw = HighestWeight::new(n, t.charges())?;
    let bound = t
        .entries()
        .iter()
        .map(|m| m.shape().first_row() as usize)
        .max()
        .unwrap_or(0);
    let steps = (0..bound)
        .map(|k| t.entries().iter().map(|m| n.residue(m.eval(k as i64))).collect())
        .collect();
    LevelPath::new(hw, steps)
}

/// Whether `t` is chain-ordered and projects onto `eta`.
pub fn is_lift(t: &MayaTuple, eta: &LevelPath) -> Result<bool> {
    let hw = eta.highest_weight();
    if t.charges() != hw.charges() {
        return Err(Error::ChargeMismatch(t.charges(), hw.charges().to_vec()));
    }
    let n = hw.rank();
    Ok(t.is_chain_ordered(QuiverType::Cyclic(n)) && path_of_tuple(t, n)? == *eta)
}

/// The product order on tuples with equal charges.
pub fn tuple_leq(a: &MayaTuple, b: &MayaTuple) -> Result<bool> {
    a.leq(b)
}

/// Removes full vertical runs of `n + 1` equal rows until none is left.
///
/// Runs are removed from the cyclic segment multiset (every residue class of
/// one length at once) and the tuple is rebuilt by the greedy decomposition
/// with the original charges.
pub fn n_reduce(t: &MayaTuple, n: Rank) -> Result<MayaTuple> {
    let kind = QuiverType::Cyclic(n);
    if !t.is_chain_ordered(kind) {
        return Err(Error::NotChainOrdered);
    }
    if is_n_reduced_tuple(t, n) {
        return Ok(t.clone());
    }
    let mut f = segments_of_tuple(t, kind);
    while let Some(&len) = f.periodic_lengths().first() {
        remove_run(&mut f, len, n);
    }
    let reduced = canonical_tuple(&f, &t.charges())?
        .into_tuple()
        .ok_or_else(|| Error::ReductionFailed(f.to_string()))?;
    if !is_n_reduced_tuple(&reduced, n) {
        return Err(Error::ReductionFailed(reduced.to_string()));
    }
    Ok(reduced)
}

fn remove_run(f: &mut SegmentMultiset, len: u32, n: Rank) {
    for r in 0..n.modulus() {
        let removed = f.remove_one(crate::Segment {
            lo: r,
            hi: r + len as i64 - 1,
        });
        debug_assert!(removed);
    }
}

/// Residue multisets of size `l` and the `H` table between them.
struct StepTable {
    states: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    sums: Vec<i64>,
    h: Vec<Vec<i64>>,
}

impl StepTable {
    fn new(n: Rank, l: usize) -> Self {
        let states: Vec<Vec<u32>> = (0..=n.n()).combinations_with_replacement(l).collect();
        let index = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let sums = states.iter().map(|s| s.iter().map(|&r| r as i64).sum()).collect();
        let h = states
            .iter()
            .map(|a| states.iter().map(|b| h_unchecked(a, b, n)).collect())
            .collect();
        StepTable { states, index, sums, h }
    }
}

/// Depth-first search over paths with a fixed agreement bound.
struct PathSearch<'a> {
    hw: &'a HighestWeight,
    table: &'a StepTable,
    ground: Vec<usize>,
    ground_h: Vec<i64>,
    modulus: i64,
    max_energy: i64,
}

impl PathSearch<'_> {
    fn phase(&self, k: i64) -> usize {
        k.rem_euclid(self.modulus) as usize
    }

    /// Lower bound for the tail sum `Σ_{j≥k} (H_j − H^Λ_j)` when `η(k−1) = s`
    /// and the path still differs from the ground path at or after `k − 1`.
    fn tail_bound(&self, s: usize, k: i64) -> i64 {
        let g = self.ground[self.phase(k - 1)];
        let num = 1 + self.table.sums[s] - self.table.sums[g];
        -((-num).div_euclid(self.modulus))
    }

    fn c(&self, k: i64) -> i64 {
        self.ground_h[self.phase(k)]
    }

    fn run(&self, bound: usize, out: &mut Vec<Vec<usize>>) {
        let kk = bound as i64;
        // beta[k] = Σ_{j=k}^{K} min_s tail_bound(s, j).
        let mut beta = vec![0i64; bound + 2];
        for k in (1..=bound).rev() {
            let best = (0..self.table.states.len())
                .map(|s| self.tail_bound(s, k as i64))
                .min()
                .unwrap_or(0);
            beta[k] = beta[k + 1] + best;
        }
        let mut prefix = Vec::with_capacity(bound);
        self.dfs(kk, 0, &beta, &mut prefix, out);
    }

    fn dfs(&self, kk: i64, partial: i64, beta: &[i64], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = prefix.len() as i64;
        for s in 0..self.table.states.len() {
            let mut energy = partial;
            if let Some(&prev) = prefix.last() {
                energy += j * (self.table.h[prev][s] - self.c(j));
            }
            if j == kk - 1 {
                if s == self.ground[self.phase(j)] {
                    continue;
                }
                let last = kk * (self.table.h[s][self.ground[self.phase(kk)]] - self.c(kk));
                if energy + last <= self.max_energy {
                    prefix.push(s);
                    out.push(prefix.clone());
                    prefix.pop();
                }
                continue;
            }
            let rest = (j + 1) * self.tail_bound(s, j + 1) + beta[(j + 2) as usize];
            if energy + rest > self.max_energy {
                continue;
            }
            prefix.push(s);
            self.dfs(kk, energy, beta, prefix, out);
            prefix.pop();
        }
    }
}

/// Largest agreement bound a path of energy `≤ max_energy` can have.
///
/// The energy of a path equals the number of content-zero boxes of its
/// highest lift, and a first row of length `K` already holds `⌊K/(n+1)⌋` of
/// them, while the path agrees with the ground path from the longest first
/// row onward.
pub fn agreement_bound_limit(n: Rank, max_energy: u64) -> usize {
    (n.modulus() as usize) * (max_energy as usize + 1) - 1
}

/// All `Λ`-paths of energy `≤ max_energy`, sorted by `(energy, steps)`.
pub fn enumerate_paths(hw: &HighestWeight, max_energy: u64) -> Vec<LevelPath> {
    let n = hw.rank();
    let table = StepTable::new(n, hw.level());
    let m = n.modulus();
    let ground: Vec<usize> = (0..m).map(|k| table.index[&hw.ground_step(k)]).collect();
    let ground_h = (0..m)
        .map(|k| table.h[ground[(k - 1).rem_euclid(m) as usize]][ground[k as usize]])
        .collect();
    let search = PathSearch {
        hw,
        table: &table,
        ground,
        ground_h,
        modulus: m,
        max_energy: max_energy as i64,
    };
    let limit = agreement_bound_limit(n, max_energy);
    let found: Vec<Vec<usize>> = (1..=limit)
        .into_par_iter()
        .flat_map_iter(|bound| {
            let mut out = Vec::new();
            search.run(bound, &mut out);
            out
        })
        .collect();
    let mut paths: Vec<(i64, LevelPath)> = std::iter::once(Vec::new())
        .chain(found)
        .map(|idx| {
            let steps = idx.iter().map(|&s| table.states[s].clone()).collect();
            let p = LevelPath::new(search.hw.clone(), steps).expect("valid states");
            (path_energy(&p), p)
        })
        .collect();
    paths.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.prefix.cmp(&b.1.prefix)));
    debug_assert!(paths.iter().all(|(e, _)| *e <= max_energy as i64));
    paths.into_iter().map(|(_, p)| p).collect()
}

fn round_down(u: i64, r: u32, m: i64) -> i64 {
    u - (u - r as i64).rem_euclid(m)
}

/// Greatest `x` with `x_i ≡ r_i`, `x_i ≤ upper_i`, `x_1 ≤ … ≤ x_l ≤ x_1 + m`.
fn greatest_with_residues(upper: &[i64], r: &[u32], m: i64) -> Option<Vec<i64>> {
    let l = r.len();
    let span: i64 = r.windows(2).map(|w| (w[1] as i64 - w[0] as i64).rem_euclid(m)).sum();
    if span > m {
        return None;
    }
    let mut x: Vec<i64> = upper.iter().zip(r).map(|(&u, &ri)| round_down(u, ri, m)).collect();
    loop {
        let mut changed = false;
        for i in (0..l.saturating_sub(1)).rev() {
            if x[i] > x[i + 1] {
                x[i] = round_down(x[i + 1], r[i], m);
                changed = true;
            }
        }
        if x[l - 1] > x[0] + m {
            x[l - 1] = round_down(x[0] + m, r[l - 1], m);
            changed = true;
        }
        if !changed {
            return Some(x);
        }
    }
}

/// The unique greatest lift of `eta`.
///
/// Values are fixed from the agreement bound downward: past it every `m_j`
/// is the vacuum, and at each earlier step the greatest admissible vector is
/// taken over all ways of handing the residues of `η(k)` to the components.
/// Larger values at step `k + 1` only loosen the bounds at step `k`, so the
/// stepwise maximum is the maximum lift.
pub fn highest_lift(eta: &LevelPath) -> Result<MayaTuple> {
    let hw = eta.highest_weight();
    hw.check_spread()?;
    let n = hw.rank();
    let m = n.modulus();
    let g = hw.charges();
    let l = hw.level();
    let bound = eta.agreement_bound();
    let mut next: Vec<i64> = g.iter().map(|&gi| bound as i64 + gi).collect();
    let mut values = vec![vec![0i64; bound]; l];
    for k in (0..bound).rev() {
        let upper: Vec<i64> = next.iter().map(|x| x - 1).collect();
        let candidates: Vec<Vec<i64>> = eta
            .step(k)
            .into_iter()
            .permutations(l)
            .unique()
            .filter_map(|r| greatest_with_residues(&upper, &r, m))
            .collect();
        let top: Vec<i64> = (0..l)
            .map(|i| {
                candidates
                    .iter()
                    .map(|c| c[i])
                    .max()
                    .expect("some assignment is admissible")
            })
            .collect();
        if !candidates.contains(&top) {
            return Err(Error::Invalid(format!(
                "step {k} of {eta} has no greatest admissible assignment"
            )));
        }
        for i in 0..l {
            values[i][k] = top[i];
        }
        next = top;
    }
    let entries = values
        .iter()
        .zip(g)
        .map(|(v, &gi)| ChargedMaya::from_values(v, gi))
        .collect::<Result<Vec<_>>>()?;
    let t = MayaTuple::new(entries)?;
    debug_assert!(is_lift(&t, eta)?);
    if is_n_reduced_tuple(&t, n) {
        Ok(t)
    } else {
        n_reduce(&t, n)
    }
}

/// Number of vertices `≡ 0 (mod m)` in `lo..=hi`.
fn zeros_in(lo: i64, hi: i64, m: i64) -> u64 {
    if hi < lo {
        return 0;
    }
    (hi.div_euclid(m) - (lo - 1).div_euclid(m)) as u64
}

/// All `(Y, γ)` whose boxes cover at most `budget` vertices of residue 0.
fn diagrams_within(gamma: i64, n: Rank, budget: u64) -> Vec<(ChargedMaya, u64)> {
    fn rec(
        gamma: i64,
        m: i64,
        max_len: Option<u32>,
        spent: u64,
        budget: u64,
        parts: &mut Vec<u32>,
        out: &mut Vec<(ChargedMaya, u64)>,
    ) {
        let shape = YoungDiagram::new(parts.clone()).expect("rows stay weakly decreasing");
        out.push((ChargedMaya::new(shape, gamma), spent));
        let i = parts.len() as i64 + 1;
        let lo = gamma + 1 - i;
        let mut len = 1u32;
        while max_len.is_none_or(|mx| len <= mx) {
            let z = zeros_in(lo, lo + len as i64 - 1, m);
            if spent + z > budget {
                break;
            }
            parts.push(len);
            rec(gamma, m, Some(len), spent + z, budget, parts, out);
            parts.pop();
            len += 1;
        }
    }
    let mut out = Vec::new();
    rec(gamma, n.modulus(), None, 0, budget, &mut Vec::new(), &mut out);
    out
}

/// `v_0` of the cyclic segment multiset of `t`, the energy of a tuple.
pub fn tuple_energy(t: &MayaTuple, n: Rank) -> u64 {
    let m = n.modulus();
    t.entries()
        .iter()
        .flat_map(|e| {
            let g = e.charge();
            e.shape().parts().iter().enumerate().map(move |(r, &l)| {
                let lo = g - r as i64;
                zeros_in(lo, lo + l as i64 - 1, m)
            })
        })
        .sum()
}

/// `(Λ − C v, −v_0)` with `v` the cyclic dimension vector of `t`.
pub fn tuple_weight(t: &MayaTuple, n: Rank) -> Result<AffineWeight> {
    let hw = HighestWeight::new(n, t.charges())?;
    let v = segments_of_tuple(t, QuiverType::Cyclic(n))
        .dim_vector()
        .to_residue_vec();
    Ok(AffineWeight {
        h: n.w_minus_cv(&hw.residue_counts(), &v),
        deg: -v[0],
    })
}

/// Chain-ordered tuples for `Λ` with `v_0 ≤ max_energy`, sorted by
/// `(v_0, tuple)`. With `reduced` only n-reduced tuples are kept.
pub fn enumerate_components(hw: &HighestWeight, max_energy: u64, reduced: bool) -> Result<Vec<MayaTuple>> {
    hw.check_spread()?;
    let n = hw.rank();
    let kind = QuiverType::Cyclic(n);
    let pools: Vec<Vec<(ChargedMaya, u64)>> = hw
        .charges()
        .par_iter()
        .map(|&g| diagrams_within(g, n, max_energy))
        .collect();

    fn combine(
        pools: &[Vec<(ChargedMaya, u64)>],
        budget: u64,
        cur: &mut Vec<ChargedMaya>,
        spent: u64,
        out: &mut Vec<(u64, Vec<ChargedMaya>)>,
    ) {
        let i = cur.len();
        if i == pools.len() {
            out.push((spent, cur.clone()));
            return;
        }
        for (m, z) in &pools[i] {
            if spent + z > budget {
                continue;
            }
            if let Some(prev) = cur.last() {
                if !prev.leq(m) {
                    continue;
                }
            }
            cur.push(m.clone());
            combine(pools, budget, cur, spent + z, out);
            cur.pop();
        }
    }

    let mut raw = Vec::new();
    combine(&pools, max_energy, &mut Vec::new(), 0, &mut raw);
    let mut tuples: Vec<(u64, MayaTuple)> = raw
        .into_par_iter()
        .filter_map(|(e, entries)| {
            let t = MayaTuple::new(entries).expect("charges come from a valid weight");
            let keep = t.is_chain_ordered(kind) && (!reduced || is_n_reduced_tuple(&t, n));
            keep.then_some((e, t))
        })
        .collect();
    tuples.sort();
    Ok(tuples.into_iter().map(|(_, t)| t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{basic_path, energy_level1};
    use std::collections::BTreeMap;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn hw(n: u32, charges: &[i64]) -> HighestWeight {
        HighestWeight::new(rank(n), charges.to_vec()).unwrap()
    }

    fn y(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn tuple(entries: &[(&[u32], i64)]) -> MayaTuple {
        MayaTuple::new(entries.iter().map(|&(p, g)| ChargedMaya::new(y(p), g)).collect()).unwrap()
    }

    /// `l` minus a maximum matching of pairs `μ < ν`, matched greedily:
    /// each `ν` in increasing order takes the largest free `μ` below it.
    fn h_by_matching(alpha: &[u32], beta: &[u32]) -> i64 {
        let mut free: Vec<u32> = alpha.to_vec();
        free.sort_unstable();
        let mut nus = beta.to_vec();
        nus.sort_unstable();
        let mut matched = 0;
        for nu in nus {
            if let Some(pos) = free.iter().rposition(|&mu| mu < nu) {
                free.remove(pos);
                matched += 1;
            }
        }
        alpha.len() as i64 - matched
    }

    #[test]
    fn h_energy_examples() {
        assert_eq!(h_energy(&[0], &[1], rank(1)), Ok(0));
        assert_eq!(h_energy(&[1], &[0], rank(1)), Ok(1));
        assert_eq!(h_energy(&[0, 1], &[0, 1], rank(1)), Ok(1));
        assert!(h_energy(&[0], &[0, 1], rank(1)).is_err());
        assert!(h_energy(&[2], &[0], rank(1)).is_err());
    }

    #[test]
    fn h_energy_matches_matching_oracle() {
        for n in 1..=3 {
            for l in 1..=4 {
                let states: Vec<Vec<u32>> = (0..=n).combinations_with_replacement(l).collect();
                for a in &states {
                    for b in &states {
                        assert_eq!(h_energy(a, b, rank(n)).unwrap(), h_by_matching(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn hungarian_branch_used_for_large_levels() {
        let a: Vec<u32> = (0..10).map(|i| i % 3).collect();
        let b: Vec<u32> = (0..10).map(|i| (i + 1) % 3).collect();
        assert_eq!(h_energy(&a, &b, rank(2)).unwrap(), h_by_matching(&a, &b));
    }

    #[test]
    fn ground_step_energies_are_periodic() {
        let w = hw(1, &[0, 0]);
        let vals: Vec<i64> = (1..9)
            .map(|k| h_energy(&w.ground_step(k - 1), &w.ground_step(k), rank(1)).unwrap())
            .collect();
        assert_eq!(vals, vec![0, 2, 0, 2, 0, 2, 0, 2]);
        let w = hw(1, &[0, 1]);
        let vals: Vec<i64> = (1..5)
            .map(|k| h_energy(&w.ground_step(k - 1), &w.ground_step(k), rank(1)).unwrap())
            .collect();
        assert_eq!(vals, vec![1, 1, 1, 1]);
    }

    #[test]
    fn ground_paths() {
        let g = LevelPath::ground(&hw(1, &[0]));
        assert_eq!(
            (0..4).map(|k| g.step(k)).collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![0], vec![1]]
        );
        let g = LevelPath::ground(&hw(1, &[0, 1]));
        assert!((0..4).all(|k| g.step(k) == vec![0, 1]));
        let g = LevelPath::ground(&hw(1, &[0, 0]));
        assert_eq!(g.step(0), vec![0, 0]);
        assert_eq!(g.step(1), vec![1, 1]);
        assert_eq!(path_energy(&g), 0);
        assert_eq!(path_weight(&g), AffineWeight { h: vec![2, 0], deg: 0 });
    }

    #[test]
    fn level_one_compatibility() {
        for n in 1..=3 {
            for shape in YoungDiagram::up_to(10) {
                if !shape.is_n_reduced(rank(n)) {
                    continue;
                }
                let t = MayaTuple::new(vec![ChargedMaya::new(shape.clone(), 0)]).unwrap();
                let p = path_of_tuple(&t, rank(n)).unwrap();
                let b = basic_path(&ChargedMaya::new(shape.clone(), 0), rank(n));
                assert!((0..20).all(|k| p.step(k) == vec![b.entry(k)]));
                assert_eq!(path_energy(&p), energy_level1(&shape, rank(n)).unwrap());
                assert_eq!(path_weight(&p), tuple_weight(&t, rank(n)).unwrap());
            }
        }
    }

    #[test]
    fn path_weight_example() {
        let t = tuple(&[(&[1], 0)]);
        let p = path_of_tuple(&t, rank(1)).unwrap();
        assert_eq!(
            path_weight(&p),
            AffineWeight {
                h: vec![-1, 2],
                deg: -1
            }
        );
    }

    #[test]
    fn path_of_tuple_examples() {
        let t = MayaTuple::vacuum(&[0, 1]).unwrap();
        assert_eq!(path_of_tuple(&t, rank(1)).unwrap(), LevelPath::ground(&hw(1, &[0, 1])));
        let t = tuple(&[(&[1, 1], 0)]);
        assert_eq!(path_of_tuple(&t, rank(1)).unwrap(), LevelPath::ground(&hw(1, &[0])));
        let t = tuple(&[(&[1], 0)]);
        assert_eq!(path_of_tuple(&t, rank(1)).unwrap().prefix(), &[vec![1]]);
    }

    #[test]
    fn lifts() {
        let ground = LevelPath::ground(&hw(1, &[0]));
        assert_eq!(is_lift(&MayaTuple::vacuum(&[0]).unwrap(), &ground), Ok(true));
        assert_eq!(is_lift(&tuple(&[(&[1, 1], 0)]), &ground), Ok(true));
        assert_eq!(is_lift(&tuple(&[(&[1], 0)]), &ground), Ok(false));
        assert!(is_lift(&MayaTuple::vacuum(&[1]).unwrap(), &ground).is_err());
    }

    #[test]
    fn n_reduce_examples() {
        let n = rank(1);
        let vac = MayaTuple::vacuum(&[0]).unwrap();
        assert_eq!(n_reduce(&vac, n), Ok(vac.clone()));
        assert_eq!(n_reduce(&tuple(&[(&[1, 1], 0)]), n), Ok(vac));
        let t = tuple(&[(&[2, 2], 0), (&[2, 2], 1)]);
        let r = n_reduce(&t, n).unwrap();
        assert_eq!(path_of_tuple(&r, n), path_of_tuple(&t, n));
        assert!(is_n_reduced_tuple(&r, n));
        assert!(tuple_leq(&t, &r).unwrap());
        assert_eq!(r, MayaTuple::vacuum(&[0, 1]).unwrap());
    }

    #[test]
    fn tuple_order() {
        let vac = MayaTuple::vacuum(&[0]).unwrap();
        let t = tuple(&[(&[1, 1], 0)]);
        assert_eq!(tuple_leq(&vac, &vac), Ok(true));
        assert_eq!(tuple_leq(&t, &vac), Ok(true));
        assert_eq!(tuple_leq(&vac, &t), Ok(false));
        assert!(tuple_leq(&vac, &MayaTuple::vacuum(&[1]).unwrap()).is_err());
    }

    /// Every path with agreement bound `< K`, by listing all step sequences.
    fn brute_force_paths(w: &HighestWeight, kmax: usize, max_energy: i64) -> Vec<LevelPath> {
        let states: Vec<Vec<u32>> = (0..=w.rank().n()).combinations_with_replacement(w.level()).collect();
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for steps in (0..kmax).map(|_| states.iter().cloned()).multi_cartesian_product() {
            let p = LevelPath::new(w.clone(), steps).unwrap();
            if path_energy(&p) <= max_energy && seen.insert(p.clone()) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn enumerate_paths_matches_brute_force() {
        for (n, charges, e) in [
            (1, vec![0], 3u64),
            (1, vec![0, 0], 2),
            (1, vec![0, 1], 2),
            (2, vec![0], 2),
        ] {
            let w = hw(n, &charges);
            let fast = enumerate_paths(&w, e);
            let kmax = agreement_bound_limit(rank(n), e) + 2;
            let kmax = kmax.min(if charges.len() == 1 { 10 } else { 7 });
            let mut slow = brute_force_paths(&w, kmax, e as i64);
            slow.sort_by_key(|p| (path_energy(p), p.prefix().to_vec()));
            assert_eq!(fast, slow, "n={n} charges={charges:?}");
        }
    }

    #[test]
    fn enumerate_paths_energy_zero_is_ground() {
        let w = hw(1, &[0]);
        assert_eq!(enumerate_paths(&w, 0), vec![LevelPath::ground(&w)]);
    }

    #[test]
    fn level_one_path_counts_follow_reduced_diagrams() {
        let w = hw(1, &[0]);
        let mut by_energy: BTreeMap<i64, usize> = BTreeMap::new();
        for p in enumerate_paths(&w, 5) {
            *by_energy.entry(path_energy(&p)).or_default() += 1;
        }
        let mut expected: BTreeMap<i64, usize> = BTreeMap::new();
        for shape in YoungDiagram::up_to(12) {
            if shape.is_n_reduced(rank(1)) {
                let e = energy_level1(&shape, rank(1)).unwrap();
                if e <= 5 {
                    *expected.entry(e).or_default() += 1;
                }
            }
        }
        assert_eq!(by_energy, expected);
    }

    #[test]
    fn highest_lift_of_ground_is_vacuum() {
        for charges in [vec![0], vec![0, 0], vec![0, 1], vec![0, 2], vec![-1, 1]] {
            let w = hw(1, &charges);
            let lift = highest_lift(&LevelPath::ground(&w)).unwrap();
            assert_eq!(lift, MayaTuple::vacuum(&charges).unwrap());
        }
        let w = hw(1, &[0, 3]);
        assert!(matches!(
            highest_lift(&LevelPath::ground(&w)),
            Err(Error::ChargeSpread { .. })
        ));
    }

    #[test]
    fn greatest_with_residues_cases() {
        assert_eq!(greatest_with_residues(&[5, 5], &[0, 1], 2), Some(vec![4, 5]));
        assert_eq!(greatest_with_residues(&[5, 3], &[1, 0], 2), Some(vec![1, 2]));
        assert_eq!(greatest_with_residues(&[9, 9, 9], &[1, 0, 1], 2), Some(vec![7, 8, 9]));
        assert_eq!(greatest_with_residues(&[9, 9, 9, 9], &[1, 0, 1, 0], 2), None);
    }

    #[test]
    fn component_counts_level_one() {
        let w = hw(1, &[0]);
        let comps = enumerate_components(&w, 4, true).unwrap();
        let mut expected: Vec<YoungDiagram> = YoungDiagram::up_to(12)
            .into_iter()
            .filter(|s| s.is_n_reduced(rank(1)) && energy_level1(s, rank(1)).unwrap() <= 4)
            .collect();
        let mut got: Vec<YoungDiagram> = comps.iter().map(|t| t.entries()[0].shape().clone()).collect();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
        let all = enumerate_components(&w, 4, false).unwrap();
        assert!(comps.iter().all(|t| all.contains(t)));
        assert!(all.len() > comps.len());
    }

    #[test]
    fn zero_counting() {
        assert_eq!(zeros_in(0, 0, 2), 1);
        assert_eq!(zeros_in(-3, 3, 2), 3);
        assert_eq!(zeros_in(1, 1, 2), 0);
        assert_eq!(zeros_in(-5, -1, 3), 1);
    }

    #[test]
    fn level_path_json() {
        let p = LevelPath::new(hw(1, &[0, 0]), vec![vec![1, 0]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":1,"charges":[0,0],"prefix":[[0,1]]}"#);
        assert_eq!(serde_json::from_str::<LevelPath>(&s).unwrap(), p);
        assert!(serde_json::from_str::<LevelPath>(r#"{"n":1,"charges":[0],"prefix":[[0,1]]}"#).is_err());
    }
}
