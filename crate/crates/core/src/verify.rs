//! Exhaustive property checks over bounded universes.
//!
//! Each check returns a [`PropertyReport`] carrying the number of cases it
//! examined and, on failure, the first counterexample in a deterministic
//! order. Checks parallelize over cases but their reports do not depend on
//! the schedule.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::fock::FockVector;
use crate::multisegments::{
    canonical_tuple, is_n_reduced_tuple, multisets_up_to, segments_of_charged_young, segments_of_tuple, MayaTuple,
    SegmentMultiset,
};
use crate::partitions::{delta_weight, dim_vector_level1, energy_level1, level1_weight, ChargedMaya, YoungDiagram};
use crate::paths::{
    enumerate_components, enumerate_paths, highest_lift, is_lift, n_reduce, path_energy, path_of_tuple, path_weight,
    tuple_leq, tuple_weight, HighestWeight, LevelPath,
};
use crate::quiverlab::{build_rep, conormal_sample, framing, is_nilpotent, moment_map, stability_test};
use crate::{AffineWeight, QuiverType, Rank};

/// Sizes of the universes each check enumerates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Ranks for the level-one identities.
    pub ranks: Vec<u32>,
    /// Largest `|Y|` for the level-one identities.
    pub max_size: u32,
    /// Largest `|Y|` for the Fock relations.
    pub fock_size: u32,
    /// Contents `k, l ∈ [−fock_range, fock_range]`.
    pub fock_range: i64,
    /// Largest total dimension for the level-one classification.
    pub classify_dim: u64,
    /// Vertex window `[−w, w]` on the infinite quiver for the classification.
    pub classify_window: i64,
    /// Energy bound for the lift calculus and weight comparison.
    pub lift_energy: u64,
    /// Total size of the brute-force lift search.
    pub lift_search_size: u32,
    /// Energy bound for the unreduced enumeration.
    pub gl_energy: u64,
    /// Largest total dimension for the matrix checks.
    pub quiver_dim: u64,
    /// Vertex window `[−w, w]` on the infinite quiver for the matrix checks.
    pub quiver_window: i64,
    /// Seeds per multiset for conormal sampling.
    pub seeds: u64,
    /// First seed; seeds are `seed..seed + seeds`.
    pub seed: u64,
    /// Flip the sign of `Δ_k` to exercise failure reporting.
    pub corrupt_delta: bool,
}

impl Bounds {
    /// The full bounds used by the acceptance suite.
    pub fn full() -> Self {
        Bounds {
            ranks: vec![1, 2, 3],
            max_size: 16,
            fock_size: 10,
            fock_range: 6,
            classify_dim: 10,
            classify_window: 4,
            lift_energy: 4,
            lift_search_size: 14,
            gl_energy: 3,
            quiver_dim: 7,
            quiver_window: 3,
            seeds: 20,
            seed: 0,
            corrupt_delta: false,
        }
    }

    /// Smaller bounds that finish in a few seconds.
    pub fn quick() -> Self {
        Bounds {
            ranks: vec![1, 2, 3],
            max_size: 10,
            fock_size: 6,
            fock_range: 4,
            classify_dim: 7,
            classify_window: 3,
            lift_energy: 3,
            lift_search_size: 11,
            gl_energy: 2,
            quiver_dim: 5,
            quiver_window: 2,
            seeds: 6,
            seed: 0,
            corrupt_delta: false,
        }
    }

    fn seeds(&self) -> std::ops::Range<u64> {
        self.seed..self.seed + self.seeds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    fn from_results(name: &str, results: Vec<Option<String>>) -> Self {
        let cases = results.len() as u64;
        let counterexample = results.into_iter().flatten().next();
        PropertyReport {
            name: name.into(),
            cases,
            passed: counterexample.is_none(),
            counterexample,
            note: None,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

fn rank(n: u32) -> Rank {
    Rank::new(n).expect("ranks in bounds are positive")
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

/// `(Y, γ) → Maya values → (Y, γ)` and the two forms of the Maya order.
pub fn maya_round_trip(b: &Bounds) -> PropertyReport {
    let shapes = YoungDiagram::up_to(b.max_size.min(14));
    let results = shapes
        .par_iter()
        .flat_map_iter(|y| {
            (-3..=3).map(move |g| {
                let m = ChargedMaya::new(y.clone(), g);
                let k = m.stabilization_bound();
                let values: Vec<i64> = (0..k).map(|j| m.eval(j)).collect();
                let back = ChargedMaya::from_values(&values, g);
                fail_if(back.as_ref() != Ok(&m), || format!("Y={y} charge={g}"))
            })
        })
        .collect();
    PropertyReport::from_results("maya_round_trip", results)
}

pub fn maya_order_equivalence(b: &Bounds) -> PropertyReport {
    let shapes = YoungDiagram::up_to(b.max_size.min(6));
    let diagrams: Vec<ChargedMaya> = shapes
        .iter()
        .flat_map(|y| (-2..=2).map(move |g| ChargedMaya::new(y.clone(), g)))
        .collect();
    let results = diagrams
        .par_iter()
        .flat_map_iter(|a| {
            diagrams.iter().map(move |c| {
                let pointwise = a.leq(c);
                let negative = a.leq_via_negative_half(c);
                let containment = a.contains_infinite(c);
                fail_if(pointwise != negative || pointwise != containment, || {
                    format!("{a} vs {c}: pointwise={pointwise} negative={negative} containment={containment}")
                })
            })
        })
        .collect();
    PropertyReport::from_results("maya_order_equivalence", results)
}

fn reduced_shapes(b: &Bounds) -> Vec<(u32, YoungDiagram)> {
    let shapes = YoungDiagram::up_to(b.max_size);
    b.ranks
        .iter()
        .flat_map(|&n| {
            shapes
                .iter()
                .filter(move |y| y.is_n_reduced(rank(n)))
                .map(move |y| (n, y.clone()))
        })
        .collect()
}

/// `ω(Y) = v_0(Y)` for n-reduced `Y`.
pub fn energy_equals_v0(b: &Bounds) -> PropertyReport {
    let results = reduced_shapes(b)
        .par_iter()
        .map(|(n, y)| {
            let r = rank(*n);
            let omega = energy_level1(y, r).expect("input is reduced");
            let v0 = dim_vector_level1(y, QuiverType::Cyclic(r)).get(0) as i64;
            fail_if(omega != v0, || format!("n={n} Y={y}: energy {omega} but v_0 = {v0}"))
        })
        .collect();
    PropertyReport::from_results("energy_equals_v0", results)
}

/// `Δ_k(Y) = (Λ_0 − C v)_k` for every residue, and `Σ_k Δ_k = 1`.
pub fn delta_equals_weight(b: &Bounds) -> PropertyReport {
    let sign = if b.corrupt_delta { -1 } else { 1 };
    let results = reduced_shapes(b)
        .par_iter()
        .map(|(n, y)| {
            let r = rank(*n);
            let delta: Vec<i64> = (0..r.modulus()).map(|k| sign * delta_weight(y, r, k)).collect();
            let expected = level1_weight(y, r).h;
            let level: i64 = delta.iter().sum();
            fail_if(delta != expected || level != 1, || {
                format!("n={n} Y={y}: delta {delta:?} but w0 - Cv = {expected:?}")
            })
        })
        .collect();
    PropertyReport::from_results("delta_equals_weight", results)
}

fn cartan_inf(k: i64, l: i64) -> i64 {
    match (k - l).abs() {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// `[E_k, F_l] = δ_kl H_k`, `[H_k, E_l] = a_kl E_l`, `[H_k, F_l] = −a_kl F_l` on each `1_Y`.
pub fn fock_relations(b: &Bounds) -> PropertyReport {
    let shapes = YoungDiagram::up_to(b.fock_size);
    let range = b.fock_range;
    let results = shapes
        .par_iter()
        .flat_map_iter(|y| {
            let v = FockVector::basis(y.clone());
            (-range..=range).flat_map(move |k| {
                let v = v.clone();
                (-range..=range).map(move |l| {
                    let ef = &v.f_op(l).e_op(k) - &v.e_op(k).f_op(l);
                    let expect = if k == l { v.h_op(k) } else { FockVector::zero() };
                    if ef != expect {
                        return Some(format!("[E_{k},F_{l}] on {y}: got {ef}, expected {expect}"));
                    }
                    let a = BigRational::from_integer(cartan_inf(k, l).into());
                    let he = &v.e_op(l).h_op(k) - &v.h_op(k).e_op(l);
                    if he != v.e_op(l).scale(&a) {
                        return Some(format!("[H_{k},E_{l}] on {y}: got {he}"));
                    }
                    let hf = &v.f_op(l).h_op(k) - &v.h_op(k).f_op(l);
                    if hf != v.f_op(l).scale(&-a) {
                        return Some(format!("[H_{k},F_{l}] on {y}: got {hf}"));
                    }
                    None
                })
            })
        })
        .collect();
    PropertyReport::from_results("fock_relations", results)
}

/// Single-charge greedy success matches the Young diagram multisets.
///
/// On the infinite quiver the greedy pass succeeds exactly on the `A_Y`.
/// On the cyclic quiver it succeeds exactly on the images of all `Y`, and the
/// multiset is aperiodic exactly when that `Y` is n-reduced.
pub fn level1_classification(b: &Bounds) -> PropertyReport {
    let dim = b.classify_dim;
    let shapes = YoungDiagram::up_to(dim as u32);
    let mut results: Vec<Option<String>> = Vec::new();

    // Every A_Y is recovered, whatever its support.
    let inf = QuiverType::Infinite;
    results.par_extend(shapes.par_iter().map(|y| {
        let f = segments_of_charged_young(&ChargedMaya::new(y.clone(), 0), inf);
        let got = canonical_tuple(&f, &[0]).expect("valid charges").into_tuple();
        let want = MayaTuple::new(vec![ChargedMaya::new(y.clone(), 0)]).expect("one charge");
        fail_if(got.as_ref() != Some(&want), || format!("A_{y} decomposed as {got:?}"))
    }));

    let young_inf: HashSet<SegmentMultiset> = shapes
        .iter()
        .map(|y| segments_of_charged_young(&ChargedMaya::new(y.clone(), 0), inf))
        .collect();
    let w = b.classify_window;
    results.par_extend(multisets_up_to(inf, dim, (-w, w)).into_par_iter().map(|f| {
        let ok = canonical_tuple(&f, &[0]).expect("valid charges").is_tuple();
        let young = young_inf.contains(&f);
        fail_if(ok != young, || {
            format!("{f}: greedy success {ok}, Young multiset {young}")
        })
    }));

    for n in [1u32, 2] {
        let kind = QuiverType::Cyclic(rank(n));
        let young: HashMap<SegmentMultiset, Vec<YoungDiagram>> = shapes.iter().fold(HashMap::new(), |mut acc, y| {
            let f = segments_of_charged_young(&ChargedMaya::new(y.clone(), 0), kind);
            acc.entry(f).or_default().push(y.clone());
            acc
        });
        results.par_extend(multisets_up_to(kind, dim, (0, 0)).into_par_iter().map(|f| {
            let got = canonical_tuple(&f, &[0]).expect("valid charges").into_tuple();
            let aperiodic = f.is_aperiodic().expect("cyclic");
            match (got, young.get(&f)) {
                (None, None) => None,
                (Some(t), Some(ys)) => {
                    let y = t.entries()[0].shape();
                    if !ys.contains(y) {
                        Some(format!("n={n} {f}: greedy gave {y}, not one of {ys:?}"))
                    } else if y.is_n_reduced(rank(n)) != aperiodic {
                        Some(format!("n={n} {f}: Y={y} reduced={} aperiodic={aperiodic}", !aperiodic))
                    } else {
                        None
                    }
                }
                (got, ys) => Some(format!("n={n} {f}: greedy {got:?}, Young preimages {ys:?}")),
            }
        }));
    }
    PropertyReport::from_results("level1_classification", results)
}

/// All tuples with the given charges whose sizes sum to at most `max_total`.
pub fn tuples_up_to(charges: &[i64], max_total: u32) -> Vec<MayaTuple> {
    let by_size: Vec<Vec<YoungDiagram>> = (0..=max_total).map(YoungDiagram::of_size).collect();
    fn rec(
        charges: &[i64],
        by_size: &[Vec<YoungDiagram>],
        budget: u32,
        cur: &mut Vec<ChargedMaya>,
        out: &mut Vec<MayaTuple>,
    ) {
        let i = cur.len();
        if i == charges.len() {
            out.push(MayaTuple::new(cur.clone()).expect("charges sorted"));
            return;
        }
        for size in 0..=budget {
            for y in &by_size[size as usize] {
                cur.push(ChargedMaya::new(y.clone(), charges[i]));
                rec(charges, by_size, budget - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(charges, &by_size, max_total, &mut Vec::new(), &mut out);
    out
}

/// Cyclic charge sets `γ_1 ≤ … ≤ γ_l ≤ γ_1 + n + 1` with `γ_1 ∈ [0, n]`, levels 1 and 2.
fn cyclic_charge_sets(n: u32) -> Vec<Vec<i64>> {
    let m = n as i64 + 1;
    let mut sets: Vec<Vec<i64>> = (0..m).map(|a| vec![a]).collect();
    for a in 0..m {
        for c in a..=a + m {
            sets.push(vec![a, c]);
        }
    }
    sets
}

/// Greedy decomposition inverts `segments_of_tuple` on chain-ordered tuples.
pub fn greedy_inverts_segments(b: &Bounds) -> PropertyReport {
    let size = b.classify_dim.min(8) as u32;
    let mut cases: Vec<(QuiverType, Vec<i64>)> = [&[0][..], &[0, 0], &[0, 1], &[-1, 1], &[0, 3]]
        .iter()
        .map(|cs| (QuiverType::Infinite, cs.to_vec()))
        .collect();
    for n in [1u32, 2] {
        let kind = QuiverType::Cyclic(rank(n));
        cases.extend(cyclic_charge_sets(n).into_iter().map(|cs| (kind, cs)));
    }
    let results = cases
        .par_iter()
        .flat_map_iter(|(kind, cs)| {
            let kind = *kind;
            tuples_up_to(cs, size)
                .into_iter()
                .filter(move |t| t.is_chain_ordered(kind))
                .map(move |t| {
                    let f = segments_of_tuple(&t, kind);
                    let got = canonical_tuple(&f, &t.charges()).expect("valid charges").into_tuple();
                    fail_if(got.as_ref() != Some(&t), || format!("{t} decomposed as {got:?}"))
                })
        })
        .collect();
    PropertyReport::from_results("greedy_inverts_segments", results)
}

/// Aperiodic segments exactly for n-reduced chain tuples.
pub fn aperiodic_iff_reduced(b: &Bounds) -> PropertyReport {
    let size = b.classify_dim as u32;
    let mut cases = Vec::new();
    for n in [1u32, 2] {
        cases.extend(cyclic_charge_sets(n).into_iter().map(|cs| (n, cs)));
    }
    let results = cases
        .par_iter()
        .flat_map_iter(|(n, cs)| {
            let r = rank(*n);
            let kind = QuiverType::Cyclic(r);
            tuples_up_to(cs, size)
                .into_iter()
                .filter(move |t| t.is_chain_ordered(kind))
                .map(move |t| {
                    let aperiodic = segments_of_tuple(&t, kind).is_aperiodic().expect("cyclic");
                    let reduced = is_n_reduced_tuple(&t, r);
                    fail_if(aperiodic != reduced, || {
                        format!("n={n} {t}: aperiodic={aperiodic} reduced={reduced}")
                    })
                })
        })
        .collect();
    PropertyReport::from_results("aperiodic_iff_reduced", results)
}

fn lift_weights() -> Vec<HighestWeight> {
    let n1 = rank(1);
    vec![
        HighestWeight::new(n1, vec![0, 0]).expect("sorted"),
        HighestWeight::new(n1, vec![0, 1]).expect("sorted"),
    ]
}

/// Lifts of each path, found by scanning all chain tuples up to a size.
pub fn brute_force_lifts(hw: &HighestWeight, max_total: u32) -> HashMap<LevelPath, Vec<MayaTuple>> {
    let n = hw.rank();
    let kind = QuiverType::Cyclic(n);
    let mut lifts: HashMap<LevelPath, Vec<MayaTuple>> = HashMap::new();
    for t in tuples_up_to(hw.charges(), max_total) {
        if t.is_chain_ordered(kind) {
            let p = path_of_tuple(&t, n).expect("charges valid");
            lifts.entry(p).or_default().push(t);
        }
    }
    lifts
}

/// Unique maximal lift, equal to `highest_lift`, n-reduced, and reached by
/// `n_reduce` from every other lift without changing the path.
pub fn lift_calculus(b: &Bounds) -> PropertyReport {
    let mut results = Vec::new();
    let mut largest = 0;
    for hw in lift_weights() {
        let n = hw.rank();
        let lifts = brute_force_lifts(&hw, b.lift_search_size);
        let paths = enumerate_paths(&hw, b.lift_energy);
        results.par_extend(paths.par_iter().map(|eta| {
            let Some(found) = lifts.get(eta) else {
                return Some(format!("{eta}: no lift within size {}", b.lift_search_size));
            };
            let maximal: Vec<&MayaTuple> = found
                .iter()
                .filter(|a| found.iter().all(|c| !(tuple_leq(a, c).unwrap() && a != &c)))
                .collect();
            if maximal.len() != 1 {
                return Some(format!("{eta}: {} maximal lifts", maximal.len()));
            }
            let top = maximal[0];
            if !found.iter().all(|a| tuple_leq(a, top).unwrap()) {
                return Some(format!("{eta}: maximal lift {top} is not greatest"));
            }
            let hl = match highest_lift(eta) {
                Ok(t) => t,
                Err(e) => return Some(format!("{eta}: highest_lift failed: {e}")),
            };
            if &hl != top {
                return Some(format!("{eta}: highest_lift {hl} but brute force {top}"));
            }
            if !is_n_reduced_tuple(&hl, n) || !is_lift(&hl, eta).unwrap() {
                return Some(format!("{eta}: highest lift {hl} not a reduced lift"));
            }
            for lift in found {
                match n_reduce(lift, n) {
                    Ok(r) => {
                        if path_of_tuple(&r, n).ok().as_ref() != Some(eta) || !tuple_leq(lift, &r).unwrap() {
                            return Some(format!("n_reduce({lift}) = {r} breaks the path or the order"));
                        }
                    }
                    Err(e) => return Some(format!("n_reduce({lift}) failed: {e}")),
                }
            }
            None
        }));
        largest = largest.max(
            paths
                .iter()
                .filter_map(|p| highest_lift(p).ok())
                .map(|t| t.size())
                .max()
                .unwrap_or(0),
        );
    }
    let note = format!(
        "largest highest lift has {largest} boxes; lifts searched up to {}",
        b.lift_search_size
    );
    let mut report = PropertyReport::from_results("lift_calculus", results);
    if largest + 2 > b.lift_search_size {
        report.passed = false;
        report.counterexample = Some(format!("search size too small: {note}"));
    }
    report.with_note(note)
}

fn weight_counts<T>(items: &[T], weight: impl Fn(&T) -> AffineWeight) -> BTreeMap<AffineWeight, u64> {
    let mut out = BTreeMap::new();
    for it in items {
        *out.entry(weight(it)).or_insert(0) += 1;
    }
    out
}

/// Per-weight counts agree between paths and reduced tuples, and each path
/// has the weight of its highest lift.
pub fn weight_isomorphism(b: &Bounds) -> PropertyReport {
    let mut weights = lift_weights();
    weights.push(HighestWeight::new(rank(2), vec![0, 1]).expect("sorted"));
    weights.push(HighestWeight::new(rank(1), vec![0]).expect("sorted"));
    weights.push(HighestWeight::new(rank(1), vec![0, 2]).expect("sorted"));
    let mut results = Vec::new();
    for hw in weights {
        let n = hw.rank();
        let paths = enumerate_paths(&hw, b.lift_energy);
        let comps = enumerate_components(&hw, b.lift_energy, true).expect("charges in range");
        let by_path = weight_counts(&paths, path_weight);
        let by_tuple = weight_counts(&comps, |t| tuple_weight(t, n).expect("valid"));
        results.push(fail_if(by_path != by_tuple, || {
            format!(
                "charges {:?} n={}: path counts {by_path:?} vs tuple counts {by_tuple:?}",
                hw.charges(),
                n.n()
            )
        }));
        let comp_set: HashSet<&MayaTuple> = comps.iter().collect();
        results.par_extend(paths.par_iter().map(|eta| {
            let t = match highest_lift(eta) {
                Ok(t) => t,
                Err(e) => return Some(format!("{eta}: {e}")),
            };
            let geometric = tuple_weight(&t, n).expect("valid");
            if geometric != path_weight(eta) || geometric.deg != -path_energy(eta) {
                return Some(format!(
                    "{eta}: path weight {} vs geometric {geometric}",
                    path_weight(eta)
                ));
            }
            fail_if(!comp_set.contains(&t), || {
                format!("{eta}: highest lift {t} not enumerated")
            })
        }));
    }
    PropertyReport::from_results("weight_isomorphism", results)
}

/// Unreduced tuples for `Λ_0`, `n = 1`, counted per weight against a scan of
/// all Young diagrams.
pub fn gl_enumeration(b: &Bounds) -> PropertyReport {
    let r = rank(1);
    let hw = HighestWeight::new(r, vec![0]).expect("sorted");
    let comps = enumerate_components(&hw, b.gl_energy, false).expect("charges in range");
    let got = weight_counts(&comps, |t| tuple_weight(t, r).expect("valid"));
    // A diagram with v_0 ≤ E has at most 2E + 1 rows and columns worth of boxes
    // off the zero diagonals; 4E + 4 boxes is a safe scan bound for n = 1.
    let scan = 4 * b.gl_energy as u32 + 4;
    let mut want = BTreeMap::new();
    let mut largest = 0;
    let scanned = YoungDiagram::up_to(scan);
    for y in &scanned {
        let w = level1_weight(y, r);
        if -w.deg <= b.gl_energy as i64 {
            largest = largest.max(y.size());
            *want.entry(w).or_insert(0u64) += 1;
        }
    }
    let mut results = vec![None; scanned.len()];
    results.extend([
        fail_if(got != want, || format!("enumerated {got:?} vs scanned {want:?}")),
        fail_if(largest + 2 > scan, || {
            format!("scan bound {scan} too small for size {largest}")
        }),
    ]);
    PropertyReport::from_results("gl_enumeration", results)
        .with_note(format!("{} tuples, largest diagram {largest} boxes", comps.len()))
}

fn quiver_universe(b: &Bounds) -> Vec<SegmentMultiset> {
    let mut all = Vec::new();
    for n in [1u32, 2] {
        all.extend(multisets_up_to(QuiverType::Cyclic(rank(n)), b.quiver_dim, (0, 0)));
    }
    let w = b.quiver_window;
    all.extend(multisets_up_to(QuiverType::Infinite, b.quiver_dim, (-w, w)));
    all
}

/// Conormal samples have zero moment map; on the cyclic quiver they are all
/// nilpotent for aperiodic multisets and some is not for periodic ones.
pub fn moment_map_exactness(b: &Bounds) -> PropertyReport {
    let results = quiver_universe(b)
        .par_iter()
        .map(|f| {
            let x = build_rep(f);
            let depth = x.total_dim() + 1;
            let mut all_nilpotent = true;
            for seed in b.seeds() {
                let s = conormal_sample(&x, seed);
                if !moment_map(&s).is_zero() {
                    return Some(format!("{f} seed {seed}: nonzero moment map"));
                }
                all_nilpotent &= is_nilpotent(&s, depth);
            }
            match f.is_aperiodic() {
                Ok(aperiodic) => fail_if(aperiodic != all_nilpotent, || {
                    format!("{f}: aperiodic={aperiodic} but all samples nilpotent={all_nilpotent}")
                }),
                Err(_) => fail_if(!all_nilpotent, || format!("{f}: non-nilpotent sample")),
            }
        })
        .collect();
    PropertyReport::from_results("moment_map_exactness", results)
}

fn stability_charges(kind: QuiverType) -> Vec<Vec<i64>> {
    match kind {
        QuiverType::Cyclic(n) => cyclic_charge_sets(n.n()),
        QuiverType::Infinite => vec![vec![0], vec![0, 0], vec![0, 1], vec![-1, 1]],
    }
}

/// Sampled stability agrees with greedy success on a majority of seeds.
pub fn stability_consistency(b: &Bounds) -> PropertyReport {
    let outcomes: Vec<(u64, u64, Option<String>)> = quiver_universe(b)
        .par_iter()
        .map(|f| {
            let x = build_rep(f);
            let samples: Vec<_> = b.seeds().map(|s| conormal_sample(&x, s)).collect();
            let mut cases = 0;
            let mut split = 0;
            for cs in stability_charges(f.kind()) {
                cases += 1;
                let combinatorial = canonical_tuple(f, &cs).expect("valid charges").is_tuple();
                let w = framing(f.kind(), &cs);
                let agree = samples
                    .iter()
                    .filter(|s| stability_test(s, &w) == combinatorial)
                    .count() as u64;
                if agree < b.seeds {
                    split += 1;
                }
                if 2 * agree <= b.seeds {
                    return (
                        cases,
                        split,
                        Some(format!(
                            "{f} charges {cs:?}: greedy says {combinatorial}, {agree}/{} seeds agree",
                            b.seeds
                        )),
                    );
                }
            }
            (cases, split, None)
        })
        .collect();
    let cases = outcomes.iter().map(|o| o.0).sum();
    let split: u64 = outcomes.iter().map(|o| o.1).sum();
    let counterexample = outcomes.into_iter().find_map(|o| o.2);
    PropertyReport {
        name: "stability_consistency".into(),
        cases,
        passed: counterexample.is_none(),
        counterexample,
        note: Some(format!("{split} cases with a non-unanimous vote")),
    }
}

/// Every check, in a fixed order.
pub fn run_all(b: &Bounds) -> Vec<PropertyReport> {
    let checks: [fn(&Bounds) -> PropertyReport; 14] = [
        maya_round_trip,
        maya_order_equivalence,
        energy_equals_v0,
        delta_equals_weight,
        fock_relations,
        level1_classification,
        greedy_inverts_segments,
        aperiodic_iff_reduced,
        lift_calculus,
        weight_isomorphism,
        gl_enumeration,
        moment_map_exactness,
        stability_consistency,
        soft_energy_nonnegative,
    ];
    checks.iter().map(|c| c(b)).collect()
}

/// Energies of enumerated paths are nonnegative. Reported, never failing.
pub fn soft_energy_nonnegative(b: &Bounds) -> PropertyReport {
    let mut negative = 0u64;
    let mut cases = 0u64;
    let mut weights = lift_weights();
    weights.push(HighestWeight::new(rank(2), vec![0, 1]).expect("sorted"));
    for hw in weights {
        for p in enumerate_paths(&hw, b.lift_energy) {
            cases += 1;
            negative += (path_energy(&p) < 0) as u64;
        }
    }
    PropertyReport {
        name: "energy_nonnegative".into(),
        cases,
        passed: true,
        counterexample: None,
        note: Some(if negative == 0 {
            "no negative energies".into()
        } else {
            format!("warning: {negative} paths with negative energy")
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Bounds {
        Bounds {
            ranks: vec![1, 2],
            max_size: 6,
            fock_size: 4,
            fock_range: 3,
            classify_dim: 5,
            classify_window: 2,
            lift_energy: 2,
            lift_search_size: 9,
            gl_energy: 2,
            quiver_dim: 4,
            quiver_window: 1,
            seeds: 4,
            seed: 0,
            corrupt_delta: false,
        }
    }

    #[test]
    fn all_pass_on_tiny_bounds() {
        for r in run_all(&tiny()) {
            assert!(r.passed, "{r:?}");
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn corrupted_delta_is_reported() {
        let b = Bounds {
            corrupt_delta: true,
            ..tiny()
        };
        let r = delta_equals_weight(&b);
        assert!(!r.passed);
        assert!(r.counterexample.unwrap().contains("Y=[]"));
    }

    #[test]
    fn tuple_scan_counts() {
        // Pairs of diagrams with total size ≤ 2: 1 + 2 + (2 + 1 + 2) = 8.
        assert_eq!(tuples_up_to(&[0, 0], 2).len(), 8);
    }
}
