//! Conormal samples, the moment map and the stability test.

use quiverpaths::multisegments::canonical_tuple;
use quiverpaths::quiverlab::{
    build_rep, conormal_fiber, conormal_sample, framing, is_nilpotent, moment_map, stability_test,
};
use quiverpaths::{QuiverType, Segment, SegmentMultiset};

fn main() {
    let kind = QuiverType::cyclic(1).unwrap();
    for segs in [vec![(0, 1), (1, 1)], vec![(0, 0), (1, 1)], vec![(0, 2)]] {
        let f = SegmentMultiset::from_segments(kind, segs.iter().map(|&(a, b)| Segment::new(a, b).unwrap()));
        let x = build_rep(&f);
        let fiber = conormal_fiber(&x);
        println!(
            "f = {f}: dims {:?}, conormal fiber of dimension {}",
            x.dims(),
            fiber.basis.len()
        );
        let samples: Vec<_> = (0..5).map(|s| conormal_sample(&x, s)).collect();
        assert!(samples.iter().all(|s| moment_map(s).is_zero()));
        let nilpotent = samples.iter().all(|s| is_nilpotent(s, x.total_dim() + 1));
        println!(
            "  aperiodic {}, samples nilpotent {nilpotent}",
            f.is_aperiodic().unwrap()
        );
        for charges in [vec![0], vec![1], vec![0, 1]] {
            let greedy = canonical_tuple(&f, &charges).unwrap().is_tuple();
            let w = framing(kind, &charges);
            let votes = samples.iter().filter(|s| stability_test(s, &w)).count();
            println!("  charges {charges:?}: greedy {greedy}, stable on {votes}/5 samples");
        }
    }
}
