//! Decomposing multisegments into chain-ordered Maya tuples.

use quiverpaths::multisegments::{canonical_tuple, segments_of_tuple};
use quiverpaths::{ChargedMaya, MayaTuple, QuiverType, Segment, SegmentMultiset, YoungDiagram};

fn main() {
    let inf = QuiverType::Infinite;
    let f = SegmentMultiset::from_segments(
        inf,
        [(-1, 1), (-2, -1), (-3, -3), (1, 4), (0, 2), (-1, 0), (-2, -2)].map(|(a, b)| Segment::new(a, b).unwrap()),
    );
    println!("f = {f}");
    for charges in [vec![-1, 1], vec![0, 1], vec![1, 1]] {
        match canonical_tuple(&f, &charges).unwrap().into_tuple() {
            Some(t) => println!("charges {charges:?}: {t}"),
            None => println!("charges {charges:?}: no chain-ordered tuple"),
        }
    }

    let cyc = QuiverType::cyclic(1).unwrap();
    let t = MayaTuple::new(vec![
        ChargedMaya::new(YoungDiagram::new(vec![3, 1]).unwrap(), 0),
        ChargedMaya::new(YoungDiagram::new(vec![2]).unwrap(), 1),
    ])
    .unwrap();
    let g = segments_of_tuple(&t, cyc);
    println!("cyclic n=1: {t} -> {g}, aperiodic {}", g.is_aperiodic().unwrap());
    let back = canonical_tuple(&g, &t.charges()).unwrap().into_tuple().unwrap();
    assert_eq!(back, t);
    println!("decomposed back: {back}");
}
