//! Energy and weight of n-reduced Young diagrams at level one.

use quiverpaths::partitions::{delta_weight, dim_vector_level1, energy_level1, level1_weight};
use quiverpaths::{QuiverType, Rank, YoungDiagram};

fn main() {
    let n = Rank::new(2).unwrap();
    println!(
        "{:<12} {:>6} {:>4} {:>12} {:>10}",
        "Y", "energy", "v_0", "Delta", "weight"
    );
    for y in YoungDiagram::up_to(6).into_iter().filter(|y| y.is_n_reduced(n)) {
        let omega = energy_level1(&y, n).unwrap();
        let v = dim_vector_level1(&y, QuiverType::Cyclic(n));
        let delta: Vec<i64> = (0..n.modulus()).map(|k| delta_weight(&y, n, k)).collect();
        let w = level1_weight(&y, n);
        assert_eq!(omega, v.get(0) as i64);
        assert_eq!(delta, w.h);
        println!(
            "{:<12} {omega:>6} {:>4} {:>12} {w:>10}",
            y.to_string(),
            v.get(0),
            format!("{delta:?}")
        );
    }
}
