//! Weight multiplicities counted from tuples and from paths.

use std::collections::BTreeMap;

use quiverpaths::paths::{enumerate_components, enumerate_paths, path_weight, tuple_weight};
use quiverpaths::{HighestWeight, Rank};

fn main() {
    let n = Rank::new(2).unwrap();
    let hw = HighestWeight::new(n, vec![0, 1]).unwrap();
    let mut table: BTreeMap<(i64, String), (u64, u64)> = BTreeMap::new();
    for t in enumerate_components(&hw, 2, true).unwrap() {
        let w = tuple_weight(&t, n).unwrap();
        table.entry((-w.deg, w.to_string())).or_default().0 += 1;
    }
    for p in enumerate_paths(&hw, 2) {
        let w = path_weight(&p);
        table.entry((-w.deg, w.to_string())).or_default().1 += 1;
    }
    println!("{:>6}  {:<14} {:>6} {:>6}", "energy", "weight", "tuples", "paths");
    for ((e, w), (a, b)) in &table {
        println!("{e:>6}  {w:<14} {a:>6} {b:>6}");
        assert_eq!(a, b);
    }
}
