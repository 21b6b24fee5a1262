//! Paths of bounded energy and their weights.

use quiverpaths::paths::{enumerate_paths, path_energy, path_weight};
use quiverpaths::{HighestWeight, Rank};

fn main() {
    let hw = HighestWeight::new(Rank::new(1).unwrap(), vec![0, 1]).unwrap();
    let paths = enumerate_paths(&hw, 2);
    println!("{} paths of energy <= 2 for charges {:?}", paths.len(), hw.charges());
    for p in &paths {
        println!("{:>2}  {:<10}  {p}", path_energy(p), path_weight(p).to_string());
    }
}
