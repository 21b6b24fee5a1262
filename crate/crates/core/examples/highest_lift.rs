//! Highest lifts of paths and n-reduction of tuples.

use quiverpaths::multisegments::is_n_reduced_tuple;
use quiverpaths::paths::{enumerate_components, enumerate_paths, highest_lift, n_reduce, path_of_tuple, tuple_leq};
use quiverpaths::{HighestWeight, Rank};

fn main() {
    let n = Rank::new(1).unwrap();
    let hw = HighestWeight::new(n, vec![0, 0]).unwrap();
    for eta in enumerate_paths(&hw, 2) {
        println!("{eta}  ->  {}", highest_lift(&eta).unwrap());
    }

    // The first chain-ordered tuple that has a full run of rows.
    let t = enumerate_components(&hw, 3, false)
        .unwrap()
        .into_iter()
        .find(|t| !is_n_reduced_tuple(t, n))
        .unwrap();
    let r = n_reduce(&t, n).unwrap();
    println!("n_reduce {t} = {r}");
    assert_eq!(path_of_tuple(&t, n).unwrap(), path_of_tuple(&r, n).unwrap());
    assert!(tuple_leq(&t, &r).unwrap());
    assert_eq!(r, highest_lift(&path_of_tuple(&t, n).unwrap()).unwrap());
}
