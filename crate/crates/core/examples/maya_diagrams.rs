//! Young diagrams, Maya diagrams and the level-one basic path.

use quiverpaths::partitions::basic_path;
use quiverpaths::{ChargedMaya, Rank, YoungDiagram};

fn main() {
    let y = YoungDiagram::new(vec![4, 2, 1]).unwrap();
    let m = ChargedMaya::new(y.clone(), 1);
    println!("Y = {y}, conjugate {}", y.conjugate());
    let k = m.stabilization_bound();
    let values: Vec<i64> = (-(y.num_rows() as i64)..k).map(|j| m.eval(j)).collect();
    println!("Maya values on [-{}, {k}): {values:?}", y.num_rows());

    let back = ChargedMaya::from_values(&(0..k).map(|j| m.eval(j)).collect::<Vec<_>>(), 1).unwrap();
    assert_eq!(back, m);

    let smaller = ChargedMaya::new(YoungDiagram::new(vec![2, 1]).unwrap(), 1);
    println!("{m} <= {smaller}: {}", m.leq(&smaller));

    for n in 1..=3 {
        let p = basic_path(&m, Rank::new(n).unwrap());
        println!("n={n}: basic path prefix {:?}", p.prefix());
    }
}
