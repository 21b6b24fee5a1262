//! The Chevalley generators acting on the level-one Fock space.

use quiverpaths::FockVector;

fn main() {
    let v = FockVector::vacuum();
    let w = v.f_op(0).f_op(1).f_op(-1);
    println!("F_-1 F_1 F_0 |0> = {w}");
    println!("E_1 of that      = {}", w.e_op(1));
    println!("H_0 of that      = {}", w.h_op(0));

    let sum = &v.f_op(0).f_op(1) + &v.f_op(0).f_op(-1);
    println!("[2] + [1,1] under E_0 E_1: {}", sum.e_op(1).e_op(0));

    // [E_k, F_k] = H_k on a basis vector.
    let b = FockVector::basis(quiverpaths::YoungDiagram::new(vec![2, 1]).unwrap());
    for k in -2..=2 {
        let c = &b.f_op(k).e_op(k) - &b.e_op(k).f_op(k);
        assert_eq!(c, b.h_op(k));
        println!("[E_{k},F_{k}] [2,1] = {c}");
    }
}
