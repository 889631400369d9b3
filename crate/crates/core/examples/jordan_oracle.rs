//! Jordan types of unipotent matrices over F_p and their semisimplification.
//!
//!     cargo run --release --example jordan_oracle

use verlinde::oracle::{
    ext_power_jordan, jordan_type_of_unipotent, semisimplify, sym_power_jordan, tensor_jordan,
    FpMatrix,
};
use verlinde::prime::Prime;

fn main() {
    let p = Prime::new(5).unwrap();

    // A 4x4 unipotent matrix written out by hand.
    #[rustfmt::skip]
    let g = FpMatrix::new(p, 4, &[
        1, 1, 0, 0,
        0, 1, 2, 0,
        0, 0, 1, 0,
        0, 0, 0, 1,
    ])
    .unwrap();
    let jt = jordan_type_of_unipotent(&g).unwrap();
    println!(
        "g has Jordan type {jt}, semisimplification {}",
        semisimplify(&jt)
    );

    for (a, b) in [(2, 2), (2, 3), (3, 4), (4, 4), (5, 2)] {
        let t = tensor_jordan(a, b, p).unwrap();
        println!("M{a} x M{b} = {t} -> {}", semisimplify(&t));
    }
    for (a, n) in [(2, 4), (3, 2), (4, 3)] {
        let t = sym_power_jordan(a, n, p).unwrap();
        println!("S^{n}(M{a}) = {t} -> {}", semisimplify(&t));
    }
    for (a, n) in [(3, 2), (4, 2)] {
        let t = ext_power_jordan(a, n, p).unwrap();
        println!("L^{n}(M{a}) = {t} -> {}", semisimplify(&t));
    }

    // Large modules switch to the syzygy route automatically.
    let p = Prime::new(13).unwrap();
    let t = sym_power_jordan(7, 9, p).unwrap();
    println!("S^9(M7) at p=13: dim {}, {}", t.dim(), semisimplify(&t));
}
