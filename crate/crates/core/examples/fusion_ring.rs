//! Fusion rules of Ver_p: the multiplication table, dimensions, and Hom pairings.
//!
//!     cargo run --example fusion_ring -- 7

use verlinde::prime::Prime;
use verlinde::ring::{cat_dim, fuse_simples, hom_dim, is_plus, simple, tensor};

fn main() {
    let p: u64 = std::env::args().nth(1).map_or(7, |s| s.parse().expect("p"));
    let p = Prime::new(p).expect("p must be prime");

    println!("fusion table of Ver_{p}");
    for i in 1..=p.rank() {
        for j in i..=p.rank() {
            println!("  L{i} x L{j} = {}", fuse_simples(i, j, p).unwrap());
        }
    }

    // Dimensions multiply modulo p.
    let x = &simple(2, p).unwrap() + &simple(3, p).unwrap();
    let xx = tensor(&x, &x).unwrap();
    println!("X = {x}, dim X = {}", cat_dim(&x));
    println!("X x X = {xx}, dim = {}", cat_dim(&xx));
    println!("X x X lies in Ver_p^+: {}", is_plus(&xx));
    println!("dim Hom(X, X x X) = {}", hom_dim(&x, &xx).unwrap());
}
