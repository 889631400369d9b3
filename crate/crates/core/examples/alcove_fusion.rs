//! Fusion in Ver_p(SL_i) by the Kac-Walton algorithm, next to the classical
//! Littlewood-Richardson product.
//!
//!     cargo run --example alcove_fusion -- 7 3 2,1 2,1

use verlinde::alcove::{classical_tensor, enumerate_simples, kac_walton_fuse, parse_partition};
use verlinde::prime::Prime;
use verlinde::AlcoveWeight;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let get = |k: usize, d: &str| args.get(k).cloned().unwrap_or_else(|| d.to_string());
    let p = Prime::new(get(0, "7").parse().unwrap()).expect("p must be prime");
    let i: usize = get(1, "3").parse().unwrap();

    let simples = enumerate_simples(i, p).unwrap();
    let list: Vec<String> = simples.iter().map(ToString::to_string).collect();
    println!(
        "{} simples of Ver_{p}(SL_{i}): {}",
        simples.len(),
        list.join(" ")
    );

    let weight = |s: String| AlcoveWeight::new(i, p, parse_partition(&s).unwrap()).unwrap();
    let (a, b) = (weight(get(2, "2,1")), weight(get(3, "2,1")));
    println!(
        "classical {a} x {b} = {}",
        classical_tensor(&a, &b).unwrap()
    );
    println!("fused     {a} x {b} = {}", kac_walton_fuse(&a, &b).unwrap());
}
