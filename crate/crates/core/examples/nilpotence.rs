//! Every L_i with i >= 2 is nilpotent: S^n(L_i) vanishes from degree p - i + 1.
//!
//!     cargo run --release --example nilpotence -- 11

use verlinde::gl::sym_power_class;
use verlinde::prime::Prime;

fn main() {
    let p: u64 = std::env::args().nth(1).map_or(11, |s| s.parse().unwrap());
    let p = Prime::new(p).expect("p must be prime");
    for i in 2..=p.rank() {
        let top = (0..p.as_usize())
            .rev()
            .find(|&n| !sym_power_class(i, n, p).unwrap().is_zero())
            .unwrap();
        println!(
            "L{i}: top degree {top}, S^{top}(L{i}) = {}",
            sym_power_class(i, top, p).unwrap()
        );
        assert_eq!(top, p.as_usize() - i);
    }
}
