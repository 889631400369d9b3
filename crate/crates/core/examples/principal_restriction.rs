//! Restriction of the simples of Ver_p(SL_i) along the principal SL_2.
//!
//!     cargo run --release --example principal_restriction -- 7 4

use verlinde::alcove::{enumerate_simples, is_plus_weight, principal_restriction, weyl_dimension};
use verlinde::prime::Prime;
use verlinde::ring::cat_dim;

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(7, |s| s.parse().unwrap());
    let i: usize = args.next().map_or(4, |s| s.parse().unwrap());
    let p = Prime::new(p).expect("p must be prime");

    println!("weight\tdim\tplus\trestriction");
    for s in enumerate_simples(i, p).unwrap() {
        let r = principal_restriction(&s);
        assert_eq!(cat_dim(&r) as u128, weyl_dimension(&s) % p.get() as u128);
        println!("{s}\t{}\t{}\t{r}", weyl_dimension(&s), is_plus_weight(&s));
    }
}
