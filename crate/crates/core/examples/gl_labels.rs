//! The Lie algebra gl(X) and the irreducible labels of GL(X) for X = ⊕ n_i L_i.
//!
//!     cargo run --example gl_labels -- 5 1,1 1

use verlinde::gl::{
    count_labels, enumerate_labels, gl_class, sl_class, underlying_group, ObjectShape,
};
use verlinde::prime::Prime;

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(5, |s| s.parse().unwrap());
    let p = Prime::new(p).expect("p must be prime");
    let x = ObjectShape::parse(p, &args.next().unwrap_or_else(|| "1,1".into())).unwrap();
    let bound: u64 = args.next().map_or(1, |s| s.parse().unwrap());

    println!("X = {x}");
    println!("gl(X) = {}", gl_class(&x).unwrap());
    match sl_class(&x) {
        Ok(sl) => println!("sl(X) = {sl}"),
        Err(e) => println!("sl(X): {e}"),
    }
    let group: Vec<String> = underlying_group(&x)
        .iter()
        .map(|(i, n)| format!("GL_{n} (from L{i})"))
        .collect();
    println!("underlying group: {}", group.join(" x "));

    println!(
        "{} labels with weights in [-{bound}, {bound}]:",
        count_labels(&x, bound).unwrap()
    );
    for l in enumerate_labels(&x, bound).unwrap() {
        println!("  {l}");
    }
}
