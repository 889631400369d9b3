//! Truncated generalized Verma characters of GL(n L_i), graded by torus weight.
//!
//!     cargo run --release --example verma_character

use verlinde::gl::{verma_character, GLIrrepLabel, LabelFactor, ObjectShape};
use verlinde::prime::Prime;
use verlinde::AlcoveWeight;

fn main() {
    let p = Prime::new(5).unwrap();
    let x = ObjectShape::homogeneous(p, 2, 2).unwrap();
    let s = |parts: &[u32]| AlcoveWeight::new(2, p, parts.to_vec()).unwrap();
    let label = GLIrrepLabel::new(
        p,
        vec![LabelFactor {
            i: 2,
            lambda: vec![1, -1],
            s: vec![s(&[2]), s(&[0])],
        }],
    )
    .unwrap();

    for degree in 0..3 {
        println!("{label}, degree <= {degree}");
        print!("{}", verma_character(&x, &label, degree).unwrap());
    }
}
