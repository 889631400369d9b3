use num_bigint::BigUint;
use proptest::prelude::*;

use verlinde::oracle::{semisimplify, tensor_jordan};
use verlinde::prime::Prime;
use verlinde::ring::{cat_dim, dual, fuse_simples, hom_dim, is_plus, simple, tensor, VerClass};
use verlinde::Error;

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn class_at(q: u64) -> impl Strategy<Value = VerClass> {
    prop::collection::vec(0u64..4, (q - 1) as usize)
        .prop_map(move |m| VerClass::from_mults(p(q), m).unwrap())
}

fn three_classes() -> impl Strategy<Value = (VerClass, VerClass, VerClass)> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
        .prop_flat_map(|q| (class_at(q), class_at(q), class_at(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn semiring_laws((x, y, z) in three_classes()) {
        let xy = tensor(&x, &y).unwrap();
        prop_assert_eq!(&xy, &tensor(&y, &x).unwrap());
        prop_assert_eq!(
            tensor(&xy, &z).unwrap(),
            tensor(&x, &tensor(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            tensor(&x, &(&y + &z)).unwrap(),
            &xy + &tensor(&x, &z).unwrap()
        );
        let q = x.prime().get();
        prop_assert_eq!(cat_dim(&xy), cat_dim(&x) * cat_dim(&y) % q);
    }

    #[test]
    fn rigidity((x, y, z) in three_classes()) {
        // Hom(X ⊗ Y, Z) = Hom(X, Z ⊗ Y*) with every simple self-dual.
        let left = hom_dim(&tensor(&x, &y).unwrap(), &z).unwrap();
        let right = hom_dim(&x, &tensor(&z, &dual(&y)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn nonzero_classes_contain_the_unit_in_x_dual_x((x, _, _) in three_classes()) {
        prop_assume!(!x.is_zero());
        let gl = tensor(&x, &dual(&x)).unwrap();
        prop_assert!(gl.mult(1) >= BigUint::from(1u32));
    }

    #[test]
    fn json_round_trip((x, _, _) in three_classes()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: VerClass = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        prop_assert_eq!(back, x);
    }
}

#[test]
fn spec_examples() {
    let q = p(5);
    assert_eq!(simple(1, q).unwrap().mults(), VerClass::unit(q).mults());
    assert_eq!(
        simple(5, q),
        Err(Error::IndexOutOfRange { index: 5, max: 4 })
    );
    assert_eq!(fuse_simples(2, 2, q).unwrap().to_string(), "L1 + L3");
    assert_eq!(fuse_simples(4, 4, q).unwrap().to_string(), "L1");
    assert_eq!(
        fuse_simples(4, 4, p(7)).unwrap().to_string(),
        "L1 + L3 + L5"
    );
    let l2 = simple(2, q).unwrap();
    assert_eq!(tensor(&(&l2 + &l2), &l2).unwrap().to_string(), "2L1 + 2L3");
    assert!(tensor(&VerClass::zero(q), &l2).unwrap().is_zero());
    assert_eq!(cat_dim(&tensor(&l2, &simple(3, q).unwrap()).unwrap()), 1);
    assert!(is_plus(
        &(&simple(1, p(7)).unwrap() + &simple(5, p(7)).unwrap())
    ));
    assert!(!is_plus(&l2));
    let three = simple(3, q).unwrap();
    assert_eq!(
        hom_dim(&three.scale(&2u32.into()), &three.scale(&3u32.into())).unwrap(),
        BigUint::from(6u32)
    );
    assert_eq!(
        tensor(&l2, &simple(2, p(7)).unwrap()),
        Err(Error::PrimeMismatch(5, 7))
    );
}

#[test]
fn closed_formula_matches_oracle_everywhere() {
    for q in [3u64, 5, 7, 11, 13] {
        let q = p(q);
        for i in 1..=q.rank() {
            for j in 1..=q.rank() {
                let ss = semisimplify(&tensor_jordan(i, j, q).unwrap());
                assert_eq!(ss, fuse_simples(i, j, q).unwrap(), "L{i} x L{j} at p={q}");
            }
        }
    }
}

#[test]
fn degenerate_prime_two() {
    let q = p(2);
    assert_eq!(fuse_simples(1, 1, q).unwrap(), VerClass::unit(q));
    assert_eq!(cat_dim(&VerClass::unit(q)), 1);
    assert!(is_plus(&VerClass::unit(q)));
}
