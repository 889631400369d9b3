use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use verlinde::alcove::AlcoveWeight;
use verlinde::gl::{
    count_labels, enumerate_labels, gl_class, nilradical_class, sl_class, sym_power_class,
    symmetric_algebra_class, symmetric_power_series, verma_character, GLIrrepLabel, LabelFactor,
    ObjectShape,
};
use verlinde::oracle::matrix::symmetric_power;
use verlinde::oracle::{jordan_type_of_unipotent, semisimplify, sym_power_dim, FpMatrix};
use verlinde::prime::Prime;
use verlinde::ring::{cat_dim, simple, tensor, VerClass};
use verlinde::Error;

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn shape(q: u64, n: &[u64]) -> ObjectShape {
    ObjectShape::new(p(q), n.to_vec()).unwrap()
}

fn small_shape() -> impl Strategy<Value = ObjectShape> {
    prop::sample::select(vec![3u64, 5, 7]).prop_flat_map(|q| {
        prop::collection::vec(0u64..3, (q - 1) as usize).prop_map(move |n| shape(q, &n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gl_dimension_is_square(x in small_shape()) {
        prop_assume!(!x.is_zero());
        let q = x.prime().get();
        let d = cat_dim(&x.class());
        prop_assert_eq!(cat_dim(&gl_class(&x).unwrap()), d * d % q);
        match sl_class(&x) {
            Ok(sl) => {
                prop_assert!(d != 0);
                prop_assert_eq!(&sl + &VerClass::unit(x.prime()), gl_class(&x).unwrap());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::ZeroDimension);
                prop_assert_eq!(d, 0);
            }
        }
    }

    #[test]
    fn label_enumeration_matches_count(x in small_shape(), bound in 0u64..2) {
        let total: u64 = x.multiplicities().iter().sum();
        prop_assume!(total <= 3);
        let labels = enumerate_labels(&x, bound).unwrap();
        prop_assert_eq!(BigUint::from(labels.len()), count_labels(&x, bound).unwrap());
        for l in &labels {
            prop_assert_eq!(l.shape(), x.clone());
            let js = serde_json::to_string(l).unwrap();
            let back: GLIrrepLabel = serde_json::from_str(&js).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), js);
        }
    }
}

#[test]
fn scalars_split_off_for_every_simple() {
    for q in [5u64, 7, 11, 13] {
        let q = p(q);
        assert!(sl_class(&ObjectShape::homogeneous(q, 1, 1).unwrap())
            .unwrap()
            .is_zero());
        assert!(sl_class(&ObjectShape::homogeneous(q, q.rank(), 1).unwrap())
            .unwrap()
            .is_zero());
        for i in 2..q.rank() {
            let x = ObjectShape::homogeneous(q, i, 1).unwrap();
            let sl = sl_class(&x).unwrap();
            assert!(!sl.is_zero(), "sl(L{i}) at p={q}");
            assert!(sl.mult(1).is_zero(), "sl(L{i}) at p={q}");
        }
    }
}

#[test]
fn symmetric_algebra_dimension_matches_oracle() {
    for q in [5u64, 7, 11] {
        for i in 2..q as usize {
            let y = simple(i, p(q)).unwrap();
            let total: u128 = (0..q as usize).map(|n| sym_power_dim(i, n)).sum();
            // Blocks of size p drop out but do not change the residue.
            assert_eq!(
                cat_dim(&symmetric_algebra_class(&y).unwrap()) as u128,
                total % q as u128,
                "S(L{i}) at p={q}"
            );
        }
    }
}

#[test]
fn symmetric_square_of_a_sum_matches_oracle() {
    for (q, blocks) in [
        (7u64, vec![2usize, 3]),
        (11, vec![2, 4]),
        (11, vec![3, 3, 5]),
    ] {
        let q = p(q);
        let g = FpMatrix::jordan_form(q, &blocks);
        let y = VerClass::from_terms(q, blocks.iter().map(|&b| (b, 1u64))).unwrap();
        let series = symmetric_power_series(&y).unwrap();
        for n in 0..3 {
            let want = semisimplify(&jordan_type_of_unipotent(&symmetric_power(&g, n)).unwrap());
            let got = series.get(n).cloned().unwrap_or_else(|| VerClass::zero(q));
            assert_eq!(got, want, "S^{n} of {blocks:?} at p={q}");
        }
    }
}

#[test]
fn symmetric_power_edge_cases() {
    let q = p(5);
    assert_eq!(sym_power_class(3, 2, q).unwrap().to_string(), "L1");
    assert_eq!(sym_power_class(1, 9, q).unwrap(), VerClass::unit(q));
    assert!(sym_power_class(2, 5, q).unwrap().is_zero());
    assert!(sym_power_class(4, 2, q).unwrap().is_zero());
    assert_eq!(
        symmetric_power_series(&VerClass::unit(q)),
        Err(Error::NonzeroTrivialPart)
    );
    let series = symmetric_power_series(&simple(2, q).unwrap()).unwrap();
    let s: Vec<String> = series.iter().map(ToString::to_string).collect();
    assert_eq!(s, ["L1", "L2", "L3", "L4"]);
}

#[test]
fn nilradical_is_half_of_the_off_diagonal() {
    let q = p(7);
    let x = shape(7, &[1, 1, 1]);
    let orders = [[1, 2, 3], [3, 1, 2], [2, 3, 1]];
    let n = nilradical_class(&x, &orders[0]).unwrap();
    for o in &orders[1..] {
        assert_eq!(nilradical_class(&x, o).unwrap(), n);
    }
    // gl(X) = diagonal + nilradical + its dual, with every simple self-dual.
    let mut diag = VerClass::zero(q);
    for i in 1..=3 {
        diag = &diag + &tensor(&simple(i, q).unwrap(), &simple(i, q).unwrap()).unwrap();
    }
    assert_eq!(&(&diag + &n) + &n, gl_class(&x).unwrap());
    assert_eq!(nilradical_class(&x, &[1, 2]), Err(Error::OrderMismatch));
}

#[test]
fn label_counts() {
    for b in 0..5u64 {
        let x = shape(5, &[0, 1]);
        assert_eq!(count_labels(&x, b).unwrap(), BigUint::from((2 * b + 1) * 2));
    }
    assert_eq!(
        count_labels(&shape(5, &[]), 3).unwrap(),
        BigUint::from(1u32)
    );
    let huge = count_labels(&shape(13, &[40, 40, 40, 40, 40, 40]), 50).unwrap();
    assert!(huge > BigUint::from(u128::MAX));
}

fn label(q: u64, i: usize, lambda: Vec<i64>, s: &[&[u32]]) -> GLIrrepLabel {
    let s = s
        .iter()
        .map(|parts| AlcoveWeight::new(i, p(q), parts.to_vec()).unwrap())
        .collect();
    GLIrrepLabel::new(p(q), vec![LabelFactor { i, lambda, s }]).unwrap()
}

#[test]
fn verma_total_class_factorizes() {
    // Summed over weights: top ⊗ S(Y)^{pairs} times the number of monomials
    // of degree <= d in `pairs` variables.
    let q = p(5);
    for (n, d) in [(2usize, 0u64), (2, 2), (3, 1)] {
        let x = ObjectShape::homogeneous(q, 2, n as u64).unwrap();
        let s: Vec<&[u32]> = vec![&[2u32][..]; n];
        let l = label(5, 2, vec![0; n], &s);
        let v = verma_character(&x, &l, d).unwrap();
        let mut total = VerClass::zero(q);
        for (_, c) in v.iter() {
            total = &total + c;
        }
        let pairs = n * (n - 1) / 2;
        let y = simple(3, q).unwrap();
        let mut want = VerClass::unit(q);
        for _ in 0..n {
            want = tensor(&want, &simple(3, q).unwrap()).unwrap();
        }
        for _ in 0..pairs {
            want = tensor(&want, &symmetric_algebra_class(&y).unwrap()).unwrap();
        }
        let monomials = num_integer::binomial(pairs as u64 + d, pairs as u64);
        assert_eq!(total, want.scale(&BigUint::from(monomials)), "n={n} d={d}");
    }
}

#[test]
fn verma_rejects_bad_input() {
    let q = p(5);
    let l = label(5, 2, vec![0], &[&[]]);
    assert_eq!(
        verma_character(&shape(5, &[1, 1]), &l, 1),
        Err(Error::NotHomogeneous)
    );
    assert_eq!(
        verma_character(&shape(5, &[]), &l, 1),
        Err(Error::EmptyShape)
    );
    assert!(matches!(
        verma_character(&ObjectShape::homogeneous(q, 3, 1).unwrap(), &l, 1),
        Err(Error::InvalidLabel(_))
    ));
}
