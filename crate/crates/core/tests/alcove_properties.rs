use std::collections::BTreeMap;

use proptest::prelude::*;

use verlinde::alcove::{
    classical_tensor, dominant_weight_multiplicities, enumerate_simples, fuse_multisets,
    is_plus_weight, kac_walton_fuse, littlewood_richardson, principal_restriction, weyl_dimension,
    AlcoveWeight, DominantWeightMultiset,
};
use verlinde::oracle::{ext_power_jordan, semisimplify, sym_power_jordan};
use verlinde::prime::Prime;
use verlinde::ring::{cat_dim, simple, tensor, VerClass};

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn w(i: usize, q: u64, parts: &[u32]) -> AlcoveWeight {
    AlcoveWeight::new(i, p(q), parts.to_vec()).unwrap()
}

/// Character of the Schur module `S_lambda(k^n)` by enumerating semistandard
/// tableaux: weight (content vector) to multiplicity.
fn schur_character(lambda: &[u32], n: usize) -> BTreeMap<Vec<u32>, u64> {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.first().copied().unwrap_or(0) as usize]; lambda.len()];
    let mut out = BTreeMap::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if k == cells.len() {
            let mut content = vec![0u32; n];
            for &(r, c) in cells {
                content[grid[r][c] - 1] += 1;
            }
            *out.entry(content).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            fill(k + 1, cells, grid, n, out);
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, n, &mut out);
    out
}

fn multiply(a: &BTreeMap<Vec<u32>, u64>, b: &BTreeMap<Vec<u32>, u64>) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for (x, m) in a {
        for (y, k) in b {
            let z: Vec<u32> = x.iter().zip(y).map(|(u, v)| u + v).collect();
            *out.entry(z).or_insert(0) += m * k;
        }
    }
    out
}

fn small_partition(rows: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn littlewood_richardson_matches_schur_products(
        a in small_partition(3, 3),
        b in small_partition(3, 2),
    ) {
        let n = 3;
        let lhs = multiply(&schur_character(&a, n), &schur_character(&b, n));
        let mut rhs = BTreeMap::new();
        for (nu, c) in littlewood_richardson(&a, &b, n) {
            for (wt, m) in schur_character(&nu, n) {
                *rhs.entry(wt).or_insert(0) += c * m;
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn freudenthal_matches_kostka_numbers(lambda in small_partition(4, 3)) {
        let n = 4;
        let kostka = schur_character(&lambda, n);
        let table = dominant_weight_multiplicities(&lambda, n);
        for (mu, m) in table.iter() {
            prop_assert_eq!(kostka.get(mu).copied().unwrap_or(0), *m);
        }
        let dominant_in_char = kostka
            .keys()
            .filter(|k| k.windows(2).all(|x| x[0] >= x[1]))
            .count();
        prop_assert_eq!(dominant_in_char, table.len());
    }

    #[test]
    fn classical_tensor_preserves_dimension(
        q in prop::sample::select(vec![7u64, 11]),
        i in 2usize..=4,
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
    ) {
        let s = enumerate_simples(i, p(q)).unwrap();
        let a = &s[(seed_a % s.len() as u64) as usize];
        let b = &s[(seed_b % s.len() as u64) as usize];
        let total: u128 = classical_tensor(a, b)
            .unwrap()
            .entries()
            .map(|(nu, m)| m as u128 * weyl_dimension(&AlcoveWeight::new(i, p(1009), nu.to_vec()).unwrap()))
            .sum();
        prop_assert_eq!(total, weyl_dimension(a) * weyl_dimension(b));
    }
}

#[test]
fn classical_examples() {
    assert_eq!(
        classical_tensor(&w(3, 7, &[1]), &w(3, 7, &[1]))
            .unwrap()
            .to_string(),
        "(1,1) + (2,0)"
    );
    let lambda = w(4, 7, &[2, 1]);
    assert_eq!(
        classical_tensor(&w(4, 7, &[]), &lambda).unwrap(),
        DominantWeightMultiset::from_weight(&lambda)
    );
}

#[test]
fn symmetric_powers_of_the_tautological_object() {
    // S^k(V) = (k) while k <= p - i; its restriction must match the oracle.
    for q in [5u64, 7, 11] {
        for i in 2..q as usize {
            for k in 0..=q as usize - i {
                let res = principal_restriction(&w(i, q, &[k as u32]));
                let oracle = semisimplify(&sym_power_jordan(i, k, p(q)).unwrap());
                assert_eq!(res, oracle, "S^{k}(L{i}) at p={q}");
            }
        }
    }
}

#[test]
fn exterior_powers_of_the_tautological_object() {
    for q in [5u64, 7, 11] {
        for i in 2..q as usize {
            for k in 0..i {
                let parts = vec![1u32; k];
                let res = principal_restriction(&w(i, q, &parts));
                let oracle = semisimplify(&ext_power_jordan(i, k, p(q)).unwrap());
                assert_eq!(res, oracle, "Λ^{k}(L{i}) at p={q}");
            }
        }
    }
}

#[test]
fn fusion_respects_restriction_at_larger_rank() {
    // Weights with principal grades well past 2p - 2.
    let q = 11;
    for (a, b) in [
        (&[3u32, 2, 1][..], &[2u32, 2][..]),
        (&[5, 5, 0], &[4, 1, 1]),
    ] {
        let (a, b) = (w(5, q, a), w(5, q, b));
        let fused = kac_walton_fuse(&a, &b).unwrap();
        let mut left = VerClass::zero(p(q));
        for (x, m) in fused.alcove_terms().unwrap() {
            left = &left + &principal_restriction(&x).scale(&m.into());
        }
        let right = tensor(&principal_restriction(&a), &principal_restriction(&b)).unwrap();
        assert_eq!(left, right, "{a} x {b}");
    }
}

#[test]
fn restriction_dimension_at_every_prime() {
    for q in [3u64, 5, 7, 11] {
        for i in 2..q as usize {
            for s in enumerate_simples(i, p(q)).unwrap() {
                let res = principal_restriction(&s);
                assert_eq!(
                    cat_dim(&res) as u128,
                    weyl_dimension(&s) % q as u128,
                    "{s} for SL_{i} at p={q}"
                );
                if is_plus_weight(&s) {
                    assert!(verlinde::ring::is_plus(&res), "{s} for SL_{i} at p={q}");
                }
            }
        }
    }
}

#[test]
fn column_weight_fusion_is_pointed() {
    // At i = p - 1 every simple is a column and the fusion rule is Z/(p-1).
    let q = 7;
    let i = 6;
    let s = enumerate_simples(i, p(q)).unwrap();
    for a in &s {
        for b in &s {
            let f = kac_walton_fuse(a, b).unwrap();
            assert_eq!(f.len(), 1, "{a} x {b} = {f}");
            let (c, _) = &f.alcove_terms().unwrap()[0];
            assert_eq!(c.size() as usize, (a.size() + b.size()) as usize % i);
        }
    }
}

#[test]
fn tautological_generates_by_fusion() {
    // Fusing with the tautological weight is the level-truncated Pieri rule.
    let q = 7;
    let v = w(3, q, &[1]);
    let f = kac_walton_fuse(&v, &w(3, q, &[4, 2])).unwrap();
    // (5,2) lies on the affine wall; (4,2,1) reduces to (3,1).
    assert_eq!(f.to_string(), "(3,1) + (4,3)");
    let one = DominantWeightMultiset::from_weight(&v);
    let sq = fuse_multisets(&one, &one).unwrap();
    assert_eq!(sq.to_string(), "(1,1) + (2,0)");
    assert_eq!(principal_restriction(&v), simple(3, p(q)).unwrap());
}
