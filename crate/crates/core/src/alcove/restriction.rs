//! Restriction along the principal `SL_2 -> SL_i`.
//!
//! The principal grading gives weight `i + 1 - 2a` to the `a`-th coordinate.
//! The graded character of `V(lambda)` splits into `SL_2` strings; strings
//! belonging to tilting modules of highest weight `>= p - 1` are negligible
//! and are stripped from the top. What survives is a sum of `L_d`, `d < p`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use super::{dominant_weight_multiplicities, AlcoveWeight, DominantWeightMultiset};
use crate::error::Result;
use crate::prime::Prime;
use crate::ring::VerClass;

/// Distribution of `sum_a c[a] * v[sigma(a)]` over the distinct
/// rearrangements of `values`.
fn orbit_grades(values: &[u32], coeffs: &[i64]) -> BTreeMap<i64, u64> {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let counts: Vec<u32> = distinct
        .iter()
        .map(|d| values.iter().filter(|v| *v == d).count() as u32)
        .collect();

    fn rec(
        counts: &mut Vec<u32>,
        pos: usize,
        distinct: &[u32],
        coeffs: &[i64],
        memo: &mut HashMap<Vec<u32>, BTreeMap<i64, u64>>,
    ) -> BTreeMap<i64, u64> {
        if pos == coeffs.len() {
            return BTreeMap::from([(0, 1)]);
        }
        if let Some(v) = memo.get(counts.as_slice()) {
            return v.clone();
        }
        let mut out = BTreeMap::new();
        for k in 0..counts.len() {
            if counts[k] == 0 {
                continue;
            }
            counts[k] -= 1;
            let shift = coeffs[pos] * distinct[k] as i64;
            for (g, m) in rec(counts, pos + 1, distinct, coeffs, memo) {
                *out.entry(g + shift).or_insert(0) += m;
            }
            counts[k] += 1;
        }
        memo.insert(counts.clone(), out.clone());
        out
    }

    rec(
        &mut counts.clone(),
        0,
        &distinct,
        coeffs,
        &mut HashMap::new(),
    )
}

/// Principal-grading character of the `GL_i` module `V(lambda)`: grade to
/// multiplicity.
pub fn principal_grades(lambda: &[u32], i: usize) -> BTreeMap<i64, u64> {
    let coeffs: Vec<i64> = (0..i).map(|a| (i as i64) - 1 - 2 * a as i64).collect();
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_weight_multiplicities(lambda, i).iter() {
        for (g, c) in orbit_grades(mu, &coeffs) {
            *out.entry(g).or_insert(0) += c * m;
        }
    }
    out
}

/// Splits a symmetric graded character into `SL_2` strings, keyed by highest
/// weight.
pub fn sl2_strings(grades: &BTreeMap<i64, u64>) -> BTreeMap<u64, u64> {
    let at = |g: i64| grades.get(&g).copied().unwrap_or(0);
    let mut out = BTreeMap::new();
    for (&g, &m) in grades.range(0..) {
        let above = at(g + 2);
        assert!(m >= above, "graded character is not an SL_2 character");
        if m > above {
            out.insert(g as u64, m - above);
        }
    }
    out
}

fn weyl_character(m: u64, scale: i64, out: &mut BTreeMap<i64, u64>, mult: u64) {
    let m = m as i64;
    for k in 0..=m {
        *out.entry((m - 2 * k) * scale).or_insert(0) += mult;
    }
}

fn tilting_character(m: u64, p: u64) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    if m < p {
        weyl_character(m, 1, &mut out, 1);
        return out;
    }
    let shifted = m - (p - 1);
    let (a, rest) = (shifted % p, shifted / p);
    let mut base = BTreeMap::new();
    weyl_character(p - 1 + a, 1, &mut base, 1);
    if a > 0 {
        weyl_character(p - 1 - a, 1, &mut base, 1);
    }
    let twist = tilting_character(rest, p);
    for (&x, &u) in &base {
        for (&y, &v) in &twist {
            *out.entry(x + y * p as i64).or_insert(0) += u * v;
        }
    }
    out
}

/// Highest weights of the Weyl factors of the `SL_2` tilting module `T(m)`
/// in characteristic `p`, largest first.
pub fn tilting_weyl_factors(m: u64, p: Prime) -> Vec<u64> {
    let strings = sl2_strings(&tilting_character(m, p.get()));
    let mut out = Vec::new();
    for (&hw, &c) in strings.iter().rev() {
        out.extend(std::iter::repeat_n(hw, c as usize));
    }
    out
}

fn strip_negligible(mut strings: BTreeMap<u64, u64>, p: Prime) -> VerClass {
    let q = p.get();
    let mut mult = vec![BigUint::default(); p.rank()];
    while let Some((&top, &c)) = strings.iter().next_back() {
        strings.remove(&top);
        if top + 1 < q {
            mult[top as usize] += c;
            continue;
        }
        for hw in tilting_weyl_factors(top, p).into_iter().skip(1) {
            let slot = strings
                .get_mut(&hw)
                .expect("restricted character is not tilting");
            assert!(*slot >= c, "restricted character is not tilting");
            *slot -= c;
            if *slot == 0 {
                strings.remove(&hw);
            }
        }
    }
    VerClass::from_mults(p, mult).expect("length p - 1")
}

/// Image of a simple object of `Ver_p(SL_i)` in `Ver_p` under the principal
/// `SL_2`.
pub fn principal_restriction(w: &AlcoveWeight) -> VerClass {
    let mut parts = w.parts().to_vec();
    parts.resize(w.rank(), 0);
    strip_negligible(sl2_strings(&principal_grades(&parts, w.rank())), w.prime())
}

/// Additive extension of [`principal_restriction`].
pub fn principal_restriction_multiset(m: &DominantWeightMultiset) -> Result<VerClass> {
    let mut out = VerClass::zero(m.prime());
    for (w, k) in m.alcove_terms()? {
        out.add_assign_scaled(&principal_restriction(&w), &BigUint::from(k));
    }
    Ok(out)
}
