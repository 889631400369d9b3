use std::collections::BTreeMap;

use super::{same_category, AlcoveWeight, DominantWeightMultiset};
use crate::error::Result;

/// Littlewood-Richardson product of two partitions, restricted to results
/// with at most `max_rows` rows. Keys are trimmed of trailing zeros.
///
/// Counts LR tableaux of shape `nu / lambda` and content `mu`, built one
/// label at a time as horizontal strips. The reverse reading word is a
/// lattice word iff for every row `r` and label `k > 1`, the number of `k`s
/// in rows `1..=r` is at most the number of `k - 1`s in rows `1..r`.
pub fn littlewood_richardson(
    lambda: &[u32],
    mu: &[u32],
    max_rows: usize,
) -> BTreeMap<Vec<u32>, u64> {
    let lambda: Vec<u32> = trim(lambda);
    let mu: Vec<u32> = trim(mu);
    let mut out = BTreeMap::new();
    if lambda.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let mut shape = lambda.clone();
    shape.resize(max_rows, 0);
    // cum[k][r]: number of label k in rows 0..=r.
    let mut cum: Vec<Vec<u32>> = Vec::with_capacity(mu.len());
    place(&mu, 0, &mut shape, &mut cum, &mut out);
    out
}

fn trim(x: &[u32]) -> Vec<u32> {
    let mut v = x.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn place(
    mu: &[u32],
    k: usize,
    shape: &mut Vec<u32>,
    cum: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    if k == mu.len() {
        *out.entry(trim(shape)).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let rows = shape.len();
    let mut added = vec![0u32; rows];
    strip(mu, k, 0, mu[k], &old, &mut added, shape, cum, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    mu: &[u32],
    k: usize,
    row: usize,
    remaining: u32,
    old: &[u32],
    added: &mut Vec<u32>,
    shape: &mut Vec<u32>,
    cum: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    let rows = old.len();
    if row == rows {
        if remaining == 0 {
            let mut c = Vec::with_capacity(rows);
            let mut acc = 0;
            for &a in added.iter() {
                acc += a;
                c.push(acc);
            }
            cum.push(c);
            for r in 0..rows {
                shape[r] = old[r] + added[r];
            }
            place(mu, k + 1, shape, cum, out);
            shape.copy_from_slice(old);
            cum.pop();
        }
        return;
    }
    let room = if row == 0 {
        remaining
    } else {
        (old[row - 1] - old[row]).min(remaining)
    };
    let so_far: u32 = added[..row].iter().sum();
    for take in 0..=room {
        if k > 0 {
            let prev = if row == 0 { 0 } else { cum[k - 1][row - 1] };
            if so_far + take > prev {
                break;
            }
        }
        added[row] = take;
        strip(
            mu,
            k,
            row + 1,
            remaining - take,
            old,
            added,
            shape,
            cum,
            out,
        );
    }
    added[row] = 0;
}

/// Classical `SL_i` tensor product of two dominant weights, with each result
/// reduced to `i - 1` parts by removing full columns.
pub fn classical_tensor(
    lambda: &AlcoveWeight,
    mu: &AlcoveWeight,
) -> Result<DominantWeightMultiset> {
    same_category(lambda, mu)?;
    let i = lambda.rank();
    let mut out = DominantWeightMultiset::new(i, lambda.prime());
    for (mut nu, m) in littlewood_richardson(lambda.parts(), mu.parts(), i) {
        nu.resize(i, 0);
        let last = nu[i - 1];
        let reduced = nu[..i - 1].iter().map(|&x| x - last).collect();
        out.add(reduced, m);
    }
    Ok(out)
}
