use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;

use super::AlcoveWeight;

/// Dimension of the irreducible `GL_i` module with highest weight `lambda`.
pub(crate) fn weyl_dimension_gl(lambda: &[u32], i: usize) -> u128 {
    let mut l: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
    l.resize(i, 0);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for a in 0..i {
        for b in a + 1..i {
            num *= (l[a] - l[b] + (b - a) as i64) as u64;
            den *= (b - a) as u64;
        }
    }
    u128::try_from(num / den).expect("Weyl dimension overflows u128")
}

/// Classical Weyl dimension of the `SL_i` module with highest weight `w`.
pub fn weyl_dimension(w: &AlcoveWeight) -> u128 {
    weyl_dimension_gl(w.parts(), w.rank())
}

fn dominated(lambda: &[u32], n: u32, i: usize) -> Vec<Vec<u32>> {
    fn rec(
        lambda: &[u32],
        rest: u32,
        cap: u32,
        prefix_bound: u32,
        prefix: u32,
        i: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == i {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = (i - cur.len()) as u32;
        let a = cur.len();
        let bound = prefix_bound + lambda.get(a).copied().unwrap_or(0);
        for x in (0..=cap.min(rest)).rev() {
            if prefix + x > bound {
                continue;
            }
            if x * slots < rest {
                break;
            }
            cur.push(x);
            rec(lambda, rest - x, x, bound, prefix + x, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, n, n, 0, 0, i, &mut Vec::with_capacity(i), &mut out);
    out
}

type MultTable = Arc<Vec<(Vec<u32>, u64)>>;

/// Dominant weights of the `GL_i` module `V(lambda)` with their
/// multiplicities, by Freudenthal's formula. Weights are partitions of
/// `|lambda|` with exactly `i` parts, highest first.
pub fn dominant_weight_multiplicities(lambda: &[u32], i: usize) -> MultTable {
    static CACHE: OnceLock<RwLock<HashMap<(usize, Vec<u32>), MultTable>>> = OnceLock::new();
    let mut key_parts = lambda.to_vec();
    key_parts.resize(i, 0);
    let key = (i, key_parts);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("weight cache poisoned").get(&key) {
        return Arc::clone(v);
    }
    let table = Arc::new(freudenthal(&key.1, i));
    let mut w = cache.write().expect("weight cache poisoned");
    Arc::clone(w.entry(key).or_insert(table))
}

fn shifted_norm(mu: &[i64], i: usize) -> i64 {
    mu.iter()
        .enumerate()
        .map(|(a, &x)| {
            let y = x + (i - 1 - a) as i64;
            y * y
        })
        .sum()
}

fn freudenthal(lambda: &[u32], i: usize) -> Vec<(Vec<u32>, u64)> {
    let n: u32 = lambda.iter().sum();
    let top = lambda.first().copied().unwrap_or(0) as i64;
    let mut weights = dominated(lambda, n, i);
    let as_i64 = |v: &[u32]| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
    weights.sort_by_key(|mu| std::cmp::Reverse(shifted_norm(&as_i64(mu), i)));
    let target = shifted_norm(&as_i64(lambda), i);
    let mut mult: HashMap<Vec<u32>, u64> = HashMap::with_capacity(weights.len());
    let mut out = Vec::with_capacity(weights.len());
    for mu in weights {
        let m = if mu.as_slice() == lambda {
            1
        } else {
            let base = as_i64(&mu);
            let mut acc: i128 = 0;
            for a in 0..i {
                for b in a + 1..i {
                    let mut nu = base.clone();
                    for _ in 1.. {
                        nu[a] += 1;
                        nu[b] -= 1;
                        if nu[a] > top || nu[b] < 0 {
                            break;
                        }
                        let mut key: Vec<u32> = nu.iter().map(|&x| x as u32).collect();
                        key.sort_unstable_by(|x, y| y.cmp(x));
                        if let Some(&c) = mult.get(&key) {
                            acc += c as i128 * (nu[a] - nu[b]) as i128;
                        }
                    }
                }
            }
            let den = (target - shifted_norm(&base, i)) as i128;
            let value = 2 * acc;
            debug_assert!(den > 0 && value % den == 0);
            (value / den) as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}
