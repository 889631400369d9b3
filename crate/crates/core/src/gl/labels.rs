use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use super::ObjectShape;
use crate::alcove::{is_plus_weight, plus_simples, AlcoveWeight};
use crate::error::{Error, Result};
use crate::prime::Prime;

/// The `GL(n_i L_i)` part of a label: a dominant `GL_{n_i}` weight and one
/// plus-part simple of `Ver_p(SL_i)` per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelFactor {
    pub i: usize,
    pub lambda: Vec<i64>,
    pub s: Vec<AlcoveWeight>,
}

/// A label of an irreducible representation of `GL(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabel")]
pub struct GLIrrepLabel {
    p: Prime,
    factors: Vec<LabelFactor>,
}

#[derive(Deserialize)]
struct RawLabel {
    p: Prime,
    factors: Vec<LabelFactor>,
}

impl TryFrom<RawLabel> for GLIrrepLabel {
    type Error = Error;

    fn try_from(raw: RawLabel) -> Result<Self> {
        GLIrrepLabel::new(raw.p, raw.factors)
    }
}

impl GLIrrepLabel {
    pub fn new(p: Prime, factors: Vec<LabelFactor>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidLabel(msg));
        for w in factors.windows(2) {
            if w[0].i >= w[1].i {
                return bad("factors must have increasing i".into());
            }
        }
        for f in &factors {
            if f.i == 0 || f.i > p.rank() {
                return bad(format!("index {} outside 1..={}", f.i, p.rank()));
            }
            if f.lambda.is_empty() {
                return bad(format!("empty weight for i = {}", f.i));
            }
            if f.lambda.windows(2).any(|w| w[0] < w[1]) {
                return bad(format!("{:?} is not dominant", f.lambda));
            }
            if f.s.len() != f.lambda.len() {
                return bad(format!(
                    "i = {}: {} plus-part weights for GL_{}",
                    f.i,
                    f.s.len(),
                    f.lambda.len()
                ));
            }
            for w in &f.s {
                if w.rank() != f.i || w.prime() != p || !is_plus_weight(w) {
                    return bad(format!("{w} is not a plus-part weight for SL_{}", f.i));
                }
            }
        }
        Ok(GLIrrepLabel { p, factors })
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn factors(&self) -> &[LabelFactor] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> Option<&LabelFactor> {
        self.factors.iter().find(|f| f.i == i)
    }

    /// The shape `X` this label belongs to.
    pub fn shape(&self) -> ObjectShape {
        let mut n = vec![0u64; self.p.rank()];
        for f in &self.factors {
            n[f.i - 1] = f.lambda.len() as u64;
        }
        ObjectShape::new(self.p, n).expect("factor indices are in range")
    }
}

impl fmt::Display for GLIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("  ")?;
            }
            let lambda: Vec<String> = fac.lambda.iter().map(i64::to_string).collect();
            write!(f, "i={} lambda=({})", fac.i, lambda.join(","))?;
            if fac.i > 1 {
                let s: Vec<String> = fac.s.iter().map(ToString::to_string).collect();
                write!(f, " S=[{}]", s.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Dominant `GL_n` weights with entries in `[-bound, bound]`, in
/// lexicographic order.
pub fn dominant_weights(n: usize, bound: u64) -> Vec<Vec<i64>> {
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(n, lo, x, cur, out);
            cur.pop();
        }
    }
    let b = bound as i64;
    let mut out = Vec::new();
    rec(n, -b, b, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

fn tuples<T: Clone>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn factor_labels(i: usize, n: usize, p: Prime, bound: u64) -> Result<Vec<LabelFactor>> {
    let alphabet = plus_simples(i, p)?;
    let s_lists = tuples(&alphabet, n);
    let mut out = Vec::new();
    for lambda in dominant_weights(n, bound) {
        for s in &s_lists {
            out.push(LabelFactor {
                i,
                lambda: lambda.clone(),
                s: s.clone(),
            });
        }
    }
    Ok(out)
}

/// All labels of irreducible `GL(X)`-modules whose weights have entries in
/// `[-bound, bound]`. The factors for increasing `i` vary from slowest to
/// fastest; within a factor, weights are in lexicographic order and the
/// plus-part lists follow the simples order.
pub fn enumerate_labels(x: &ObjectShape, bound: u64) -> Result<Vec<GLIrrepLabel>> {
    let p = x.prime();
    let mut out: Vec<Vec<LabelFactor>> = vec![Vec::new()];
    for (i, n) in super::underlying_group(x) {
        let per = factor_labels(i, n as usize, p, bound)?;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                per.iter().map(move |f| {
                    let mut v = prefix.clone();
                    v.push(f.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|factors| GLIrrepLabel { p, factors })
        .collect())
}

/// Number of labels produced by [`enumerate_labels`], by the product formula
/// `∏_i C(2b + n_i, n_i) · |Ver_p^+(SL_i)|^{n_i}`.
pub fn count_labels(x: &ObjectShape, bound: u64) -> Result<BigUint> {
    let mut total = BigUint::from(1u32);
    for (i, n) in super::underlying_group(x) {
        let plus = BigUint::from(plus_simples(i, x.prime())?.len());
        total *= binomial(BigUint::from(2 * bound + n), BigUint::from(n));
        total *= plus.pow(n as u32);
    }
    Ok(total)
}
