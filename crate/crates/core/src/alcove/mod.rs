//! The categories `Ver_p(SL_i)`.
//!
//! Simple objects are labelled by alcove weights: partitions with at most
//! `i - 1` rows and first row at most `p - i`. Fusion is computed by the
//! Kac-Walton algorithm at level `p - i`: decompose the classical tensor
//! product, then fold every constituent into the fundamental alcove under the
//! affine Weyl group with signs.

mod littlewood;
mod restriction;
mod weyl;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

pub use littlewood::{classical_tensor, littlewood_richardson};
pub use restriction::{
    principal_grades, principal_restriction, principal_restriction_multiset, sl2_strings,
    tilting_weyl_factors,
};
pub use weyl::{dominant_weight_multiplicities, weyl_dimension};

/// A simple object of `Ver_p(SL_i)`.
///
/// `parts` always has exactly `i - 1` entries (padded with zeros). Rank
/// `i = 1` is admitted as the trivial category whose only weight is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct AlcoveWeight {
    i: usize,
    p: Prime,
    parts: Vec<u32>,
}

#[derive(Deserialize)]
struct RawWeight {
    i: usize,
    p: Prime,
    parts: Vec<u32>,
}

impl TryFrom<RawWeight> for AlcoveWeight {
    type Error = Error;

    fn try_from(raw: RawWeight) -> Result<Self> {
        AlcoveWeight::new(raw.i, raw.p, raw.parts)
    }
}

pub(crate) fn check_rank(i: usize, p: Prime, min: usize) -> Result<()> {
    let max = p.rank();
    if i < min || i > max {
        Err(Error::RankOutOfRange { i, min, max })
    } else {
        Ok(())
    }
}

impl AlcoveWeight {
    pub fn new(i: usize, p: Prime, mut parts: Vec<u32>) -> Result<Self> {
        check_rank(i, p, 1)?;
        let rows = i - 1;
        let invalid = |parts: &Vec<u32>| Error::InvalidWeight {
            i,
            p: p.get(),
            parts: parts.clone(),
        };
        while parts.len() > rows && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > rows || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts));
        }
        if parts
            .first()
            .is_some_and(|&top| top as usize > p.as_usize() - i)
        {
            return Err(invalid(&parts));
        }
        parts.resize(rows, 0);
        Ok(AlcoveWeight { i, p, parts })
    }

    /// The unit object (empty partition).
    pub fn zero(i: usize, p: Prime) -> Result<Self> {
        Self::new(i, p, Vec::new())
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.i
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The level `p - i` of the alcove.
    pub fn level(&self) -> usize {
        self.p.as_usize() - self.i
    }

    fn graded_lex_key(&self) -> (u32, &[u32]) {
        (self.size(), &self.parts)
    }
}

impl fmt::Display for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Membership in `Ver_p^+(SL_i)`: the partition size is divisible by `i`.
pub fn is_plus_weight(w: &AlcoveWeight) -> bool {
    (w.size() as usize).is_multiple_of(w.i)
}

fn box_partitions(rows: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for x in 0..=cap {
            cur.push(x);
            rec(rows, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, max_part, &mut Vec::with_capacity(rows), &mut out);
    out
}

fn simples_cached(i: usize, p: Prime) -> Arc<Vec<AlcoveWeight>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, Prime), Arc<Vec<AlcoveWeight>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("simples cache poisoned").get(&(i, p)) {
        return Arc::clone(v);
    }
    let mut list: Vec<AlcoveWeight> = box_partitions(i - 1, (p.as_usize() - i) as u32)
        .into_iter()
        .map(|parts| AlcoveWeight { i, p, parts })
        .collect();
    list.sort_by(|a, b| a.graded_lex_key().cmp(&b.graded_lex_key()));
    let mut w = cache.write().expect("simples cache poisoned");
    Arc::clone(w.entry((i, p)).or_insert_with(|| Arc::new(list)))
}

/// All simple objects of `Ver_p(SL_i)` for `2 <= i <= p - 1`: partitions in
/// the `(i-1) x (p-i)` box, ordered by size and then lexicographically.
pub fn enumerate_simples(i: usize, p: Prime) -> Result<Vec<AlcoveWeight>> {
    check_rank(i, p, 2)?;
    Ok(simples_cached(i, p).as_ref().clone())
}

/// Simple objects of `Ver_p^+(SL_i)` in the order of [`enumerate_simples`].
/// For `i = 1` this is the single empty weight.
pub fn plus_simples(i: usize, p: Prime) -> Result<Vec<AlcoveWeight>> {
    check_rank(i, p, 1)?;
    if i == 1 {
        return Ok(vec![AlcoveWeight::zero(1, p)?]);
    }
    Ok(simples_cached(i, p)
        .iter()
        .filter(|w| is_plus_weight(w))
        .cloned()
        .collect())
}

/// A finite formal sum of dominant `SL_i` weights with positive
/// multiplicities. Keys are partitions with exactly `i - 1` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeightMultiset {
    i: usize,
    p: Prime,
    entries: BTreeMap<Vec<u32>, u64>,
}

impl DominantWeightMultiset {
    pub fn new(i: usize, p: Prime) -> Self {
        DominantWeightMultiset {
            i,
            p,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_weight(w: &AlcoveWeight) -> Self {
        let mut m = Self::new(w.i, w.p);
        m.add(w.parts.clone(), 1);
        m
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.i
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub(crate) fn add(&mut self, parts: Vec<u32>, mult: u64) {
        if mult > 0 {
            *self.entries.entry(parts).or_insert(0) += mult;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[u32], u64)> + '_ {
        self.entries.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn multiplicity(&self, parts: &[u32]) -> u64 {
        let mut key = parts.to_vec();
        key.resize(self.i - 1, 0);
        self.entries.get(&key).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of constituents counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Entries as alcove weights; fails if some entry lies outside the alcove.
    pub fn alcove_terms(&self) -> Result<Vec<(AlcoveWeight, u64)>> {
        self.entries
            .iter()
            .map(|(k, &v)| Ok((AlcoveWeight::new(self.i, self.p, k.clone())?, v)))
            .collect()
    }
}

impl fmt::Display for DominantWeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, &v)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if v != 1 {
                write!(f, "{v}")?;
            }
            let parts: Vec<String> = k.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn same_category(a: &AlcoveWeight, b: &AlcoveWeight) -> Result<()> {
    if a.i != b.i {
        return Err(Error::RankMismatch(a.i, b.i));
    }
    if a.p != b.p {
        return Err(Error::PrimeMismatch(a.p.get(), b.p.get()));
    }
    Ok(())
}

/// Folds the `GL_i` weight `nu` into the fundamental alcove at shifted level
/// `p` (level `p - i`). Returns the alcove partition with `i - 1` parts and
/// the sign of the folding element, or `None` when `nu + rho` lies on a wall.
pub fn fold_to_alcove(nu: &[i64], p: Prime) -> Option<(Vec<u32>, i8)> {
    let i = nu.len();
    let kappa = p.get() as i64;
    let mut beta: Vec<i64> = nu
        .iter()
        .enumerate()
        .map(|(a, &x)| x + (i - 1 - a) as i64)
        .collect();
    let mut sign = 1i8;
    loop {
        // Finite Weyl group: sort descending, one sign per transposition.
        for end in (1..i).rev() {
            for a in 0..end {
                if beta[a] == beta[a + 1] {
                    return None;
                }
                if beta[a] < beta[a + 1] {
                    beta.swap(a, a + 1);
                    sign = -sign;
                }
            }
        }
        if i < 2 {
            break;
        }
        let spread = beta[0] - beta[i - 1];
        if spread < kappa {
            break;
        }
        if spread == kappa {
            return None;
        }
        // Affine reflection in the wall beta_1 - beta_i = kappa.
        let (top, bottom) = (beta[0], beta[i - 1]);
        beta[0] = bottom + kappa;
        beta[i - 1] = top - kappa;
        sign = -sign;
    }
    let last = beta.last().copied().unwrap_or(0);
    let parts = beta
        .iter()
        .take(i.saturating_sub(1))
        .enumerate()
        .map(|(a, &b)| (b - last - (i - 1 - a) as i64) as u32)
        .collect();
    Some((parts, sign))
}

/// Fusion product in `Ver_p(SL_i)` by Kac-Walton folding.
pub fn kac_walton_fuse(lambda: &AlcoveWeight, mu: &AlcoveWeight) -> Result<DominantWeightMultiset> {
    same_category(lambda, mu)?;
    let (i, p) = (lambda.i, lambda.p);
    let classical = classical_tensor(lambda, mu)?;
    let mut signed: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (nu, m) in classical.entries() {
        let mut full: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
        full.push(0);
        if let Some((alc, sign)) = fold_to_alcove(&full, p) {
            *signed.entry(alc).or_insert(0) += sign as i64 * m as i64;
        }
    }
    let mut out = DominantWeightMultiset::new(i, p);
    for (k, v) in signed {
        assert!(v >= 0, "negative fusion coefficient for {k:?}");
        out.add(k, v as u64);
    }
    Ok(out)
}

/// Bilinear extension of [`kac_walton_fuse`] to multisets of alcove weights.
pub fn fuse_multisets(
    a: &DominantWeightMultiset,
    b: &DominantWeightMultiset,
) -> Result<DominantWeightMultiset> {
    if a.i != b.i {
        return Err(Error::RankMismatch(a.i, b.i));
    }
    let mut out = DominantWeightMultiset::new(a.i, a.p);
    for (x, m) in a.alcove_terms()? {
        for (y, n) in b.alcove_terms()? {
            for (z, k) in kac_walton_fuse(&x, &y)?.entries() {
                out.add(z.to_vec(), m * n * k);
            }
        }
    }
    Ok(out)
}

/// Parses comma-separated parts such as `"2,1"`; an empty string or `"0"` is
/// the empty partition.
pub fn parse_partition(s: &str) -> std::result::Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad part {t:?}: {e}"))
        })
        .collect()
}
