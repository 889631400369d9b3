//! The Grothendieck semiring of `Ver_p`.
//!
//! A class is a vector of non-negative multiplicities over the simple objects
//! `L1, ..., L(p-1)`. Products of simples follow the truncated Clebsch-Gordan
//! rule
//!
//! ```text
//! L_i (x) L_j = sum_{k=1}^{min(i, j, p-i, p-j)} L_{|i-j| + 2k - 1}
//! ```
//!
//! and are extended bilinearly.

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// An element of the Grothendieck semiring of `Ver_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClass")]
pub struct VerClass {
    p: Prime,
    #[serde(serialize_with = "crate::serde_big::serialize_vec")]
    mult: Vec<BigUint>,
}

#[derive(Deserialize)]
struct RawClass {
    p: Prime,
    #[serde(deserialize_with = "crate::serde_big::deserialize_vec")]
    mult: Vec<BigUint>,
}

impl TryFrom<RawClass> for VerClass {
    type Error = Error;

    fn try_from(raw: RawClass) -> Result<Self> {
        VerClass::from_mults(raw.p, raw.mult)
    }
}

impl VerClass {
    pub fn zero(p: Prime) -> Self {
        VerClass {
            p,
            mult: vec![BigUint::zero(); p.rank()],
        }
    }

    /// The unit object `L1`.
    pub fn unit(p: Prime) -> Self {
        let mut c = Self::zero(p);
        c.mult[0] = BigUint::one();
        c
    }

    /// Builds a class from its multiplicity vector; `mult[j]` is the
    /// multiplicity of `L(j+1)`.
    pub fn from_mults<T: Into<BigUint>>(p: Prime, mult: Vec<T>) -> Result<Self> {
        if mult.len() != p.rank() {
            return Err(Error::ShapeLength {
                got: mult.len(),
                expected: p.rank(),
            });
        }
        Ok(VerClass {
            p,
            mult: mult.into_iter().map(Into::into).collect(),
        })
    }

    /// Builds a class from `(index, multiplicity)` pairs, indices 1-based.
    pub fn from_terms<I>(p: Prime, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u64)>,
    {
        let mut c = Self::zero(p);
        for (i, m) in terms {
            check_index(i, p)?;
            c.mult[i - 1] += m;
        }
        Ok(c)
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn mults(&self) -> &[BigUint] {
        &self.mult
    }

    /// Multiplicity of `L_i` (1-based). Indices outside `1..p` read as zero.
    pub fn mult(&self, i: usize) -> BigUint {
        if i == 0 || i > self.mult.len() {
            BigUint::zero()
        } else {
            self.mult[i - 1].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(Zero::is_zero)
    }

    /// Nonzero `(index, multiplicity)` pairs in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(j, m)| (j + 1, m))
    }

    /// Sum of all multiplicities (the length of the object).
    pub fn length(&self) -> BigUint {
        self.mult.iter().sum()
    }

    pub fn scale(&self, k: &BigUint) -> Self {
        VerClass {
            p: self.p,
            mult: self.mult.iter().map(|m| m * k).collect(),
        }
    }

    pub fn checked_add(&self, other: &VerClass) -> Result<Self> {
        same_prime(self, other)?;
        Ok(VerClass {
            p: self.p,
            mult: self
                .mult
                .iter()
                .zip(&other.mult)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub(crate) fn add_assign_scaled(&mut self, other: &VerClass, k: &BigUint) {
        debug_assert_eq!(self.p, other.p);
        for (a, b) in self.mult.iter_mut().zip(&other.mult) {
            if !b.is_zero() {
                *a += b * k;
            }
        }
    }

    /// Removes one copy of `L_i`, if present.
    pub(crate) fn remove_one(&self, i: usize) -> Option<Self> {
        let m = self.mult.get(i.checked_sub(1)?)?;
        if m.is_zero() {
            return None;
        }
        let mut c = self.clone();
        c.mult[i - 1] -= 1u32;
        Some(c)
    }
}

impl Add for &VerClass {
    type Output = VerClass;

    /// Panics on prime mismatch; use [`VerClass::checked_add`] otherwise.
    fn add(self, rhs: &VerClass) -> VerClass {
        self.checked_add(rhs)
            .expect("prime mismatch in VerClass addition")
    }
}

impl fmt::Display for VerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, m) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "L{i}")?;
            } else {
                write!(f, "{m}L{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn check_index(i: usize, p: Prime) -> Result<()> {
    if i == 0 || i > p.rank() {
        Err(Error::IndexOutOfRange {
            index: i,
            max: p.rank(),
        })
    } else {
        Ok(())
    }
}

fn same_prime(x: &VerClass, y: &VerClass) -> Result<()> {
    if x.p != y.p {
        Err(Error::PrimeMismatch(x.p.get(), y.p.get()))
    } else {
        Ok(())
    }
}

/// The indicator class of `L_i`.
pub fn simple(i: usize, p: Prime) -> Result<VerClass> {
    check_index(i, p)?;
    let mut c = VerClass::zero(p);
    c.mult[i - 1] = BigUint::one();
    Ok(c)
}

/// Constituents of `L_i (x) L_j`, for `(i, j)` in `1..p` squared, row-major.
struct FusionTable {
    rank: usize,
    entries: Vec<Vec<usize>>,
}

impl FusionTable {
    fn build(p: Prime) -> Self {
        let rank = p.rank();
        let pp = p.as_usize();
        let mut entries = Vec::with_capacity(rank * rank);
        for i in 1..=rank {
            for j in 1..=rank {
                let top = i.min(j).min(pp - i).min(pp - j);
                let base = i.abs_diff(j);
                entries.push((1..=top).map(|k| base + 2 * k - 1).collect());
            }
        }
        FusionTable { rank, entries }
    }

    fn get(&self, i: usize, j: usize) -> &[usize] {
        &self.entries[(i - 1) * self.rank + (j - 1)]
    }
}

fn fusion_table(p: Prime) -> Arc<FusionTable> {
    static CACHE: OnceLock<RwLock<HashMap<Prime, Arc<FusionTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("fusion cache poisoned").get(&p) {
        return Arc::clone(t);
    }
    let mut w = cache.write().expect("fusion cache poisoned");
    Arc::clone(
        w.entry(p)
            .or_insert_with(|| Arc::new(FusionTable::build(p))),
    )
}

/// Indices `k` with `L_k` a summand of `L_i (x) L_j` (each with multiplicity one).
pub fn fusion_constituents(i: usize, j: usize, p: Prime) -> Result<Vec<usize>> {
    check_index(i, p)?;
    check_index(j, p)?;
    Ok(fusion_table(p).get(i, j).to_vec())
}

/// `L_i (x) L_j` as a class.
pub fn fuse_simples(i: usize, j: usize, p: Prime) -> Result<VerClass> {
    let ks = fusion_constituents(i, j, p)?;
    let mut c = VerClass::zero(p);
    for k in ks {
        c.mult[k - 1] += 1u32;
    }
    Ok(c)
}

/// Bilinear extension of [`fuse_simples`].
pub fn tensor(x: &VerClass, y: &VerClass) -> Result<VerClass> {
    same_prime(x, y)?;
    let p = x.p;
    let table = fusion_table(p);
    let mut out = VerClass::zero(p);
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            let ab = a * b;
            for &k in table.get(i, j) {
                out.mult[k - 1] += &ab;
            }
        }
    }
    Ok(out)
}

/// Every simple of `Ver_p` is self-dual, so this is the identity on classes.
pub fn dual(x: &VerClass) -> VerClass {
    x.clone()
}

/// Categorical dimension: `sum_i mult_i * i mod p`.
pub fn cat_dim(x: &VerClass) -> u64 {
    let p = x.p.get();
    let pb = BigUint::from(p);
    x.terms()
        .map(|(i, m)| {
            let r = (m % &pb).to_u64().expect("residue fits");
            r * (i as u64 % p) % p
        })
        .fold(0, |acc, v| (acc + v) % p)
}

/// Membership in `Ver_p^+`: all nonzero multiplicities sit at odd indices.
pub fn is_plus(x: &VerClass) -> bool {
    x.terms().all(|(i, _)| i % 2 == 1)
}

/// `dim Hom(X, Y)`: the inner product of multiplicity vectors.
pub fn hom_dim(x: &VerClass, y: &VerClass) -> Result<BigUint> {
    same_prime(x, y)?;
    Ok(x.mult.iter().zip(&y.mult).map(|(a, b)| a * b).sum())
}
