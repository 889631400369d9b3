use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oracle::{semisimplify, sym_power_jordan};
use crate::prime::Prime;
use crate::ring::{simple, tensor, VerClass};

/// Class of `S^n(L_i)`.
///
/// Degrees below `p` come from the Jordan-type oracle. For `n >= p` the
/// power vanishes when `i >= 2`, since it already vanishes past `p - i`;
/// `S^n(L_1) = L_1` in every degree.
pub fn sym_power_class(i: usize, n: usize, p: Prime) -> Result<VerClass> {
    static CACHE: OnceLock<RwLock<HashMap<(Prime, usize, usize), VerClass>>> = OnceLock::new();
    simple(i, p)?;
    if i == 1 {
        return Ok(VerClass::unit(p));
    }
    if n >= p.as_usize() {
        return Ok(VerClass::zero(p));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache
        .read()
        .expect("symmetric cache poisoned")
        .get(&(p, i, n))
    {
        return Ok(c.clone());
    }
    let c = semisimplify(&sym_power_jordan(i, n, p)?);
    cache
        .write()
        .expect("symmetric cache poisoned")
        .insert((p, i, n), c.clone());
    Ok(c)
}

fn trim(mut s: Vec<VerClass>) -> Vec<VerClass> {
    while s.len() > 1 && s.last().is_some_and(VerClass::is_zero) {
        s.pop();
    }
    s
}

fn convolve(a: &[VerClass], b: &[VerClass], p: Prime) -> Result<Vec<VerClass>> {
    let mut out = vec![VerClass::zero(p); a.len() + b.len() - 1];
    let one = BigUint::from(1u32);
    for (x, ax) in a.iter().enumerate() {
        if ax.is_zero() {
            continue;
        }
        for (y, by) in b.iter().enumerate() {
            if !by.is_zero() {
                out[x + y].add_assign_scaled(&tensor(ax, by)?, &one);
            }
        }
    }
    Ok(trim(out))
}

/// Graded pieces `[S^0(Y), S^1(Y), ...]` of the symmetric algebra of a class
/// with no `L_1` part, up to the last nonzero degree.
pub fn symmetric_power_series(y: &VerClass) -> Result<Vec<VerClass>> {
    let p = y.prime();
    if !y.mult(1).is_zero() {
        return Err(Error::NonzeroTrivialPart);
    }
    let mut acc = vec![VerClass::unit(p)];
    for (i, m) in y.terms() {
        let per: Vec<VerClass> = (0..p.as_usize())
            .map(|n| sym_power_class(i, n, p))
            .collect::<Result<_>>()?;
        let per = trim(per);
        let mut k = m.clone();
        while !k.is_zero() {
            acc = convolve(&acc, &per, p)?;
            k -= 1u32;
        }
    }
    Ok(acc)
}

/// Total class `Σ_n S^n(Y)`; finite because every `L_i` with `i >= 2` is
/// nilpotent.
pub fn symmetric_algebra_class(y: &VerClass) -> Result<VerClass> {
    let mut out = VerClass::zero(y.prime());
    let one = BigUint::from(1u32);
    for piece in symmetric_power_series(y)? {
        out.add_assign_scaled(&piece, &one);
    }
    Ok(out)
}
