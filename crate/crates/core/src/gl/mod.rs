//! The general linear group `GL(X)` of an object `X = ⊕ n_i L_i` of `Ver_p`.
//!
//! Class-level shadows of the Lie algebra `gl(X) = X ⊗ X*`, its nilradical,
//! and the finite symmetric algebras that appear in the PBW decomposition,
//! together with the labels of irreducible representations and truncated
//! generalized Verma characters.

mod labels;
mod symmetric;
mod verma;

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::ring::{cat_dim, dual, fuse_simples, tensor, VerClass};

pub use labels::{count_labels, dominant_weights, enumerate_labels, GLIrrepLabel, LabelFactor};
pub use symmetric::{sym_power_class, symmetric_algebra_class, symmetric_power_series};
pub use verma::{verma_character, GradedVerClass};

/// Multiplicities `(n_1, ..., n_{p-1})` of an object `X = ⊕ n_i L_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectShape {
    p: Prime,
    n: Vec<u64>,
}

impl ObjectShape {
    /// Trailing zeros may be omitted.
    pub fn new(p: Prime, mut n: Vec<u64>) -> Result<Self> {
        let expected = p.rank();
        while n.len() > expected && n.last() == Some(&0) {
            n.pop();
        }
        if n.len() > expected {
            return Err(Error::ShapeLength {
                got: n.len(),
                expected,
            });
        }
        n.resize(expected, 0);
        Ok(ObjectShape { p, n })
    }

    /// The shape `n L_i`.
    pub fn homogeneous(p: Prime, i: usize, n: u64) -> Result<Self> {
        if i == 0 || i > p.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: p.rank(),
            });
        }
        let mut v = vec![0; p.rank()];
        v[i - 1] = n;
        Self::new(p, v)
    }

    /// Parses `"n_1,n_2,..."`.
    pub fn parse(p: Prime, s: &str) -> std::result::Result<Self, String> {
        let n = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad multiplicity {t:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(p, n).map_err(|e| e.to_string())
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.n
    }

    /// Multiplicity of `L_i`.
    pub fn n(&self, i: usize) -> u64 {
        i.checked_sub(1)
            .and_then(|k| self.n.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.n.iter().all(|&x| x == 0)
    }

    pub fn class(&self) -> VerClass {
        VerClass::from_mults(self.p, self.n.clone()).expect("shape has length p - 1")
    }

    fn nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::EmptyShape)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for ObjectShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.class(), f)
    }
}

/// Class of `gl(X) = X ⊗ X*`.
pub fn gl_class(x: &ObjectShape) -> Result<VerClass> {
    x.nonzero()?;
    let c = x.class();
    tensor(&c, &dual(&c))
}

/// Class of `sl(X)`, the complement of the scalars in `gl(X)`. Only defined
/// when the categorical dimension of `X` is nonzero.
pub fn sl_class(x: &ObjectShape) -> Result<VerClass> {
    let gl = gl_class(x)?;
    if cat_dim(&x.class()) == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(gl.remove_one(1).expect("gl(X) contains the scalars"))
}

/// Factors `GL_{n_i}` of the underlying ordinary group, as `(i, n_i)`.
pub fn underlying_group(x: &ObjectShape) -> Vec<(usize, u64)> {
    x.n.iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(k, &n)| (k + 1, n))
        .collect()
}

/// Class of the strictly lower triangular part `⊕_{a>b} X_a ⊗ X_b*` for a
/// listing `order` of the simple summands of `X` (each `L_i` appearing `n_i`
/// times).
pub fn nilradical_class(x: &ObjectShape, order: &[usize]) -> Result<VerClass> {
    let mut seen = vec![0u64; x.p.rank()];
    for &i in order {
        match i.checked_sub(1).and_then(|k| seen.get_mut(k)) {
            Some(slot) => *slot += 1,
            None => return Err(Error::OrderMismatch),
        }
    }
    if seen != x.n {
        return Err(Error::OrderMismatch);
    }
    let mut out = VerClass::zero(x.p);
    let one = BigUint::from(1u32);
    for (a, &ia) in order.iter().enumerate() {
        for &ib in &order[..a] {
            out.add_assign_scaled(&fuse_simples(ia, ib, x.p)?, &one);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::simple;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn shape(q: u64, n: &[u64]) -> ObjectShape {
        ObjectShape::new(p(q), n.to_vec()).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(shape(5, &[0, 1]).multiplicities(), &[0, 1, 0, 0]);
        assert!(ObjectShape::new(p(5), vec![1, 0, 0, 0, 1]).is_err());
        assert_eq!(shape(5, &[0, 1, 0, 0, 0]).n(2), 1);
        assert_eq!(ObjectShape::parse(p(7), "1,0,2").unwrap().n(3), 2);
        assert!(ObjectShape::parse(p(7), "1,x").is_err());
    }

    #[test]
    fn gl_and_sl() {
        assert_eq!(gl_class(&shape(5, &[0, 1])).unwrap().to_string(), "L1 + L3");
        assert_eq!(gl_class(&shape(5, &[1])).unwrap().to_string(), "L1");
        assert_eq!(
            gl_class(&shape(5, &[0, 2])).unwrap().to_string(),
            "4L1 + 4L3"
        );
        assert_eq!(gl_class(&shape(5, &[])), Err(Error::EmptyShape));
        assert_eq!(
            sl_class(&shape(5, &[0, 1])).unwrap(),
            simple(3, p(5)).unwrap()
        );
        assert!(sl_class(&shape(5, &[1])).unwrap().is_zero());
        assert!(sl_class(&shape(5, &[0, 0, 0, 1])).unwrap().is_zero());
        assert_eq!(sl_class(&shape(5, &[5])), Err(Error::ZeroDimension));
        assert_eq!(sl_class(&shape(5, &[0, 1, 1])), Err(Error::ZeroDimension));
    }

    #[test]
    fn group_factors() {
        assert_eq!(underlying_group(&shape(5, &[0, 2])), vec![(2, 2)]);
        assert_eq!(underlying_group(&shape(5, &[1, 3])), vec![(1, 1), (2, 3)]);
        assert_eq!(underlying_group(&shape(7, &[0, 0, 1])), vec![(3, 1)]);
    }

    #[test]
    fn nilradical() {
        assert!(nilradical_class(&shape(5, &[0, 1]), &[2])
            .unwrap()
            .is_zero());
        assert_eq!(
            nilradical_class(&shape(5, &[0, 2]), &[2, 2])
                .unwrap()
                .to_string(),
            "L1 + L3"
        );
        assert_eq!(
            nilradical_class(&shape(5, &[1, 1]), &[1, 2])
                .unwrap()
                .to_string(),
            "L2"
        );
        assert_eq!(
            nilradical_class(&shape(5, &[1, 1]), &[1, 1]),
            Err(Error::OrderMismatch)
        );
        assert_eq!(
            nilradical_class(&shape(5, &[1, 1]), &[1, 2, 9]),
            Err(Error::OrderMismatch)
        );
    }
}
