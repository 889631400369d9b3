//! Brute-force ground truth from the representation theory of `Z/pZ`.
//!
//! Every indecomposable representation of `Z/pZ` over a field of
//! characteristic `p` is a unipotent Jordan block `M_s`, `1 <= s <= p`. This
//! module builds explicit matrices for tensor, symmetric and exterior powers of
//! such blocks, reads off Jordan types from rank sequences over `F_p`, and
//! semisimplifies by discarding the negligible block `M_p`.

pub mod matrix;

use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::ring::VerClass;

pub use matrix::FpMatrix;

/// Largest monomial-basis dimension for which [`sym_power_jordan`] builds the
/// symmetric-power matrix directly; larger cases go through
/// [`sym_power_jordan_syzygy`].
pub const MONOMIAL_LIMIT: usize = 2000;

/// Isomorphism class of a finite-dimensional `Z/pZ`-representation: the
/// multiset of unipotent Jordan block sizes, kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawJordan")]
pub struct JordanType {
    p: Prime,
    blocks: Vec<usize>,
}

#[derive(Deserialize)]
struct RawJordan {
    p: Prime,
    blocks: Vec<usize>,
}

impl TryFrom<RawJordan> for JordanType {
    type Error = Error;

    fn try_from(raw: RawJordan) -> Result<Self> {
        JordanType::new(raw.p, raw.blocks)
    }
}

impl JordanType {
    pub fn new(p: Prime, mut blocks: Vec<usize>) -> Result<Self> {
        if let Some(&s) = blocks.iter().find(|&&s| s == 0 || s > p.as_usize()) {
            return Err(Error::SizeOutOfRange {
                size: s,
                max: p.as_usize(),
            });
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JordanType { p, blocks })
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Block sizes, descending.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Number of blocks of size exactly `s`.
    pub fn count(&self, s: usize) -> usize {
        self.blocks.iter().filter(|&&b| b == s).count()
    }

    /// True when every block is the free block `M_p`.
    pub fn is_projective(&self) -> bool {
        self.blocks.iter().all(|&b| b == self.p.as_usize())
    }

    /// Heller shift: `M_s -> M_(p-s)` for `s < p`; free blocks vanish.
    pub fn omega(&self) -> JordanType {
        let p = self.p.as_usize();
        let blocks = self
            .blocks
            .iter()
            .filter(|&&s| s < p)
            .map(|&s| p - s)
            .collect();
        JordanType::new(self.p, blocks).expect("shifted sizes stay in range")
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

/// Recovers the Jordan type of a unipotent matrix from the ranks of the
/// powers of `g - I`: the number of blocks of size at least `s` is
/// `rank((g-I)^(s-1)) - rank((g-I)^s)`.
pub fn jordan_type_of_unipotent(g: &FpMatrix) -> Result<JordanType> {
    let p = g.prime();
    let pp = p.as_usize();
    let n = g.dim();
    let mut ranks = vec![n];
    ranks.extend(g.minus_identity().power_ranks(pp));
    ranks.resize(pp + 2, 0);
    if ranks[pp] != 0 {
        return Err(Error::NotUnipotent(p.get()));
    }
    let mut blocks = Vec::new();
    for s in 1..=pp {
        let at_least = ranks[s - 1] - ranks[s];
        let above = ranks[s] - ranks[s + 1];
        blocks.extend(std::iter::repeat_n(s, at_least - above));
    }
    JordanType::new(p, blocks)
}

fn check_size(a: usize, p: Prime) -> Result<()> {
    if a == 0 || a > p.as_usize() {
        Err(Error::SizeOutOfRange {
            size: a,
            max: p.as_usize(),
        })
    } else {
        Ok(())
    }
}

/// Jordan type of `J_a (x) J_b`, read off the Kronecker product.
pub fn tensor_jordan(a: usize, b: usize, p: Prime) -> Result<JordanType> {
    check_size(a, p)?;
    check_size(b, p)?;
    let g = FpMatrix::jordan_block(p, a).kron(&FpMatrix::jordan_block(p, b))?;
    jordan_type_of_unipotent(&g)
}

fn check_sym_args(a: usize, n: usize, p: Prime) -> Result<()> {
    check_size(a, p)?;
    if n >= p.as_usize() {
        return Err(Error::DegreeTooLarge {
            degree: n,
            p: p.get(),
        });
    }
    Ok(())
}

/// Dimension `C(a + n - 1, n)` of the degree-`n` symmetric power of an
/// `a`-dimensional space.
pub fn sym_power_dim(a: usize, n: usize) -> u128 {
    if a == 0 {
        return u128::from(n == 0);
    }
    binomial((a + n - 1) as u128, n as u128)
}

/// Jordan type of `S^n(M_a)` for `n < p`.
///
/// Uses the monomial action ([`sym_power_jordan_monomial`]) whenever the
/// basis has at most [`MONOMIAL_LIMIT`] elements, and the syzygy reduction
/// ([`sym_power_jordan_syzygy`]) otherwise.
pub fn sym_power_jordan(a: usize, n: usize, p: Prime) -> Result<JordanType> {
    check_sym_args(a, n, p)?;
    if sym_power_dim(a, n) <= MONOMIAL_LIMIT as u128 {
        sym_power_jordan_monomial(a, n, p)
    } else {
        sym_power_jordan_syzygy(a, n, p)
    }
}

/// Jordan type of `J_a` acting on the degree-`n` monomials in `a` variables.
///
/// For `n < p` the symmetric power is a direct summand of the tensor power, so
/// this quotient construction computes the categorical `S^n`.
pub fn sym_power_jordan_monomial(a: usize, n: usize, p: Prime) -> Result<JordanType> {
    check_sym_args(a, n, p)?;
    let g = matrix::symmetric_power(&FpMatrix::jordan_block(p, a), n);
    jordan_type_of_unipotent(&g)
}

/// Jordan type of `S^n(M_a)` for `n < p` via the Koszul complex of
/// `0 -> M_(p-a) -> M_p -> M_a -> 0`.
///
/// Every middle term `Lambda^k M_(p-a) (x) S^(n-k) M_p` with `k < n` is free,
/// so modulo free summands `S^n(M_a)` is the `n`-fold Heller shift of
/// `Lambda^n M_(p-a)`. The exterior power is computed by brute force; the free
/// part is whatever dimension is left over.
pub fn sym_power_jordan_syzygy(a: usize, n: usize, p: Prime) -> Result<JordanType> {
    check_sym_args(a, n, p)?;
    let pp = p.as_usize();
    if n == 0 {
        return JordanType::new(p, vec![1]);
    }
    let kernel = pp - a;
    let mut stable = if n > kernel {
        JordanType::new(p, Vec::new())?
    } else {
        ext_power_jordan(kernel, n, p)?
    };
    for _ in 0..n {
        stable = stable.omega();
    }
    let total = usize::try_from(sym_power_dim(a, n)).expect("dimension fits in usize");
    let rest = total - stable.dim();
    assert_eq!(
        rest % pp,
        0,
        "free part of S^{n}(M_{a}) has dimension divisible by p"
    );
    let mut blocks = stable.blocks;
    blocks.extend(std::iter::repeat_n(pp, rest / pp));
    JordanType::new(p, blocks)
}

/// Jordan type of `Lambda^n(M_a)` for `0 <= n <= a`.
pub fn ext_power_jordan(a: usize, n: usize, p: Prime) -> Result<JordanType> {
    check_size(a, p)?;
    if n > a {
        return Err(Error::DegreeExceedsDimension { degree: n, dim: a });
    }
    let g = matrix::exterior_power(&FpMatrix::jordan_block(p, a), n);
    jordan_type_of_unipotent(&g)
}

/// Image in `Ver_p`: drop the blocks of size `p`, count the rest.
pub fn semisimplify(t: &JordanType) -> VerClass {
    let p = t.prime();
    let mut counts = vec![0u64; p.rank()];
    for &s in &t.blocks {
        if s < p.as_usize() {
            counts[s - 1] += 1;
        }
    }
    VerClass::from_mults(p, counts).expect("length p - 1")
}
