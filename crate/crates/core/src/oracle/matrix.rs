//! Dense square matrices over `F_p` and rank computations by Gaussian
//! elimination.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;

/// A square matrix over `F_p`, stored row-major with entries in `0..p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: Prime,
    n: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p = {}, n = {})", self.p, self.n)?;
        for r in 0..self.n {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn modulus(p: Prime) -> u32 {
    u32::try_from(p.get()).expect("oracle matrices need p < 2^32")
}

impl FpMatrix {
    /// Builds an `n x n` matrix from row-major entries, reducing each mod `p`.
    pub fn new(p: Prime, n: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(entries.len(), n * n));
        }
        let m = p.get() as i64;
        let _ = modulus(p);
        Ok(FpMatrix {
            p,
            n,
            data: entries.iter().map(|&x| x.rem_euclid(m) as u32).collect(),
        })
    }

    pub fn zero(p: Prime, n: usize) -> Self {
        let _ = modulus(p);
        FpMatrix {
            p,
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The unipotent Jordan block of size `a`: ones on the diagonal and the
    /// superdiagonal, so `J e_s = e_s + e_(s-1)`.
    pub fn jordan_block(p: Prime, a: usize) -> Self {
        let mut m = Self::identity(p, a);
        for r in 0..a.saturating_sub(1) {
            m.data[r * a + r + 1] = 1;
        }
        m
    }

    /// Block-diagonal sum of unipotent Jordan blocks.
    pub fn jordan_form(p: Prime, blocks: &[usize]) -> Self {
        let n = blocks.iter().sum();
        let mut m = Self::identity(p, n);
        let mut off = 0;
        for &b in blocks {
            for r in 0..b.saturating_sub(1) {
                m.data[(off + r) * n + off + r + 1] = 1;
            }
            off += b;
        }
        m
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.n + c] = (v % self.p.get()) as u32;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    fn check_same(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same(other)?;
        let n = self.n;
        let p = self.p.get();
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            let orow = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Ok(FpMatrix {
            p: self.p,
            n,
            data: out.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_same(other)?;
        let p = modulus(self.p);
        Ok(FpMatrix {
            p: self.p,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
                .collect(),
        })
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> FpMatrix {
        self.sub(&Self::identity(self.p, self.n))
            .expect("same shape by construction")
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let p = self.p.get();
        let mut m = Self::zero(self.p, n);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j) as u64;
                if x == 0 {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        let y = other.get(k, l) as u64;
                        m.data[(i * b + k) * n + j * b + l] = (x * y % p) as u32;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        rref(&mut work, self.n, self.n, modulus(self.p)).len()
    }

    /// `rank(self^k)` for `k = 1..=max_power`, computed by restricting the
    /// operator to its own image at each step. The sequence is truncated
    /// early once it reaches zero (later entries are zero as well).
    pub fn power_ranks(&self, max_power: usize) -> Vec<usize> {
        let p = modulus(self.p);
        let mut ranks = Vec::with_capacity(max_power);
        let mut op = self.data.clone();
        let mut m = self.n;
        while ranks.len() < max_power {
            // Rows of `basis` are the columns of `op`, reduced to a basis of
            // the image in reduced echelon form.
            let mut basis = transpose(&op, m);
            let pivots = rref(&mut basis, m, m, p);
            let r = pivots.len();
            ranks.push(r);
            if r == 0 {
                break;
            }
            if r == m {
                // Invertible on its image: the rank never drops again.
                ranks.resize(max_power, r);
                break;
            }
            // Restricted operator: column j holds the pivot coordinates of
            // op * b_j.
            let mut next = vec![0u32; r * r];
            for (l, &pl) in pivots.iter().enumerate() {
                let op_row = &op[pl * m..(pl + 1) * m];
                for j in 0..r {
                    let b = &basis[j * m..(j + 1) * m];
                    next[l * r + j] = dot_mod(op_row, b, p);
                }
            }
            op = next;
            m = r;
        }
        ranks
    }
}

fn dot_mod(a: &[u32], b: &[u32], p: u32) -> u32 {
    let p = p as u64;
    if p < 1 << 16 {
        // Each product is below 2^32, so 2^32 of them fit in a u64.
        let acc: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum();
        (acc % p) as u32
    } else {
        a.iter()
            .zip(b)
            .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p) as u32
    }
}

fn transpose(data: &[u32], n: usize) -> Vec<u32> {
    let mut t = vec![0u32; n * n];
    for r in 0..n {
        for c in 0..n {
            t[c * n + r] = data[r * n + c];
        }
    }
    t
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Reduces the `rows x cols` row-major block to reduced row echelon form in
/// place and returns the pivot columns; the first `pivots.len()` rows form the
/// reduced basis of the row space.
pub(crate) fn rref(data: &mut [u32], rows: usize, cols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    // For small p, precomputed multiples of the pivot row turn every update
    // into a table lookup plus a conditional subtraction.
    let use_table = (p as usize) * 4 <= rows.max(1);
    let mut table: Vec<u32> = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if found != r {
            for k in c..cols {
                data.swap(found * cols + k, r * cols + k);
            }
        }
        let inv = inv_mod(data[r * cols + c], p);
        if inv != 1 {
            for k in c..cols {
                let x = &mut data[r * cols + k];
                *x = (*x as u64 * inv as u64 % p as u64) as u32;
            }
        }
        let width = cols - c;
        if use_table {
            table.clear();
            table.resize(p as usize * width, 0);
            for mlt in 1..p as usize {
                for k in 0..width {
                    // Stores (p - mlt) * pivot, i.e. the amount to add.
                    let v = data[r * cols + c + k] as u64 * (p as u64 - mlt as u64) % p as u64;
                    table[mlt * width + k] = v as u32;
                }
            }
        }
        let (head, tail) = data.split_at_mut(r * cols);
        let (pivot_row, tail) = tail.split_at_mut(cols);
        let pivot_row = &pivot_row[c..];
        let eliminate = |row: &mut [u32]| {
            let f = row[c];
            if f == 0 {
                return;
            }
            let seg = &mut row[c..];
            if use_table {
                let add = &table[f as usize * width..(f as usize + 1) * width];
                for (x, &a) in seg.iter_mut().zip(add) {
                    let s = *x + a;
                    *x = if s >= p { s - p } else { s };
                }
            } else {
                let neg = (p - f) as u64;
                for (x, &y) in seg.iter_mut().zip(pivot_row) {
                    *x = ((*x as u64 + neg * y as u64) % p as u64) as u32;
                }
            }
        };
        for row in head.chunks_mut(cols) {
            eliminate(row);
        }
        for row in tail.chunks_mut(cols) {
            eliminate(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Action of `g` on the degree-`n` part of the symmetric algebra, in the
/// monomial basis listed by [`monomials`].
pub fn symmetric_power(g: &FpMatrix, n: usize) -> FpMatrix {
    let a = g.n;
    let p = g.p.get();
    let basis = monomials(a, n);
    let index: HashMap<&[u8], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    // Image of each variable x_s: sum_r g[r][s] x_r.
    let images: Vec<Vec<(usize, u64)>> = (0..a)
        .map(|s| {
            (0..a)
                .filter_map(|r| {
                    let v = g.get(r, s) as u64;
                    (v != 0).then_some((r, v))
                })
                .collect()
        })
        .collect();
    let dim = basis.len();
    let mut out = FpMatrix::zero(g.p, dim);
    for (col, mono) in basis.iter().enumerate() {
        let mut poly: HashMap<Vec<u8>, u64> = HashMap::from([(vec![0u8; a], 1u64)]);
        for (s, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                let mut next: HashMap<Vec<u8>, u64> = HashMap::with_capacity(poly.len() * 2);
                for (m, c) in &poly {
                    for &(r, v) in &images[s] {
                        let mut m2 = m.clone();
                        m2[r] += 1;
                        let e = next.entry(m2).or_insert(0);
                        *e = (*e + c * v) % p;
                    }
                }
                next.retain(|_, c| *c != 0);
                poly = next;
            }
        }
        for (m, c) in poly {
            out.data[index[m.as_slice()] * dim + col] = c as u32;
        }
    }
    out
}

/// Exponent vectors of degree `n` in `a` variables, lexicographically
/// descending: `x_1^n` first, `x_a^n` last.
pub fn monomials(a: usize, n: usize) -> Vec<Vec<u8>> {
    fn rec(a: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() + 1 == a {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u8);
            rec(a, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if a == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(a, n, &mut Vec::with_capacity(a), &mut out);
    out
}

/// Action of `g` on `Lambda^n` in the basis of increasing index subsets,
/// listed lexicographically.
pub fn exterior_power(g: &FpMatrix, n: usize) -> FpMatrix {
    let a = g.n;
    assert!(a <= 64, "exterior powers limited to dimension 64");
    let p = g.p.get();
    let basis = subsets(a, n);
    let index: HashMap<u64, usize> = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let dim = basis.len();
    let mut out = FpMatrix::zero(g.p, dim);
    for (col, &mask) in basis.iter().enumerate() {
        // Wedge g e_(s1) ^ g e_(s2) ^ ... in increasing s.
        let mut terms: HashMap<u64, u64> = HashMap::from([(0u64, 1u64)]);
        for s in (0..a).filter(|s| mask >> s & 1 == 1) {
            let mut next: HashMap<u64, u64> = HashMap::new();
            for (&m, &c) in &terms {
                for r in 0..a {
                    let v = g.get(r, s) as u64;
                    if v == 0 || m >> r & 1 == 1 {
                        continue;
                    }
                    // Appending e_r at the end, then sorting it into place
                    // passes over every set bit above r.
                    let above = (m >> r >> 1).count_ones();
                    let coeff = c * v % p;
                    let coeff = if above % 2 == 1 {
                        (p - coeff) % p
                    } else {
                        coeff
                    };
                    let e = next.entry(m | 1 << r).or_insert(0);
                    *e = (*e + coeff) % p;
                }
            }
            next.retain(|_, c| *c != 0);
            terms = next;
        }
        for (m, c) in terms {
            out.data[index[&m] * dim + col] = c as u32;
        }
    }
    out
}

fn subsets(a: usize, n: usize) -> Vec<u64> {
    fn rec(start: usize, a: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for s in start..a {
            if a - s < left {
                break;
            }
            rec(s + 1, a, left - 1, cur | 1 << s, out);
        }
    }
    let mut out = Vec::new();
    rec(0, a, n, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn rank_small() {
        let m = FpMatrix::new(p(5), 3, &[1, 2, 3, 2, 4, 6, 0, 0, 1]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(FpMatrix::identity(p(7), 4).rank(), 4);
        assert_eq!(FpMatrix::zero(p(7), 4).rank(), 0);
        // Entries reduce mod p: the second row is 3 * first mod 3 = 0.
        let m = FpMatrix::new(p(3), 2, &[1, 1, 3, -3]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    fn naive_rank(rows: &[Vec<u64>], p: u64) -> usize {
        let mut m: Vec<Vec<u64>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(k) = (r..m.len()).find(|&i| !m[i][c].is_multiple_of(p)) else {
                continue;
            };
            m.swap(r, k);
            let inv = inv_mod(m[r][c] as u32, p as u32) as u64;
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c] * inv % p;
                    for j in 0..cols {
                        m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn table_path_matches_naive_elimination() {
        for (pr, n) in [(3u64, 40usize), (5, 30), (13, 60), (101, 20)] {
            let entries: Vec<i64> = (0..n * n)
                .map(|k| ((k * 7 + k / 3 + k * k % 11) % 4) as i64)
                .collect();
            let m = FpMatrix::new(p(pr), n, &entries).unwrap();
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|r| m.row(r).iter().map(|&x| x as u64).collect())
                .collect();
            assert_eq!(m.rank(), naive_rank(&rows, pr), "p = {pr}");
        }
    }

    #[test]
    fn power_ranks_of_blocks() {
        let j = FpMatrix::jordan_form(p(7), &[4, 2, 1]).minus_identity();
        assert_eq!(j.power_ranks(7), vec![4, 2, 1, 0]);
        let g = FpMatrix::new(p(5), 2, &[2, 0, 0, 1])
            .unwrap()
            .minus_identity();
        assert_eq!(g.power_ranks(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn monomial_order() {
        let m = monomials(3, 2);
        assert_eq!(
            m,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(monomials(4, 0), vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn sym_square_of_block() {
        // J_2 on x^2, xy, y^2 with x -> x, y -> x + y.
        let g = symmetric_power(&FpMatrix::jordan_block(p(3), 2), 2);
        let expect = FpMatrix::new(p(3), 3, &[1, 1, 1, 0, 1, 2, 0, 0, 1]).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn exterior_top_is_determinant() {
        let g = FpMatrix::new(p(7), 3, &[2, 1, 0, 0, 3, 5, 1, 0, 1]).unwrap();
        // det = 2*(3*1-5*0) - 1*(0*1-5*1) + 0 = 6 + 5 = 11 = 4 mod 7.
        let top = exterior_power(&g, 3);
        assert_eq!(top.dim(), 1);
        assert_eq!(top.get(0, 0), 4);
        let first = exterior_power(&g, 1);
        assert_eq!(first, g);
    }

    #[test]
    fn exterior_is_functorial() {
        let pr = p(5);
        let a = FpMatrix::new(pr, 3, &[1, 2, 0, 0, 1, 3, 4, 0, 1]).unwrap();
        let b = FpMatrix::new(pr, 3, &[2, 0, 1, 1, 1, 0, 0, 3, 1]).unwrap();
        let ab = a.mul(&b).unwrap();
        for n in 0..=3 {
            let lhs = exterior_power(&ab, n);
            let rhs = exterior_power(&a, n).mul(&exterior_power(&b, n)).unwrap();
            assert_eq!(lhs, rhs, "degree {n}");
            let lhs = symmetric_power(&ab, n);
            let rhs = symmetric_power(&a, n).mul(&symmetric_power(&b, n)).unwrap();
            assert_eq!(lhs, rhs, "degree {n}");
        }
    }

    #[test]
    fn kron_of_identities() {
        let i2 = FpMatrix::identity(p(3), 2);
        assert_eq!(i2.kron(&i2).unwrap(), FpMatrix::identity(p(3), 4));
    }
}
