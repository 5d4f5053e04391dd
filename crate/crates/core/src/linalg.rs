//! Exact integer linear algebra.
//!
//! Elimination is fraction-free (Bareiss): every intermediate value is a minor
//! of the input, so divisions are exact. Each routine first tries checked
//! `i128` arithmetic and falls back to big integers on overflow.

use crate::error::MatrixError;
use crate::poly::Poly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_big_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Parse("ragged rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_big_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        if let (Some(a), Some(b)) = (self.to_i128(), other.to_i128()) {
            if let Some(c) = mul_i128(&a, &b, self.rows, self.cols, other.cols) {
                return Self::from_i128(self.rows, other.cols, &c);
            }
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        let data = self.data.iter().map(|a| a * k).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self + t I`.
    pub fn add_identity(&self, t: &BigInt) -> IntMatrix {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            out.data[i * self.cols + i] += t;
        }
        out
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        Self::from_big_fn(idx.len(), idx.len(), |a, b| self.get(idx[a], idx[b]).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        Self::from_big_fn(rows.len(), cols.len(), |a, b| self.get(rows[a], cols[b]).clone())
    }

    pub fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(ToPrimitive::to_i128).collect()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    fn from_i128(rows: usize, cols: usize, v: &[i128]) -> Self {
        IntMatrix { rows, cols, data: v.iter().map(|&x| BigInt::from(x)).collect() }
    }
}

fn mul_i128(a: &[i128], b: &[i128], r: usize, k: usize, c: usize) -> Option<Vec<i128>> {
    let mut out = vec![0i128; r * c];
    for i in 0..r {
        for t in 0..k {
            let x = a[i * k + t];
            if x == 0 {
                continue;
            }
            for j in 0..c {
                let p = x.checked_mul(b[t * c + j])?;
                out[i * c + j] = out[i * c + j].checked_add(p)?;
            }
        }
    }
    Some(out)
}

// ============================================================================
// Determinant
// ============================================================================

/// Exact determinant of a square integer matrix.
pub fn det_exact(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if let Some(mut a) = m.to_i128() {
        if let Some(d) = det_i128(&mut a, m.rows) {
            return BigInt::from(d);
        }
    }
    det_big(m.data.clone(), m.rows)
}

/// Bareiss on a row-major `i128` buffer; `None` on overflow.
pub fn det_i128(a: &mut [i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let piv = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let v = a[i * n + j].checked_mul(piv)?.checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = piv;
    }
    Some(sign * a[n * n - 1])
}

fn det_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let piv = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = &a[i * n + j] * &piv - &lead * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = piv;
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

// ============================================================================
// Rank
// ============================================================================

/// Rank over the rationals.
pub fn rank_exact(m: &IntMatrix) -> usize {
    if let Some(mut a) = m.to_i128() {
        if let Some(r) = rank_i128(&mut a, m.rows, m.cols) {
            return r;
        }
    }
    rank_big(m.data.clone(), m.rows, m.cols)
}

fn rank_i128(a: &mut [i128], rows: usize, cols: usize) -> Option<usize> {
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let piv = a[r * cols + c];
        for i in r + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let v = a[i * cols + j].checked_mul(piv)?.checked_sub(lead.checked_mul(a[r * cols + j])?)?;
                a[i * cols + j] = v / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

fn rank_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let piv = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = std::mem::take(&mut a[i * cols + c]);
            if lead.is_zero() {
                for j in c + 1..cols {
                    let v = &a[i * cols + j] * &piv;
                    a[i * cols + j] = v / &prev;
                }
                continue;
            }
            for j in c + 1..cols {
                let v = &a[i * cols + j] * &piv - &lead * &a[r * cols + j];
                a[i * cols + j] = v / &prev;
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

/// A 61-bit prime for modular elimination.
pub const RANK_PRIME: u64 = (1 << 61) - 1;

/// Rank over `GF(p)`. Never exceeds the rank over the rationals.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let pb = BigInt::from(p);
    let mut a: Vec<u64> = m.data.iter().map(|v| u64::try_from(v.mod_floor(&pb)).expect("reduced")).collect();
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv_row) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv_row != r {
            for j in 0..cols {
                a.swap(r * cols + j, piv_row * cols + j);
            }
        }
        let inv = pow_mod(a[r * cols + c], p - 2, p);
        for j in c..cols {
            a[r * cols + j] = mulmod(a[r * cols + j], inv);
        }
        for i in r + 1..rows {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let t = mulmod(f, a[r * cols + j]);
                a[i * cols + j] = (a[i * cols + j] + p - t) % p;
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

// ============================================================================
// Positive semidefiniteness
// ============================================================================

/// Exact PSD test of a symmetric integer matrix. Returns the rank when PSD.
///
/// Symmetric elimination with a positive diagonal pivot at each step; the
/// fraction-free remainder is the Schur complement times a positive minor, so
/// signs are preserved.
pub fn psd_rank(m: &IntMatrix) -> Option<usize> {
    assert!(m.is_square());
    let n = m.rows;
    if let Some(mut a) = m.to_i128() {
        if let Some(res) = psd_i128(&mut a, n) {
            return res;
        }
    }
    psd_big(m.data.clone(), n)
}

pub fn is_psd(m: &IntMatrix) -> bool {
    psd_rank(m).is_some()
}

fn psd_i128(a: &mut [i128], n: usize) -> Option<Option<usize>> {
    let mut alive: Vec<usize> = (0..n).collect();
    let mut prev = 1i128;
    let mut rank = 0;
    loop {
        if alive.iter().any(|&i| a[i * n + i] < 0) {
            return Some(None);
        }
        let Some(pos) = alive.iter().position(|&i| a[i * n + i] > 0) else {
            let zero = alive.iter().all(|&i| alive.iter().all(|&j| a[i * n + j] == 0));
            return Some(zero.then_some(rank));
        };
        let p = alive.swap_remove(pos);
        let piv = a[p * n + p];
        for &i in &alive {
            let lead = a[i * n + p];
            for &j in &alive {
                let v = a[i * n + j].checked_mul(piv)?.checked_sub(lead.checked_mul(a[p * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
}

fn psd_big(mut a: Vec<BigInt>, n: usize) -> Option<usize> {
    let mut alive: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    loop {
        if alive.iter().any(|&i| a[i * n + i].is_negative()) {
            return None;
        }
        let Some(pos) = alive.iter().position(|&i| a[i * n + i].is_positive()) else {
            let zero = alive.iter().all(|&i| alive.iter().all(|&j| a[i * n + j].is_zero()));
            return zero.then_some(rank);
        };
        let p = alive.swap_remove(pos);
        let piv = a[p * n + p].clone();
        let pivot_row: Vec<BigInt> = (0..n).map(|j| a[p * n + j].clone()).collect();
        for &i in &alive {
            let lead = a[i * n + p].clone();
            for &j in &alive {
                let v = &a[i * n + j] * &piv - &lead * &pivot_row[j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = piv;
        rank += 1;
    }
}

// ============================================================================
// Rational helpers
// ============================================================================

/// Indices of a maximal set of linearly independent rows (greedy, in order).
pub fn independent_rows(m: &IntMatrix) -> Vec<usize> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    for i in 0..m.rows {
        let mut v: Vec<BigRational> =
            (0..m.cols).map(|j| BigRational::from_integer(m.get(i, j).clone())).collect();
        for (b, &pc) in basis.iter().zip(&pivots) {
            if !v[pc].is_zero() {
                let f = v[pc].clone() / &b[pc];
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            basis.push(v);
            pivots.push(pc);
            chosen.push(i);
        }
    }
    chosen
}

/// Inverse of a nonsingular integer matrix as `(adj, det)` with `M^{-1} = adj / det`.
/// The pair is reduced by the gcd of all entries and `det > 0`.
pub fn scaled_inverse(m: &IntMatrix) -> Option<(IntMatrix, BigInt)> {
    assert!(m.is_square());
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(m.get(i, j).clone())
                    } else {
                        BigRational::from_integer(BigInt::from(i64::from(j - n == i)))
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    let mut den = BigInt::one();
    for row in &a {
        for x in &row[n..] {
            den = den.lcm(x.denom());
        }
    }
    let adj = IntMatrix::from_big_fn(n, n, |i, j| (&a[i][n + j] * BigRational::from_integer(den.clone())).to_integer());
    Some((adj, den))
}

// ============================================================================
// Permanent
// ============================================================================

pub const DEFAULT_PERMANENT_LIMIT: usize = 20;

/// Exact permanent by Ryser's inclusion-exclusion formula with Gray-code updates.
pub fn permanent_exact(m: &IntMatrix, limit: usize) -> Result<BigInt, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n > limit {
        return Err(MatrixError::OrderTooLarge { order: n, limit });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    if let Some(a) = m.to_i128() {
        if a.iter().all(|x| x.abs() <= 1 << 20) && n <= 24 {
            return Ok(ryser_i128(&a, n));
        }
    }
    Ok(ryser_big(m, n))
}

// Row sums stay below n * 2^20 and products of n of them stay below 2^127 for n ≤ 4;
// for larger n the product is accumulated in big integers.
fn ryser_i128(a: &[i128], n: usize) -> BigInt {
    let mut sums = vec![0i128; n];
    let mut total = BigInt::zero();
    let mut prev_gray = 0u64;
    for k in 1u64..(1u64 << n) {
        let gray = k ^ (k >> 1);
        let changed = (gray ^ prev_gray).trailing_zeros() as usize;
        let add = gray & (1 << changed) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            if add {
                *s += a[i * n + changed];
            } else {
                *s -= a[i * n + changed];
            }
        }
        prev_gray = gray;
        let mut prod: i128 = 1;
        let mut big: Option<BigInt> = None;
        for &s in &sums {
            if s == 0 {
                prod = 0;
                big = None;
                break;
            }
            match &mut big {
                Some(b) => *b *= s,
                None => match prod.checked_mul(s) {
                    Some(p) => prod = p,
                    None => big = Some(BigInt::from(prod) * s),
                },
            }
        }
        let term = big.unwrap_or_else(|| BigInt::from(prod));
        if (n as u32 - gray.count_ones()) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn ryser_big(m: &IntMatrix, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for subset in 1u64..(1u64 << n) {
        let mut prod = BigInt::one();
        for i in 0..n {
            let mut s = BigInt::zero();
            for j in 0..n {
                if subset >> j & 1 == 1 {
                    s += m.get(i, j);
                }
            }
            prod *= s;
        }
        if (n as u32 - subset.count_ones()) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

// ============================================================================
// Characteristic polynomial
// ============================================================================

/// `det(xI - M)` by evaluation at `n + 1` consecutive integers centred on 0 and
/// exact Newton interpolation.
pub fn charpoly_of(m: &IntMatrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows;
    let x0 = -(n as i64 / 2);
    let values: Vec<BigInt> = (0..=n as i64).map(|k| det_exact(&m.scale(&BigInt::from(-1)).add_identity(&BigInt::from(x0 + k)))).collect();
    interpolate_consecutive(x0, &values)
}

/// `det(xI - M)` for a small row-major `i128` matrix, coefficients low to high.
/// `None` on overflow.
pub fn charpoly_i128(m: &[i128], n: usize) -> Option<Vec<i128>> {
    let x0 = -(n as i128 / 2);
    let mut work = vec![0i128; n * n];
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n as i128 {
        for (w, &v) in work.iter_mut().zip(m) {
            *w = -v;
        }
        for i in 0..n {
            work[i * n + i] += x0 + k;
        }
        values.push(det_i128(&mut work, n)?);
    }
    let mut newton = Vec::with_capacity(n + 1);
    for k in 0..=n {
        newton.push(values[0]);
        for i in 0..n - k {
            values[i] = values[i + 1].checked_sub(values[i])?;
        }
        values.truncate(n - k);
    }
    let mut fact = 1i128;
    for (k, d) in newton.iter_mut().enumerate() {
        if k > 0 {
            fact = fact.checked_mul(k as i128)?;
        }
        *d /= fact;
    }
    let mut acc = vec![newton[n]];
    for k in (0..n).rev() {
        let root = x0 + k as i128;
        let mut next = vec![0i128; acc.len() + 1];
        for (i, &a) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].checked_add(a)?;
            next[i] = next[i].checked_sub(a.checked_mul(root)?)?;
        }
        next[0] = next[0].checked_add(newton[k])?;
        acc = next;
    }
    Some(acc)
}

/// The integer polynomial of degree ≤ `values.len() - 1` taking `values[k]` at `x0 + k`.
pub fn interpolate_consecutive(x0: i64, values: &[BigInt]) -> Poly {
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    for k in 0..n {
        newton.push(diffs[0].clone());
        for i in 0..n - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.truncate(n - k - 1);
    }
    // newton[k] = Δ^k p(x0); coefficients in the basis C(x - x0, k) are these
    // values, and Δ^k p(x0) / k! is an integer for an integer polynomial.
    let mut fact = BigInt::one();
    let mut c = Vec::with_capacity(n);
    for (k, d) in newton.iter().enumerate() {
        if k > 0 {
            fact *= k;
        }
        let (q, r) = d.div_rem(&fact);
        debug_assert!(r.is_zero(), "values do not come from an integer polynomial");
        c.push(q);
    }
    let mut acc = Poly::constant(c[n - 1].clone());
    for k in (0..n - 1).rev() {
        acc = acc.mul(&Poly::from_i64(&[-(x0 + k as i64), 1]));
        acc = acc.add(&Poly::constant(c[k].clone()));
    }
    acc
}
