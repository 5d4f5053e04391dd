//! Spectra of Seidel matrices: representation, certification and the
//! three-eigenvalue feasibility machinery.

mod certify;
mod feasible;

pub use certify::*;
pub use feasible::*;

use crate::algebraic::AlgebraicNumber;
use crate::error::SpectrumError;
use crate::matrix::SeidelMatrix;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A multiset of eigenvalues, sorted by value, with exact certification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pairs: Vec<(AlgebraicNumber, usize)>,
    pub certified: bool,
}

impl Spectrum {
    pub fn new(pairs: impl IntoIterator<Item = (AlgebraicNumber, usize)>) -> Self {
        let mut v: Vec<(AlgebraicNumber, usize)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(AlgebraicNumber, usize)> = Vec::with_capacity(v.len());
        for (x, m) in v {
            match merged.last_mut() {
                Some(last) if last.0 == x => last.1 += m,
                _ => merged.push((x, m)),
            }
        }
        Spectrum { pairs: merged, certified: false }
    }

    pub fn from_ints(pairs: &[(i64, usize)]) -> Self {
        Self::new(pairs.iter().map(|&(v, m)| (AlgebraicNumber::Int(v), m)))
    }

    pub fn pairs(&self) -> &[(AlgebraicNumber, usize)] {
        &self.pairs
    }

    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn multiplicity(&self, x: &AlgebraicNumber) -> usize {
        self.pairs.iter().find(|p| p.0 == *x).map_or(0, |p| p.1)
    }

    pub fn is_integral(&self) -> bool {
        self.pairs.iter().all(|p| p.0.is_int())
    }

    /// The integer pairs, when every eigenvalue is an integer.
    pub fn int_pairs(&self) -> Option<Vec<(i64, usize)>> {
        self.pairs.iter().map(|&(x, m)| x.as_int().map(|v| (v, m))).collect()
    }

    pub fn smallest(&self) -> Option<AlgebraicNumber> {
        self.pairs.first().map(|p| p.0)
    }

    pub fn largest(&self) -> Option<AlgebraicNumber> {
        self.pairs.last().map(|p| p.0)
    }

    /// The eigenvalues listed with multiplicity, ascending.
    pub fn expanded(&self) -> Vec<AlgebraicNumber> {
        self.pairs.iter().flat_map(|&(x, m)| std::iter::repeat(x).take(m)).collect()
    }

    /// Integer eigenvalues plus one `(t, N, m)` entry per conjugate surd pair,
    /// the pair being the roots of `x^2 - t x + N`.
    pub fn factors(&self) -> Result<Factors, SpectrumError> {
        let mut ints = Vec::new();
        let mut quads = Vec::new();
        for &(x, m) in &self.pairs {
            match x {
                AlgebraicNumber::Int(v) => ints.push((v, m)),
                AlgebraicNumber::Surd { q, .. } => {
                    let (t, n) = x.trace_norm().ok_or_else(|| SpectrumError::NotAlgebraicInteger(x.to_string()))?;
                    let conj = x.conjugate();
                    if self.multiplicity(&conj) != m {
                        return Err(SpectrumError::UnpairedSurd(x.to_string()));
                    }
                    if q > 0 {
                        quads.push((t, n, m));
                    }
                }
            }
        }
        Ok(Factors { ints, quads })
    }

    /// `Σ m λ` and `Σ m λ^2`, exact.
    pub fn power_sums(&self) -> Result<(BigInt, BigInt), SpectrumError> {
        let f = self.factors()?;
        let mut s1 = BigInt::from(0);
        let mut s2 = BigInt::from(0);
        for &(v, m) in &f.ints {
            s1 += BigInt::from(v) * m;
            s2 += BigInt::from(v) * v * m;
        }
        for &(t, n, m) in &f.quads {
            s1 += BigInt::from(t) * m;
            s2 += (BigInt::from(t) * t - BigInt::from(2) * n) * m;
        }
        Ok((s1, s2))
    }

    /// Product of eigenvalues with multiplicity.
    pub fn det(&self) -> Result<BigInt, SpectrumError> {
        let f = self.factors()?;
        let mut d = BigInt::one();
        for &(v, m) in &f.ints {
            d *= BigInt::from(v).pow(m as u32);
        }
        for &(_, n, m) in &f.quads {
            d *= BigInt::from(n).pow(m as u32);
        }
        Ok(d)
    }

    /// The spectrum of `-S`.
    pub fn negated(&self) -> Spectrum {
        Self::new(self.pairs.iter().map(|&(x, m)| (negate(x), m)))
    }
}

fn negate(x: AlgebraicNumber) -> AlgebraicNumber {
    match x {
        AlgebraicNumber::Int(v) => AlgebraicNumber::Int(-v),
        AlgebraicNumber::Surd { p, q, r, d } => AlgebraicNumber::Surd { p: -p, q: -q, r, d },
    }
}

/// Minimal-polynomial factors of a spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factors {
    pub ints: Vec<(i64, usize)>,
    pub quads: Vec<(i64, i64, usize)>,
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{x}]^{m}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Spectrum {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| SpectrumError::Parse(format!("{why} in {s:?}"));
        let body = s.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(|| bad("missing braces"))?;
        let mut pairs = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            // The value may contain brackets only inside sqrt(...), so find the
            // closing ']' that is followed by '^'.
            let close = inner.find("]^").ok_or_else(|| bad("expected ']^'"))?;
            let value: AlgebraicNumber = inner[..close].parse()?;
            let after = &inner[close + 2..];
            let end = after.find(',').unwrap_or(after.len());
            let m: usize = after[..end].parse().map_err(|_| bad("bad multiplicity"))?;
            pairs.push((value, m));
            rest = after[end..].strip_prefix(',').unwrap_or(&after[end..]);
        }
        Ok(Spectrum::new(pairs))
    }
}

/// Trace and trace-of-square identities for a spectrum of order `n`.
pub fn standard_equations_check(spec: &Spectrum) -> bool {
    let n = spec.order() as i64;
    match spec.power_sums() {
        Ok((s1, s2)) => s1 == BigInt::from(0) && s2 == BigInt::from(n * (n - 1)),
        Err(_) => false,
    }
}

/// Cauchy interlacing: `λ_i ≤ μ_i ≤ λ_{n-m+i}` for the sorted eigenvalues.
pub fn interlacing_check(outer: &Spectrum, inner: &Spectrum) -> bool {
    let (a, b) = (outer.expanded(), inner.expanded());
    let (n, m) = (a.len(), b.len());
    if m == 0 || m > n {
        return false;
    }
    (0..m).all(|i| a[i] <= b[i] && b[i] <= a[n - m + i])
}

/// Predicted spectrum after deleting a `c`-clique from a two-eigenvalue Seidel matrix
/// with spectrum `{[λ0]^mult0, [λ1]^(n - mult0)}`.
///
/// Returns the spectrum and whether `c ≤ λ1 + 1` holds (a clique can only be
/// that large when it does).
pub fn two_ev_submatrix_spectrum(
    lambda0: i64,
    lambda1: i64,
    n: usize,
    mult0: usize,
    c: usize,
) -> Result<(Spectrum, bool), SpectrumError> {
    let max = mult0.min(n.saturating_sub(mult0));
    if c == 0 || c > max {
        return Err(SpectrumError::BadCliqueSize { c, max });
    }
    let s = lambda0 + lambda1 + 1;
    let spec = Spectrum::from_ints(&[
        (lambda0, mult0 - c),
        (lambda1, n - mult0 - c),
        (s - c as i64, 1),
        (s, c - 1),
    ]);
    Ok((spec, c as i64 <= lambda1 + 1))
}

/// Checks that `rows` induce `J - I` up to switching and returns the principal
/// submatrix on the remaining vertices.
pub fn delete_clique(s: &SeidelMatrix, rows: &[usize]) -> Result<SeidelMatrix, SpectrumError> {
    let n = s.n();
    for &r in rows {
        if r >= n {
            return Err(crate::error::MatrixError::IndexOutOfRange { index: r, order: n }.into());
        }
    }
    if let Some(&r0) = rows.first() {
        for (k, &a) in rows.iter().enumerate() {
            for &b in &rows[k + 1..] {
                if a != r0 && b != r0 && s.is_neg(r0, a) ^ s.is_neg(r0, b) ^ s.is_neg(a, b) {
                    return Err(SpectrumError::NotAClique(a, b));
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|v| !rows.contains(v)).collect();
    Ok(s.principal_submatrix(&keep))
}

/// A set of `c` vertices inducing `J - I` after switching, if one exists.
/// Exhaustive branch and bound on one-word rows (order ≤ 64).
pub fn find_switching_clique(s: &SeidelMatrix, c: usize) -> Option<Vec<usize>> {
    let n = s.n();
    assert!(n <= 64, "clique search needs order at most 64");
    if c == 0 {
        return Some(Vec::new());
    }
    if c > n {
        return None;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // Switching so that row r is all +1, a clique through r is a clique of the
    // "+" graph among the other vertices.
    for r in 0..n {
        let flip = s.row64(r);
        let plus: Vec<u64> = (0..n)
            .map(|i| {
                let own = if flip >> i & 1 == 1 { full } else { 0 };
                let row = s.row64(i) ^ own ^ flip;
                // `row` has bit j set iff the switched entry (i, j) is −1.
                !row & full & !(1u64 << i)
            })
            .collect();
        let later = full & !((2u64 << r) - 1);
        let mut chosen = vec![r];
        if grow(&plus, later, c, &mut chosen) {
            return Some(chosen);
        }
    }
    None
}

fn grow(plus: &[u64], cand: u64, c: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == c {
        return true;
    }
    if (cand.count_ones() as usize) + chosen.len() < c {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        if (rest.count_ones() as usize) + chosen.len() < c {
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        chosen.push(v);
        if grow(plus, rest & plus[v], c, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
