//! One-line-at-a-time extension of equiangular systems on the Seidel side.
//!
//! With `M = S - λ0 I` positive semidefinite of rank `r`, a border column `v`
//! keeps the extension PSD iff `v` lies in the column space of `M` and the
//! Schur complement `-λ0 - v^T M^+ v` is nonnegative. Both are tested exactly
//! against a nonsingular principal block `M_BB`, whose rows span the row space.

use crate::classify::{canonical_form_with_limit, switching_class_reps, MAX_ORDER};
use crate::error::{ClassifyError, ConstructionError};
use crate::linalg::{independent_rows, psd_rank, scaled_inverse};
use crate::matrix::SeidelMatrix;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, Default)]
pub struct ExtendOptions {
    /// Reject extensions whose embedding dimension exceeds this.
    pub max_dimension: Option<usize>,
}

// Exact test data for one matrix.
struct Border {
    lambda0: i64,
    basis: Vec<usize>,
    others: Vec<usize>,
    // rows of M restricted to basis columns
    m_rows: Vec<Vec<i128>>,
    adj: Vec<Vec<i128>>,
    det: i128,
    rank: usize,
}

impl Border {
    fn new(s: &SeidelMatrix, lambda0: i64) -> Option<Self> {
        let m = s.shifted(lambda0);
        let rank = psd_rank(&m)?;
        let basis = independent_rows(&m);
        debug_assert_eq!(basis.len(), rank);
        let (adj, det) = scaled_inverse(&m.principal_submatrix(&basis))?;
        let det = det.to_i128()?;
        let adj: Vec<Vec<i128>> = (0..rank).map(|i| (0..rank).map(|j| adj.get(i, j).to_i128()).collect()).collect::<Option<_>>()?;
        let big = adj.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(1).max(det.unsigned_abs());
        // bounds every intermediate below: |v_B| = 1, |M| <= |λ0| + 1, r <= 64
        if big.checked_mul(64 * 64 * (lambda0.unsigned_abs() as u128 + 1) * 2)?.leading_zeros() < 2 {
            return None;
        }
        let n = s.n();
        let others = (0..n).filter(|i| !basis.contains(i)).collect();
        let m_rows = (0..n).map(|i| basis.iter().map(|&j| m.get(i, j).to_i128().expect("small")).collect()).collect();
        Some(Border { lambda0, basis, others, m_rows, adj, det, rank })
    }

    /// New embedding dimension if the border column `v` (±1) keeps PSD.
    fn accepts(&self, v: &[i64]) -> Option<usize> {
        let vb: Vec<i128> = self.basis.iter().map(|&i| v[i] as i128).collect();
        // y = det * M_BB^{-1} v_B
        let y: Vec<i128> = self.adj.iter().map(|row| row.iter().zip(&vb).map(|(a, b)| a * b).sum()).collect();
        for &i in &self.others {
            let lhs: i128 = self.m_rows[i].iter().zip(&y).map(|(a, b)| a * b).sum();
            if lhs != self.det * v[i] as i128 {
                return None;
            }
        }
        let quad: i128 = vb.iter().zip(&y).map(|(a, b)| a * b).sum();
        let schur = -(self.lambda0 as i128) * self.det - quad;
        match schur.signum() {
            -1 => None,
            0 => Some(self.rank),
            _ => Some(self.rank + 1),
        }
    }
}

/// All one-vertex extensions (up to switching) keeping the smallest eigenvalue at least `λ0`.
pub fn extend_once(s: &SeidelMatrix, lambda0: i64, opts: ExtendOptions) -> Result<Vec<SeidelMatrix>, ConstructionError> {
    let n = s.n();
    if n + 1 > MAX_ORDER {
        return Err(ClassifyError::OrderTooLarge { order: n + 1, limit: MAX_ORDER }.into());
    }
    if psd_rank(&s.shifted(lambda0)).is_none() {
        return Err(crate::error::SpectrumError::NotSmallest(lambda0).into());
    }
    let fast = Border::new(s, lambda0);
    let free = n.saturating_sub(1);
    let found: BTreeSet<Vec<u64>> = (0..1u64 << free)
        .into_par_iter()
        .filter_map(|bits| {
            let v: Vec<i64> = (0..n).map(|i| if i > 0 && bits >> (i - 1) & 1 == 1 { -1 } else { 1 }).collect();
            let dim = match &fast {
                Some(b) => b.accepts(&v)?,
                None => psd_rank(&s.extended(&v).shifted(lambda0))?,
            };
            if opts.max_dimension.is_some_and(|d| dim > d) {
                return None;
            }
            let t = s.extended(&v);
            let c = canonical_form_with_limit(&t, MAX_ORDER).expect("order checked");
            Some((0..t.n()).map(|i| c.row64(i)).collect())
        })
        .collect();
    Ok(found.into_iter().map(|rows| SeidelMatrix::from_rows64(n + 1, &rows)).collect())
}

// extend_once returns canonical forms, so equal classes are equal matrices
fn extend_level(level: &[SeidelMatrix], lambda0: i64, opts: ExtendOptions) -> Result<Vec<SeidelMatrix>, ConstructionError> {
    let mut next = BTreeSet::new();
    for t in level {
        for e in extend_once(t, lambda0, opts)? {
            next.insert((0..e.n()).map(|i| e.row64(i)).collect::<Vec<u64>>());
        }
    }
    let n = level.first().map_or(0, |s| s.n() + 1);
    Ok(next.into_iter().map(|rows| SeidelMatrix::from_rows64(n, &rows)).collect())
}

/// Extensions by `count` lines, deduplicated by switching class at each step.
pub fn extend_system(s: &SeidelMatrix, lambda0: i64, count: usize, opts: ExtendOptions) -> Result<Vec<SeidelMatrix>, ConstructionError> {
    let mut level = vec![s.clone()];
    for _ in 0..count {
        level = extend_level(&level, lambda0, opts)?;
        if level.is_empty() {
            break;
        }
    }
    Ok(level)
}

/// All switching classes of order `n` with smallest eigenvalue at least `λ0`
/// and embedding dimension at most `d`, grown from the full census at order
/// `min(n, d, 10)`.
pub fn systems_in_dimension(n: usize, lambda0: i64, d: usize) -> Result<Vec<SeidelMatrix>, ConstructionError> {
    let start = n.min(d).min(10);
    let mut level: Vec<SeidelMatrix> = switching_class_reps(start)?
        .into_par_iter()
        .filter(|s| matches!(psd_rank(&s.shifted(lambda0)), Some(r) if r <= d))
        .collect();
    let opts = ExtendOptions { max_dimension: Some(d) };
    for _ in start..n {
        level = extend_level(&level, lambda0, opts)?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::min_eigenvalue_multiplicity;

    #[test]
    fn all_plus_extends_only_to_all_plus() {
        let out = extend_system(&SeidelMatrix::all_plus(3), -1, 1, ExtendOptions::default()).unwrap();
        assert_eq!(out, vec![SeidelMatrix::all_plus(4)]);
    }

    #[test]
    fn border_test_matches_direct_psd() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.gen_range(3..8);
            let s = SeidelMatrix::from_fn(n, |_, _| rng.gen());
            let lambda0 = rng.gen_range(-5..=-2);
            let Some(b) = Border::new(&s, lambda0) else { continue };
            for bits in 0..1u64 << n {
                let v: Vec<i64> = (0..n).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect();
                let direct = psd_rank(&s.extended(&v).shifted(lambda0));
                assert_eq!(b.accepts(&v), direct);
            }
        }
    }

    #[test]
    fn counts_match_census_at_ten() {
        // order-10 classes with smallest eigenvalue exactly -5, grown from order 9
        let ten = systems_in_dimension(10, -5, 9).unwrap();
        assert_eq!(ten.len(), 306);
        for s in &ten {
            assert!(min_eigenvalue_multiplicity(s, -5).unwrap() <= 9);
        }
    }
}
