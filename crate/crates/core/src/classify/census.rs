//! Per-order census of switching classes.

use super::enumerate::switching_class_reps;
use super::{canonical_unchecked, gamma_nonzero};
use crate::error::ClassifyError;
use crate::linalg::psd_rank;
use crate::matrix::SeidelMatrix;
use crate::spectra::{distinct_eigenvalue_count, energy};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub gamma_nonzero: usize,
    pub self_complementary: usize,
    pub lambda_min_minus5: usize,
    pub three_eigenvalues: usize,
}

impl std::fmt::Display for CensusRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} total, {} gamma, {} self-compl, {} lambda-min-5, {} three-eigenvalue",
            self.total, self.gamma_nonzero, self.self_complementary, self.lambda_min_minus5, self.three_eigenvalues
        )
    }
}

#[derive(Default, Clone, Copy)]
struct Flags {
    gamma: usize,
    selfc: usize,
    minus5: usize,
    three: usize,
}

/// Smallest eigenvalue is exactly -5.
pub fn smallest_eigenvalue_is_minus5(s: &SeidelMatrix) -> bool {
    matches!(psd_rank(&s.shifted(-5)), Some(r) if r < s.n())
}

pub fn census(n: usize) -> Result<CensusRow, ClassifyError> {
    let reps = switching_class_reps(n)?;
    Ok(census_of(n, &reps))
}

/// Census over a precomputed class list.
pub fn census_of(n: usize, reps: &[SeidelMatrix]) -> CensusRow {
    let flags = reps
        .par_iter()
        .map(|s| Flags {
            gamma: gamma_nonzero(s).unwrap_or(false) as usize,
            selfc: (canonical_unchecked(&s.negated()) == *s) as usize,
            minus5: smallest_eigenvalue_is_minus5(s) as usize,
            three: (distinct_eigenvalue_count(s) == 3) as usize,
        })
        .reduce(Flags::default, |a, b| Flags {
            gamma: a.gamma + b.gamma,
            selfc: a.selfc + b.selfc,
            minus5: a.minus5 + b.minus5,
            three: a.three + b.three,
        });
    CensusRow {
        n,
        total: reps.len(),
        gamma_nonzero: flags.gamma,
        self_complementary: flags.selfc,
        lambda_min_minus5: flags.minus5,
        three_eigenvalues: flags.three,
    }
}

/// Energy against `2(n-1)` over every class of one order.
#[derive(Clone, Debug, Serialize)]
pub struct EnergyCensus {
    pub n: usize,
    pub classes: usize,
    pub below_bound: usize,
    pub undecided: usize,
    /// Canonical lines of the classes meeting the bound with equality.
    pub equality: Vec<String>,
}

pub fn energy_census(n: usize) -> Result<EnergyCensus, ClassifyError> {
    let reps = switching_class_reps(n)?;
    Ok(energy_census_of(n, &reps))
}

pub fn energy_census_of(n: usize, reps: &[SeidelMatrix]) -> EnergyCensus {
    let results: Vec<(Option<std::cmp::Ordering>, String)> =
        reps.par_iter().map(|s| (energy(s).versus_bound, s.to_line())).collect();
    let below_bound = results.iter().filter(|r| r.0 == Some(std::cmp::Ordering::Less)).count();
    let undecided = results.iter().filter(|r| r.0.is_none()).count();
    let equality = results.into_iter().filter(|r| r.0 == Some(std::cmp::Ordering::Equal)).map(|r| r.1).collect();
    EnergyCensus { n, classes: reps.len(), below_bound, undecided, equality }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical_form;

    #[test]
    fn census_n6() {
        let row = census(6).unwrap();
        assert_eq!(row.total, 16);
        assert_eq!(row.gamma_nonzero, 2);
        assert_eq!(row.self_complementary, 4);
        assert_eq!(row.lambda_min_minus5, 1);
        assert_eq!(row.three_eigenvalues, 2);
    }

    #[test]
    fn census_n7_has_no_self_complementary_class() {
        let row = census(7).unwrap();
        assert_eq!(row.self_complementary, 0);
        assert_eq!(row.gamma_nonzero, 0);
    }

    #[test]
    fn energy_equality_only_at_all_plus_and_negation() {
        for n in 2..=7 {
            let e = energy_census(n).unwrap();
            assert_eq!(e.below_bound, 0);
            assert_eq!(e.undecided, 0);
            let mut want = vec![
                canonical_form(&SeidelMatrix::all_plus(n)).unwrap().to_line(),
                canonical_form(&SeidelMatrix::all_plus(n).negated()).unwrap().to_line(),
            ];
            want.sort();
            want.dedup();
            let mut got = e.equality.clone();
            got.sort();
            assert_eq!(got, want, "n = {n}");
        }
    }
}
