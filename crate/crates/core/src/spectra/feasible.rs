//! Necessary conditions on three-eigenvalue spectra and the bounds built on them.

use super::{standard_equations_check, Spectrum};
use crate::algebraic::AlgebraicNumber;
use crate::error::SpectrumError;
use crate::identities::det_mod4_admissible;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterResult {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Existence {
    Exists,
    DoesNotExist,
    Unknown,
}

/// A candidate spectrum `{[λ0]^(n-d), [μ]^m, [ν]^(d-m)}` with integer values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleSpectrum {
    pub n: usize,
    pub d: usize,
    pub lambda0: i64,
    pub mu: i64,
    pub m: usize,
    pub nu: i64,
    pub filters: Vec<FilterResult>,
}

impl FeasibleSpectrum {
    pub fn new(n: usize, d: usize, lambda0: i64, mu: i64, m: usize, nu: i64) -> Self {
        let mut fs = FeasibleSpectrum { n, d, lambda0, mu, m, nu, filters: Vec::new() };
        let spec = fs.spectrum();
        fs.filters.push(FilterResult { name: "standard_equations", pass: standard_equations_check(&spec) });
        fs.filters.extend(congruence_filters(&spec));
        let bound = theorem_3g_bound(n, d, lambda0, mu, m);
        fs.filters.push(FilterResult {
            name: "cauchy_schwarz_equality",
            pass: bound.is_ok_and(|b| b.comparison == Ordering::Equal),
        });
        let g = (n as i64 - 1).abs();
        fs.filters.push(FilterResult { name: "gershgorin", pass: [lambda0, mu, nu].iter().all(|v| v.abs() <= g) });
        fs
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_ints(&[(self.lambda0, self.n - self.d), (self.mu, self.m), (self.nu, self.d - self.m)])
    }

    pub fn feasible(&self) -> bool {
        self.filters.iter().all(|f| f.pass)
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

/// Elementary symmetric functions of a three-point spectrum, exact over the integers.
fn symmetric_functions(spec: &Spectrum) -> Option<(BigInt, BigInt, BigInt)> {
    let f = spec.factors().ok()?;
    match (f.ints.as_slice(), f.quads.as_slice()) {
        ([(a, _), (b, _), (c, _)], []) => {
            let (a, b, c) = (BigInt::from(*a), BigInt::from(*b), BigInt::from(*c));
            Some((&a + &b + &c, &a * &b + &b * &c + &c * &a, a * b * c))
        }
        ([(a, _)], [(t, nn, _)]) => {
            let (a, t, nn) = (BigInt::from(*a), BigInt::from(*t), BigInt::from(*nn));
            Some((&a + &t, &a * &t + &nn, a * nn))
        }
        _ => None,
    }
}

fn congruent(a: &BigInt, b: &BigInt, m: i64) -> bool {
    (a - b).mod_floor(&BigInt::from(m)).is_zero()
}

/// Named necessary conditions for a spectrum with exactly three distinct eigenvalues.
/// Filters that do not apply to the given spectrum pass vacuously.
pub fn congruence_filters(spec: &Spectrum) -> Vec<FilterResult> {
    let n = spec.order();
    let nb = BigInt::from(n);
    let mut out = Vec::new();
    let three = spec.distinct() == 3;
    let sym = if three { symmetric_functions(spec) } else { None };
    let (a, b, c) = match &sym {
        Some((e1, e2, e3)) => {
            let a = congruent(&((&nb - 1) * e1 + e3), &(&nb * &nb + &nb + 2), 4);
            let b = congruent(&((&nb - 2) * e1 + e2), &(&nb * &nb + &nb + 1), 4);
            let c = congruent(e2, &BigInt::from(1), 2);
            (a, b, c)
        }
        None => (!three, !three, !three),
    };
    out.push(FilterResult { name: "euler_congruence_a", pass: a });
    out.push(FilterResult { name: "euler_congruence_b", pass: b });
    out.push(FilterResult { name: "euler_congruence_c", pass: c });
    out.push(FilterResult { name: "det_mod4", pass: spec.det().is_ok_and(|d| det_mod4_admissible(&d, n)) });

    let mults: Vec<usize> = spec.pairs().iter().map(|p| p.1).collect();
    let all_equal = three && mults.iter().all(|&m| m == mults[0]);
    let two_equal = three && !all_equal && (mults[0] == mults[1] || mults[1] == mults[2] || mults[0] == mults[2]);
    out.push(FilterResult { name: "unequal_multiplicities", pass: !all_equal });
    out.push(FilterResult { name: "paired_multiplicity_order", pass: !(two_equal && n % 4 == 3) });
    out.push(FilterResult {
        name: "admissible_order",
        pass: !three || (n >= 3 && n != 4 && !(is_prime(n) && n % 4 == 3)),
    });
    // An even integer eigenvalue of a Seidel matrix is simple: S - λI ≡ J + I (mod 2).
    let even_simple = spec.pairs().iter().all(|&(x, m)| match x {
        AlgebraicNumber::Int(v) => v % 2 != 0 || m == 1,
        _ => true,
    });
    out.push(FilterResult { name: "even_eigenvalue_simple", pass: even_simple });
    out
}

/// Both sides of the Cauchy-Schwarz bound on a second eigenvalue, squared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquaredComparison {
    #[serde(serialize_with = "ser_rational")]
    pub lhs_sq: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs_sq: BigRational,
    #[serde(serialize_with = "ser_ordering")]
    pub comparison: Ordering,
}

pub(crate) fn ser_rational<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_ordering<S: serde::Serializer>(v: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match v {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

fn frac(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// `|μ + λ0(n-d)/d| ≤ √(n(d(n-1) - λ0²(n-d)))/d · √((d-m)/m)`, compared on squares.
/// Equality means at most three distinct eigenvalues.
pub fn theorem_3g_bound(n: usize, d: usize, lambda0: i64, mu: i64, m: usize) -> Result<SquaredComparison, SpectrumError> {
    if n < 2 || m == 0 || m > d || d == 0 {
        return Err(SpectrumError::PreconditionFails(format!("need n ≥ 2 and 1 ≤ m ≤ d, got n={n}, d={d}, m={m}")));
    }
    let (n, d, m, l, mu) = (BigInt::from(n), BigInt::from(d), BigInt::from(m), BigInt::from(lambda0), BigInt::from(mu));
    let radicand: BigInt = &n * (&d * (&n - 1u32) - &l * &l * (&n - &d));
    if radicand.is_negative() {
        return Err(SpectrumError::NegativeRadicand);
    }
    let lhs = frac(&d * &mu + &l * (&n - &d), d.clone());
    let lhs_sq = &lhs * &lhs;
    let rhs_sq = frac(radicand * (&d - &m), &d * &d * &m);
    let comparison = lhs_sq.cmp(&rhs_sq);
    Ok(SquaredComparison { lhs_sq, rhs_sq, comparison })
}

/// Eigenvalues `λ0 < ν` forced when `μ` has multiplicity `2d - n` and the other two
/// share multiplicity `n - d`, plus the two divisibility conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualMultiplicitySolution {
    pub lambda0: String,
    pub nu: String,
    pub values: Option<(AlgebraicNumber, AlgebraicNumber)>,
    pub trace_divisible: bool,
    pub norm_divisible: bool,
}

impl EqualMultiplicitySolution {
    pub fn feasible(&self) -> bool {
        self.values.is_some_and(|(a, b)| a.is_algebraic_integer() && b.is_algebraic_integer())
            && self.trace_divisible
            && self.norm_divisible
    }
}

pub fn equal_multiplicity_solver(n: usize, d: usize, mu: i64) -> Result<EqualMultiplicitySolution, SpectrumError> {
    if 2 * d < n + 1 || d + 1 > n {
        return Err(SpectrumError::PreconditionFails(format!("need (n+1)/2 ≤ d ≤ n-1, got n={n}, d={d}")));
    }
    let (ni, di) = (n as i64, d as i64);
    let disc = ni * (2 * (ni - 1) * (ni - di) + (ni - 2 * di) * mu * mu);
    if disc < 0 {
        return Err(SpectrumError::NegativeDiscriminant);
    }
    let p = (ni - 2 * di) * mu;
    let r = 2 * (ni - di);
    let values = match (AlgebraicNumber::surd(p, -1, r, disc), AlgebraicNumber::surd(p, 1, r, disc)) {
        (Ok(a), Ok(b)) => Some((a, b)),
        _ => None,
    };
    let show = |sign: &str| format!("({p}{sign}sqrt({disc}))/{r}");
    let q = ni - di;
    let even = if mu % 2 == 0 { 2 } else { 0 };
    // n(n-1)/2 + (1 + (-1)^μ) dμ/4, kept integral: (2n(n-1) + 2·even·dμ/2) / 4.
    let norm_term = 2 * ni * (ni - 1) + even * di * mu;
    Ok(EqualMultiplicitySolution {
        lambda0: values.map_or_else(|| show("-"), |v| v.0.to_string()),
        nu: values.map_or_else(|| show("+"), |v| v.1.to_string()),
        values,
        trace_divisible: (di * mu).rem_euclid(q) == 0,
        norm_divisible: norm_term % 4 == 0 && (norm_term / 4).rem_euclid(q) == 0,
    })
}

/// The lower bound on `|μ + λ0(n-d)/d|` from AM-GM on `λ_i - μ`, with the forced
/// spectrum in the equality case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaintnonBound {
    #[serde(flatten)]
    pub sides: SquaredComparison,
    /// `(n-d)λ0 + dμ + d - m`, twice the multiplicity of `μ - 1` on equality.
    pub w_twice: i64,
    pub forced: Option<Spectrum>,
}

impl MaintnonBound {
    /// The inequality fails, so no matrix with these parameters exists.
    pub fn violated(&self) -> bool {
        self.sides.comparison == Ordering::Less
    }

    pub fn equality(&self) -> bool {
        self.sides.comparison == Ordering::Equal
    }
}

pub fn maintnon_bound(n: usize, d: usize, lambda0: i64, mu: i64, m: usize) -> Result<MaintnonBound, SpectrumError> {
    if d == 0 || d >= n || mu == lambda0 {
        return Err(SpectrumError::PreconditionFails(format!("need 1 ≤ d < n and μ ≠ λ0, got n={n}, d={d}")));
    }
    let (nb, db, mb, l, mub) = (BigInt::from(n), BigInt::from(d), BigInt::from(m), BigInt::from(lambda0), BigInt::from(mu));
    // λ0 ≤ -√(d(n²-n+m-d)/(n²-dn))
    let need = &db * (&nb * &nb - &nb + &mb - &db);
    let have = &l * &l * (&nb * &nb - &db * &nb);
    if lambda0 >= 0 || have < need {
        return Err(SpectrumError::PreconditionFails(format!(
            "λ0 = {lambda0} exceeds -sqrt({need}/{})",
            &nb * &nb - &db * &nb
        )));
    }
    let lhs = frac(&db * &mub + &l * (&nb - &db), db.clone());
    let lhs_sq = &lhs * &lhs;
    let rad: BigInt = &db * &db - &db * (&mb + &nb * (&l * &l + &nb - 1u32)) + &l * &l * &nb * &nb;
    let rhs_sq = frac(rad, &db * &db);
    let comparison = lhs_sq.cmp(&rhs_sq);
    let w_twice = (n as i64 - d as i64) * lambda0 + d as i64 * mu + d as i64 - m as i64;
    let forced = (comparison == Ordering::Equal && w_twice >= 0 && w_twice % 2 == 0 && (w_twice / 2) as usize + m <= d)
        .then(|| {
            let w = (w_twice / 2) as usize;
            Spectrum::from_ints(&[(lambda0, n - d), (mu - 1, w), (mu, m), (mu + 1, d - m - w)])
        })
        .filter(standard_equations_check);
    Ok(MaintnonBound { sides: SquaredComparison { lhs_sq, rhs_sq, comparison }, w_twice, forced })
}

/// The only order compatible with equality above when `3 ≤ d ≤ λ0² - 2`.
pub fn stupid_remark_n(d: usize, lambda0: i64) -> Result<usize, SpectrumError> {
    let l2 = lambda0 * lambda0;
    let di = d as i64;
    if di < 3 || di > l2 - 2 {
        return Err(SpectrumError::PreconditionFails(format!("need 3 ≤ d ≤ λ0²-2, got d={d}, λ0={lambda0}")));
    }
    Ok((di * (l2 - 1)).div_euclid(l2 - di) as usize)
}

/// The relative bound `⌊d(λ0² - 1)/(λ0² - d)⌋`, when `λ0² > d`.
pub fn relative_bound_floor(d: usize, lambda0: i64) -> Option<usize> {
    let (l2, di) = (lambda0 * lambda0, d as i64);
    (l2 > di).then(|| (di * (l2 - 1)).div_euclid(l2 - di) as usize)
}

/// Every integral three-eigenvalue spectrum with smallest eigenvalue `λ0` of
/// multiplicity `n - d`, for `d` in range and `n` from the target up to the relative
/// bound, that survives all filters. Sorted by `(d, n, μ)`.
pub fn enumerate_feasible_spectra(d_range: RangeInclusive<usize>, lambda0: i64, targets: &BTreeMap<usize, usize>) -> Vec<FeasibleSpectrum> {
    let mut out = Vec::new();
    for d in d_range {
        let (Some(&lo), Some(hi)) = (targets.get(&d), relative_bound_floor(d, lambda0)) else {
            continue;
        };
        for n in lo.max(d + 1)..=hi {
            out.extend(candidates(n, d, lambda0).into_iter().filter(FeasibleSpectrum::feasible));
        }
    }
    out.sort_by_key(|f| (f.d, f.n, f.mu));
    out
}

/// Integral solutions of the standard equations with `λ0 < μ < ν ≤ n - 1`.
pub fn candidates(n: usize, d: usize, lambda0: i64) -> Vec<FeasibleSpectrum> {
    let mut out = Vec::new();
    if d < 2 || d >= n {
        return out;
    }
    let (ni, a) = (n as i64, (n - d) as i64);
    for m in 1..d {
        let rest = (d - m) as i64;
        for mu in lambda0 + 1..ni {
            let num = -(a * lambda0 + m as i64 * mu);
            if num % rest != 0 {
                continue;
            }
            let nu = num / rest;
            if nu <= mu || nu > ni - 1 {
                continue;
            }
            if a * lambda0 * lambda0 + m as i64 * mu * mu + rest * nu * nu != ni * (ni - 1) {
                continue;
            }
            out.push(FeasibleSpectrum::new(n, d, lambda0, mu, m, nu));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_on_table_rows() {
        let fs = FeasibleSpectrum::new(30, 14, -5, 5, 9, 7);
        assert!(fs.feasible(), "{:?}", fs.filters);
        let fs = FeasibleSpectrum::new(40, 16, -5, 7, 15, 15);
        assert!(fs.feasible(), "{:?}", fs.filters);
    }

    #[test]
    fn order_seven_is_never_feasible() {
        for d in 2..7 {
            for c in candidates(7, d, -5).into_iter().chain(candidates(7, d, -3)).chain(candidates(7, d, -1)) {
                assert!(!c.feasible());
            }
        }
        let spec = Spectrum::from_ints(&[(-3, 2), (-1, 1), (2, 4)]);
        let f = congruence_filters(&spec);
        assert!(!f.iter().find(|r| r.name == "admissible_order").unwrap().pass);
    }

    #[test]
    fn equal_multiplicities_rejected() {
        // n = 9 with multiplicities 3, 3, 3: λ + μ + ν = 0 and e2 = -12.
        let spec = Spectrum::from_ints(&[(-4, 3), (1, 3), (3, 3)]);
        let f = congruence_filters(&spec);
        assert!(!f.iter().find(|r| r.name == "unequal_multiplicities").unwrap().pass);
    }

    #[test]
    fn surd_spectra_use_symmetric_functions() {
        let ico: Spectrum = "{[-1-2*sqrt(5)]^3,[1]^6,[-1+2*sqrt(5)]^3}".parse().unwrap();
        assert!(congruence_filters(&ico).iter().all(|f| f.pass));
        let ten: Spectrum = "{[-3]^4,[2-sqrt(5)]^3,[2+sqrt(5)]^3}".parse().unwrap();
        assert!(congruence_filters(&ten).iter().all(|f| f.pass));
    }

    #[test]
    fn bound_3g_examples() {
        let b = theorem_3g_bound(40, 16, -5, 7, 15).unwrap();
        assert_eq!(b.lhs_sq, frac(1.into(), 4.into()));
        assert_eq!(b.comparison, Ordering::Equal);
        assert_eq!(theorem_3g_bound(30, 14, -5, 5, 9).unwrap().comparison, Ordering::Equal);
        // m = d: μ forced to -λ0(n-d)/d, here n = 10, d = 5, λ0 = -3.
        let b = theorem_3g_bound(10, 5, -3, 3, 5).unwrap();
        assert!(b.lhs_sq.is_zero() && b.rhs_sq.is_zero());
        assert_eq!(theorem_3g_bound(40, 16, -9, 7, 15), Err(SpectrumError::NegativeRadicand));
    }

    #[test]
    fn bound_3g_symmetric_in_swapped_eigenvalues() {
        // {[-5]^14, [3]^7, [7]^7}
        let a = theorem_3g_bound(28, 14, -5, 3, 7).unwrap();
        let b = theorem_3g_bound(28, 14, -5, 7, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn equal_multiplicity_examples() {
        let s = equal_multiplicity_solver(9, 5, 0).unwrap();
        assert_eq!(s.values, Some((AlgebraicNumber::Int(-3), AlgebraicNumber::Int(3))));
        assert!(s.feasible());
        let s = equal_multiplicity_solver(12, 9, 1).unwrap();
        assert_eq!(s.lambda0, "-1-2*sqrt(5)");
        assert!(s.feasible());
        let s = equal_multiplicity_solver(10, 7, -3).unwrap();
        assert_eq!((s.lambda0.as_str(), s.nu.as_str()), ("2-sqrt(5)", "2+sqrt(5)"));
        assert!(s.feasible());
        assert!(matches!(equal_multiplicity_solver(9, 4, 0), Err(SpectrumError::PreconditionFails(_))));
        assert_eq!(equal_multiplicity_solver(12, 11, 11), Err(SpectrumError::NegativeDiscriminant));
    }

    #[test]
    fn maintnon_examples() {
        let b = maintnon_bound(22, 12, -5, 4, 0).unwrap();
        assert!(b.violated());
        let b = maintnon_bound(30, 14, -5, 6, 0).unwrap();
        assert!(b.equality());
        assert_eq!(b.forced, Some(Spectrum::from_ints(&[(-5, 16), (5, 9), (7, 5)])));
        let b = maintnon_bound(61, 18, -5, 12, 1).unwrap();
        assert_eq!(b.forced, Some(Spectrum::from_ints(&[(-5, 43), (11, 9), (12, 1), (13, 8)])));
        assert!(matches!(maintnon_bound(30, 14, -3, 6, 0), Err(SpectrumError::PreconditionFails(_))));
    }

    #[test]
    fn admissible_order_examples() {
        assert_eq!(stupid_remark_n(14, -5), Ok(30));
        assert_eq!(stupid_remark_n(16, -5), Ok(42));
        assert_eq!(stupid_remark_n(23, -5), Ok(276));
        assert!(stupid_remark_n(24, -5).is_err());
        assert!(stupid_remark_n(2, -5).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        let t: BTreeMap<usize, usize> = [(14, 28), (20, 90), (2, 3)].into_iter().collect();
        let rows: Vec<String> = enumerate_feasible_spectra(14..=14, -5, &t).iter().map(|f| f.spectrum().to_string()).collect();
        assert_eq!(rows, vec!["{[-5]^14,[3]^7,[7]^7}", "{[-5]^16,[5]^9,[7]^5}"]);
        let rows: Vec<String> = enumerate_feasible_spectra(20..=20, -5, &t).iter().map(|f| f.spectrum().to_string()).collect();
        assert_eq!(rows, vec!["{[-5]^70,[13]^5,[19]^15}", "{[-5]^75,[14]^1,[19]^19}"]);
        assert!(enumerate_feasible_spectra(2..=2, -5, &t).is_empty());
    }
}
