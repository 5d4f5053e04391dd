//! Exact spectral facts about a concrete Seidel matrix.

use super::Spectrum;
use crate::algebraic::{square_split, AlgebraicNumber, SurdSum};
use crate::error::SpectrumError;
use crate::linalg::{psd_rank, rank_exact, rank_mod_p, IntMatrix, RANK_PRIME};
use crate::matrix::SeidelMatrix;
use crate::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Verifies `claimed` against `s` exactly and returns it marked certified.
///
/// The minimal polynomial of `s` must divide the product of the claimed factors,
/// and each factor's nullity must equal its claimed multiplicity (twice that for
/// a conjugate surd pair).
pub fn certify_spectrum(s: &SeidelMatrix, claimed: &Spectrum) -> Result<Spectrum, SpectrumError> {
    let n = s.n();
    let factors = claimed.factors()?;
    if claimed.order() != n {
        return Err(SpectrumError::OrderMismatch { claimed: claimed.order(), order: n });
    }
    let sm = s.to_int_matrix();
    // (label, factor evaluated at S, multiplicity, roots per factor)
    let mut mats: Vec<(String, IntMatrix, usize, usize)> = Vec::new();
    for &(v, m) in &factors.ints {
        mats.push((v.to_string(), s.shifted(v), m, 1));
    }
    for &(t, norm, m) in &factors.quads {
        let f = sm.mul(&sm).add(&sm.scale(&BigInt::from(-t))).add_identity(&BigInt::from(norm));
        let name = AlgebraicNumber::surd(t, 1, 2, t * t - 4 * norm).map_or_else(|_| format!("x^2-{t}x+{norm}"), |x| x.to_string());
        mats.push((name, f, m, 2));
    }

    let mut product = IntMatrix::identity(n);
    for (_, f, _, _) in &mats {
        product = product.mul(f);
    }
    if !product.is_zero() {
        let culprit = mats.iter().find(|(_, f, _, _)| rank_mod_p(f, RANK_PRIME) == n && rank_exact(f) == n).unwrap_or(&mats[0]);
        return Err(SpectrumError::AnnihilationFails(culprit.0.clone()));
    }

    // With the product vanishing, the rational nullities sum to n. Each is at most
    // the nullity mod p, so agreement mod p for every factor is exact agreement.
    for (name, f, m, per) in &mats {
        if n - rank_mod_p(f, RANK_PRIME) != m * per {
            let actual = n - rank_exact(f);
            if actual != m * per {
                return Err(SpectrumError::MultiplicityMismatch { value: name.clone(), expected: *m, actual: actual / per });
            }
        }
    }

    let (s1, s2) = claimed.power_sums()?;
    assert!(s1.is_zero() && s2 == BigInt::from(n * (n - 1)), "certified spectrum violates the trace identities");
    if claimed.distinct() == 3 {
        assert!(claimed.pairs().iter().any(|p| p.0.is_int()), "three-eigenvalue spectrum without an integer eigenvalue");
    }
    let mut out = claimed.clone();
    out.certified = true;
    Ok(out)
}

/// Integer eigenvalues with multiplicities and the integer-root-free cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerEigenvalues {
    pub roots: Vec<(i64, usize)>,
    pub remainder: Poly,
}

pub fn integer_eigenvalues(s: &SeidelMatrix) -> IntegerEigenvalues {
    let bound = s.n().saturating_sub(1) as i64;
    let (roots, remainder) = s.charpoly().integer_roots(bound);
    IntegerEigenvalues { roots, remainder }
}

/// The embedding dimension `n - mult(λ0)`, after checking that `λ0` is the
/// smallest eigenvalue.
pub fn min_eigenvalue_multiplicity(s: &SeidelMatrix, lambda0: i64) -> Result<usize, SpectrumError> {
    match psd_rank(&s.shifted(lambda0)) {
        None => Err(SpectrumError::NotSmallest(lambda0)),
        Some(r) if r == s.n() => Err(SpectrumError::NotAnEigenvalue(lambda0)),
        Some(r) => Ok(r),
    }
}

/// Number of distinct eigenvalues.
pub fn distinct_eigenvalue_count(s: &SeidelMatrix) -> usize {
    let p = s.charpoly();
    let g = p.gcd(&p.derivative());
    p.degree() - g.degree()
}

/// Splits off the monic quadratic factors `x^2 - t x + N` of a squarefree
/// integer polynomial with only real roots.
pub fn quadratic_factors(f: &Poly) -> (Vec<(i64, i64)>, Poly) {
    let mut rest = f.clone();
    let mut found = Vec::new();
    'outer: loop {
        if rest.degree() < 2 || !(rest.lead() == BigInt::from(1) || rest.lead() == BigInt::from(-1)) {
            break;
        }
        if rest.degree() == 2 {
            let c = rest.scale(&rest.lead());
            if let (Some(b), Some(c0)) = (c.coeff(1).to_i64(), c.coeff(0).to_i64()) {
                found.push((-b, c0));
                rest = Poly::one();
            }
            break;
        }
        let roots: Vec<f64> = rest.isolate_real_roots(40).iter().map(|r| r.hi.to_f64()).collect();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let (t, nn) = ((roots[i] + roots[j]).round(), (roots[i] * roots[j]).round());
                if t.abs() > 1e15 || nn.abs() > 1e15 {
                    continue;
                }
                let q = Poly::from_i64(&[nn as i64, -(t as i64), 1]);
                if let Some(d) = rest.div_exact(&q) {
                    found.push((t as i64, nn as i64));
                    rest = d;
                    continue 'outer;
                }
            }
        }
        break;
    }
    (found, rest)
}

/// The exact spectrum when every eigenvalue is an integer or a quadratic surd.
pub fn exact_spectrum(s: &SeidelMatrix) -> Option<Spectrum> {
    let ie = integer_eigenvalues(s);
    let mut pairs: Vec<(AlgebraicNumber, usize)> = ie.roots.iter().map(|&(v, m)| (AlgebraicNumber::Int(v), m)).collect();
    for (k, f) in ie.remainder.squarefree_decomposition() {
        if f.degree() == 0 {
            continue;
        }
        let (quads, rest) = quadratic_factors(&f);
        if rest.degree() > 0 {
            return None;
        }
        for (t, nn) in quads {
            let disc = t * t - 4 * nn;
            pairs.push((AlgebraicNumber::surd(t, -1, 2, disc).ok()?, k));
            pairs.push((AlgebraicNumber::surd(t, 1, 2, disc).ok()?, k));
        }
    }
    let spec = Spectrum::new(pairs);
    certify_spectrum(s, &spec).ok()
}

/// `Σ|λ|` with certified bounds, and how it compares to `2(n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Energy {
    pub lower: BigRational,
    pub upper: BigRational,
    /// Closed form when every eigenvalue is an integer or a quadratic surd.
    pub exact: Option<SurdSum>,
    /// `Some(order)` against `2(n - 1)`; `None` if refinement could not decide.
    pub versus_bound: Option<Ordering>,
}

impl Energy {
    pub fn meets_bound(&self) -> bool {
        matches!(self.versus_bound, Some(Ordering::Greater | Ordering::Equal))
    }

    pub fn is_equality(&self) -> bool {
        self.versus_bound == Some(Ordering::Equal)
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `Σ|x|` over the roots of `x^2 - t x + N`.
fn quadratic_abs_sum(t: i64, nn: i64, out: &mut SurdSum) {
    if nn >= 0 {
        out.add_rational(rat(t.abs()));
    } else {
        let (f, d) = square_split(t * t - 4 * nn);
        if d == 1 {
            out.add_rational(rat(f));
        } else {
            out.add_surd(rat(f), d);
        }
    }
}

pub fn energy(s: &SeidelMatrix) -> Energy {
    let n = s.n();
    let ie = integer_eigenvalues(s);
    let mut exact = SurdSum::default();
    for &(r, m) in &ie.roots {
        exact.add_rational(rat(r.abs() * m as i64));
    }
    let mut approx: Vec<(usize, Poly)> = Vec::new();
    for (k, f) in ie.remainder.squarefree_decomposition() {
        if f.degree() == 0 {
            continue;
        }
        let (quads, rest) = quadratic_factors(&f);
        for (t, nn) in quads {
            let mut one = SurdSum::default();
            quadratic_abs_sum(t, nn, &mut one);
            exact.add_rational(one.rational * BigInt::from(k));
            for (c, d) in one.terms {
                exact.add_surd(c * BigInt::from(k), d);
            }
        }
        if rest.degree() == 0 {
            continue;
        }
        // Roots of one sign sum to a coefficient ratio.
        let coarse = rest.isolate_real_roots(0);
        let zero = BigRational::zero();
        let positive = coarse.iter().all(|r| r.lo.to_rational() >= zero);
        let negative = coarse.iter().all(|r| r.hi.to_rational() <= zero);
        if positive || negative {
            let d = rest.degree();
            let sum = BigRational::new(-rest.coeff(d - 1), rest.lead());
            exact.add_rational(sum.abs() * BigInt::from(k));
        } else {
            approx.push((k, rest));
        }
    }

    let bound = rat(2 * (n as i64 - 1));
    let mut bits = 48 + usize::BITS - n.leading_zeros();
    loop {
        let (mut lo, mut hi) = exact.bounds(bits);
        for (k, f) in &approx {
            for r in f.isolate_real_roots(bits) {
                let (a, b) = (r.lo.to_rational(), r.hi.to_rational());
                let (l, h) = if a >= BigRational::zero() {
                    (a, b)
                } else if b <= BigRational::zero() {
                    (-b, -a)
                } else {
                    (BigRational::zero(), a.abs().max(b))
                };
                lo += l * BigInt::from(*k);
                hi += h * BigInt::from(*k);
            }
        }
        let closed = approx.is_empty().then(|| exact.clone());
        let versus = if closed.as_ref().is_some_and(|e| e.is_rational()) {
            Some(exact.rational.cmp(&bound))
        } else if lo > bound {
            Some(Ordering::Greater)
        } else if hi < bound {
            Some(Ordering::Less)
        } else {
            None
        };
        if versus.is_some() || bits >= 512 {
            return Energy { lower: lo, upper: hi, exact: closed, versus_bound: versus };
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paley(q: usize) -> SeidelMatrix {
        let squares: Vec<usize> = (1..q).map(|x| x * x % q).collect();
        SeidelMatrix::from_fn(q, |i, j| !squares.contains(&((i + q - j) % q)))
    }

    #[test]
    fn certify_examples() {
        let p5: Spectrum = "{[-sqrt(5)]^2,[0]^1,[sqrt(5)]^2}".parse().unwrap();
        assert!(certify_spectrum(&paley(5), &p5).unwrap().certified);
        let j6 = Spectrum::from_ints(&[(5, 1), (-1, 5)]);
        assert!(certify_spectrum(&SeidelMatrix::all_plus(6), &j6).unwrap().certified);
    }

    #[test]
    fn certify_failures() {
        let j6 = SeidelMatrix::all_plus(6);
        let wrong = Spectrum::from_ints(&[(5, 2), (-1, 4)]);
        assert_eq!(
            certify_spectrum(&j6, &wrong),
            Err(SpectrumError::MultiplicityMismatch { value: "-1".into(), expected: 4, actual: 5 })
        );
        let absent = Spectrum::from_ints(&[(3, 1), (-1, 5)]);
        assert_eq!(certify_spectrum(&j6, &absent), Err(SpectrumError::AnnihilationFails("3".into())));
        let short = Spectrum::from_ints(&[(5, 1), (-1, 4)]);
        assert!(matches!(certify_spectrum(&j6, &short), Err(SpectrumError::OrderMismatch { .. })));
    }

    #[test]
    fn integer_eigenvalue_examples() {
        assert_eq!(integer_eigenvalues(&SeidelMatrix::all_plus(7)).roots, vec![(-1, 6), (6, 1)]);
        let p9 = SeidelMatrix::from_fn(9, |i, j| {
            // GF(9) as Z3[i]: nonzero squares are ±1 and ±i.
            let (a, b) = ((i / 3 + 3 - j / 3) % 3, (i % 3 + 3 - j % 3) % 3);
            !((a == 0) ^ (b == 0))
        });
        let ev = integer_eigenvalues(&p9);
        assert_eq!(ev.roots, vec![(-3, 4), (0, 1), (3, 4)]);
        assert_eq!(min_eigenvalue_multiplicity(&p9, -3), Ok(5));
        let e5 = integer_eigenvalues(&paley(5));
        assert_eq!(e5.roots, vec![(0, 1)]);
        assert_eq!(e5.remainder, Poly::from_i64(&[-5, 0, 1]).pow(2));
    }

    #[test]
    fn min_multiplicity_errors() {
        let j = SeidelMatrix::all_plus(6);
        assert_eq!(min_eigenvalue_multiplicity(&j, -1), Ok(1));
        assert_eq!(min_eigenvalue_multiplicity(&j, -2), Err(SpectrumError::NotAnEigenvalue(-2)));
        assert_eq!(min_eigenvalue_multiplicity(&j, 0), Err(SpectrumError::NotSmallest(0)));
    }

    #[test]
    fn exact_spectra() {
        assert_eq!(exact_spectrum(&paley(5)).unwrap().to_string(), "{[-sqrt(5)]^2,[0]^1,[sqrt(5)]^2}");
        assert_eq!(distinct_eigenvalue_count(&paley(13)), 3);
        assert_eq!(distinct_eigenvalue_count(&SeidelMatrix::all_plus(4)), 2);
    }

    #[test]
    fn energy_examples() {
        let e = energy(&SeidelMatrix::all_plus(10));
        assert_eq!(e.exact.as_ref().unwrap().rational, rat(18));
        assert!(e.is_equality());
        let e = energy(&paley(5));
        let ex = e.exact.unwrap();
        assert_eq!(ex.terms, vec![(rat(4), 5)]);
        assert_eq!(e.versus_bound, Some(Ordering::Greater));
        // A path on 5 vertices has an irreducible quintic factor somewhere.
        let g = crate::matrix::AmbientGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let e = energy(&g.seidel());
        assert!(e.width() < BigRational::new(1.into(), BigInt::from(10).pow(9)));
        assert!(e.meets_bound());
    }
}
