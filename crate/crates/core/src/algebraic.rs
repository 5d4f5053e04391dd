//! Integers and real quadratic surds `(p + q√D)/r`, with exact ordering.

use crate::error::SpectrumError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraicNumber {
    Int(i64),
    /// `(p + q√d)/r` with `r > 0`, `d > 1` squarefree, `q ≠ 0`, `gcd(p, q, r) = 1`.
    Surd { p: i64, q: i64, r: i64, d: i64 },
}

use AlgebraicNumber::{Int, Surd};

impl AlgebraicNumber {
    /// Normalizes `(p + q√d)/r`. Rational results must be integers.
    pub fn surd(p: i64, q: i64, r: i64, d: i64) -> Result<Self, SpectrumError> {
        if r == 0 {
            return Err(SpectrumError::Parse("zero denominator".into()));
        }
        if d < 0 {
            return Err(SpectrumError::NegativeRadicand);
        }
        let (mut p, mut q, mut r) = if r < 0 { (-p, -q, -r) } else { (p, q, r) };
        let (f, d) = square_split(d);
        q *= f;
        if q == 0 || d <= 1 {
            let num = p + if d == 1 { q } else { 0 };
            if num % r != 0 {
                return Err(SpectrumError::NotAlgebraicInteger(format!("{num}/{r}")));
            }
            return Ok(Int(num / r));
        }
        let g = p.gcd(&q).gcd(&r);
        p /= g;
        q /= g;
        r /= g;
        Ok(Surd { p, q, r, d })
    }

    pub fn as_int(&self) -> Option<i64> {
        match *self {
            Int(v) => Some(v),
            Surd { .. } => None,
        }
    }

    pub fn is_int(&self) -> bool {
        matches!(self, Int(_))
    }

    pub fn conjugate(&self) -> Self {
        match *self {
            Int(v) => Int(v),
            Surd { p, q, r, d } => Surd { p, q: -q, r, d },
        }
    }

    /// `x + x̄` and `x·x̄` as rationals `(num, den)`.
    fn trace_norm_parts(&self) -> ((i128, i128), (i128, i128)) {
        match *self {
            Int(v) => ((2 * v as i128, 1), (v as i128 * v as i128, 1)),
            Surd { p, q, r, d } => {
                let (p, q, r, d) = (p as i128, q as i128, r as i128, d as i128);
                ((2 * p, r), (p * p - q * q * d, r * r))
            }
        }
    }

    /// Trace and norm of the minimal polynomial `x^2 - t x + N` when both are integers.
    pub fn trace_norm(&self) -> Option<(i64, i64)> {
        let ((tn, td), (nn, nd)) = self.trace_norm_parts();
        (tn % td == 0 && nn % nd == 0).then(|| ((tn / td) as i64, (nn / nd) as i64))
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.trace_norm().is_some()
    }

    pub fn to_f64(&self) -> f64 {
        match *self {
            Int(v) => v as f64,
            Surd { p, q, r, d } => (p as f64 + q as f64 * (d as f64).sqrt()) / r as f64,
        }
    }

    /// `(p, q, r, d)` with `d = 0` for integers.
    fn parts(&self) -> (BigInt, BigInt, BigInt, i64) {
        match *self {
            Int(v) => (v.into(), 0.into(), 1.into(), 1),
            Surd { p, q, r, d } => (p.into(), q.into(), r.into(), d),
        }
    }

    /// Sign of `self - k` for an integer `k`.
    pub fn cmp_int(&self, k: i64) -> Ordering {
        self.cmp(&Int(k))
    }
}

/// `d = f^2 · rest` with `rest` squarefree.
pub(crate) fn square_split(d: i64) -> (i64, i64) {
    if d <= 1 {
        return (1, d);
    }
    let (mut f, mut rest) = (1, d);
    let mut k = 2;
    while k * k <= rest {
        while rest % (k * k) == 0 {
            rest /= k * k;
            f *= k;
        }
        k += 1;
    }
    (f, rest)
}

fn sign(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `u + v√e` for `e ≥ 0`.
fn sign_surd(u: &BigInt, v: &BigInt, e: &BigInt) -> i32 {
    let (su, sv) = (sign(u), if e.is_zero() { 0 } else { sign(v) });
    if sv == 0 || su == sv {
        return if su == 0 { sv } else { su };
    }
    if su == 0 {
        return sv;
    }
    // Opposite signs: compare u^2 with v^2 e.
    match (u * u).cmp(&(v * v * e)) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => 0,
    }
}

/// Sign of `a + b√d1 + c√d2`.
fn sign_two_surds(a: &BigInt, b: &BigInt, d1: i64, c: &BigInt, d2: i64) -> i32 {
    let (d1b, d2b) = (BigInt::from(d1), BigInt::from(d2));
    // sign of X = b√d1 + c√d2
    let sx = {
        let (sb, sc) = (sign(b), sign(c));
        if sb == 0 || sc == 0 || sb == sc {
            if sb == 0 {
                sc
            } else {
                sb
            }
        } else {
            match (b * b * &d1b).cmp(&(c * c * &d2b)) {
                Ordering::Greater => sb,
                Ordering::Less => sc,
                Ordering::Equal => 0,
            }
        }
    };
    let sa = sign(a);
    if sx == 0 || sa == sx {
        return if sa == 0 { sx } else { sa };
    }
    if sa == 0 {
        return sx;
    }
    // Opposite signs: sign(a^2 - X^2) decides, X^2 = b^2 d1 + c^2 d2 + 2bc√(d1 d2).
    let u = a * a - b * b * &d1b - c * c * &d2b;
    let v = -(BigInt::from(2) * b * c);
    match sign_surd(&u, &v, &(d1b * d2b)) {
        1 => sa,
        -1 => sx,
        _ => 0,
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let (p1, q1, r1, d1) = self.parts();
        let (p2, q2, r2, d2) = other.parts();
        // self - other = (p1 r2 - p2 r1 + q1 r2 √d1 - q2 r1 √d2) / (r1 r2)
        let a = &p1 * &r2 - &p2 * &r1;
        let b = &q1 * &r2;
        let c = -(&q2 * &r1);
        let s = if d1 == d2 { sign_surd(&a, &(b + c), &BigInt::from(d1)) } else { sign_two_surds(&a, &b, d1, &c, d2) };
        s.cmp(&0)
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Int(v) => write!(f, "{v}"),
            Surd { p, q, r, d } => {
                let op = if q < 0 { "-" } else if p != 0 { "+" } else { "" };
                let head = if p != 0 { p.to_string() } else { String::new() };
                let coef = if q.abs() == 1 { String::new() } else { format!("{}*", q.abs()) };
                let body = format!("{head}{op}{coef}sqrt({d})");
                if r == 1 { f.write_str(&body) } else { write!(f, "({body})/{r}") }
            }
        }
    }
}

impl serde::Serialize for AlgebraicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for AlgebraicNumber {
    type Err = SpectrumError;

    /// Accepts integers, `(p+q*sqrt(D))/r`, and the shorthand forms
    /// `p+q*sqrt(D)`, `-sqrt(D)`, `(p-sqrt(D))` with optional `/r`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || SpectrumError::Parse(format!("bad algebraic number {s:?}"));
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int(v));
        }
        let (body, r) = match s.rfind('/') {
            Some(k) if s[..k].ends_with(')') => (&s[..k], s[k + 1..].parse::<i64>().map_err(|_| bad())?),
            _ => (s.as_str(), 1),
        };
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let k = body.find("sqrt(").ok_or_else(bad)?;
        let d: i64 = body[k + 5..].strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let head = &body[..k];
        let head = head.strip_suffix('*').unwrap_or(head);
        // `head` is "[p](+|-)[q]" or "[-][q]".
        let split = head.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (p_str, q_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let p: i64 = if p_str.is_empty() { 0 } else { p_str.parse().map_err(|_| bad())? };
        let q: i64 = match q_str {
            "" | "+" => 1,
            "-" => -1,
            t => t.parse().map_err(|_| bad())?,
        };
        Self::surd(p, q, r, d)
    }
}

/// The exact sum of positive parts: `rational + Σ coef·√d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    pub rational: num_rational::BigRational,
    pub terms: Vec<(num_rational::BigRational, i64)>,
}

impl SurdSum {
    pub fn add_rational(&mut self, v: num_rational::BigRational) {
        self.rational += v;
    }

    pub fn add_surd(&mut self, coef: num_rational::BigRational, d: i64) {
        if let Some(t) = self.terms.iter_mut().find(|t| t.1 == d) {
            t.0 += coef;
        } else {
            self.terms.push((coef, d));
        }
        self.terms.retain(|t| !t.0.is_zero());
        self.terms.sort_by_key(|t| t.1);
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rational.to_f64().unwrap_or(f64::NAN)
            + self.terms.iter().map(|(c, d)| c.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt()).sum::<f64>()
    }

    /// Rational bounds `lo ≤ value ≤ hi` with each root approximated to `2^-bits`.
    pub fn bounds(&self, bits: u32) -> (num_rational::BigRational, num_rational::BigRational) {
        use num_rational::BigRational;
        let mut lo = self.rational.clone();
        let mut hi = self.rational.clone();
        let scale = BigInt::from(1) << bits;
        for (c, d) in &self.terms {
            // floor(√d · 2^bits) ≤ √d · 2^bits < that + 1
            let s = (BigInt::from(*d) * &scale * &scale).sqrt();
            let a = BigRational::new(s.clone(), scale.clone());
            let b = BigRational::new(s + 1, scale.clone());
            if c.is_positive() {
                lo += c * &a;
                hi += c * &b;
            } else {
                lo += c * &b;
                hi += c * &a;
            }
        }
        (lo, hi)
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.rational.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.rational)?;
            first = false;
        }
        for (c, d) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if !first {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            if mag == num_rational::BigRational::from_integer(1.into()) {
                write!(f, "sqrt({d})")?;
            } else {
                write!(f, "{mag}*sqrt({d})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surd(p: i64, q: i64, r: i64, d: i64) -> AlgebraicNumber {
        AlgebraicNumber::surd(p, q, r, d).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(surd(2, 2, 2, 5), Surd { p: 1, q: 1, r: 1, d: 5 });
        assert_eq!(surd(0, 1, 1, 9), Int(3));
        assert_eq!(surd(-2, 1, 1, 20), Surd { p: -2, q: 2, r: 1, d: 5 });
        assert!(AlgebraicNumber::surd(1, 0, 2, 5).is_err());
        assert!(surd(1, 1, 2, 5).is_algebraic_integer());
        assert!(!surd(1, 1, 2, 3).is_algebraic_integer());
    }

    #[test]
    fn display_and_parse() {
        let x = surd(-1, 2, 1, 5);
        assert_eq!(x.to_string(), "-1+2*sqrt(5)");
        assert_eq!(surd(1, -1, 2, 5).to_string(), "(1-sqrt(5))/2");
        assert_eq!(surd(0, 3, 1, 2).to_string(), "3*sqrt(2)");
        assert_eq!("(-1+2*sqrt(5))/1".parse::<AlgebraicNumber>().unwrap(), x);
        assert_eq!("-1+2*sqrt(5)".parse::<AlgebraicNumber>().unwrap(), x);
        assert_eq!("-sqrt(5)".parse::<AlgebraicNumber>().unwrap(), surd(0, -1, 1, 5));
        assert_eq!("(1+sqrt(5))/2".parse::<AlgebraicNumber>().unwrap(), surd(1, 1, 2, 5));
        assert_eq!("(2-sqrt(5))".parse::<AlgebraicNumber>().unwrap(), surd(2, -1, 1, 5));
        assert_eq!("-7".parse::<AlgebraicNumber>().unwrap(), Int(-7));
        assert!("sqrt(x)".parse::<AlgebraicNumber>().is_err());
    }

    #[test]
    fn ordering_examples() {
        let r5 = surd(0, 1, 1, 5);
        assert!(r5 > Int(2) && r5 < Int(3));
        assert!(surd(-1, -2, 1, 5) < Int(-5));
        assert!(surd(0, 1, 1, 2) < surd(0, 1, 1, 3));
        assert!(surd(1, 1, 1, 2) > surd(0, 1, 1, 5));
        assert_eq!(surd(3, 1, 1, 2).cmp(&surd(3, 1, 1, 2)), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn ordering_agrees_with_floats(p1 in -20i64..20, q1 in -5i64..5, r1 in 1i64..4, d1 in 2i64..12,
                                       p2 in -20i64..20, q2 in -5i64..5, r2 in 1i64..4, d2 in 2i64..12) {
            let (Ok(x), Ok(y)) = (AlgebraicNumber::surd(p1, q1, r1, d1), AlgebraicNumber::surd(p2, q2, r2, d2)) else {
                return Ok(());
            };
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
            }
            prop_assert_eq!(x.to_string().parse::<AlgebraicNumber>().unwrap(), x);
        }
    }
}
