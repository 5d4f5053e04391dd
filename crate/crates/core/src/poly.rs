//! Dense integer polynomials, coefficients stored low to high.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<BigInt>,
}

/// The dyadic rational `num / 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn int(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.exp)
    }

    fn with_exp(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp)
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp) + 1;
        Dyadic { num: (a.with_exp(e - 1) + b.with_exp(e - 1)), exp: e }.reduced()
    }

    fn reduced(mut self) -> Self {
        while self.exp > 0 && self.num.is_even() {
            self.num >>= 1;
            self.exp -= 1;
        }
        self
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }
}

/// An isolating interval `(lo, hi]` containing exactly one root, or the exact root when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Poly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn constant(v: BigInt) -> Self {
        Self::new(vec![v])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        Self::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(a.clone());
        }
        acc
    }

    /// Sign of `p(num / 2^exp)`.
    pub fn sign_at(&self, x: &Dyadic) -> i32 {
        // Horner on the homogenized form Σ c_i num^i 2^(exp(deg−i)).
        let mut acc = BigInt::zero();
        for (k, a) in self.c.iter().rev().enumerate() {
            acc = acc * &x.num + (a << (x.exp as usize * k));
        }
        sign(&acc)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Self::new(self.c.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        Self::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Poly {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * i).collect())
    }

    /// `p(x + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> Poly {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Self::new(self.c.iter().map(|a| a / &g).collect())
    }

    /// Exact division in `Z[x]`; `None` when the divisor does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::default());
        }
        if self.c.len() < d.c.len() {
            return None;
        }
        let mut r = self.c.clone();
        let dl = d.lead();
        let dd = d.degree();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (qk, rem) = r[k + dd].div_rem(&dl);
            if !rem.is_zero() {
                return None;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &qk * b;
            }
            q[k] = qk;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Pseudo-remainder: `lc(d)^(deg a − deg d + 1) · a mod d`.
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        let mut r = self.clone();
        let dd = d.degree();
        let dl = d.lead();
        if self.c.len() < d.c.len() {
            return r;
        }
        let steps = self.degree() - dd + 1;
        let mut done = 0;
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lead();
            let mut nc: Vec<BigInt> = r.c.iter().map(|a| a * &dl).collect();
            for (j, b) in d.c.iter().enumerate() {
                nc[shift + j] -= &rl * b;
            }
            r = Self::new(nc);
            done += 1;
        }
        for _ in done..steps {
            r = r.scale(&dl);
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Square-free decomposition: primitive factors `f_k` with `p = c ∏ f_k^k`.
    /// Returns `(k, f_k)` for the non-constant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let a = self.primitive();
        let mut c = a.gcd(&a.derivative());
        let mut w = a.div_exact(&c).expect("gcd divides").primitive();
        let mut k = 1;
        while w.degree() > 0 {
            let y = w.gcd(&c);
            let f = w.div_exact(&y).expect("gcd divides").primitive();
            if f.degree() > 0 {
                out.push((k, f));
            }
            c = c.div_exact(&y).expect("gcd divides").primitive();
            w = y;
            k += 1;
        }
        out
    }

    /// Integer roots in `[-bound, bound]` with multiplicities, and the deflated remainder.
    pub fn integer_roots(&self, bound: i64) -> (Vec<(i64, usize)>, Poly) {
        let mut p = self.clone();
        let mut roots = Vec::new();
        for r in -bound..=bound {
            let lin = Poly::linear_root(&BigInt::from(r));
            let mut m = 0;
            while p.degree() > 0 && p.eval_i64(r).is_zero() {
                p = p.div_exact(&lin).expect("root divides");
                m += 1;
            }
            if m > 0 {
                roots.push((r, m));
            }
        }
        (roots, p)
    }

    /// Integer bound on the absolute value of every complex root.
    pub fn root_bound(&self) -> BigInt {
        let l = self.lead().abs();
        let m = self.c[..self.c.len().saturating_sub(1)].iter().map(|a| a.abs()).max().unwrap_or_default();
        BigInt::one() + m.div_ceil(&l)
    }

    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.is_zero() || b.degree() == 0 {
                break;
            }
            // prem = lc(b)^k · (a mod b); keep the Sturm sign convention by
            // undoing a negative scalar, then negate.
            let k = (a.degree() - b.degree() + 1) as u32;
            let mut r = a.pseudo_rem(b);
            if b.lead().is_negative() && k % 2 == 1 {
                r = r.neg();
            }
            let r = r.neg();
            if r.is_zero() {
                break;
            }
            let g = r.content();
            seq.push(Self::new(r.c.iter().map(|x| x / &g).collect()));
        }
        seq
    }

    /// Distinct real roots of a square-free polynomial, each in a dyadic interval
    /// `(lo, hi]` of width at most `2^-precision`.
    pub fn isolate_real_roots(&self, precision: u32) -> Vec<RootInterval> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let seq = self.sturm_sequence();
        let count = |x: &Dyadic| variations(seq.iter().map(|p| p.sign_at(x)));
        let b = self.root_bound();
        let mut stack = vec![(Dyadic::int(-b.clone()), Dyadic::int(b))];
        let mut found = Vec::new();
        while let Some((lo, hi)) = stack.pop() {
            let k = count(&lo) - count(&hi);
            if k == 0 {
                continue;
            }
            if k == 1 {
                found.push(self.refine(lo, hi, precision));
                continue;
            }
            let mid = Dyadic::midpoint(&lo, &hi);
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        found.sort_by(|a, b| a.lo.to_rational().cmp(&b.lo.to_rational()));
        found
    }

    fn refine(&self, mut lo: Dyadic, mut hi: Dyadic, precision: u32) -> RootInterval {
        let shi = self.sign_at(&hi);
        if shi == 0 {
            return RootInterval { lo: hi.clone(), hi };
        }
        loop {
            let width = (hi.to_rational() - lo.to_rational()) * BigRational::from_integer(BigInt::one() << precision);
            if width <= BigRational::one() {
                return RootInterval { lo, hi };
            }
            let mid = Dyadic::midpoint(&lo, &hi);
            let s = self.sign_at(&mid);
            if s == 0 {
                return RootInterval { lo: mid.clone(), hi: mid };
            }
            if s == shi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
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

fn variations(signs: impl Iterator<Item = i32>) -> i64 {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_mag { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn roots_poly(roots: &[i64]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, &r| acc.mul(&Poly::linear_root(&BigInt::from(r))))
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[-2, -3, 0, 1]).to_string(), "x^3 - 3*x - 2");
        assert_eq!(Poly::from_i64(&[0, 1]).to_string(), "x");
    }

    #[test]
    fn integer_roots_with_multiplicity() {
        let p = roots_poly(&[4, -1, -1, -1, -1]);
        let (roots, rest) = p.integer_roots(4);
        assert_eq!(roots, vec![(-1, 4), (4, 1)]);
        assert_eq!(rest, Poly::one());
        let q = Poly::from_i64(&[-5, 0, 1]).mul(&Poly::from_i64(&[0, 1]));
        let (roots, rest) = q.integer_roots(4);
        assert_eq!(roots, vec![(0, 1)]);
        assert_eq!(rest, Poly::from_i64(&[-5, 0, 1]));
    }

    #[test]
    fn squarefree_parts() {
        let p = roots_poly(&[1, 2, 2, 3, 3, 3]);
        let mut d = p.squarefree_decomposition();
        d.sort_by_key(|x| x.0);
        assert_eq!(d, vec![(1, roots_poly(&[1])), (2, roots_poly(&[2])), (3, roots_poly(&[3]))]);
    }

    #[test]
    fn isolation_of_sqrt5() {
        let p = Poly::from_i64(&[-5, 0, 1]);
        let r = p.isolate_real_roots(30);
        assert_eq!(r.len(), 2);
        let v = r[1].hi.to_f64();
        assert!((v - 5f64.sqrt()).abs() < 1e-8);
        assert!(r[0].hi.to_f64() < 0.0);
    }

    #[test]
    fn exact_root_is_hit() {
        let p = roots_poly(&[0, 3]);
        let r = p.isolate_real_roots(10);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let p = Poly::from_i64(&[3, -1, 4, 1, -5]);
        let q = p.taylor_shift(&BigInt::from(2));
        for x in -3..4 {
            assert_eq!(q.eval_i64(x), p.eval_i64(x + 2));
        }
    }

    proptest! {
        #[test]
        fn sturm_counts_distinct_roots(mut roots in prop::collection::vec(-6i64..=6, 1..7)) {
            let p = roots_poly(&roots);
            let sf: Poly = p.squarefree_decomposition().into_iter().fold(Poly::one(), |a, (_, f)| a.mul(&f));
            roots.sort();
            roots.dedup();
            let iso = sf.isolate_real_roots(20);
            prop_assert_eq!(iso.len(), roots.len());
            for (r, iv) in roots.iter().zip(&iso) {
                let x = BigRational::from_integer(BigInt::from(*r));
                prop_assert!(iv.lo.to_rational() <= x && x <= iv.hi.to_rational());
            }
        }

        #[test]
        fn exact_division_roundtrip(a in prop::collection::vec(-9i64..=9, 1..6), b in prop::collection::vec(-9i64..=9, 1..5)) {
            let (pa, pb) = (Poly::from_i64(&a), Poly::from_i64(&b));
            prop_assume!(!pb.is_zero());
            let prod = pa.mul(&pb);
            prop_assert_eq!(prod.div_exact(&pb), Some(pa));
        }
    }
}
