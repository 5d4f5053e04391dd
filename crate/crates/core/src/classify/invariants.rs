//! The order-dependent invariant chain: determinant, charpoly coefficients and
//! the modular products built on principal submatrices.
//!
//! Coefficients and determinants are reduced to their least nonnegative residue
//! before multiplying. Any fixed convention is switching invariant; this one is
//! what the completeness checks in the test suite were run against.

use crate::error::ClassifyError;
use crate::linalg::{charpoly_i128, det_i128};
use crate::matrix::SeidelMatrix;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Moduli for the products at orders 7, 8, 9 and 10.
pub const PHI_MODULI: [u64; 4] = [409, 7507, 268921, 45131767];
pub const PHI11_MODULUS: u64 = 97124414801;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Invariant {
    #[serde(serialize_with = "ser_big")]
    Det(BigInt),
    #[serde(serialize_with = "ser_bigs")]
    Chi(Vec<BigInt>),
    Residue(u64),
    Multiset(Vec<u64>),
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_bigs<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl std::fmt::Display for Invariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Invariant::Det(d) => write!(f, "det {d}"),
            Invariant::Chi(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "chi [{}]", parts.join(","))
            }
            Invariant::Residue(r) => write!(f, "phi {r}"),
            Invariant::Multiset(m) => {
                let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                write!(f, "phi {{{}}}", parts.join(","))
            }
        }
    }
}

/// Selects the invariant by order: det up to 3, χ for 4 to 6, the φ chain for 7 to 12.
pub fn invariant(s: &SeidelMatrix) -> Result<Invariant, ClassifyError> {
    match s.n() {
        0..=3 => Ok(Invariant::Det(s.det())),
        4..=6 => Ok(Invariant::Chi(chi(s))),
        7..=10 => Ok(Invariant::Residue(phi(s)?)),
        11 => Ok(Invariant::Residue(phi11(s)?)),
        12 => Ok(Invariant::Multiset(phi12(s)?)),
        n => Err(ClassifyError::OrderTooLarge { order: n, limit: 12 }),
    }
}

/// Charpoly coefficients `[a_0, ..., a_{n-2}]` of `x^n + ... + a_0`.
pub fn chi(s: &SeidelMatrix) -> Vec<BigInt> {
    let c = s.charpoly();
    (0..s.n().saturating_sub(1)).map(|i| c.coeff(i)).collect()
}

fn residue(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn sub_i128(s: &SeidelMatrix, mask: u64) -> (Vec<i128>, usize) {
    let idx: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
    let k = idx.len();
    let mut a = vec![0i128; k * k];
    for (p, &i) in idx.iter().enumerate() {
        for (q, &j) in idx.iter().enumerate() {
            a[p * k + q] = s.entry(i, j) as i128;
        }
    }
    (a, k)
}

/// φ at orders 7 to 10.
pub fn phi(s: &SeidelMatrix) -> Result<u64, ClassifyError> {
    let n = s.n();
    if !(7..=10).contains(&n) {
        return Err(ClassifyError::ArityMismatch { expected: 7, actual: n });
    }
    let mut memo = HashMap::new();
    Ok(phi_subset(s, (1u64 << n) - 1, &mut memo))
}

fn phi_subset(s: &SeidelMatrix, mask: u64, memo: &mut HashMap<u64, u64>) -> u64 {
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let k = mask.count_ones() as usize;
    let m = PHI_MODULI[k - 7];
    let v = if k == 7 {
        let (a, k) = sub_i128(s, mask);
        let c = charpoly_i128(&a, k).expect("order 7 fits in i128");
        c[..k - 1].iter().fold(1u64, |acc, &x| mul_mod(acc, residue(x, m), m))
    } else {
        let mut acc = 1u64;
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            acc = mul_mod(acc, phi_subset(s, mask ^ bit, memo), m);
        }
        acc
    };
    memo.insert(mask, v);
    v
}

fn det_mask(s: &SeidelMatrix, mask: u64) -> i128 {
    let (mut a, k) = sub_i128(s, mask);
    det_i128(&mut a, k).expect("small orders fit in i128")
}

/// φ at order 11, from the multiset of principal 9x9 minors.
pub fn phi11(s: &SeidelMatrix) -> Result<u64, ClassifyError> {
    if s.n() != 11 {
        return Err(ClassifyError::ArityMismatch { expected: 11, actual: s.n() });
    }
    Ok(phi11_mask(s, (1u64 << 11) - 1))
}

fn phi11_mask(s: &SeidelMatrix, mask: u64) -> u64 {
    let m = PHI11_MODULUS;
    let idx: Vec<u64> = (0..64).filter(|&i| mask >> i & 1 == 1).map(|i| 1u64 << i).collect();
    let mut minors: BTreeMap<i128, u64> = BTreeMap::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            *minors.entry(det_mask(s, mask ^ idx[a] ^ idx[b])).or_default() += 1;
        }
    }
    minors.iter().fold(residue(det_mask(s, mask), m), |acc, (&v, &mult)| {
        let acc = mul_mod(acc, residue(v + 1, m), m);
        mul_mod(acc, residue(mult as i128 + 1, m), m)
    })
}

/// φ at order 12: the sorted φ values of the twelve order-11 principal submatrices.
pub fn phi12(s: &SeidelMatrix) -> Result<Vec<u64>, ClassifyError> {
    if s.n() != 12 {
        return Err(ClassifyError::ArityMismatch { expected: 12, actual: s.n() });
    }
    let full = (1u64 << 12) - 1;
    let mut out: Vec<u64> = (0..12).map(|i| phi11_mask(s, full ^ (1 << i))).collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::arb_seidel;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn chi_of_all_plus() {
        let c: Vec<i64> = chi(&SeidelMatrix::all_plus(5)).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(c, vec![-4, -15, -20, -10]);
    }

    #[test]
    fn phi7_of_all_plus() {
        let expected: BigInt = BigInt::from(-6) * -35 * -84 * -105 * -70 * -21;
        let r = ((expected % 409i32 + 409i32) % 409i32).to_u64().unwrap();
        assert_eq!(phi(&SeidelMatrix::all_plus(7)).unwrap(), r);
    }

    #[test]
    fn phi11_of_all_plus() {
        assert_eq!(phi11(&SeidelMatrix::all_plus(11)).unwrap(), 5040);
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(phi(&SeidelMatrix::all_plus(6)), Err(ClassifyError::ArityMismatch { .. })));
        assert!(matches!(phi11(&SeidelMatrix::all_plus(10)), Err(ClassifyError::ArityMismatch { .. })));
        assert!(matches!(phi12(&SeidelMatrix::all_plus(11)), Err(ClassifyError::ArityMismatch { .. })));
    }

    fn random_switch(s: &SeidelMatrix, mask: u64, seed: u64) -> SeidelMatrix {
        use rand::{seq::SliceRandom, SeedableRng};
        let n = s.n();
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        s.switched(&subset).unwrap().permuted(&perm).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn invariant_is_switching_invariant(s in arb_seidel(11), mask in any::<u64>(), seed in any::<u64>()) {
            let t = random_switch(&s, mask, seed);
            prop_assert_eq!(invariant(&s).unwrap(), invariant(&t).unwrap());
        }
    }

    #[test]
    fn phi12_agrees_on_random_switchings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        let bases: Vec<SeidelMatrix> = (0..5).map(|_| SeidelMatrix::from_fn(12, |_, _| rng.gen())).collect();
        for base in &bases {
            let want = phi12(base).unwrap();
            for _ in 0..100 {
                let t = random_switch(base, rng.gen(), rng.gen());
                assert_eq!(phi12(&t).unwrap(), want);
            }
        }
    }
}
