//! Congruences satisfied by determinants and permanents of Seidel matrices.

use crate::error::MatrixError;
use crate::linalg::permanent_exact;
use crate::matrix::{AmbientGraph, SeidelMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

/// Both sides of a modular identity, reduced to `0..modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub modulus: u32,
    pub value: String,
    pub lhs: u32,
    pub rhs: u32,
    pub holds: bool,
}

fn residue(v: &BigInt, m: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(m));
    u32::try_from(&r).expect("residue fits")
}

fn residue_i64(v: i64, m: u32) -> u32 {
    v.rem_euclid(i64::from(m)) as u32
}

/// `det(J - 2A - I) ≡ (-1)^n (1 - n) + 4en (mod 8)`.
pub fn det_mod8_identity_check(g: &AmbientGraph) -> IdentityCheck {
    let n = g.n() as i64;
    let e = g.edge_count() as i64;
    let det = g.seidel().det();
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let lhs = residue(&det, 8);
    let rhs = residue_i64(sign * (1 - n) + 4 * e * n, 8);
    IdentityCheck { modulus: 8, value: det.to_string(), lhs, rhs, holds: lhs == rhs }
}

/// `per(J - 2A - I) ≡ (-1)^n + n(1 - (-1)^n)/2 + 4en (mod 8)`.
pub fn perm_mod8_identity_check(g: &AmbientGraph, limit: usize) -> Result<IdentityCheck, MatrixError> {
    let n = g.n() as i64;
    let e = g.edge_count() as i64;
    let per = permanent_exact(&g.seidel().to_int_matrix(), limit)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let lhs = residue(&per, 8);
    let rhs = residue_i64(sign + n * (1 - sign) / 2 + 4 * e * n, 8);
    Ok(IdentityCheck { modulus: 8, value: per.to_string(), lhs, rhs, holds: lhs == rhs })
}

/// `det S ≡ 1 - n (mod 4)`.
pub fn det_mod4(s: &SeidelMatrix) -> IdentityCheck {
    let det = s.det();
    let lhs = residue(&det, 4);
    let rhs = residue_i64(1 - s.n() as i64, 4);
    IdentityCheck { modulus: 4, value: det.to_string(), lhs, rhs, holds: lhs == rhs }
}

/// Whether a hypothetical determinant is compatible with order `n`.
pub fn det_mod4_admissible(det: &BigInt, n: usize) -> bool {
    residue(det, 4) == residue_i64(1 - n as i64, 4)
}

/// True when no self-complementary Seidel matrix of order `n` exists.
pub fn self_complementary_obstruction(n: usize) -> bool {
    n % 4 == 3
}

/// Uniform random labelled graphs with orders drawn from `orders`.
pub fn random_graphs(count: usize, orders: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<AmbientGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let mut g = AmbientGraph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen::<bool>() {
                        g.add_edge(i, j);
                    }
                }
            }
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_PERMANENT_LIMIT;

    #[test]
    fn det_mod8_examples() {
        let path = AmbientGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = det_mod8_identity_check(&path);
        assert_eq!((c.value.as_str(), c.lhs, c.rhs, c.holds), ("2", 2, 2, true));
        let c = det_mod8_identity_check(&AmbientGraph::empty(5));
        assert_eq!((c.value.as_str(), c.holds), ("4", true));
    }

    #[test]
    fn perm_mod8_examples() {
        let c = perm_mod8_identity_check(&AmbientGraph::empty(4), DEFAULT_PERMANENT_LIMIT).unwrap();
        assert_eq!((c.value.as_str(), c.lhs, c.holds), ("9", 1, true));
        let c = perm_mod8_identity_check(&AmbientGraph::empty(5), DEFAULT_PERMANENT_LIMIT).unwrap();
        assert_eq!((c.value.as_str(), c.lhs, c.holds), ("44", 4, true));
        assert!(perm_mod8_identity_check(&AmbientGraph::empty(21), DEFAULT_PERMANENT_LIMIT).is_err());
    }

    #[test]
    fn derangement_recurrence() {
        // per(J - I) counts derangements: δ(n) = n δ(n-1) + (-1)^n.
        let mut d = BigInt::from(0);
        for n in 1..=9usize {
            if n > 1 {
                d = d * n + if n % 2 == 0 { 1 } else { -1 };
            }
            let m = SeidelMatrix::all_plus(n).to_int_matrix();
            assert_eq!(permanent_exact(&m, 20).unwrap(), d, "n = {n}");
        }
    }

    #[test]
    fn det_mod4_examples() {
        let one = SeidelMatrix::all_plus(1);
        assert_eq!((det_mod4(&one).value.as_str(), det_mod4(&one).holds), ("0", true));
        assert!(det_mod4(&SeidelMatrix::all_plus(5)).holds);
        // An eigenvalue 4 at order 22 forces det ≡ 0 (mod 4), but 1 - 22 ≡ 3.
        assert!(!det_mod4_admissible(&(BigInt::from(4) * BigInt::from(5).pow(16)), 22));
    }

    #[test]
    fn obstruction() {
        assert!(self_complementary_obstruction(7));
        assert!(!self_complementary_obstruction(8));
        assert!(self_complementary_obstruction(3));
    }

    #[test]
    fn random_corpus_identities() {
        for g in random_graphs(200, 2..=12, 1) {
            assert!(det_mod8_identity_check(&g).holds);
            assert!(det_mod4(&g.seidel()).holds);
        }
        for g in random_graphs(100, 2..=10, 2) {
            assert!(perm_mod8_identity_check(&g, 20).unwrap().holds);
        }
    }

    #[test]
    fn negation_flips_det_by_four_when_n_is_3_mod_4() {
        for g in random_graphs(100, 3..=11, 3) {
            let s = g.seidel();
            let n = s.n();
            let (d, dn) = (s.det(), s.negated().det());
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(dn, &d * sign);
            if n % 4 == 3 {
                assert_eq!(residue(&dn, 8), residue(&(d + 4), 8));
            }
        }
    }
}
