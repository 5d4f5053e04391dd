//! Explicit equiangular line systems and Seidel matrix families.

mod catalog;
mod designs;
mod extend;
mod families;
mod mub;

pub use catalog::{build, Built, CATALOG};
pub use designs::{golay_code, netto_blocks, netto_spectrum, netto_sts19_system, octads, witt_asch_system, witt_spectrum};
pub use extend::{extend_once, extend_system, systems_in_dimension, ExtendOptions};
pub use families::{
    conference, dynkin_triangles, ex415_system, hadamard16_system, paley, regular_two_graph_36, symplectic_srg40,
    tensor_blowup, triangular, Ex415,
};
pub use mub::{corollary_newthm_lower, corollary_s2t1_lower, larges_construction, real_mub_complete, LargesVariant, MubSet};

use crate::error::ConstructionError;
use crate::linalg::{rank_exact, IntMatrix};
use crate::matrix::SeidelMatrix;
use crate::spectra::{certify_spectrum, Spectrum};
use serde::Serialize;

/// Lines spanned by integer vectors; `v` stands for the unit vector `v / sqrt(scale)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineSystem {
    pub dimension_ambient: usize,
    pub scale: i64,
    pub angle_inv: i64,
    pub vectors: Vec<Vec<i64>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl LineSystem {
    /// Checks constant norm and constant absolute inner product `scale / angle_inv`.
    pub fn new(vectors: Vec<Vec<i64>>, angle_inv: i64) -> Result<Self, ConstructionError> {
        let bad = |msg: String| Err(ConstructionError::Invalid(msg));
        let Some(first) = vectors.first() else { return bad("no vectors".into()) };
        let dimension_ambient = first.len();
        let scale = dot(first, first);
        if scale <= 0 || angle_inv <= 0 || scale % angle_inv != 0 {
            return bad(format!("scale {scale} is not a positive multiple of {angle_inv}"));
        }
        let inner = scale / angle_inv;
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dimension_ambient {
                return bad(format!("vector {i} has length {}", v.len()));
            }
            if dot(v, v) != scale {
                return bad(format!("vector {i} has norm^2 {}", dot(v, v)));
            }
            for (j, w) in vectors.iter().enumerate().skip(i + 1) {
                if dot(v, w).abs() != inner {
                    return bad(format!("vectors {i}, {j} have inner product {}", dot(v, w)));
                }
            }
        }
        Ok(LineSystem { dimension_ambient, scale, angle_inv, vectors })
    }

    /// Columns of `S - λ0 I` for a Seidel matrix with two eigenvalues `λ0 < λ1`.
    ///
    /// `(S - λ0 I)^2 = (λ1 - λ0)(S - λ0 I)`, so these columns have Gram matrix
    /// `(λ1 - λ0)(S - λ0 I)`.
    pub fn from_two_eigenvalue(s: &SeidelMatrix, lambda0: i64, lambda1: i64, rows: &[usize]) -> Result<Self, ConstructionError> {
        let m = s.shifted(lambda0);
        let cols = m.to_i64_rows().expect("small entries");
        let vectors = rows.iter().map(|&r| cols[r].clone()).collect();
        let ls = LineSystem::new(vectors, -lambda0)?;
        if ls.scale != (lambda1 - lambda0) * -lambda0 {
            return Err(ConstructionError::Invalid("matrix does not have the stated two eigenvalues".into()));
        }
        Ok(ls)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn gram(&self) -> IntMatrix {
        let n = self.len();
        IntMatrix::from_fn(n, n, |i, j| dot(&self.vectors[i], &self.vectors[j]))
    }

    /// Dimension of the span, which equals the rank of the Gram matrix.
    pub fn rank(&self) -> usize {
        rank_exact(&IntMatrix::from_rows(&self.vectors).expect("rectangular"))
    }

    /// Sign pattern of the Gram matrix.
    pub fn seidel(&self) -> SeidelMatrix {
        let n = self.len();
        SeidelMatrix::from_fn(n, |i, j| dot(&self.vectors[i], &self.vectors[j]) < 0)
    }

    pub fn certify(&self, claimed: &Spectrum) -> Result<Spectrum, ConstructionError> {
        Ok(certify_spectrum(&self.seidel(), claimed)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unequal_angles() {
        assert!(LineSystem::new(vec![vec![1, 0], vec![0, 1]], 3).is_err());
        let ok = LineSystem::new(vec![vec![1, 1, 1], vec![1, -1, -1], vec![-1, 1, -1]], 3).unwrap();
        assert_eq!(ok.scale, 3);
        assert_eq!(ok.seidel(), SeidelMatrix::all_plus(3).negated());
    }

    #[test]
    fn gram_and_seidel_agree() {
        let h = hadamard16_system().unwrap();
        let g = h.gram();
        let s = h.seidel();
        for i in 0..16 {
            for j in 0..16 {
                let want = if i == j { h.scale } else { s.entry(i, j) * h.scale / h.angle_inv };
                assert_eq!(g.get(i, j), &want.into());
            }
        }
    }
}
