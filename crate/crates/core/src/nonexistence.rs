//! Nonexistence proofs for three-eigenvalue Seidel matrices via the
//! clique structure of `(S - λI)(S - μI)`.

use crate::error::NonexistenceError;
use crate::linalg::{psd_rank, IntMatrix};
use crate::matrix::SeidelMatrix;
use crate::spectra::{maintnon_bound, relative_bound_floor, Spectrum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

/// A switching and grouping exhibiting `M = s · D P diag[J_k1, ..., J_kc] Pᵀ D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsdBlockDecomposition {
    pub scale: i64,
    /// Vertices of each block, in discovery order.
    pub blocks: Vec<Vec<usize>>,
    /// `±1` per vertex.
    pub signs: Vec<i8>,
}

impl PsdBlockDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The matrix this decomposition describes.
    pub fn reconstruct(&self) -> IntMatrix {
        let n = self.signs.len();
        let mut block_of = vec![0; n];
        for (b, vs) in self.blocks.iter().enumerate() {
            for &v in vs {
                block_of[v] = b;
            }
        }
        IntMatrix::from_fn(n, n, |i, j| {
            if block_of[i] == block_of[j] {
                self.scale * i64::from(self.signs[i]) * i64::from(self.signs[j])
            } else {
                0
            }
        })
    }
}

/// Decomposes a `{0, ±s}` matrix with diagonal `s` into switched all-`s` blocks,
/// adding one vertex at a time. A vertex that meets a block inconsistently, or
/// meets two blocks, exposes a principal 3×3 submatrix that is not PSD.
pub fn psd_block_decompose(m: &IntMatrix, s: i64) -> Result<PsdBlockDecomposition, NonexistenceError> {
    if !m.is_square() || !m.is_symmetric() {
        return Err(NonexistenceError::BadEntries);
    }
    if s <= 0 {
        return Err(NonexistenceError::NotPsd);
    }
    let n = m.rows();
    let val = |i: usize, j: usize| -> Result<i64, NonexistenceError> {
        let v = m.get(i, j).to_i64().ok_or(NonexistenceError::BadEntries)?;
        match v {
            0 => Ok(0),
            v if v == s => Ok(1),
            v if v == -s => Ok(-1),
            _ => Err(NonexistenceError::BadEntries),
        }
    };
    for i in 0..n {
        if val(i, i)? != 1 {
            return Err(NonexistenceError::BadEntries);
        }
        for j in 0..n {
            val(i, j)?;
        }
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut signs = vec![1i8; n];
    for v in 0..n {
        let touching: Vec<usize> = (0..blocks.len()).filter(|&b| blocks[b].iter().any(|&u| val(v, u).unwrap() != 0)).collect();
        match touching.as_slice() {
            [] => blocks.push(vec![v]),
            [b] => {
                let u = *blocks[*b].iter().find(|&&u| val(v, u).unwrap() != 0).unwrap();
                signs[v] = (val(v, u)? * i64::from(signs[u])) as i8;
                for &w in &blocks[*b] {
                    if val(v, w)? * i64::from(signs[v]) * i64::from(signs[w]) != 1 {
                        return Err(NonexistenceError::ForbiddenPattern(u, w, v));
                    }
                }
                blocks[*b].push(v);
            }
            [b1, b2, ..] => {
                let u1 = *blocks[*b1].iter().find(|&&u| val(v, u).unwrap() != 0).unwrap();
                let u2 = *blocks[*b2].iter().find(|&&u| val(v, u).unwrap() != 0).unwrap();
                return Err(NonexistenceError::ForbiddenPattern(u1, u2, v));
            }
        }
    }
    let out = PsdBlockDecomposition { scale: s, blocks, signs };
    debug_assert_eq!(&out.reconstruct(), m);
    Ok(out)
}

/// One labelling of the three eigenvalues and the arithmetic it leads to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoleAssignment {
    pub lambda: i64,
    pub mu: i64,
    pub nu: i64,
    /// Multiplicity of `nu`.
    pub c: usize,
    pub sum_congruent: bool,
    pub diagonal_is_four: bool,
    pub rho: i64,
    pub block_size_matches: bool,
    pub nu_bounded: bool,
}

impl RoleAssignment {
    pub fn hypotheses(&self) -> bool {
        self.sum_congruent && self.diagonal_is_four
    }

    pub fn conclusions(&self) -> bool {
        self.block_size_matches && self.nu_bounded
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Nonexistent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub spectrum: Spectrum,
    pub assignments: Vec<RoleAssignment>,
    pub verdict: Verdict,
}

#[derive(Serialize)]
struct Step {
    check: String,
    holds: bool,
}

impl NonexistenceCertificate {
    /// Human-readable transcript, one step per arithmetic check.
    pub fn steps(&self) -> Vec<(String, bool)> {
        let n = self.spectrum.order() as i64;
        let mut out = Vec::new();
        for a in &self.assignments {
            let head = format!("λ={}, μ={}, ν={} (c={})", a.lambda, a.mu, a.nu, a.c);
            out.push((format!("{head}: λ+μ = {} ≡ n-2 = {} (mod 4)", a.lambda + a.mu, n - 2), a.sum_congruent));
            out.push((format!("{head}: |n-1+λμ| = {} = 4", (n - 1 + a.lambda * a.mu).abs()), a.diagonal_is_four));
            if a.hypotheses() {
                out.push((
                    format!("{head}: |ϱ|/4 = {}/4 equals n/c = {n}/{}", a.rho.abs(), a.c),
                    a.block_size_matches,
                ));
                out.push((format!("{head}: |ν| = {} ≤ n/c - 1", a.nu.abs()), a.nu_bounded));
            }
        }
        out
    }
}

impl Serialize for NonexistenceCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let steps: Vec<Step> = self.steps().into_iter().map(|(check, holds)| Step { check, holds }).collect();
        let mut st = s.serialize_struct("NonexistenceCertificate", 4)?;
        st.serialize_field("spectrum", &self.spectrum)?;
        st.serialize_field("assignments", &self.assignments)?;
        st.serialize_field("steps", &steps)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.end()
    }
}

/// Tries every labelling of the three eigenvalues. The spectrum is impossible if some
/// labelling meets the hypotheses `λ+μ ≡ n-2 (mod 4)`, `|n-1+λμ| = 4` but not the
/// conclusions `|(ν-λ)(ν-μ)|/4 = n/c` and `|ν| ≤ n/c - 1`.
pub fn theorem_nonex_certificate(spec: &Spectrum) -> Result<NonexistenceCertificate, NonexistenceError> {
    let pairs = spec.int_pairs().ok_or(NonexistenceError::NotThreeEigenvalues)?;
    if pairs.len() != 3 {
        return Err(NonexistenceError::NotThreeEigenvalues);
    }
    let n = spec.order() as i64;
    if n % 2 != 0 {
        return Err(NonexistenceError::OddOrder(n as usize));
    }
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]];
    let mut assignments = Vec::new();
    for p in PERMS {
        let (l, mu, (nu, c)) = (pairs[p[0]].0, pairs[p[1]].0, pairs[p[2]]);
        let rho = (nu - l) * (nu - mu);
        let size_ok = rho % 4 == 0 && n % c as i64 == 0 && rho.abs() / 4 == n / c as i64;
        assignments.push(RoleAssignment {
            lambda: l,
            mu,
            nu,
            c,
            sum_congruent: (l + mu - (n - 2)).rem_euclid(4) == 0,
            diagonal_is_four: (n - 1 + l * mu).abs() == 4,
            rho,
            block_size_matches: size_ok,
            nu_bounded: n % c as i64 == 0 && nu.abs() <= n / c as i64 - 1,
        });
    }
    let verdict = if assignments.iter().any(|a| a.hypotheses() && !a.conclusions()) {
        Verdict::Nonexistent
    } else {
        Verdict::Inconclusive
    };
    Ok(NonexistenceCertificate { spectrum: spec.clone(), assignments, verdict })
}

/// `M = σ(S - λI)(S - μI)` decomposed into blocks when its entries lie in `{0, ±4}`.
pub fn clique_structure_witness(s: &SeidelMatrix, lambda: i64, mu: i64) -> Result<PsdBlockDecomposition, NonexistenceError> {
    let m = s.shifted(lambda).mul(&s.shifted(mu));
    let diag = m.get(0, 0).clone();
    if diag.is_zero() {
        return Err(NonexistenceError::BadEntries);
    }
    let m = if diag.is_negative() { m.scale(&BigInt::from(-1)) } else { m };
    if psd_rank(&m).is_none() {
        return Err(NonexistenceError::NotPsd);
    }
    psd_block_decompose(&m, 4)
}

/// Seidel spectrum of `J - 2A - I` for a `k`-regular graph on `n` vertices.
/// `graph` lists the adjacency spectrum including `k`.
pub fn regular_graph_seidel_spectrum(n: usize, k: i64, graph: &[(i64, usize)]) -> Spectrum {
    let mut pairs = vec![(n as i64 - 2 * k - 1, 1)];
    for &(v, m) in graph {
        let m = if v == k { m - 1 } else { m };
        pairs.push((-2 * v - 1, m));
    }
    Spectrum::from_ints(&pairs)
}

/// One replayed argument.
#[derive(Clone, Debug, Serialize)]
pub struct CannedResult {
    pub claim: String,
    pub steps: Vec<String>,
    pub established: bool,
}

fn graph_case(graph: &[(i64, usize)]) -> CannedResult {
    let n: usize = graph.iter().map(|p| p.1).sum();
    let k = graph[0].0;
    let seidel = regular_graph_seidel_spectrum(n, k, graph);
    let cert = theorem_nonex_certificate(&seidel);
    let gs = Spectrum::from_ints(graph);
    let mut steps = vec![format!("graph spectrum {gs} (n={n}, k={k}) maps to Seidel spectrum {seidel}")];
    let established = match &cert {
        Ok(c) => {
            steps.extend(c.steps().into_iter().map(|(s, h)| format!("{s}: {}", if h { "holds" } else { "fails" })));
            c.verdict == Verdict::Nonexistent
        }
        Err(e) => {
            steps.push(e.to_string());
            false
        }
    };
    CannedResult { claim: format!("no regular graph with spectrum {gs}"), steps, established }
}

fn dimension_case(d: usize, lambda0: i64) -> CannedResult {
    let mut steps = Vec::new();
    let claim;
    let Some(n) = relative_bound_floor(d, lambda0) else {
        return CannedResult { claim: format!("d={d}"), steps: vec!["relative bound does not apply".into()], established: false };
    };
    claim = format!("at most {} equiangular lines in R^{d} at angle 1/{}", n - 1, -lambda0);
    steps.push(format!("relative bound: n ≤ {n}; assume n = {n}"));
    // μ is the integer closest to -λ0(n-d)/d.
    let num = -lambda0 * (n - d) as i64;
    let mu = (2 * num + d as i64).div_euclid(2 * d as i64);
    steps.push(format!("μ = round({num}/{d}) = {mu}"));
    let det_odd = (1 - n as i64).rem_euclid(2) == 1;
    if mu % 2 != 0 || !det_odd {
        steps.push("μ is odd or det S may be even; the multiplicity of μ is not forced to 0".into());
        return CannedResult { claim, steps, established: false };
    }
    steps.push(format!("det S ≡ 1-n ≡ {} (mod 4) is odd, so the even value μ is not an eigenvalue: m = 0", (1 - n as i64).rem_euclid(4)));
    let established = match maintnon_bound(n, d, lambda0, mu, 0) {
        Ok(b) if b.equality() => match &b.forced {
            Some(spec) => {
                steps.push(format!("AM-GM bound on Σ(λ_i-μ)² holds with equality: spectrum forced to {spec}"));
                match theorem_nonex_certificate(spec) {
                    Ok(c) => {
                        steps.extend(c.steps().into_iter().map(|(s, h)| format!("{s}: {}", if h { "holds" } else { "fails" })));
                        c.verdict == Verdict::Nonexistent
                    }
                    Err(e) => {
                        steps.push(e.to_string());
                        false
                    }
                }
            }
            None => {
                steps.push("equality but no integral forced spectrum".into());
                true
            }
        },
        Ok(b) if b.violated() => {
            steps.push("AM-GM bound on Σ(λ_i-μ)² is violated".into());
            true
        }
        Ok(_) => {
            steps.push("AM-GM bound holds strictly; nothing forced".into());
            false
        }
        Err(e) => {
            steps.push(e.to_string());
            false
        }
    };
    CannedResult { claim, steps, established }
}

/// One less than the relative bound at angle `1/-λ0`, when the argument
/// above rules the relative bound out.
pub fn improved_relative_bound(d: usize, lambda0: i64) -> Option<usize> {
    let n = relative_bound_floor(d, lambda0)?;
    dimension_case(d, lambda0).established.then(|| n - 1)
}

/// Replays the two regular-graph nonexistence results and the dimension 14 and 16
/// upper bounds.
pub fn canned_corollaries() -> Vec<CannedResult> {
    vec![
        graph_case(&[(11, 1), (2, 16), (-3, 9), (-4, 4)]),
        graph_case(&[(12, 1), (2, 16), (-3, 8), (-4, 5)]),
        dimension_case(14, -5),
        dimension_case(16, -5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn blocks(sizes: &[usize]) -> IntMatrix {
        let n: usize = sizes.iter().sum();
        let mut id = Vec::new();
        for (b, &k) in sizes.iter().enumerate() {
            id.extend(std::iter::repeat(b).take(k));
        }
        IntMatrix::from_fn(n, n, |i, j| i64::from(id[i] == id[j]))
    }

    #[test]
    fn decompose_examples() {
        let j4 = IntMatrix::from_fn(4, 4, |_, _| 1);
        assert_eq!(psd_block_decompose(&j4, 1).unwrap().sizes(), vec![4]);
        let bad = IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]).unwrap();
        assert!(matches!(psd_block_decompose(&bad, 1), Err(NonexistenceError::ForbiddenPattern(0, 1, 2))));
        let bad2 = IntMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, -1], vec![1, -1, 1]]).unwrap();
        assert!(matches!(psd_block_decompose(&bad2, 1), Err(NonexistenceError::ForbiddenPattern(..))));
        let twos = IntMatrix::from_fn(2, 2, |_, _| 2);
        assert!(matches!(psd_block_decompose(&twos, 1), Err(NonexistenceError::BadEntries)));
    }

    proptest! {
        #[test]
        fn decompose_recovers_switched_blocks(
            sizes in prop::collection::vec(1usize..5, 1..5),
            seed in any::<u64>(),
        ) {
            let base = blocks(&sizes);
            let n = base.rows();
            let sign: Vec<i64> = (0..n).map(|i| if seed >> (i % 64) & 1 == 1 { -1 } else { 1 }).collect();
            let perm: Vec<usize> = {
                let mut p: Vec<usize> = (0..n).collect();
                p.rotate_left((seed as usize) % n);
                p
            };
            let m = IntMatrix::from_fn(n, n, |i, j| {
                let (a, b) = (perm[i], perm[j]);
                let v = base.get(a, b).to_i64().unwrap();
                3 * v * sign[i] * sign[j]
            });
            let dec = psd_block_decompose(&m, 3).unwrap();
            let mut got = dec.sizes();
            let mut want = sizes.clone();
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
            prop_assert_eq!(dec.reconstruct(), m);
        }
    }

    #[test]
    fn certificate_examples() {
        let c = theorem_nonex_certificate(&Spectrum::from_ints(&[(-5, 16), (5, 9), (7, 5)])).unwrap();
        assert_eq!(c.verdict, Verdict::Nonexistent);
        let killer = c.assignments.iter().find(|a| a.hypotheses()).unwrap();
        assert_eq!((killer.nu, killer.rho, killer.block_size_matches, killer.nu_bounded), (7, 24, true, false));
        let c = theorem_nonex_certificate(&Spectrum::from_ints(&[(-5, 26), (7, 7), (9, 9)])).unwrap();
        assert_eq!(c.verdict, Verdict::Nonexistent);
        assert!(c.assignments.iter().any(|a| a.hypotheses() && a.nu == 7 && a.c == 7));
        let c = theorem_nonex_certificate(&Spectrum::from_ints(&[(-5, 24), (7, 15), (15, 1)])).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        // λ=-5, μ=7 meets both hypotheses, and the conclusions hold: 160/4 = 40/1, 15 ≤ 39.
        let hit: Vec<_> = c.assignments.iter().filter(|a| a.hypotheses()).collect();
        assert!(!hit.is_empty() && hit.iter().all(|a| a.nu == 15 && a.conclusions()));
        assert_eq!(c.assignments.len(), 6);
    }

    #[test]
    fn certificate_errors() {
        assert_eq!(
            theorem_nonex_certificate(&Spectrum::from_ints(&[(-1, 5), (5, 1)])).unwrap_err(),
            NonexistenceError::NotThreeEigenvalues
        );
        assert_eq!(
            theorem_nonex_certificate(&Spectrum::from_ints(&[(-3, 2), (1, 4), (3, 1)])).unwrap_err(),
            NonexistenceError::OddOrder(7)
        );
    }

    #[test]
    fn certificate_json_has_steps() {
        let c = theorem_nonex_certificate(&Spectrum::from_ints(&[(-5, 16), (5, 9), (7, 5)])).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["verdict"], "nonexistent");
        assert!(v["steps"].as_array().unwrap().len() >= 12);
    }

    #[test]
    fn witness_on_existing_matrix() {
        // J_2 ⊗ (J_3 - 2I_3) + I_6 has spectrum {[-3]^2, [1]^3, [3]^1}.
        let s = SeidelMatrix::from_fn(6, |i, j| i % 3 == j % 3);
        let spec = Spectrum::from_ints(&[(-3, 2), (1, 3), (3, 1)]);
        assert!(crate::spectra::certify_spectrum(&s, &spec).is_ok());
        assert_eq!(theorem_nonex_certificate(&spec).unwrap().verdict, Verdict::Inconclusive);
        let w = clique_structure_witness(&s, -3, 3).unwrap();
        assert_eq!(w.sizes(), vec![2, 2, 2]);
    }

    #[test]
    fn canned() {
        let r = canned_corollaries();
        assert_eq!(r.len(), 4);
        for c in &r {
            assert!(c.established, "{}: {:?}", c.claim, c.steps);
        }
        assert!(r[2].claim.starts_with("at most 29"));
        assert!(r[3].claim.starts_with("at most 41"));
        assert_eq!(
            regular_graph_seidel_spectrum(30, 12, &[(12, 1), (2, 16), (-3, 8), (-4, 5)]),
            Spectrum::from_ints(&[(-5, 16), (5, 9), (7, 5)])
        );
    }
}
