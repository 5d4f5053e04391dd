//! Paley matrices, tensor blowups, the order-16 Hadamard system, triangle
//! forests and the strongly regular examples.

use super::LineSystem;
use crate::algebraic::AlgebraicNumber;
use crate::error::ConstructionError;
use crate::matrix::{AmbientGraph, SeidelMatrix};
use crate::spectra::{certify_spectrum, delete_clique, exact_spectrum, find_switching_clique, min_eigenvalue_multiplicity, Spectrum};

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Multiplication table of GF(p^k), elements as base-p digit vectors packed in `0..q`.
fn field_mul_table(p: u64, k: u32) -> Vec<Vec<usize>> {
    let q = p.pow(k) as usize;
    let digits = |x: usize| -> Vec<u64> { (0..k).map(|i| (x as u64 / p.pow(i)) % p).collect() };
    let pack = |d: &[u64]| -> usize { d.iter().rev().fold(0u64, |a, &x| a * p + x) as usize };
    // poly product then reduce by a monic irreducible f of degree k
    let mulpoly = |a: &[u64], b: &[u64], f: &[u64]| -> Vec<u64> {
        let mut c = vec![0u64; 2 * k as usize];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + x * y) % p;
            }
        }
        for deg in (k as usize..c.len()).rev() {
            let t = c[deg];
            if t != 0 {
                for (i, &fi) in f.iter().enumerate() {
                    let idx = deg - k as usize + i;
                    c[idx] = (c[idx] + p * p - t * fi % p) % p;
                }
            }
        }
        c.truncate(k as usize);
        c
    };
    let irreducible = (0..q).find_map(|low| {
        let mut f = digits(low);
        f.push(1);
        // no roots is enough for k <= 3
        let has_root = (0..p).any(|x| f.iter().rev().fold(0, |a, &c| (a * x + c) % p) == 0);
        let reducible_quadratics = k == 4
            && (0..p * p).any(|g| {
                let g = [g % p, g / p, 1];
                // divisibility of f by x^2 + g1 x + g0
                let mut r = f.clone();
                for deg in (2..r.len()).rev() {
                    let t = r[deg];
                    for i in 0..3 {
                        let idx = deg - 2 + i;
                        r[idx] = (r[idx] + p * p - t * g[i] % p) % p;
                    }
                }
                r[..2].iter().all(|&c| c == 0)
            });
        (k == 1 || (!has_root && !reducible_quadratics)).then_some(f)
    });
    let f_full = irreducible.expect("an irreducible polynomial of each degree exists");
    (0..q).map(|a| (0..q).map(|b| pack(&mulpoly(&digits(a), &digits(b), &f_full))).collect()).collect()
}

/// Paley conference matrix: `s_xy` is the quadratic character of `x - y` in GF(q).
pub fn paley(q: u64) -> Result<SeidelMatrix, ConstructionError> {
    let (p, k) = prime_power(q).ok_or(ConstructionError::BadOrder(q))?;
    if q % 4 != 1 || k > 4 || q > 4096 {
        return Err(ConstructionError::BadOrder(q));
    }
    let n = q as usize;
    let mul = field_mul_table(p, k);
    let mut square = vec![false; n];
    for x in 1..n {
        square[mul[x][x]] = true;
    }
    let sub = |a: usize, b: usize| -> usize {
        let mut out = 0u64;
        let (mut a, mut b, mut place) = (a as u64, b as u64, 1u64);
        for _ in 0..k {
            out += ((a % p + p - b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out as usize
    };
    let s = SeidelMatrix::from_fn(n, |x, y| !square[sub(x, y)]);
    let root = AlgebraicNumber::surd(0, 1, 1, q as i64)?;
    let neg_root = AlgebraicNumber::surd(0, -1, 1, q as i64)?;
    let half = (n - 1) / 2;
    let spec = Spectrum::new([(root, half), (AlgebraicNumber::Int(0), 1), (neg_root, half)]);
    certify_spectrum(&s, &spec)?;
    Ok(s)
}

/// Symmetric conference matrix of order `q + 1`: a Paley matrix bordered by `+1`.
pub fn conference(order: usize) -> Result<SeidelMatrix, ConstructionError> {
    let q = order.saturating_sub(1) as u64;
    let p = paley(q)?;
    let s = SeidelMatrix::from_fn(order, |x, y| x > 0 && y > 0 && p.is_neg(x - 1, y - 1));
    let spec = Spectrum::new([
        (AlgebraicNumber::surd(0, -1, 1, q as i64)?, order / 2),
        (AlgebraicNumber::surd(0, 1, 1, q as i64)?, order / 2),
    ]);
    certify_spectrum(&s, &spec)?;
    Ok(s)
}

/// Pairs from `m` points, `-1` between disjoint pairs: `m(m-1)/2` lines in
/// dimension `m` at angle 1/3 for `m >= 5`.
pub fn triangular(m: usize) -> Result<(SeidelMatrix, Spectrum), ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::BadDimension(m));
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let n = pairs.len();
    let s = SeidelMatrix::from_fn(n, |x, y| {
        let (a, b) = (pairs[x], pairs[y]);
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    });
    let mi = m as i64;
    let spec = Spectrum::from_ints(&[(4 * (mi - 2) - n as i64 + 1, 1), (2 * mi - 7, m - 1), (-3, m * (m - 3) / 2)]);
    let got = certify_spectrum(&s, &spec)?;
    Ok((s, got))
}

/// `J_b ⊗ (S - I_a) + I_ab` for a two-eigenvalue `S` with integer eigenvalues.
pub fn tensor_blowup(s: &SeidelMatrix, b: usize) -> Result<(SeidelMatrix, Spectrum), ConstructionError> {
    let spec = exact_spectrum(s).ok_or(ConstructionError::NotTwoEigenvalue)?;
    let pairs = spec.int_pairs().ok_or(ConstructionError::NotTwoEigenvalue)?;
    if pairs.len() != 2 || b < 2 {
        return Err(ConstructionError::NotTwoEigenvalue);
    }
    let a = s.n();
    let ((l0, m0), (l1, m1)) = (pairs[0], pairs[1]);
    let bb = b as i64;
    let out = SeidelMatrix::from_fn(a * b, |x, y| {
        let (i, j) = (x % a, y % a);
        // (S - I)_ij, with the diagonal -1 off the block diagonal
        if i == j { true } else { s.is_neg(i, j) }
    });
    let want = Spectrum::from_ints(&[(1 - (1 - l0) * bb, m0), (1, a * (b - 1)), ((l1 - 1) * bb + 1, m1)]);
    let got = certify_spectrum(&out, &want)?;
    Ok((out, got))
}

fn hadamard16() -> SeidelMatrix {
    // (J4 - 2 I4) ⊗ (J4 - 2 I4): entry -1 iff exactly one factor entry is diagonal
    SeidelMatrix::from_fn(16, |x, y| (x / 4 == y / 4) != (x % 4 == y % 4))
}

/// 16 lines of rank 10 at angle 1/5 from `H - I_16`.
pub fn hadamard16_system() -> Result<LineSystem, ConstructionError> {
    let s = hadamard16();
    certify_spectrum(&s, &Spectrum::from_ints(&[(-5, 6), (3, 10)]))?;
    LineSystem::from_two_eigenvalue(&s, -5, 3, &(0..16).collect::<Vec<_>>())
}

/// Seidel matrix of `(d-2)/2` disjoint triangles and an isolated vertex.
///
/// Returns the matrix and its embedding dimension at smallest eigenvalue -5.
pub fn dynkin_triangles(d: usize) -> Result<(SeidelMatrix, usize), ConstructionError> {
    if d < 6 || d % 2 == 1 {
        return Err(ConstructionError::BadDimension(d));
    }
    let t = (d - 2) / 2;
    let n = 3 * t + 1;
    let s = SeidelMatrix::from_fn(n, |x, y| y < 3 * t && x / 3 == y / 3);
    let dim = min_eigenvalue_multiplicity(&s, -5)?;
    if dim != d {
        return Err(ConstructionError::Invalid(format!("embedding dimension {dim}, expected {d}")));
    }
    Ok((s, dim))
}

/// Collinearity graph of the symplectic generalized quadrangle W(3), an SRG(40,12,2,4).
pub fn symplectic_srg40() -> AmbientGraph {
    let mut points: Vec<[i64; 4]> = Vec::new();
    for code in 1..81 {
        let v = [code % 3, code / 3 % 3, code / 9 % 3, code / 27];
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            points.push(v);
        }
    }
    let form = |x: &[i64; 4], y: &[i64; 4]| (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]).rem_euclid(3);
    AmbientGraph::from_fn(points.len(), |a, b| form(&points[a], &points[b]) == 0)
}

/// Lines of PG(3,2) as 2-subspaces `{a, b, a^b}` of GF(2)^4, one triple of point masks each.
fn pg32_lines() -> Vec<[u8; 3]> {
    let mut lines = Vec::new();
    for a in 1u8..16 {
        for b in a + 1..16 {
            let c = a ^ b;
            if c > b {
                lines.push([a, b, c]);
            }
        }
    }
    lines
}

/// A regular two-graph on 36 points with spectrum `{[-5]^21, [7]^15}`.
///
/// Skew lines of PG(3,2) form an SRG(35,16,6,8); since 16 = 2 * 8, adding an
/// isolated vertex gives a regular two-graph.
pub fn regular_two_graph_36() -> Result<SeidelMatrix, ConstructionError> {
    let lines = pg32_lines();
    let meets = |a: &[u8; 3], b: &[u8; 3]| a.iter().any(|x| b.contains(x));
    let s = SeidelMatrix::from_fn(36, |x, y| x > 0 && !meets(&lines[x - 1], &lines[y - 1]));
    certify_spectrum(&s, &Spectrum::from_ints(&[(-5, 21), (7, 15)]))?;
    Ok(s)
}

/// The 36-point two-graph with an 8-clique deleted.
#[derive(Clone, Debug)]
pub struct Ex415 {
    pub source: SeidelMatrix,
    pub clique: Vec<usize>,
    pub seidel: SeidelMatrix,
    pub spectrum: Spectrum,
    pub lines: LineSystem,
}

pub fn ex415_system() -> Result<Ex415, ConstructionError> {
    let source = regular_two_graph_36()?;
    let clique = find_switching_clique(&source, 8).ok_or(ConstructionError::CliqueNotFound(8))?;
    let seidel = delete_clique(&source, &clique)?;
    let spectrum = certify_spectrum(&seidel, &Spectrum::from_ints(&[(-5, 14), (3, 7), (7, 7)]))?;
    let keep: Vec<usize> = (0..36).filter(|v| !clique.contains(v)).collect();
    let lines = LineSystem::from_two_eigenvalue(&source, -5, 7, &keep)?;
    Ok(Ex415 { source, clique, seidel, spectrum, lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonexistence::regular_graph_seidel_spectrum;
    use crate::spectra::two_ev_submatrix_spectrum;

    #[test]
    fn paley_spectra() {
        for q in [5, 9, 13, 17, 25] {
            let s = paley(q).unwrap();
            assert_eq!(s.n(), q as usize);
        }
        assert!(matches!(paley(7), Err(ConstructionError::BadOrder(7))));
        assert!(matches!(paley(15), Err(ConstructionError::BadOrder(15))));
    }

    #[test]
    fn paley_five_is_the_pentagon() {
        let s = paley(5).unwrap();
        // quadratic residues mod 5 are ±1, so s_xy = +1 on pentagon edges
        for x in 0..5 {
            assert!(!s.is_neg(x, (x + 1) % 5));
            assert!(s.is_neg(x, (x + 2) % 5));
        }
    }

    #[test]
    fn tensor_blowup_examples() {
        let (t, spec) = tensor_blowup(&SeidelMatrix::all_plus(2), 2).unwrap();
        assert_eq!(t.n(), 4);
        // direct: J2 ⊗ [[-1,1],[1,-1]] + I4 has eigenvalues 2*0, 2*(-2) plus 1
        assert_eq!(spec.pairs(), Spectrum::from_ints(&[(-3, 1), (1, 3)]).pairs());
        let (t, spec) = tensor_blowup(&SeidelMatrix::all_plus(3), 2).unwrap();
        assert_eq!(t, SeidelMatrix::from_fn(6, |i, j| i % 3 == j % 3));
        assert_eq!(spec.pairs(), Spectrum::from_ints(&[(-3, 2), (1, 3), (3, 1)]).pairs());
        assert!(tensor_blowup(&paley(5).unwrap(), 2).is_err());
    }

    #[test]
    fn tensor_family_lower_bound() {
        for d in [7usize, 9, 11, 15] {
            let a = (d - 1) / 2;
            let (t, _) = tensor_blowup(&SeidelMatrix::all_plus(a), 3).unwrap();
            assert_eq!(t.n(), 3 * (d - 1) / 2);
            assert_eq!(min_eigenvalue_multiplicity(&t, -5).unwrap(), d);
        }
    }

    #[test]
    fn conference_and_triangular() {
        let c = conference(26).unwrap();
        assert_eq!(c.n(), 26);
        assert!(conference(8).is_err());
        // deleting a 6-clique leaves 20 lines in dimension 12
        let clique = find_switching_clique(&c, 6).unwrap();
        let t = delete_clique(&c, &clique).unwrap();
        certify_spectrum(&t, &Spectrum::from_ints(&[(-5, 8), (1, 5), (5, 7)])).unwrap();
        assert_eq!(min_eigenvalue_multiplicity(&t, -5).unwrap(), 12);
        let (t8, _) = triangular(8).unwrap();
        assert_eq!((t8.n(), min_eigenvalue_multiplicity(&t8, -3).unwrap()), (28, 7));
        let (t5, spec) = triangular(5).unwrap();
        assert_eq!(spec.pairs(), Spectrum::from_ints(&[(-3, 5), (3, 5)]).pairs());
        assert_eq!(t5.n(), 10);
    }

    #[test]
    fn hadamard_and_triangles() {
        let h = hadamard16_system().unwrap();
        assert_eq!((h.len(), h.rank(), h.angle_inv), (16, 10, 5));
        let (s, d) = dynkin_triangles(8).unwrap();
        assert_eq!((s.n(), d), (10, 8));
        assert!(matches!(dynkin_triangles(4), Err(ConstructionError::BadDimension(4))));
        assert!(dynkin_triangles(7).is_err());
    }

    #[test]
    fn srg40_pipeline() {
        let g = symplectic_srg40();
        assert_eq!(g.n(), 40);
        assert!(g.degrees().iter().all(|&k| k == 12));
        let graph = Spectrum::from_ints(&[(-4, 15), (2, 24), (12, 1)]);
        let want = regular_graph_seidel_spectrum(40, 12, &graph.int_pairs().unwrap());
        assert_eq!(want, Spectrum::from_ints(&[(-5, 24), (7, 15), (15, 1)]));
        certify_spectrum(&g.seidel(), &want).unwrap();
    }

    #[test]
    fn two_graph_36_and_deletion() {
        let e = ex415_system().unwrap();
        let (predicted, _) = two_ev_submatrix_spectrum(-5, 7, 36, 21, 8).unwrap();
        assert_eq!(e.spectrum.pairs(), predicted.pairs());
        assert_eq!((e.lines.len(), e.lines.rank(), e.lines.angle_inv), (28, 14, 5));
        assert_eq!(e.lines.seidel(), e.seidel.clone());
    }
}
