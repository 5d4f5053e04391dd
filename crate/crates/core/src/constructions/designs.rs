//! Line systems from the Netto triple system on 19 points and the Witt design.

use super::LineSystem;
use crate::error::ConstructionError;
use crate::spectra::Spectrum;

/// The 57 blocks `{4^i + j, 7 * 4^i + j, 11 * 4^i + j} mod 19` as residue triples.
pub fn netto_blocks() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..3u32 {
        let p = 4usize.pow(i);
        for j in 0..19 {
            let mut b = [(p + j) % 19, (7 * p + j) % 19, (11 * p + j) % 19];
            b.sort_unstable();
            out.push(b);
        }
    }
    out
}

/// 48 lines in dimension 17 at angle 1/5 from the blocks avoiding the point 1.
///
/// Residue 0 stands for the point 19. Each vector is `6 e_B + e_1 - e_X`.
pub fn netto_sts19_system() -> Result<LineSystem, ConstructionError> {
    let vectors = netto_blocks()
        .into_iter()
        .filter(|b| !b.contains(&1))
        .map(|b| {
            let mut v = vec![-1i64; 19];
            v[1] += 1;
            for x in b {
                v[x] += 6;
            }
            v
        })
        .collect();
    LineSystem::new(vectors, 5)
}

pub fn netto_spectrum() -> Spectrum {
    Spectrum::from_ints(&[(-5, 31), (7, 8), (11, 9)])
}

// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for k in 0..5 {
        let (u, u2) = (1 + k, 1 + (k + 1) % 5);
        let (l, l2) = (6 + k, 6 + (k + 1) % 5);
        e.extend([(0, u), (u, u2), (11, l), (l, l2), (u, l), (u2, l)]);
    }
    e
}

/// The 4096 codewords of the extended binary Golay code as 24-bit masks,
/// generated by `[I | J - A]` with `A` the icosahedron adjacency matrix.
pub fn golay_code() -> Result<Vec<u32>, ConstructionError> {
    let mut adj = [[false; 12]; 12];
    for (a, b) in icosahedron_edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let gens: Vec<u32> = (0..12)
        .map(|r| (0..12).filter(|&c| !adj[r][c]).fold(1u32 << r, |w, c| w | 1 << (12 + c)))
        .collect();
    let code: Vec<u32> = (0u32..1 << 12)
        .map(|bits| (0..12).filter(|&k| bits >> k & 1 == 1).fold(0, |w, k| w ^ gens[k]))
        .collect();
    let mut weights = [0usize; 25];
    for &w in &code {
        weights[w.count_ones() as usize] += 1;
    }
    let expected = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];
    let ok = (0..25).all(|k| weights[k] == expected.iter().find(|e| e.0 == k).map_or(0, |e| e.1));
    if !ok {
        return Err(ConstructionError::GolayConstructionFailed(format!("weight distribution {weights:?}")));
    }
    Ok(code)
}

/// Supports of the weight-8 codewords.
pub fn octads() -> Result<Vec<u32>, ConstructionError> {
    Ok(golay_code()?.into_iter().filter(|w| w.count_ones() == 8).collect())
}

fn witt_vector(b: u32) -> Vec<i64> {
    (0..24).map(|x| 4 * i64::from(b >> x & 1) - 4 * i64::from(x == 0) - 1).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// 72 lines in dimension 19 at angle 1/5 from octads through the point 1.
///
/// Points 1, 2, 3 are coordinates 0, 1, 2. Two octads `B1`, `B2` avoiding
/// point 1 and meeting exactly in {2, 3} are fixed (the first such pair in
/// code order); the lines are the vectors `4 e_B - 4 e_1 - e_X` of octads
/// through 1 orthogonal to `e_1 - e_2`, `e_1 - e_3`, `v_B1` and `v_B2`.
pub fn witt_asch_system() -> Result<LineSystem, ConstructionError> {
    let oct = octads()?;
    let pair = 0b110u32;
    let avoid: Vec<u32> = oct.iter().copied().filter(|b| b & 1 == 0 && b & pair == pair).collect();
    let (b1, b2) = avoid
        .iter()
        .enumerate()
        .flat_map(|(k, &x)| avoid[k + 1..].iter().map(move |&y| (x, y)))
        .find(|(x, y)| x & y == pair)
        .ok_or_else(|| ConstructionError::GolayConstructionFailed("no octad pair meeting in {2, 3}".into()))?;
    let (v1, v2) = (witt_vector(b1), witt_vector(b2));
    let vectors: Vec<Vec<i64>> = oct
        .iter()
        .filter(|&&b| b & 1 == 1)
        .map(|&b| witt_vector(b))
        .filter(|v| v[0] == v[1] && v[0] == v[2] && dot(v, &v1) == 0 && dot(v, &v2) == 0)
        .collect();
    LineSystem::new(vectors, 5)
}

pub fn witt_spectrum() -> Spectrum {
    Spectrum::from_ints(&[(-5, 53), (13, 16), (19, 3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn netto_is_a_steiner_triple_system() {
        let blocks = netto_blocks();
        assert_eq!(blocks.len(), 57);
        let mut seen = std::collections::BTreeSet::new();
        for b in &blocks {
            for (x, y) in [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] {
                assert!(seen.insert((x, y)), "pair {x},{y} twice");
            }
        }
        assert_eq!(seen.len(), 19 * 18 / 2);
        assert_eq!(blocks.iter().filter(|b| !b.contains(&1)).count(), 48);
    }

    #[test]
    fn netto_system() {
        let ls = netto_sts19_system().unwrap();
        assert_eq!((ls.len(), ls.rank(), ls.scale, ls.angle_inv), (48, 17, 90, 5));
        let mut e1 = vec![0i64; 19];
        e1[1] = 1;
        for v in &ls.vectors {
            assert_eq!(dot(v, &e1), 0);
            assert_eq!(v.iter().sum::<i64>(), 0);
        }
        ls.certify(&netto_spectrum()).unwrap();
    }

    #[test]
    fn octad_counts() {
        let oct = octads().unwrap();
        assert_eq!(oct.len(), 759);
        assert_eq!(oct.iter().filter(|b| *b & 1 == 1).count(), 253);
        // Steiner system S(5, 8, 24): any 5 points lie in exactly one octad
        for five in [0b11111u32, 0b1000_0100_0010_0001_0001] {
            assert_eq!(oct.iter().filter(|b| *b & five == five).count(), 1);
        }
    }

    #[test]
    fn witt_system() {
        let ls = witt_asch_system().unwrap();
        assert_eq!((ls.len(), ls.rank(), ls.scale), (72, 19, 80));
        ls.certify(&witt_spectrum()).unwrap();
    }
}
