//! Real mutually unbiased bases in dimension 4^i and the column systems built
//! from them.

use super::LineSystem;
use crate::error::{BoundsError, ConstructionError};
use serde::Serialize;

/// `m/2` Hadamard matrices `H_j = sqrt(m) B_j`; the identity basis is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MubSet {
    pub m: usize,
    pub hadamards: Vec<Vec<Vec<i64>>>,
}

fn col_dot(a: &[Vec<i64>], b: &[Vec<i64>], x: usize, y: usize) -> i64 {
    a.iter().zip(b).map(|(ra, rb)| ra[x] * rb[y]).sum()
}

impl MubSet {
    /// `H^T H = m I`, cross products `±sqrt(m)`, first rows all +1.
    pub fn check(&self) -> Result<(), ConstructionError> {
        let m = self.m;
        let root = (m as f64).sqrt().round() as i64;
        let bad = |msg: String| Err(ConstructionError::Invalid(msg));
        for (j, h) in self.hadamards.iter().enumerate() {
            if h.len() != m || h.iter().any(|r| r.len() != m || r.iter().any(|&x| x != 1 && x != -1)) {
                return bad(format!("H{j} is not a ±1 matrix of order {m}"));
            }
            if h[0].iter().any(|&x| x != 1) {
                return bad(format!("first row of H{j} is not all ones"));
            }
            for x in 0..m {
                for y in 0..m {
                    let want = if x == y { m as i64 } else { 0 };
                    if col_dot(h, h, x, y) != want {
                        return bad(format!("H{j} is not Hadamard"));
                    }
                }
            }
            for (k, g) in self.hadamards.iter().enumerate().skip(j + 1) {
                for x in 0..m {
                    for y in 0..m {
                        if col_dot(h, g, x, y).abs() != root {
                            return bad(format!("H{j} and H{k} are not unbiased"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Alternating GF(2) form on `t` coordinates as an upper-triangle bitmask:
/// bit `a * t + b` (a < b) set iff the pair (a, b) is in the form.
fn alternating_rank(form: u32, t: usize) -> usize {
    let mut rows: Vec<u32> = (0..t)
        .map(|a| (0..t).filter(|&b| a != b && form >> (a.min(b) * t + a.max(b)) & 1 == 1).fold(0, |r, b| r | 1 << b))
        .collect();
    let mut rank = 0;
    for col in 0..t {
        if let Some(p) = (rank..t).find(|&i| rows[i] >> col & 1 == 1) {
            rows.swap(rank, p);
            for i in 0..t {
                if i != rank && rows[i] >> col & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

/// `m/2` alternating forms (the zero form included) with nonsingular pairwise sums.
fn kerdock_forms(t: usize) -> Option<Vec<u32>> {
    let pairs: Vec<u32> = (0..t).flat_map(|a| (a + 1..t).map(move |b| 1u32 << (a * t + b))).collect();
    let all: Vec<u32> = (0u32..1 << pairs.len())
        .map(|bits| (0..pairs.len()).filter(|&k| bits >> k & 1 == 1).fold(0, |f, k| f | pairs[k]))
        .collect();
    let nonsingular: Vec<u32> = all.into_iter().filter(|&f| f != 0 && alternating_rank(f, t) == t).collect();
    let want = 1usize << (t - 1);
    let mut chosen = vec![0u32];
    fn grow(cands: &[u32], t: usize, want: usize, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == want {
            return true;
        }
        for (k, &f) in cands.iter().enumerate() {
            if chosen.len() + cands.len() - k < want {
                return false;
            }
            let rest: Vec<u32> = cands[k + 1..].iter().copied().filter(|&g| alternating_rank(f ^ g, t) == t).collect();
            chosen.push(f);
            if grow(&rest, t, want, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    grow(&nonsingular, t, want, &mut chosen).then_some(chosen)
}

/// `H[x][y] = (-1)^(q(x) + x.y)` for the quadratic form `q` with polar form `form`.
fn hadamard_of(form: u32, t: usize) -> Vec<Vec<i64>> {
    let m = 1usize << t;
    let q = |x: usize| -> u32 {
        let mut v = 0;
        for a in 0..t {
            for b in a + 1..t {
                v ^= (form >> (a * t + b) & 1) & (x >> a & x >> b & 1) as u32;
            }
        }
        v
    };
    (0..m)
        .map(|x| (0..m).map(|y| if (q(x) + (x & y).count_ones()) % 2 == 0 { 1 } else { -1 }).collect())
        .collect()
}

/// A complete set of real MUBs in dimension `4^i`, for `i` in 1..=2.
pub fn real_mub_complete(i: u32) -> Result<MubSet, ConstructionError> {
    if !(1..=2).contains(&i) {
        return Err(ConstructionError::UnsupportedExponent(i));
    }
    let t = 2 * i as usize;
    let forms = kerdock_forms(t).ok_or(ConstructionError::UnsupportedExponent(i))?;
    let set = MubSet { m: 1 << t, hadamards: forms.iter().map(|&f| hadamard_of(f, t)).collect() };
    set.check()?;
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LargesVariant {
    /// `m(m/2+1)` lines in dimension `3m/2+1`.
    A,
    /// The first line dropped: `m(m/2+1)-1` lines in dimension at most `3m/2`.
    B,
    /// The identity block dropped: `mj` lines in dimension `m+j-1`.
    C,
}

impl std::str::FromStr for LargesVariant {
    type Err = ConstructionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(LargesVariant::A),
            "b" | "B" => Ok(LargesVariant::B),
            "c" | "C" => Ok(LargesVariant::C),
            other => Err(ConstructionError::BadVariantParams(format!("unknown variant {other}"))),
        }
    }
}

/// Columns of the block matrix stacking the scaled bases over `I ⊗ e_m`.
///
/// Vectors are scaled to `(H_k e_r, m^(1/4) e_k)`, squared norm `m + sqrt(m)`. For odd
/// `i` the irrational `m^(1/4)` coordinate is split into two equal integer
/// coordinates, which leaves every inner product unchanged.
pub fn larges_construction(i: u32, variant: LargesVariant, j: usize) -> Result<LineSystem, ConstructionError> {
    let mub = real_mub_complete(i)?;
    let m = mub.m;
    let root = 1i64 << i;
    let blocks: Vec<usize> = match variant {
        LargesVariant::A | LargesVariant::B => (0..=m / 2).collect(),
        LargesVariant::C => {
            if !(1..=m / 2).contains(&j) {
                return Err(ConstructionError::BadVariantParams(format!("j = {j} outside 1..={}", m / 2)));
            }
            (1..=j).collect()
        }
    };
    let odd = i % 2 == 1;
    let quarter = 1i64 << (i / 2);
    let tail = if odd { 2 } else { 1 };
    let dim = m + tail * (blocks.last().copied().unwrap_or(0) + 1);
    let mut vectors = Vec::new();
    for &k in &blocks {
        for r in 0..m {
            if variant == LargesVariant::B && k == 0 && r == 0 {
                continue;
            }
            let mut v = vec![0i64; dim];
            for x in 0..m {
                v[x] = if k == 0 { root * i64::from(x == r) } else { mub.hadamards[k - 1][x][r] };
            }
            for c in 0..tail {
                v[m + tail * k + c] = quarter;
            }
            vectors.push(v);
        }
    }
    let ls = LineSystem::new(vectors, root + 1)?;
    let rank = ls.rank();
    let (count, ok) = match variant {
        LargesVariant::A => (m * (m / 2 + 1), rank == 3 * m / 2 + 1),
        LargesVariant::B => (m * (m / 2 + 1) - 1, rank <= 3 * m / 2),
        LargesVariant::C => (m * j, rank == m + j - 1),
    };
    if ls.len() != count || !ok {
        return Err(ConstructionError::Invalid(format!("{} lines of rank {rank}", ls.len())));
    }
    Ok(ls)
}

/// Lower bound on `N(d)` for `d ≥ 25` from the MUB column systems.
pub fn corollary_newthm_lower(d: usize) -> Result<u64, BoundsError> {
    if d < 25 {
        return Err(BoundsError::DimensionTooSmall(d));
    }
    let mut m: u64 = 16;
    while 6 * m < d as u64 {
        m *= 4;
    }
    let d = d as u64;
    Ok(if 8 * d < 33 * m {
        m * (m / 2 + 1)
    } else if d < 6 * m {
        4 * m * (d - 4 * m + 1)
    } else {
        4 * m * (2 * m + 1) - 1
    })
}

/// `ceil((32 d^2 + 328 d + 296) / 1089)`.
pub fn corollary_s2t1_lower(d: usize) -> u64 {
    let d = d as u64;
    (32 * d * d + 328 * d + 296).div_ceil(1089)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mub_order_four() {
        let s = real_mub_complete(1).unwrap();
        assert_eq!(s.hadamards.len(), 2);
        let (h1, h2) = (&s.hadamards[0], &s.hadamards[1]);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(col_dot(h1, h1, x, y), if x == y { 4 } else { 0 });
                assert_eq!(col_dot(h1, h2, x, y).abs(), 2);
            }
        }
    }

    #[test]
    fn four_bases_exist_in_dimension_four_by_exhaustion() {
        // All order-4 Hadamard matrices with first row all ones; a pair unbiased
        // to each other completes the identity to three MUBs.
        let mut hs: Vec<Vec<Vec<i64>>> = Vec::new();
        for bits in 0u32..1 << 12 {
            let mut h = vec![vec![1i64; 4]; 4];
            for k in 0..12 {
                h[1 + k / 4][k % 4] = if bits >> k & 1 == 1 { -1 } else { 1 };
            }
            if (0..4).all(|x| (0..4).all(|y| col_dot(&h, &h, x, y) == if x == y { 4 } else { 0 })) {
                hs.push(h);
            }
        }
        let unbiased = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| (0..4).all(|x| (0..4).all(|y| col_dot(a, b, x, y).abs() == 2));
        let pairs = hs.iter().enumerate().flat_map(|(i, a)| hs[i + 1..].iter().map(move |b| (a, b))).filter(|(a, b)| unbiased(a, b)).count();
        assert!(pairs > 0);
        let ours = real_mub_complete(1).unwrap();
        assert!(hs.contains(&ours.hadamards[0]) && hs.contains(&ours.hadamards[1]));
    }

    #[test]
    fn mub_order_sixteen() {
        let s = real_mub_complete(2).unwrap();
        assert_eq!(s.hadamards.len(), 8);
        assert!(s.check().is_ok());
        assert!(matches!(real_mub_complete(3), Err(ConstructionError::UnsupportedExponent(3))));
    }

    #[test]
    fn larges_examples() {
        let a1 = larges_construction(1, LargesVariant::A, 0).unwrap();
        assert_eq!((a1.len(), a1.rank(), a1.angle_inv), (12, 7, 3));
        let a2 = larges_construction(2, LargesVariant::A, 0).unwrap();
        assert_eq!((a2.len(), a2.rank(), a2.angle_inv), (144, 25, 5));
        let c = larges_construction(2, LargesVariant::C, 1).unwrap();
        assert_eq!((c.len(), c.rank()), (16, 16));
        assert!(larges_construction(2, LargesVariant::C, 9).is_err());
    }

    #[test]
    fn larges_closed_forms() {
        for i in 1..=2u32 {
            let m = 1usize << (2 * i);
            let b = larges_construction(i, LargesVariant::B, 0).unwrap();
            assert_eq!(b.len(), m * (m / 2 + 1) - 1);
            assert_eq!(b.rank(), 3 * m / 2);
            for j in 1..=m / 2 {
                let c = larges_construction(i, LargesVariant::C, j).unwrap();
                assert_eq!((c.len(), c.rank()), (m * j, m + j - 1));
            }
        }
    }

    #[test]
    fn corollary_values() {
        assert_eq!(corollary_newthm_lower(25).unwrap(), 144);
        assert_eq!(corollary_newthm_lower(65).unwrap(), 144);
        assert_eq!(corollary_newthm_lower(66).unwrap(), 192);
        assert_eq!(corollary_newthm_lower(95).unwrap(), 64 * 32);
        assert_eq!(corollary_newthm_lower(96).unwrap(), 2111);
        assert_eq!(corollary_newthm_lower(97).unwrap(), 64 * 33);
        assert!(corollary_newthm_lower(24).is_err());
        assert_eq!(corollary_s2t1_lower(23), 23);
        assert_eq!(corollary_s2t1_lower(2), 1);
        assert_eq!(corollary_s2t1_lower(95), 295);
    }
}
