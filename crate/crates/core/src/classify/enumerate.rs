//! Generation of switching classes and of unlabeled graphs by one-vertex
//! extension, deduplicated on canonical certificates.

use super::canon::{canonize, full_mask, GraphRows, TwoGraphRows};
use super::{check_order, rows64, ClassFingerprint};
use crate::error::ClassifyError;
use crate::matrix::{AmbientGraph, SeidelMatrix};
use rayon::prelude::*;
use std::collections::BTreeSet;

pub const SWITCHING_CLASS_LIMIT: usize = 10;
pub const EULER_LIMIT: usize = 9;

/// Canonical representatives of all switching classes of order `n`, sorted.
pub fn switching_class_reps(n: usize) -> Result<Vec<SeidelMatrix>, ClassifyError> {
    switching_class_reps_with_limit(n, SWITCHING_CLASS_LIMIT)
}

/// As [`switching_class_reps`] with an explicit order ceiling (order 11 takes hours).
pub fn switching_class_reps_with_limit(n: usize, limit: usize) -> Result<Vec<SeidelMatrix>, ClassifyError> {
    check_order(n, limit)?;
    let mut level: Vec<Vec<u64>> = vec![vec![]];
    for k in 1..=n {
        level = extend_level(&level, k, |rows| canonize(&TwoGraphRows(rows)).certificate, true);
    }
    Ok(level.iter().map(|r| SeidelMatrix::from_rows64(n, r)).collect())
}

/// All classes with fingerprints.
pub fn enumerate_switching_classes(n: usize) -> Result<Vec<ClassFingerprint>, ClassifyError> {
    Ok(switching_class_reps(n)?.into_par_iter().map(ClassFingerprint::of).collect())
}

/// Extends each structure on `k-1` points by a new point in every way.
///
/// For two-graphs the new point can be switched, so its first entry is fixed.
fn extend_level(
    parents: &[Vec<u64>],
    k: usize,
    canon: impl Fn(&[u64]) -> Vec<u64> + Sync,
    fix_first: bool,
) -> Vec<Vec<u64>> {
    let old = k - 1;
    let free = if fix_first && old > 0 { old - 1 } else { old };
    let found: Vec<BTreeSet<Vec<u64>>> = parents
        .par_iter()
        .map(|p| {
            let mut local = BTreeSet::new();
            let mut rows = p.clone();
            rows.push(0);
            for col in 0..1u64 << free {
                let col = if fix_first && old > 0 { col << 1 } else { col };
                for (i, r) in rows.iter_mut().enumerate().take(old) {
                    *r = (p[i] & !(1u64 << old)) | ((col >> i & 1) << old);
                }
                rows[old] = col;
                local.insert(canon(&rows));
            }
            local
        })
        .collect();
    let mut all = BTreeSet::new();
    for s in found {
        all.extend(s);
    }
    all.into_iter().collect()
}

/// Canonical forms of all unlabeled graphs on `n` vertices, sorted.
pub fn enumerate_graphs(n: usize) -> Result<Vec<AmbientGraph>, ClassifyError> {
    check_order(n, EULER_LIMIT)?;
    let mut level: Vec<Vec<u64>> = vec![vec![]];
    for k in 1..=n {
        level = extend_level(&level, k, |rows| canonize(&GraphRows(rows)).certificate, false);
    }
    Ok(level.iter().map(|r| AmbientGraph::from_rows64(n, r)).collect())
}

/// Unlabeled Euler graphs on `n` vertices.
///
/// Every Euler graph is a graph on `n-1` vertices plus one vertex joined to
/// exactly the odd-degree vertices, so closing each graph on `n-1` vertices
/// and deduplicating reaches all of them.
pub fn enumerate_euler_graphs(n: usize) -> Result<Vec<AmbientGraph>, ClassifyError> {
    check_order(n, EULER_LIMIT)?;
    if n == 0 {
        return Ok(vec![AmbientGraph::empty(0)]);
    }
    let smaller = enumerate_graphs(n - 1)?;
    let found: BTreeSet<Vec<u64>> = smaller
        .par_iter()
        .map(|g| {
            let m = n - 1;
            let mut rows: Vec<u64> = (0..m).map(|i| g.row64(i)).collect();
            let odd: u64 = (0..m).filter(|&i| rows[i].count_ones() % 2 == 1).fold(0, |a, i| a | 1 << i);
            for (i, r) in rows.iter_mut().enumerate() {
                *r |= (odd >> i & 1) << m;
            }
            rows.push(odd);
            canonize(&GraphRows(&rows)).certificate
        })
        .collect();
    Ok(found.iter().map(|r| AmbientGraph::from_rows64(n, r)).collect())
}

/// The Euler ambient graphs among the switchings of `s` (labeled, each once).
pub fn euler_graphs_in_class(s: &SeidelMatrix) -> Result<Vec<AmbientGraph>, ClassifyError> {
    check_order(s.n(), 16)?;
    let n = s.n();
    let rows = rows64(s);
    let full = full_mask(n);
    let count = if n == 0 { 1u64 } else { 1u64 << (n - 1) };
    let mut out = Vec::new();
    for w in 0..count {
        let w = w << 1;
        let adj: Vec<u64> = (0..n)
            .map(|i| {
                let own = if w >> i & 1 == 1 { full } else { 0 };
                (rows[i] ^ w ^ own) & !(1u64 << i)
            })
            .collect();
        if adj.iter().all(|r| r.count_ones() % 2 == 0) {
            out.push(AmbientGraph::from_rows64(n, &adj));
        }
    }
    Ok(out)
}

/// For odd order, the unique Euler graph in the switching class.
pub fn euler_representative(s: &SeidelMatrix) -> Result<Option<AmbientGraph>, ClassifyError> {
    if s.n() % 2 == 0 {
        return Ok(None);
    }
    let mut found = euler_graphs_in_class(s)?;
    Ok(if found.len() == 1 { found.pop() } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| switching_class_reps(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 16, 54]);
    }

    #[test]
    fn small_graph_counts() {
        // unlabeled graphs on 1..6 vertices (OEIS A000088)
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn euler_counts_match_classes() {
        for n in 1..=7 {
            assert_eq!(enumerate_euler_graphs(n).unwrap().len(), switching_class_reps(n).unwrap().len(), "n = {n}");
        }
    }

    #[test]
    fn unique_euler_representative_n7() {
        for c in switching_class_reps(7).unwrap() {
            assert_eq!(euler_graphs_in_class(&c).unwrap().len(), 1);
            assert!(euler_representative(&c).unwrap().unwrap().is_euler());
        }
    }

    #[test]
    fn limits() {
        assert!(switching_class_reps(11).is_err());
        assert!(enumerate_euler_graphs(10).is_err());
    }
}
