//! Switching classes: canonical forms, automorphisms, invariants and census.

mod canon;
pub mod census;
pub mod enumerate;
pub mod invariants;

use crate::error::ClassifyError;
use crate::matrix::{AmbientGraph, SeidelMatrix};
use canon::{canonize, full_mask, GraphRows, TwoGraphRows};
use serde::Serialize;
use std::collections::BTreeSet;

pub use census::{census, census_of, energy_census, energy_census_of, CensusRow, EnergyCensus};
pub use enumerate::{enumerate_euler_graphs, enumerate_graphs, enumerate_switching_classes, euler_graphs_in_class, euler_representative, switching_class_reps};
pub use invariants::{chi, invariant, phi, phi11, phi12, Invariant};

/// Default order limit for the canonicalizer.
pub const DEFAULT_LIMIT: usize = 12;
/// Hard limit imposed by the single-word row representation.
pub const MAX_ORDER: usize = 64;

/// The 3-uniform hypergraph of odd triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoGraph {
    pub n: usize,
    pub odd_triples: BTreeSet<[usize; 3]>,
}

pub fn odd_triples(s: &SeidelMatrix) -> TwoGraph {
    let n = s.n();
    let mut odd_triples = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if s.is_neg(i, j) ^ s.is_neg(j, k) ^ s.is_neg(i, k) {
                    odd_triples.insert([i, j, k]);
                }
            }
        }
    }
    TwoGraph { n, odd_triples }
}

/// A switching class recorded by its canonical representative and invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFingerprint {
    pub n: usize,
    pub invariant: Invariant,
    #[serde(serialize_with = "ser_line")]
    pub canonical_matrix: SeidelMatrix,
}

fn ser_line<S: serde::Serializer>(m: &SeidelMatrix, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_line())
}

impl ClassFingerprint {
    pub fn of(canonical_matrix: SeidelMatrix) -> Self {
        let invariant = invariant(&canonical_matrix).expect("orders up to 12 have an invariant");
        ClassFingerprint { n: canonical_matrix.n(), invariant, canonical_matrix }
    }
}

fn check_order(n: usize, limit: usize) -> Result<(), ClassifyError> {
    if n > limit.min(MAX_ORDER) {
        return Err(ClassifyError::OrderTooLarge { order: n, limit: limit.min(MAX_ORDER) });
    }
    Ok(())
}

pub(crate) fn rows64(s: &SeidelMatrix) -> Vec<u64> {
    (0..s.n()).map(|i| s.row64(i)).collect()
}

/// Canonical switching-class representative, with row 0 all +1.
pub fn canonical_form(s: &SeidelMatrix) -> Result<SeidelMatrix, ClassifyError> {
    canonical_form_with_limit(s, DEFAULT_LIMIT)
}

pub fn canonical_form_with_limit(s: &SeidelMatrix, limit: usize) -> Result<SeidelMatrix, ClassifyError> {
    check_order(s.n(), limit)?;
    Ok(canonical_unchecked(s))
}

pub(crate) fn canonical_unchecked(s: &SeidelMatrix) -> SeidelMatrix {
    let rows = rows64(s);
    let c = canonize(&TwoGraphRows(&rows));
    SeidelMatrix::from_rows64(s.n(), &c.certificate)
}

pub fn switching_equivalent(a: &SeidelMatrix, b: &SeidelMatrix) -> Result<bool, ClassifyError> {
    let limit = a.n().max(b.n());
    Ok(a.n() == b.n() && canonical_form_with_limit(a, limit)? == canonical_form_with_limit(b, limit)?)
}

/// Order of the group of permutations preserving the switching class.
pub fn aut_order(s: &SeidelMatrix) -> Result<u128, ClassifyError> {
    check_order(s.n(), 10)?;
    Ok(canonize(&TwoGraphRows(&rows64(s))).aut_order)
}

pub fn graph_aut_order(g: &AmbientGraph) -> u128 {
    let rows: Vec<u64> = (0..g.n()).map(|i| g.row64(i)).collect();
    canonize(&GraphRows(&rows)).aut_order
}

/// Canonical relabeling of a graph (isomorphism class representative).
pub fn graph_canonical_form(g: &AmbientGraph) -> AmbientGraph {
    let rows: Vec<u64> = (0..g.n()).map(|i| g.row64(i)).collect();
    AmbientGraph::from_rows64(g.n(), &canonize(&GraphRows(&rows)).certificate)
}

/// Whether the class automorphism group is larger than the automorphism group
/// of every ambient graph in it.
///
/// A permutation `g` of the class acts as `S[g i][g j] = d_i d_j S[i][j]`; it
/// fixes the ambient graph switched by `w` iff `w∘g + w + d` is constant over
/// GF(2). Differencing against vertex 0 removes the constant, leaving a linear
/// system in `w` that is solvable iff some ambient graph is fixed by every
/// generator.
pub fn gamma_nonzero(s: &SeidelMatrix) -> Result<bool, ClassifyError> {
    check_order(s.n(), 10)?;
    let n = s.n();
    if n < 2 {
        return Ok(false);
    }
    let gens = canonize(&TwoGraphRows(&rows64(s))).generators;
    let mut system: Vec<(u64, bool)> = Vec::new();
    for g in &gens {
        let d = switching_of(s, g);
        let row = |i: usize| (1u64 << g[i]) ^ (1u64 << i);
        for i in 1..n {
            system.push((row(i) ^ row(0), (d >> i & 1) != (d & 1)));
        }
    }
    Ok(!gf2_solvable(system, n))
}

/// The switching vector `d` with `S[g i][g j] = d_i d_j S[i][j]`.
fn switching_of(s: &SeidelMatrix, g: &[usize]) -> u64 {
    let n = s.n();
    let mut d = 0u64;
    for j in 1..n {
        if s.is_neg(g[0], g[j]) != s.is_neg(0, j) {
            d |= 1 << j;
        }
    }
    debug_assert!((0..n).all(|i| (0..n).all(|j| i == j
        || s.is_neg(g[i], g[j]) == (s.is_neg(i, j) ^ (d >> i & 1 == 1) ^ (d >> j & 1 == 1)))));
    d
}

fn gf2_solvable(mut rows: Vec<(u64, bool)>, unknowns: usize) -> bool {
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0 >> col & 1 == 1) else { continue };
        rows.swap(r, p);
        let pivot = rows[r];
        for i in 0..rows.len() {
            if i != r && rows[i].0 >> col & 1 == 1 {
                rows[i].0 ^= pivot.0;
                rows[i].1 ^= pivot.1;
            }
        }
        r += 1;
    }
    rows[r..].iter().all(|&(m, b)| m != 0 || !b)
}

/// Direct γ test: compares |Aut(S)| with every ambient graph's automorphism order.
pub fn gamma_nonzero_by_graphs(s: &SeidelMatrix) -> Result<bool, ClassifyError> {
    check_order(s.n(), 10)?;
    let group = aut_order(s)?;
    let mut seen = BTreeSet::new();
    for g in ambient_graphs(s) {
        let canon = graph_canonical_form(&g);
        if seen.insert(canon.to_graph6()) && graph_aut_order(&g) == group {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The 2^(n-1) ambient graphs of the switching class of `s`.
pub fn ambient_graphs(s: &SeidelMatrix) -> impl Iterator<Item = AmbientGraph> + '_ {
    let n = s.n();
    let rows = rows64(s);
    let count = if n == 0 { 1u64 } else { 1u64 << (n - 1) };
    let full = full_mask(n);
    (0..count).map(move |w| {
        // switch the vertex set w (vertex 0 never switched)
        let w = w << 1;
        let adj: Vec<u64> = (0..n)
            .map(|i| {
                let own = if w >> i & 1 == 1 { full } else { 0 };
                (rows[i] ^ w ^ own) & !(1u64 << i)
            })
            .collect();
        AmbientGraph::from_rows64(n, &adj)
    })
}

/// `S` and `-S` lie in the same switching class.
pub fn self_complementary(s: &SeidelMatrix) -> Result<bool, ClassifyError> {
    check_order(s.n(), DEFAULT_LIMIT)?;
    Ok(canonical_unchecked(s) == canonical_unchecked(&s.negated()))
}
