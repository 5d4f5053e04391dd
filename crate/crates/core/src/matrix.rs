//! Seidel matrices, their ambient graphs and switching.
//!
//! A Seidel matrix only ever holds 0 on the diagonal and ±1 elsewhere, so it is
//! stored as one bitset per row with bit `j` of row `i` set iff `s_ij = -1`.
//! Rows of orders up to 64 fit in a single word, which is what the enumeration
//! hot path relies on. Exact integer views are produced on demand.

use crate::error::MatrixError;
use crate::linalg::{charpoly_i128, charpoly_of, det_exact, det_i128, IntMatrix};
use crate::poly::Poly;
use num_bigint::BigInt;
use std::fmt::Write as _;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeidelMatrix {
    n: usize,
    words: usize,
    neg: Vec<u64>,
}

impl SeidelMatrix {
    /// `J - I`: every off-diagonal entry +1.
    pub fn all_plus(n: usize) -> Self {
        let words = words_for(n);
        SeidelMatrix { n, words, neg: vec![0; n * words] }
    }

    /// Builds from a sign predicate on pairs `i < j`; `negative(i, j)` true means -1.
    pub fn from_fn(n: usize, mut negative: impl FnMut(usize, usize) -> bool) -> Self {
        let mut s = Self::all_plus(n);
        for i in 0..n {
            for j in i + 1..n {
                if negative(i, j) {
                    s.set_neg(i, j, true);
                }
            }
        }
        s
    }

    /// Builds from 64-bit row masks (order at most 64).
    pub fn from_rows64(n: usize, rows: &[u64]) -> Self {
        assert!(n <= 64 && rows.len() == n);
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let neg = rows.iter().enumerate().map(|(i, r)| r & mask & !(1u64 << i)).collect();
        SeidelMatrix { n, words: 1, neg }
    }

    /// Validates an integer matrix.
    pub fn validate(entries: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let n = entries.len();
        for row in entries {
            if row.len() != n {
                return Err(MatrixError::NotSquare { rows: n, cols: row.len() });
            }
        }
        for i in 0..n {
            if entries[i][i] != 0 {
                return Err(MatrixError::BadDiagonal(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && entries[i][j] != 1 && entries[i][j] != -1 {
                    return Err(MatrixError::BadEntry(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i][j] != entries[j][i] {
                    return Err(MatrixError::NonSymmetric(i, j));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| entries[i][j] == -1))
    }

    /// Validates a big-integer matrix.
    pub fn from_int_matrix(m: &IntMatrix) -> Result<Self, MatrixError> {
        if m.rows() != m.cols() {
            return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let mut e = vec![vec![0i64; m.rows()]; m.rows()];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let v = m.get(i, j);
                *x = i64::try_from(v).unwrap_or(i64::MAX);
            }
        }
        Self::validate(&e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn neg_row(&self, i: usize) -> &[u64] {
        &self.neg[i * self.words..(i + 1) * self.words]
    }

    /// Single-word row mask; only valid for orders up to 64.
    pub fn row64(&self, i: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.neg[i * self.words]
    }

    pub fn is_neg(&self, i: usize, j: usize) -> bool {
        (self.neg[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else if self.is_neg(i, j) {
            -1
        } else {
            1
        }
    }

    pub(crate) fn set_neg(&mut self, i: usize, j: usize, neg: bool) {
        let w = self.words;
        for (a, b) in [(i, j), (j, i)] {
            let word = &mut self.neg[a * w + b / 64];
            if neg {
                *word |= 1u64 << (b % 64);
            } else {
                *word &= !(1u64 << (b % 64));
            }
        }
    }

    pub fn entries(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| self.entry(i, j))
    }

    pub fn to_i128(&self) -> Vec<i128> {
        let n = self.n;
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.entry(i, j) as i128;
            }
        }
        out
    }

    pub fn det(&self) -> BigInt {
        let mut a = self.to_i128();
        match det_i128(&mut a, self.n) {
            Some(d) => BigInt::from(d),
            None => det_exact(&self.to_int_matrix()),
        }
    }

    /// Monic characteristic polynomial `det(xI - S)`.
    pub fn charpoly(&self) -> Poly {
        match charpoly_i128(&self.to_i128(), self.n) {
            Some(c) => Poly::new(c.into_iter().map(BigInt::from).collect()),
            None => charpoly_of(&self.to_int_matrix()),
        }
    }

    /// `S - t I` as an integer matrix.
    pub fn shifted(&self, t: i64) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| if i == j { -t } else { self.entry(i, j) })
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let w = &mut out.neg[i * self.words + j / 64];
                    *w ^= 1u64 << (j % 64);
                }
            }
        }
        out
    }

    /// Negates row and column `v`.
    pub fn switch_vertex(&mut self, v: usize) {
        for j in 0..self.n {
            if j != v {
                let neg = self.is_neg(v, j);
                self.set_neg(v, j, !neg);
            }
        }
    }

    /// Switching by a subset: `D S D` with `D` = -1 on the subset.
    pub fn switched(&self, subset: &[usize]) -> Result<Self, MatrixError> {
        let mut flag = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(MatrixError::IndexOutOfRange { index: v, order: self.n });
            }
            flag[v] = !flag[v];
        }
        Ok(Self::from_fn(self.n, |i, j| self.is_neg(i, j) ^ flag[i] ^ flag[j]))
    }

    /// Relabels so that vertex `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        check_permutation(perm, self.n)?;
        let mut inv = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Ok(Self::from_fn(self.n, |a, b| self.is_neg(inv[a], inv[b])))
    }

    /// The principal submatrix on `rows`, in the given order.
    pub fn principal_submatrix(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), |a, b| self.is_neg(rows[a], rows[b]))
    }

    /// Principal submatrix with vertex `v` deleted.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let rows: Vec<usize> = (0..self.n).filter(|&i| i != v).collect();
        self.principal_submatrix(&rows)
    }

    /// Appends a vertex whose entries against existing vertices are `col` (±1).
    pub fn extended(&self, col: &[i64]) -> Self {
        assert_eq!(col.len(), self.n);
        let n = self.n + 1;
        Self::from_fn(n, |i, j| if j == n - 1 { col[i] < 0 } else { self.is_neg(i, j) })
    }

    /// Switches so that row 0 is all +1.
    pub fn normalized(&self) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let subset: Vec<usize> = (1..self.n).filter(|&j| self.is_neg(0, j)).collect();
        self.switched(&subset).expect("indices in range")
    }

    pub fn ambient_graph(&self) -> AmbientGraph {
        AmbientGraph { n: self.n, words: self.words, adj: self.neg.clone() }
    }

    /// Parses the `+`/`-`/`0` text format.
    pub fn parse_text(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| MatrixError::Parse("empty input".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| MatrixError::Parse(format!("bad order line {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| MatrixError::Parse(format!("missing row {i}")))?;
            let row: Vec<i64> = line
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    '0' => Ok(0),
                    other => Err(MatrixError::Parse(format!("bad character {other:?} in row {i}"))),
                })
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(MatrixError::Parse(format!("row {i} has length {}, expected {n}", row.len())));
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(MatrixError::Parse(format!("trailing line {extra:?}")));
        }
        Self::validate(&rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(match self.entry(i, j) {
                    0 => '0',
                    1 => '+',
                    _ => '-',
                });
            }
            out.push('\n');
        }
        out
    }

    /// Compact one-line form: the upper triangle as `+`/`-`.
    pub fn to_line(&self) -> String {
        let mut out = String::with_capacity(self.n * self.n / 2 + 4);
        let _ = write!(out, "{}:", self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(if self.is_neg(i, j) { '-' } else { '+' });
            }
        }
        out
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<(), MatrixError> {
    if perm.len() != n {
        return Err(MatrixError::BadPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n {
            return Err(MatrixError::IndexOutOfRange { index: p, order: n });
        }
        if seen[p] {
            return Err(MatrixError::BadPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Simple graph with adjacency stored as row bitsets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AmbientGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl AmbientGraph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        AmbientGraph { n, words, adj: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, MatrixError> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(MatrixError::IndexOutOfRange { index: a.max(b), order: n });
            }
            if a != b {
                g.add_edge(a, b);
            }
        }
        Ok(g)
    }

    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn from_rows64(n: usize, rows: &[u64]) -> Self {
        assert!(n <= 64 && rows.len() == n);
        AmbientGraph { n, words: 1, adj: rows.to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        let w = self.words;
        self.adj[a * w + b / 64] |= 1u64 << (b % 64);
        self.adj[b * w + a / 64] |= 1u64 << (a % 64);
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        (self.adj[a * self.words + b / 64] >> (b % 64)) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    pub fn row64(&self, i: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[i * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn is_euler(&self) -> bool {
        (0..self.n).all(|i| self.degree(i) % 2 == 0)
    }

    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| i64::from(self.adjacent(i, j)))
    }

    /// `J - 2A - I`.
    pub fn seidel(&self) -> SeidelMatrix {
        SeidelMatrix { n: self.n, words: self.words, neg: self.adj.clone() }
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |i, j| !self.adjacent(i, j))
    }

    /// Standard 6-bit printable encoding of the upper triangle.
    pub fn to_graph6(&self) -> String {
        let mut out = String::new();
        let n = self.n;
        if n < 63 {
            out.push((n as u8 + 63) as char);
        } else {
            out.push('~');
            for shift in [12, 6, 0] {
                out.push((((n >> shift) & 63) as u8 + 63) as char);
            }
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.adjacent(i, j));
                k += 1;
                if k == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push(((acc << (6 - k)) + 63) as char);
        }
        out
    }

    pub fn from_graph6(text: &str) -> Result<Self, MatrixError> {
        let bytes: Vec<u8> = text.trim().bytes().collect();
        let bad = |msg: &str| MatrixError::Parse(format!("graph6: {msg}"));
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(bad("byte outside 63..126"));
        }
        let (n, mut pos) = match bytes.first() {
            None => return Err(bad("empty")),
            Some(126) => {
                if bytes.len() < 4 || bytes[1] == 126 {
                    return Err(bad("unsupported order header"));
                }
                let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
                (n, 4)
            }
            Some(&b) => ((b - 63) as usize, 1),
        };
        let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if bytes.len() != pos + need {
            return Err(bad("length does not match order"));
        }
        let mut g = Self::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = bytes[pos + bit / 6] - 63;
                if (byte >> (5 - bit % 6)) & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        pos += need;
        debug_assert_eq!(pos, bytes.len());
        Ok(g)
    }
}

/// A switching followed by a relabeling: the map `S -> P D S D P^T`.
///
/// Vertex `i` of the input becomes vertex `permutation[i]` of the output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingOperation {
    pub vertex_subset: Vec<usize>,
    pub permutation: Vec<usize>,
}

impl SwitchingOperation {
    pub fn subset(n: usize, subset: &[usize]) -> Self {
        SwitchingOperation { vertex_subset: subset.to_vec(), permutation: (0..n).collect() }
    }

    pub fn apply(&self, s: &SeidelMatrix) -> Result<SeidelMatrix, MatrixError> {
        s.switched(&self.vertex_subset)?.permuted(&self.permutation)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    pub(crate) fn arb_seidel(max_n: usize) -> impl Strategy<Value = SeidelMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| SeidelMatrix::from_fn(n, |i, j| bits[i * n + j]))
        })
    }

    #[test]
    fn validate_errors() {
        assert!(SeidelMatrix::validate(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).is_ok());
        assert_eq!(SeidelMatrix::validate(&[vec![0, 2], vec![2, 0]]), Err(MatrixError::BadEntry(0, 1)));
        assert_eq!(SeidelMatrix::validate(&[vec![1, 1], vec![1, 0]]), Err(MatrixError::BadDiagonal(0)));
        assert_eq!(SeidelMatrix::validate(&[vec![0, 1], vec![-1, 0]]), Err(MatrixError::NonSymmetric(0, 1)));
    }

    #[test]
    fn switch_single_vertex() {
        let j = SeidelMatrix::all_plus(3);
        let s = j.switched(&[1]).unwrap();
        assert_eq!(s.entries(), vec![vec![0, -1, 1], vec![-1, 0, -1], vec![1, -1, 0]]);
        assert_eq!(j.switched(&[]).unwrap(), j);
        assert!(j.switched(&[3]).is_err());
    }

    #[test]
    fn ambient_graph_examples() {
        assert_eq!(SeidelMatrix::all_plus(3).ambient_graph().edge_count(), 0);
        let tri = AmbientGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(tri.seidel().entries().iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == if i == j { 0 } else { -1 })));
    }

    #[test]
    fn text_formats() {
        let s = SeidelMatrix::from_fn(4, |i, j| (i + j) % 3 == 0);
        assert_eq!(SeidelMatrix::parse_text(&s.to_text()).unwrap(), s);
        assert!(SeidelMatrix::parse_text("2\n0+\n+0\nextra").is_err());
        assert!(SeidelMatrix::parse_text("2\n0x\n+0").is_err());
        // Petersen graph in graph6.
        let g = AmbientGraph::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(g.to_graph6(), "IheA@GUAo");
    }

    #[test]
    fn det_and_charpoly_methods() {
        assert_eq!(SeidelMatrix::all_plus(5).det(), BigInt::from(4));
        assert_eq!(SeidelMatrix::all_plus(3).charpoly(), Poly::from_i64(&[-2, -3, 0, 1]));
    }

    proptest! {
        #[test]
        fn switching_is_an_involution(s in arb_seidel(12), mask in any::<u16>()) {
            let subset: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
            prop_assert_eq!(s.switched(&subset).unwrap().switched(&subset).unwrap(), s);
        }

        #[test]
        fn switching_preserves_charpoly(s in arb_seidel(10), mask in any::<u16>(), seed in any::<u64>()) {
            let n = s.n();
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = seed;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            let op = SwitchingOperation { vertex_subset: subset, permutation: perm };
            let t = op.apply(&s).unwrap();
            prop_assert_eq!(t.charpoly(), s.charpoly());
            prop_assert!(t.charpoly().coeff(n.saturating_sub(1)).is_zero() || n == 1);
        }

        #[test]
        fn graph_roundtrip(s in arb_seidel(20)) {
            let g = s.ambient_graph();
            prop_assert_eq!(g.seidel(), s.clone());
            prop_assert_eq!(AmbientGraph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
    }
}
