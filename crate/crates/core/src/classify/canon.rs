//! Individualization-refinement search shared by two-graph and graph labeling.
//!
//! The search keeps the smallest leaf certificate, collects automorphisms from
//! leaves that repeat the first or best certificate, and prunes children that
//! lie in one orbit of the automorphisms found so far that fix the current
//! prefix. The group order falls out of the orbit sizes along the first path.

/// A labeled structure on at most 64 points.
pub(crate) trait Structure {
    fn n(&self) -> usize;
    /// Appends the refinement signature of `v` against the cell masks.
    fn signature(&self, v: usize, cells: &[u64], out: &mut Vec<u32>);
    /// The certificate of the labeling `ord` (position -> point).
    fn certificate(&self, ord: &[usize]) -> Vec<u64>;
}

/// Two-graph given by Seidel row masks (bit set = -1).
pub(crate) struct TwoGraphRows<'a>(pub &'a [u64]);

impl Structure for TwoGraphRows<'_> {
    fn n(&self) -> usize {
        self.0.len()
    }

    fn signature(&self, v: usize, cells: &[u64], out: &mut Vec<u32>) {
        let rows = self.0;
        let full = full_mask(rows.len());
        for &ci in cells {
            let mut acc = vec![0u32; cells.len()];
            let mut rest = ci & !(1u64 << v);
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let flip = if rows[v] >> a & 1 == 1 { full } else { 0 };
                let odd = (rows[v] ^ rows[a] ^ flip) & !(1u64 << v) & !(1u64 << a);
                for (k, &cj) in cells.iter().enumerate() {
                    acc[k] += (odd & cj).count_ones();
                }
            }
            out.extend_from_slice(&acc);
        }
    }

    fn certificate(&self, ord: &[usize]) -> Vec<u64> {
        let n = ord.len();
        let rows = self.0;
        let p = ord[0];
        // switch so the row of ord[0] is all +1
        let flipped = rows[p];
        let sw = |x: usize, y: usize| (rows[x] >> y & 1) ^ (flipped >> x & 1) ^ (flipped >> y & 1) == 1;
        let mut out = vec![0u64; n];
        for a in 1..n {
            for b in a + 1..n {
                if sw(ord[a], ord[b]) {
                    out[a] |= 1 << b;
                    out[b] |= 1 << a;
                }
            }
        }
        out
    }
}

/// Simple graph given by adjacency row masks.
pub(crate) struct GraphRows<'a>(pub &'a [u64]);

impl Structure for GraphRows<'_> {
    fn n(&self) -> usize {
        self.0.len()
    }

    fn signature(&self, v: usize, cells: &[u64], out: &mut Vec<u32>) {
        out.extend(cells.iter().map(|&c| (self.0[v] & c).count_ones()));
    }

    fn certificate(&self, ord: &[usize]) -> Vec<u64> {
        let n = ord.len();
        let mut out = vec![0u64; n];
        for a in 0..n {
            for b in a + 1..n {
                if self.0[ord[a]] >> ord[b] & 1 == 1 {
                    out[a] |= 1 << b;
                    out[b] |= 1 << a;
                }
            }
        }
        out
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) struct Canon {
    pub certificate: Vec<u64>,
    /// `ord[p]` is the point placed at position `p`.
    #[cfg_attr(not(test), allow(dead_code))]
    pub ord: Vec<usize>,
    pub aut_order: u128,
    /// Automorphisms as point maps; they generate the full group.
    pub generators: Vec<Vec<usize>>,
}

enum Flow {
    Continue,
    AbortTo(usize),
}

struct Search<'a, S: Structure> {
    s: &'a S,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
    aut: u128,
}

pub(crate) fn canonize<S: Structure>(s: &S) -> Canon {
    let n = s.n();
    assert!(n <= 64);
    if n == 0 {
        return Canon { certificate: vec![], ord: vec![], aut_order: 1, generators: vec![] };
    }
    let mut st = Search { s, first: None, best: None, gens: Vec::new(), aut: 1 };
    let mut prefix = Vec::new();
    st.visit(vec![(0..n).collect()], &mut prefix, true, 0);
    let (certificate, ord) = st.best.expect("search reaches a leaf");
    Canon { certificate, ord, aut_order: st.aut, generators: st.gens }
}

impl<S: Structure> Search<'_, S> {
    fn visit(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>, on_first: bool, deviation: usize) -> Flow {
        refine(self.s, &mut cells);
        let depth = prefix.len();
        if cells.len() == self.s.n() {
            let ord: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(ord, deviation);
        }
        let t = cells.iter().position(|c| c.len() > 1).expect("not discrete");
        let mut children = cells[t].clone();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &children {
            if !explored.is_empty() {
                let orbits = self.orbits(prefix);
                if explored.iter().any(|&e| find(&orbits, e) == find(&orbits, w)) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(vec![w]);
            next.push(cells[t].iter().copied().filter(|&x| x != w).collect());
            next.extend_from_slice(&cells[t + 1..]);
            let child_first = on_first && explored.is_empty();
            let child_dev = if on_first && !explored.is_empty() { depth } else { deviation };
            prefix.push(w);
            let flow = self.visit(next, prefix, child_first, child_dev);
            prefix.pop();
            explored.push(w);
            if let Flow::AbortTo(l) = flow {
                if l < depth || !on_first {
                    return Flow::AbortTo(l);
                }
            }
        }
        if on_first {
            let orbits = self.orbits(prefix);
            let root = find(&orbits, children[0]);
            let size = children.iter().filter(|&&w| find(&orbits, w) == root).count();
            self.aut *= size as u128;
        }
        Flow::Continue
    }

    fn leaf(&mut self, ord: Vec<usize>, deviation: usize) -> Flow {
        let cert = self.s.certificate(&ord);
        let Some((first_cert, first_ord)) = &self.first else {
            self.first = Some((cert.clone(), ord.clone()));
            self.best = Some((cert, ord));
            return Flow::Continue;
        };
        if &cert == first_cert {
            let g = map_between(first_ord, &ord);
            self.gens.push(g);
            return Flow::AbortTo(deviation);
        }
        let (best_cert, best_ord) = self.best.as_ref().expect("set with first");
        match cert.cmp(best_cert) {
            std::cmp::Ordering::Equal => {
                let g = map_between(best_ord, &ord);
                self.gens.push(g);
            }
            std::cmp::Ordering::Less => self.best = Some((cert, ord)),
            std::cmp::Ordering::Greater => {}
        }
        Flow::Continue
    }

    /// Union-find parents for the orbits of the generators fixing `prefix`.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.s.n();
        let mut parent: Vec<usize> = (0..n).collect();
        for g in &self.gens {
            if prefix.iter().all(|&p| g[p] == p) {
                for (x, &y) in g.iter().enumerate() {
                    let (a, b) = (find(&parent, x), find(&parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// The point map sending `from[p]` to `to[p]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (p, &x) in from.iter().enumerate() {
        g[x] = to[p];
    }
    g
}

/// Splits cells by signature until the ordered partition is equitable.
fn refine<S: Structure>(s: &S, cells: &mut Vec<Vec<usize>>) {
    let mut sig = Vec::new();
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    sig.clear();
                    s.signature(v, &masks, &mut sig);
                    (sig.clone(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|x| x.1).collect());
                    start = k;
                }
            }
        }
        let changed = next.len() != cells.len();
        *cells = next;
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }

    #[test]
    fn complete_two_graph_has_full_symmetric_group() {
        for n in 1..=9 {
            let rows = vec![0u64; n];
            let c = canonize(&TwoGraphRows(&rows));
            assert_eq!(c.aut_order, factorial(n as u128), "n = {n}");
        }
    }

    #[test]
    fn graph_automorphism_orders() {
        // 5-cycle: dihedral of order 10
        let mut rows = vec![0u64; 5];
        for i in 0..5 {
            let j = (i + 1) % 5;
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        assert_eq!(canonize(&GraphRows(&rows)).aut_order, 10);
        // Petersen graph: order 120
        let mut rows = vec![0u64; 10];
        let mut add = |a: usize, b: usize| {
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        };
        for i in 0..5 {
            add(i, (i + 1) % 5);
            add(i, i + 5);
            add(i + 5, (i + 2) % 5 + 5);
        }
        assert_eq!(canonize(&GraphRows(&rows)).aut_order, 120);
    }

    #[test]
    fn relabeling_gives_same_certificate() {
        let mut rows = vec![0u64; 7];
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 6)] {
            rows[a] |= 1u64 << b;
            rows[b] |= 1u64 << a;
        }
        let perm = [3, 6, 0, 5, 1, 2, 4];
        let mut moved = vec![0u64; 7];
        for a in 0..7 {
            for b in 0..7 {
                if rows[a] >> b & 1 == 1 {
                    moved[perm[a]] |= 1 << perm[b];
                }
            }
        }
        let (c, d) = (canonize(&GraphRows(&rows)), canonize(&GraphRows(&moved)));
        assert_eq!(c.certificate, d.certificate);
        assert_eq!(GraphRows(&moved).certificate(&d.ord), d.certificate);
        assert_eq!(canonize(&TwoGraphRows(&rows)).certificate, canonize(&TwoGraphRows(&moved)).certificate);
    }
}
