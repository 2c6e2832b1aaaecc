//! Circulant Cayley graphs over Z_n and the direct graph-level checks:
//! fixed-length cycle detection and cycle saturation.
//!
//! The checkers work on a dense adjacency bitmap so the inner DFS loops are
//! word operations. Cycle search uses canonical-start pruning: a cycle is
//! only reported from its minimum vertex, walking toward its larger second
//! neighbor last.

use crate::error::{Error, Result};
use crate::residue::{Modulus, ResidueSet};

/// `Cay(Z_n, S)`: vertices are Z_n, and `x ~ y` iff `(x - y) mod n` is in
/// the connection set. The connection set must be symmetric and exclude 0,
/// which makes the graph simple and `|S|`-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    connection: ResidueSet,
}

impl CayleyGraph {
    pub fn new(connection: ResidueSet) -> Result<Self> {
        if connection.contains(0) {
            return Err(Error::ZeroInConnection);
        }
        if let Some(x) = connection.first_asymmetric() {
            return Err(Error::AsymmetricConnection { value: x });
        }
        Ok(CayleyGraph { connection })
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.connection.modulus()
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.connection.modulus().n()
    }

    pub fn connection(&self) -> &ResidueSet {
        &self.connection
    }

    pub fn degree(&self) -> u32 {
        self.connection.len() as u32
    }

    pub fn edge_count(&self) -> u64 {
        let total = u64::from(self.n()) * u64::from(self.degree());
        debug_assert_eq!(total % 2, 0);
        total / 2
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        u != v && self.connection.contains(self.modulus().sub(u, v))
    }

    /// Dense adjacency rows for the DFS checkers.
    pub fn adjacency(&self) -> Adjacency {
        let n = self.n();
        let words = ((n as usize) + 63) / 64;
        let mut rows = vec![0u64; words * n as usize];
        for v in 0..n {
            let row = &mut rows[(v as usize) * words..(v as usize + 1) * words];
            for s in self.connection.iter() {
                let w = self.modulus().add(v, s);
                row[(w / 64) as usize] |= 1u64 << (w % 64);
            }
        }
        Adjacency { n, words, rows }
    }
}

/// Row-per-vertex adjacency bitmap.
pub struct Adjacency {
    n: u32,
    words: usize,
    rows: Vec<u64>,
}

impl Adjacency {
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    fn row(&self, v: u32) -> &[u64] {
        &self.rows[(v as usize) * self.words..(v as usize + 1) * self.words]
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        (self.row(u)[(v / 64) as usize] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.row(v).iter().map(|w| w.count_ones()).sum()
    }
}

/// Scratch bitset sized to one adjacency row.
struct Scratch {
    words: Vec<u64>,
}

impl Scratch {
    fn new(words: usize) -> Self {
        Scratch {
            words: vec![0; words],
        }
    }

    #[inline]
    fn set(&mut self, v: u32) {
        self.words[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    #[inline]
    fn clear(&mut self, v: u32) {
        self.words[(v / 64) as usize] &= !(1u64 << (v % 64));
    }

    #[inline]
    fn contains(&self, v: u32) -> bool {
        (self.words[(v / 64) as usize] >> (v % 64)) & 1 == 1
    }

    fn reset(&mut self) {
        self.words.fill(0);
    }
}

/// Mask of all vertices strictly greater than `v`, as row words.
fn gt_mask(v: u32, n: u32, words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    let lo = v + 1;
    if lo >= n {
        return mask;
    }
    for w in mask.iter_mut().skip((lo / 64) as usize) {
        *w = u64::MAX;
    }
    mask[(lo / 64) as usize] &= u64::MAX << (lo % 64);
    let tail = n % 64;
    if tail != 0 {
        mask[words - 1] &= (1u64 << tail) - 1;
    }
    mask
}

/// First set bit strictly greater than `above`, if any.
fn first_bit_above(words: &[u64], above: Option<u32>) -> Option<u32> {
    let lo = match above {
        None => 0,
        Some(a) => a + 1,
    };
    let start_word = (lo / 64) as usize;
    for (i, &word) in words.iter().enumerate().skip(start_word) {
        let mut w = word;
        if i == start_word && lo % 64 != 0 {
            w &= u64::MAX << (lo % 64);
        }
        if w != 0 {
            return Some((i as u32) * 64 + w.trailing_zeros());
        }
    }
    None
}

// ============================================================================
// Cycle detection
// ============================================================================

struct CycleSearch<'a> {
    adj: &'a Adjacency,
    k: u32,
    start: u32,
    above_start: Vec<u64>,
    visited: Scratch,
    /// per-depth candidate buffers, to keep the DFS allocation-free
    bufs: Vec<Vec<u64>>,
    path: Vec<u32>,
}

impl<'a> CycleSearch<'a> {
    fn new(adj: &'a Adjacency, k: u32) -> Self {
        CycleSearch {
            adj,
            k,
            start: 0,
            above_start: vec![0; adj.words],
            visited: Scratch::new(adj.words),
            bufs: (0..k).map(|_| vec![0u64; adj.words]).collect(),
            path: Vec::with_capacity(k as usize),
        }
    }

    fn run_from(&mut self, start: u32) -> bool {
        self.start = start;
        self.above_start = gt_mask(start, self.adj.n, self.adj.words);
        self.visited.reset();
        self.visited.set(start);
        self.path.clear();
        self.path.push(start);
        self.dfs(0)
    }

    fn dfs(&mut self, depth: usize) -> bool {
        let cur = *self.path.last().unwrap();
        if self.path.len() as u32 == self.k - 1 {
            // close: a vertex adjacent to both cur and start, unvisited,
            // above start, and above the second path vertex so each cycle
            // is walked in only one direction
            let second = self.path.get(1).copied();
            let buf = &mut self.bufs[depth];
            let row_cur = self.adj.row(cur);
            let row_start = self.adj.row(self.start);
            for (i, b) in buf.iter_mut().enumerate() {
                *b = row_cur[i] & row_start[i] & self.above_start[i] & !self.visited.words[i];
            }
            if let Some(v) = first_bit_above(&self.bufs[depth], second) {
                self.path.push(v);
                return true;
            }
            return false;
        }
        {
            let buf = &mut self.bufs[depth];
            let row = self.adj.row(cur);
            for (i, b) in buf.iter_mut().enumerate() {
                *b = row[i] & self.above_start[i] & !self.visited.words[i];
            }
        }
        for wi in 0..self.adj.words {
            let mut w = self.bufs[depth][wi];
            while w != 0 {
                let v = (wi as u32) * 64 + w.trailing_zeros();
                w &= w - 1;
                self.visited.set(v);
                self.path.push(v);
                if self.dfs(depth + 1) {
                    return true;
                }
                self.path.pop();
                self.visited.clear(v);
            }
        }
        false
    }
}

/// Finds a cycle of length exactly `k`, if one exists, returning its vertex
/// sequence. `None` means the graph is C_k-free.
///
/// DFS from every start vertex with canonical-start pruning: only cycles
/// whose minimum vertex is the start are examined.
pub fn find_cycle_of_length(g: &CayleyGraph, k: u32) -> Result<Option<Vec<u32>>> {
    if k < 3 {
        return Err(Error::InvalidCycleLength { k });
    }
    let adj = g.adjacency();
    if k > adj.n {
        return Ok(None);
    }
    let mut search = CycleSearch::new(&adj, k);
    for start in 0..adj.n {
        if search.run_from(start) {
            return Ok(Some(search.path));
        }
    }
    Ok(None)
}

// ============================================================================
// Simple-path search and saturation
// ============================================================================

struct PathSearch<'a> {
    adj: &'a Adjacency,
    target: u32,
    visited: Scratch,
    bufs: Vec<Vec<u64>>,
}

impl<'a> PathSearch<'a> {
    fn new(adj: &'a Adjacency, len: u32) -> Self {
        PathSearch {
            adj,
            target: 0,
            visited: Scratch::new(adj.words),
            bufs: (0..len).map(|_| vec![0u64; adj.words]).collect(),
        }
    }

    fn run(&mut self, u: u32, v: u32, len: u32) -> bool {
        self.target = v;
        self.visited.reset();
        self.visited.set(u);
        self.dfs(u, len, 0)
    }

    fn dfs(&mut self, cur: u32, remaining: u32, depth: usize) -> bool {
        if remaining == 1 {
            return self.adj.adjacent(cur, self.target) && !self.visited.contains(self.target);
        }
        {
            let buf = &mut self.bufs[depth];
            let row = self.adj.row(cur);
            for (i, b) in buf.iter_mut().enumerate() {
                *b = row[i] & !self.visited.words[i];
            }
            // the target may only appear as the endpoint
            buf[(self.target / 64) as usize] &= !(1u64 << (self.target % 64));
        }
        for wi in 0..self.adj.words {
            let mut w = self.bufs[depth][wi];
            while w != 0 {
                let v = (wi as u32) * 64 + w.trailing_zeros();
                w &= w - 1;
                self.visited.set(v);
                if self.dfs(v, remaining - 1, depth + 1) {
                    self.visited.clear(v);
                    return true;
                }
                self.visited.clear(v);
            }
        }
        false
    }
}

/// True iff there is a simple path with exactly `len` edges from `u` to `v`.
pub fn has_simple_path_of_length(adj: &Adjacency, u: u32, v: u32, len: u32) -> bool {
    if len == 0 {
        return u == v;
    }
    if u == v {
        return false;
    }
    PathSearch::new(adj, len).run(u, v, len)
}

/// First (in lexicographic pair order) non-adjacent pair `{u, v}` with no
/// simple path of `k - 1` edges between them, if any. Such a pair witnesses
/// that adding the edge uv would not create a C_k.
pub fn first_unsaturated_pair(g: &CayleyGraph, k: u32) -> Result<Option<(u32, u32)>> {
    if k < 3 {
        return Err(Error::InvalidCycleLength { k });
    }
    let adj = g.adjacency();
    let n = adj.n;
    let mut search = PathSearch::new(&adj, k - 1);
    for u in 0..n {
        for v in u + 1..n {
            if adj.adjacent(u, v) {
                continue;
            }
            if !search.run(u, v, k - 1) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// First vertex whose degree differs from the connection-set size, if any.
pub fn first_irregular_vertex(g: &CayleyGraph) -> Option<(u32, u32)> {
    let adj = g.adjacency();
    let expected = g.degree();
    (0..adj.n)
        .map(|v| (v, adj.degree(v)))
        .find(|&(_, d)| d != expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cayley(n: u32, conn: &[u32]) -> CayleyGraph {
        let s = ResidueSet::from_members(Modulus::new(n), conn.iter().copied()).unwrap();
        CayleyGraph::new(s).unwrap()
    }

    #[test]
    fn constructor_enforces_invariants() {
        let m = Modulus::new(41);
        let with_zero = ResidueSet::from_members(m, [0, 1, 40]).unwrap();
        assert!(matches!(
            CayleyGraph::new(with_zero),
            Err(Error::ZeroInConnection)
        ));
        let asym = ResidueSet::from_members(m, [1, 5]).unwrap();
        assert!(matches!(
            CayleyGraph::new(asym),
            Err(Error::AsymmetricConnection { value: 1 })
        ));
    }

    #[test]
    fn adjacency_and_regularity() {
        let g = cayley(41, &[1, 5, 11, 30, 36, 40]);
        assert_eq!(g.degree(), 6);
        assert_eq!(g.edge_count(), 123);
        assert!(g.adjacent(0, 1));
        assert!(g.adjacent(1, 0));
        assert!(g.adjacent(3, 8));
        assert!(!g.adjacent(0, 2));
        assert!(!g.adjacent(7, 7));
        assert_eq!(first_irregular_vertex(&g), None);

        let adj = g.adjacency();
        for u in 0..41 {
            for v in 0..41 {
                assert_eq!(adj.adjacent(u, v), g.adjacent(u, v));
            }
        }
    }

    #[test]
    fn five_cycle_contains_itself() {
        let g = cayley(5, &[1, 4]);
        let witness = find_cycle_of_length(&g, 5).unwrap().unwrap();
        assert_eq!(witness, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bipartite_graphs_have_no_odd_cycles() {
        let g = cayley(6, &[1, 3, 5]); // K_{3,3}
        assert_eq!(find_cycle_of_length(&g, 5).unwrap(), None);
        assert_eq!(find_cycle_of_length(&g, 3).unwrap(), None);
        // but it does have 4-cycles
        assert!(find_cycle_of_length(&g, 4).unwrap().is_some());
    }

    #[test]
    fn cycle_length_validation() {
        let g = cayley(5, &[1, 4]);
        assert!(matches!(
            find_cycle_of_length(&g, 2),
            Err(Error::InvalidCycleLength { k: 2 })
        ));
        // k greater than n: trivially free
        assert_eq!(find_cycle_of_length(&g, 6).unwrap(), None);
    }

    #[test]
    fn cycle_witness_is_a_cycle() {
        let g = cayley(13, &[1, 5, 8, 12]);
        for k in 3..=6 {
            if let Some(w) = find_cycle_of_length(&g, k).unwrap() {
                assert_eq!(w.len(), k as usize);
                for i in 0..w.len() {
                    assert!(g.adjacent(w[i], w[(i + 1) % w.len()]), "k={k} w={w:?}");
                }
                let mut sorted = w.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), w.len(), "repeated vertex in witness");
            }
        }
    }

    #[test]
    fn brute_force_cycle_cross_check() {
        // enumerate all k-cycles by brute force on small circulants and
        // compare existence with the DFS
        fn extend(g: &CayleyGraph, path: &mut Vec<u32>, k: u32) -> bool {
            let cur = *path.last().unwrap();
            if path.len() as u32 == k {
                return g.adjacent(cur, path[0]);
            }
            for v in 0..g.n() {
                if g.adjacent(cur, v) && !path.contains(&v) {
                    path.push(v);
                    if extend(g, path, k) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }

        fn brute_has_cycle(g: &CayleyGraph, k: u32) -> bool {
            (0..g.n()).any(|start| extend(g, &mut vec![start], k))
        }

        for (n, conn) in [(7u32, vec![1u32, 6]), (8, vec![1, 3, 5, 7]), (9, vec![2, 3, 6, 7]), (10, vec![1, 4, 6, 9])] {
            let g = cayley(n, &conn);
            for k in 3..=6 {
                assert_eq!(
                    find_cycle_of_length(&g, k).unwrap().is_some(),
                    brute_has_cycle(&g, k),
                    "n={n} conn={conn:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn simple_path_search() {
        let g = cayley(6, &[1, 3, 5]); // K_{3,3}
        let adj = g.adjacency();
        // 0 and 2 share a side; a path of length 4 connects them
        assert!(has_simple_path_of_length(&adj, 0, 2, 4));
        // no path of length 2 between opposite-side vertices 0 and 1:
        // the middle vertex would have to be adjacent to both sides
        assert!(!has_simple_path_of_length(&adj, 0, 1, 2));
        assert!(has_simple_path_of_length(&adj, 0, 0, 0));
        assert!(!has_simple_path_of_length(&adj, 0, 2, 0));
    }

    #[test]
    fn k33_is_c5_saturated() {
        let g = cayley(6, &[1, 3, 5]);
        assert_eq!(find_cycle_of_length(&g, 5).unwrap(), None);
        assert_eq!(first_unsaturated_pair(&g, 5).unwrap(), None);
    }

    #[test]
    fn seven_cycle_not_saturated_for_c5() {
        // C7 is C5-free, but distant pairs have no length-4 path
        let g = cayley(7, &[1, 6]);
        assert_eq!(find_cycle_of_length(&g, 5).unwrap(), None);
        assert!(first_unsaturated_pair(&g, 5).unwrap().is_some());
    }

    #[test]
    fn cycle_freeness_monotone_under_edge_removal() {
        // removing a symmetric pair from the connection set keeps freeness
        let g = cayley(41, &[1, 5, 11, 30, 36, 40]);
        assert_eq!(find_cycle_of_length(&g, 5).unwrap(), None);
        let smaller = cayley(41, &[1, 5, 36, 40]);
        assert_eq!(find_cycle_of_length(&smaller, 5).unwrap(), None);
        let smallest = cayley(41, &[1, 40]);
        assert_eq!(find_cycle_of_length(&smallest, 5).unwrap(), None);
    }
}
