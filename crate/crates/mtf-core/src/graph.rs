//! Bitmask graph kernel for simple undirected labeled graphs on up to 64
//! vertices: adjacency rows are single machine words, so neighborhood
//! intersection (the engine of every triangle test here) is one AND.

use crate::error::{Error, Result};
use rustc_hash::FxHashMap;
use std::fmt;

/// Hard vertex capacity: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask as vertex indices.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

// ============================================================================
// Edge
// ============================================================================

/// An undirected edge with endpoints stored as `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop; fallible construction
    /// from raw input goes through [`Graph::from_edges`].
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Both endpoints as a mask.
    pub fn mask(&self) -> u64 {
        bit(self.u) | bit(self.v)
    }

    /// The endpoint other than `w`; panics if `w` is not an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            assert!(w == self.v);
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Simple undirected graph on vertices `0..n` with one neighbor mask per
/// vertex. Values are immutable in use: operations take `&Graph` and return
/// fresh graphs, so sharing across threads is safe.
///
/// `n = 0` is representable (needed for link graphs of edgeless hosts), but
/// [`Graph::from_edges`] and the graph6 codec enforce `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices (`n <= 64`).
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// The simple graph with exactly the given edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut g = Graph {
            n,
            adj: vec![0; n],
        };
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds an edge, validating endpoints; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n {
            return Err(Error::VertexRange { v: a, n: self.n });
        }
        if b >= self.n {
            return Err(Error::VertexRange { v: b, n: self.n });
        }
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    #[inline]
    pub(crate) fn remove_edge_unchecked(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline(always)]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbor mask of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood mask: `v` and its neighbors.
    #[inline(always)]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline(always)]
    pub fn common_neighbors(&self, u: usize, v: usize) -> u64 {
        self.adj[u] & self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// All non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // Standard families
    // ------------------------------------------------------------------

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if n == 0 {
            return Err(Error::VertexCount(0));
        }
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_unchecked(n - 1, 0);
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = low_bits(n) & !bit(v);
        }
        Ok(g)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        let left = low_bits(a);
        let right = low_bits(a + b) & !left;
        for v in 0..a {
            g.adj[v] = right;
        }
        for v in a..a + b {
            g.adj[v] = left;
        }
        Ok(g)
    }

    /// Perfect matching `{2i, 2i+1}` on `2m` vertices.
    pub fn perfect_matching(m: usize) -> Result<Self> {
        let mut g = Graph::empty(2 * m)?;
        for i in 0..m {
            g.add_edge_unchecked(2 * i, 2 * i + 1);
        }
        Ok(g)
    }

    /// Disjoint union, with `other` shifted above `self`'s vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "disjoint union",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph { n, adj: vec![0; n] };
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Triangles and maximality
    // ------------------------------------------------------------------

    /// Number of vertex triples spanning all three edges.
    pub fn triangle_count(&self) -> u64 {
        let mut count = 0u64;
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                // count each triangle once at its two smallest vertices
                count += (self.adj[u] & self.adj[v] & !low_bits(v + 1)).count_ones() as u64;
            }
        }
        count
    }

    /// Some triangle `(u, v, w)` with `u < v < w`, if one exists.
    pub fn first_triangle(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                let common = self.adj[u] & self.adj[v] & !low_bits(v + 1);
                if common != 0 {
                    return Some((u, v, common.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.first_triangle().is_none()
    }

    /// True iff the graph is triangle-free and every non-edge has a common
    /// neighbor, so any edge addition creates a triangle.
    pub fn is_maximal_triangle_free(&self) -> bool {
        if !self.is_triangle_free() {
            return false;
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) && self.adj[u] & self.adj[v] == 0 {
                    return false;
                }
            }
        }
        true
    }

    // ------------------------------------------------------------------
    // Cartesian product
    // ------------------------------------------------------------------

    /// Cartesian product; vertex `(u, u')` maps to index `u * other.n() + u'`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Self> {
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "Cartesian product",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph { n, adj: vec![0; n] };
        let h = other.n;
        for u in 0..self.n {
            for a in 0..h {
                // same first coordinate, adjacent in `other`
                for b in bits(other.adj[a]) {
                    g.adj[u * h + a] |= bit(u * h + b);
                }
                // same second coordinate, adjacent in `self`
                for v in bits(self.adj[u]) {
                    g.adj[u * h + a] |= bit(v * h + a);
                }
            }
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Bipartiteness and components
    // ------------------------------------------------------------------

    /// Masks of connected components, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            loop {
                let mut grown = comp;
                for u in bits(comp) {
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// A proper 2-coloring as side masks, if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<(u64, u64)> {
        let mut color = vec![u8::MAX; self.n];
        let mut sides = (0u64, 0u64);
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            sides.0 |= bit(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in bits(self.adj[u]) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        if color[v] == 0 {
                            sides.0 |= bit(v);
                        } else {
                            sides.1 |= bit(v);
                        }
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(sides)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    // ------------------------------------------------------------------
    // Cliques
    // ------------------------------------------------------------------

    /// True iff some `k` vertices are pairwise adjacent.
    pub fn has_clique_of_size(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.n {
            return false;
        }
        fn grow(g: &Graph, cand: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if (cand.count_ones() as usize) < need {
                return false;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if grow(g, rest & g.adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        grow(self, self.vertex_mask(), k)
    }

    /// Largest clique size (0 for the null graph).
    pub fn clique_number(&self) -> usize {
        let mut k = 0;
        while self.has_clique_of_size(k + 1) {
            k += 1;
        }
        k
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ============================================================================
// Bipartition
// ============================================================================

/// An ordered vertex split `(X, Y)`: disjoint masks covering all vertices.
/// `Y` may be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub x_mask: u64,
    pub y_mask: u64,
}

impl Bipartition {
    pub fn new(x_mask: u64, y_mask: u64, n: usize) -> Result<Self> {
        if x_mask & y_mask != 0 {
            return Err(Error::Parameter(
                "bipartition sides must be disjoint".into(),
            ));
        }
        if x_mask | y_mask != low_bits(n) {
            return Err(Error::Parameter(
                "bipartition must cover all vertices".into(),
            ));
        }
        Ok(Bipartition { x_mask, y_mask })
    }

    pub fn x_size(&self) -> usize {
        self.x_mask.count_ones() as usize
    }

    pub fn y_size(&self) -> usize {
        self.y_mask.count_ones() as usize
    }
}

/// Number of edges with one endpoint on each side of the split.
pub fn cross_edge_count(g: &Graph, x_mask: u64, y_mask: u64) -> usize {
    bits(x_mask)
        .map(|v| (g.neighbors(v) & y_mask).count_ones() as usize)
        .sum()
}

/// Exhaustive max-cut for `n <= 28`. The witness is deterministic: vertex 0
/// lies in `X` and among maximizers the numerically smallest `x_mask` wins.
pub fn max_cut(g: &Graph) -> Result<(usize, Bipartition)> {
    const MAX_N: usize = 28;
    if g.n() > MAX_N {
        return Err(Error::Regime {
            op: "max_cut",
            max: MAX_N,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok((0, Bipartition { x_mask: 0, y_mask: 0 }));
    }
    let full = g.vertex_mask();
    let mut best = 0usize;
    let mut best_mask = bit(0);
    // every cut has a representative with vertex 0 on the X side
    for rest in 0..1u64 << (g.n() - 1) {
        let x_mask = rest << 1 | 1;
        let y_mask = full & !x_mask;
        let cut = cross_edge_count(g, x_mask, y_mask);
        if cut > best {
            best = cut;
            best_mask = x_mask;
        }
    }
    Ok((
        best,
        Bipartition {
            x_mask: best_mask,
            y_mask: full & !best_mask,
        },
    ))
}

// ============================================================================
// Maximum matching
// ============================================================================

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub edges: Vec<Edge>,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Mask of matched vertices.
    pub fn covered(&self) -> u64 {
        self.edges.iter().fold(0, |m, e| m | e.mask())
    }
}

/// Maximum-cardinality matching, exact via branching memoized on vertex masks.
pub fn maximum_matching(g: &Graph) -> MatchingResult {
    matching_in(g, g.vertex_mask())
}

/// Maximum matching of the subgraph induced on `mask`.
pub(crate) fn matching_in(g: &Graph, mask: u64) -> MatchingResult {
    let mut memo: FxHashMap<u64, usize> = FxHashMap::default();
    let size = matching_size(g, mask, &mut memo);

    // walk the memo back out, matching the lowest vertex to its smallest
    // partner whenever that preserves optimality
    let mut edges = Vec::with_capacity(size);
    let mut live = mask;
    while live != 0 {
        let v = live.trailing_zeros() as usize;
        let here = memo[&live];
        let mut matched = false;
        for u in bits(g.neighbors(v) & live) {
            let rest = live & !bit(v) & !bit(u);
            if 1 + matching_size(g, rest, &mut memo) == here {
                edges.push(Edge::new(v, u));
                live = rest;
                matched = true;
                break;
            }
        }
        if !matched {
            live &= !bit(v);
        }
    }
    debug_assert_eq!(edges.len(), size);
    MatchingResult { edges }
}

pub(crate) fn matching_size(g: &Graph, mask: u64, memo: &mut FxHashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&s) = memo.get(&mask) {
        return s;
    }
    let v = mask.trailing_zeros() as usize;
    // leave v unmatched
    let mut best = matching_size(g, mask & !bit(v), memo);
    for u in bits(g.neighbors(v) & mask) {
        best = best.max(1 + matching_size(g, mask & !bit(v) & !bit(u), memo));
    }
    memo.insert(mask, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basics() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);

        let empty = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);

        // duplicates collapse
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(dup, g);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::VertexCount(0)));
        assert_eq!(Graph::from_edges(65, &[]), Err(Error::VertexCount(65)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(Graph::complete(3).unwrap().triangle_count(), 1);
        assert_eq!(Graph::cycle(5).unwrap().triangle_count(), 0);
        assert_eq!(Graph::complete(4).unwrap().triangle_count(), 4);
        assert_eq!(Graph::complete(5).unwrap().triangle_count(), 10);
    }

    /// Independent check used by the maximality tests: triangle-freeness by
    /// triple loop and non-edge closure by direct inspection.
    fn maximal_tf_brute(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        return false;
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut closes = false;
                for c in 0..n {
                    if c != a && c != b && g.has_edge(a, c) && g.has_edge(b, c) {
                        closes = true;
                    }
                }
                if !closes {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn maximal_triangle_free_examples() {
        let p3 = Graph::path(3).unwrap();
        assert!(maximal_tf_brute(&p3));
        assert!(p3.is_maximal_triangle_free());

        let p4 = Graph::path(4).unwrap();
        assert!(!maximal_tf_brute(&p4));
        assert!(!p4.is_maximal_triangle_free());

        let c5 = Graph::cycle(5).unwrap();
        assert!(maximal_tf_brute(&c5));
        assert!(c5.is_maximal_triangle_free());
    }

    #[test]
    fn maximality_matches_brute_force_on_all_n5_graphs() {
        for mask in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> i & 1 == 1 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(g.is_maximal_triangle_free(), maximal_tf_brute(&g));
        }
    }

    #[test]
    fn cartesian_product_examples() {
        let p2 = Graph::path(2).unwrap();
        let sq = p2.cartesian_product(&p2).unwrap();
        // P2 x P2 is the 4-cycle 0-1-3-2-0 under (u,u') -> 2u+u'
        assert_eq!(sq, Graph::from_edges(4, &[(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap());

        let g = Graph::cycle(5).unwrap();
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.cartesian_product(&g).unwrap(), g);

        let ladder = p2.cartesian_product(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(ladder.n(), 6);
        assert_eq!(ladder.edge_count(), 7);
    }

    #[test]
    fn cartesian_product_size_formula() {
        let gs = [
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::empty(2).unwrap(),
        ];
        for g in &gs {
            for h in &gs {
                let p = g.cartesian_product(h).unwrap();
                assert_eq!(p.n(), g.n() * h.n());
                assert_eq!(
                    p.edge_count(),
                    g.n() * h.edge_count() + h.n() * g.edge_count()
                );
            }
        }
        let big = Graph::complete(9).unwrap();
        assert!(matches!(
            big.cartesian_product(&big),
            Err(Error::Capacity { .. })
        ));
    }

    /// Exhaustive max-cut over all splits, size only.
    fn max_cut_brute(g: &Graph) -> usize {
        let full = g.vertex_mask();
        (0..=full)
            .map(|x| cross_edge_count(g, x, full & !x))
            .max()
            .unwrap()
    }

    #[test]
    fn max_cut_examples() {
        assert_eq!(max_cut(&Graph::cycle(4).unwrap()).unwrap().0, 4);
        assert_eq!(max_cut(&Graph::cycle(5).unwrap()).unwrap().0, 4);
        assert_eq!(max_cut(&Graph::complete(4).unwrap()).unwrap().0, 4);
        assert_eq!(max_cut_brute(&Graph::cycle(5).unwrap()), 4);
        assert_eq!(max_cut_brute(&Graph::complete(4).unwrap()), 4);
    }

    #[test]
    fn max_cut_witness_and_bounds() {
        for seed_edges in [
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)],
            vec![(0, 1), (2, 3), (4, 5)],
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
        ] {
            let g = Graph::from_edges(6, &seed_edges).unwrap();
            let (size, cut) = max_cut(&g).unwrap();
            assert_eq!(size, max_cut_brute(&g));
            assert_eq!(size, cross_edge_count(&g, cut.x_mask, cut.y_mask));
            assert!(cut.x_mask & 1 == 1);
            // probabilistic lower bound e/2, checked deterministically
            assert!(2 * size >= g.edge_count());
            // zero deletion distance iff bipartite
            assert_eq!(size == g.edge_count(), g.is_bipartite());
        }
    }

    #[test]
    fn max_cut_regime() {
        let g = Graph::empty(29).unwrap();
        assert!(matches!(max_cut(&g), Err(Error::Regime { .. })));
    }

    /// Brute-force maximum matching size over all edge subsets.
    fn matching_brute(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for mask in 0u32..1 << edges.len() {
            let mut used = 0u64;
            let mut ok = true;
            let mut size = 0;
            for (i, e) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used & e.mask() != 0 {
                        ok = false;
                        break;
                    }
                    used |= e.mask();
                    size += 1;
                }
            }
            if ok {
                best = best.max(size);
            }
        }
        best
    }

    #[test]
    fn matching_examples() {
        let pm = Graph::perfect_matching(3).unwrap();
        assert_eq!(maximum_matching(&pm).size(), 3);
        assert_eq!(maximum_matching(&Graph::cycle(5).unwrap()).size(), 2);
        assert_eq!(maximum_matching(&Graph::empty(4).unwrap()).size(), 0);
        assert_eq!(matching_brute(&Graph::cycle(5).unwrap()), 2);
    }

    #[test]
    fn matching_is_valid_and_optimal_small() {
        for edges in [
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            vec![(0, 1), (2, 3), (1, 2), (3, 4)],
        ] {
            let n = 1 + edges.iter().map(|&(a, b)| a.max(b)).max().unwrap();
            let g = Graph::from_edges(n, &edges).unwrap();
            let m = maximum_matching(&g);
            assert_eq!(m.size(), matching_brute(&g));
            let mut used = 0u64;
            for e in &m.edges {
                assert!(g.has_edge(e.u(), e.v()));
                assert_eq!(used & e.mask(), 0);
                used |= e.mask();
            }
        }
    }

    #[test]
    fn components_and_coloring() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b000111, 0b011000, 0b100000]);
        assert!(g.is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let (a, b) = Graph::cycle(6).unwrap().two_coloring().unwrap();
        assert_eq!(a | b, 0b111111);
        assert_eq!(a & b, 0);
    }

    #[test]
    fn cliques() {
        assert_eq!(Graph::complete(5).unwrap().clique_number(), 5);
        assert_eq!(Graph::cycle(5).unwrap().clique_number(), 2);
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().clique_number(), 2);
        assert_eq!(Graph::empty(4).unwrap().clique_number(), 1);
        assert!(Graph::complete(4).unwrap().has_clique_of_size(4));
        assert!(!Graph::complete(4).unwrap().has_clique_of_size(5));
    }

    #[test]
    fn disjoint_union_shifts() {
        let g = Graph::path(2).unwrap().disjoint_union(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(g, Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap());
    }
}
