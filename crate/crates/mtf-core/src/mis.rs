//! Exact counting and enumeration of maximal independent sets, maximum
//! vertex-disjoint P3 packings, and the verifier for the bound
//! `MIS(G) <= 2^(n/2 - k/25)` on triangle-free graphs with `k` disjoint P3's.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_bits, Graph};
use num_bigint::BigUint;
use num_traits::One;
use rustc_hash::FxHashMap;

/// An exact count of maximal independent sets. Kept as an arbitrary-precision
/// integer so downstream algebra (50th powers in the exact bound check) never
/// rounds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MisCount {
    pub value: BigUint,
}

impl MisCount {
    pub fn to_u64(&self) -> u64 {
        u64::try_from(&self.value).expect("MIS counts fit u64 at n <= 64")
    }
}

impl From<u64> for MisCount {
    fn from(v: u64) -> Self {
        MisCount {
            value: BigUint::from(v),
        }
    }
}

impl PartialEq<u64> for MisCount {
    fn eq(&self, other: &u64) -> bool {
        self.value == BigUint::from(*other)
    }
}

impl std::fmt::Display for MisCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}

// ============================================================================
// Enumeration (Bron-Kerbosch on the complement)
// ============================================================================

/// All maximal independent sets as vertex masks, ascending. A maximal
/// independent set of `G` is a maximal clique of the complement, found here
/// by Bron-Kerbosch with pivoting.
pub fn enumerate_mis(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let full = g.vertex_mask();
    let comp: Vec<u64> = (0..n).map(|v| !g.neighbors(v) & full & !bit(v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(0, full, 0, &comp, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, comp: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot with the most candidates excluded
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    for u in bits(p | x) {
        let left = (p & !comp[u]).count_ones() as usize;
        if left < best {
            best = left;
            pivot = u;
        }
    }
    for v in bits(p & !comp[pivot]) {
        bron_kerbosch(r | bit(v), p & comp[v], x & comp[v], comp, out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// True iff `set` is independent and dominating in `g` (i.e. a maximal
/// independent set).
pub fn is_maximal_independent_set(g: &Graph, set: u64) -> bool {
    if set & !g.vertex_mask() != 0 {
        return false;
    }
    let mut dominated = set;
    for v in bits(set) {
        if g.neighbors(v) & set != 0 {
            return false;
        }
        dominated |= g.neighbors(v);
    }
    dominated == g.vertex_mask()
}

// ============================================================================
// Exact counting (branching with a maximality filter)
// ============================================================================

/// Exact number of maximal independent sets.
///
/// Uses the branching `MIS(G) <= MIS(G - v) + MIS(G - Gamma(v))` on a
/// max-degree vertex. The recursion alone overcounts: sets counted in the
/// `G - v` branch need not dominate `v`. Exactness is restored by carrying
/// the removed-but-undominated vertices as a `pending` mask that every
/// counted set must still dominate; the memo key is the full residual state
/// `(live, pending)`. Disjoint components multiply.
pub fn count_mis(g: &Graph) -> MisCount {
    let mut total = 1u64;
    for comp in g.components() {
        let mut memo: FxHashMap<u128, u64> = FxHashMap::default();
        let c = count_rec(g, comp, 0, &mut memo);
        total = total.checked_mul(c).expect("MIS count fits u64 at n <= 64");
    }
    MisCount::from(total)
}

/// Number of independent sets `S` inside `live` dominating `live | pending`.
fn count_rec(g: &Graph, live: u64, pending: u64, memo: &mut FxHashMap<u128, u64>) -> u64 {
    // a pending vertex with no live neighbor can never be dominated
    for w in bits(pending) {
        if g.neighbors(w) & live == 0 {
            return 0;
        }
    }
    if live == 0 {
        return 1; // pending must be empty by the check above
    }
    let key = (live as u128) << 64 | pending as u128;
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    // branch on a vertex of maximum degree within the live subgraph
    let mut v = usize::MAX;
    let mut best = 0;
    for u in bits(live) {
        let d = (g.neighbors(u) & live).count_ones();
        if v == usize::MAX || d > best {
            best = d;
            v = u;
        }
    }
    let include = count_rec(
        g,
        live & !g.closed_neighbors(v),
        pending & !g.neighbors(v),
        memo,
    );
    let exclude = count_rec(g, live & !bit(v), pending | bit(v), memo);
    let c = include
        .checked_add(exclude)
        .expect("MIS count fits u64 at n <= 64");
    memo.insert(key, c);
    c
}

/// The unfiltered branching recursion `B(G) = B(G - v) + B(G - Gamma(v))`
/// with `B(empty) = 1`, branching on a max-degree vertex. An upper bound on
/// `MIS(G)`, exposed for bound experiments; it is not exact.
pub fn mis_branching_upper_bound(g: &Graph) -> BigUint {
    fn rec(g: &Graph, live: u64, memo: &mut FxHashMap<u64, u128>) -> u128 {
        if live == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&live) {
            return c;
        }
        let mut v = usize::MAX;
        let mut best = 0;
        for u in bits(live) {
            let d = (g.neighbors(u) & live).count_ones();
            if v == usize::MAX || d > best {
                best = d;
                v = u;
            }
        }
        let c = rec(g, live & !bit(v), memo) + rec(g, live & !g.closed_neighbors(v), memo);
        memo.insert(live, c);
        c
    }
    let mut memo = FxHashMap::default();
    BigUint::from(rec(g, g.vertex_mask(), &mut memo))
}

// ============================================================================
// Closed recurrences for paths and cycles
// ============================================================================

/// `MIS(P_n)` via `MIS(P_n) = MIS(P_{n-2}) + MIS(P_{n-3})` with bases
/// `MIS(P_1) = 1`, `MIS(P_2) = MIS(P_3) = 2`.
pub fn mis_path(n: usize) -> Result<MisCount> {
    if n == 0 {
        return Err(Error::Parameter("mis_path needs n >= 1".into()));
    }
    let bases = [
        BigUint::from(1u32),
        BigUint::from(2u32),
        BigUint::from(2u32),
    ];
    Ok(MisCount {
        value: run_recurrence(&bases, n - 1),
    })
}

/// `MIS(C_n)` via `MIS(C_n) = MIS(C_{n-2}) + MIS(C_{n-3})` with bases
/// `MIS(C_3) = 3`, `MIS(C_4) = 2`, `MIS(C_5) = 5`.
pub fn mis_cycle(n: usize) -> Result<MisCount> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "mis_cycle needs n >= 3, got {n}"
        )));
    }
    let bases = [
        BigUint::from(3u32),
        BigUint::from(2u32),
        BigUint::from(5u32),
    ];
    Ok(MisCount {
        value: run_recurrence(&bases, n - 3),
    })
}

fn run_recurrence(bases: &[BigUint; 3], steps: usize) -> BigUint {
    let mut window = bases.clone();
    for _ in 0..steps.saturating_sub(2) {
        let next = &window[1] + &window[0];
        window = [window[1].clone(), window[2].clone(), next];
    }
    window[steps.min(2)].clone()
}

// ============================================================================
// P3 packing
// ============================================================================

/// A family of pairwise vertex-disjoint triples, each spanning a path on
/// three vertices (some middle vertex adjacent to the other two).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P3Packing {
    pub triples: Vec<[usize; 3]>,
}

impl P3Packing {
    pub fn k(&self) -> usize {
        self.triples.len()
    }
}

const PACKING_MAX_N: usize = 30;

/// A maximum family of vertex-disjoint P3's, exact for `n <= 30`.
pub fn max_p3_packing(g: &Graph) -> Result<P3Packing> {
    if g.n() > PACKING_MAX_N {
        return Err(Error::Regime {
            op: "max_p3_packing",
            max: PACKING_MAX_N,
            got: g.n(),
        });
    }
    let mut triples = Vec::new();
    for comp in g.components() {
        let mut memo: FxHashMap<u64, u8> = FxHashMap::default();
        let k = pack_rec(g, comp, &mut memo);
        reconstruct_packing(g, comp, k, &memo, &mut triples);
    }
    triples.sort_unstable();
    Ok(P3Packing { triples })
}

/// Packing size only, restricted to the subgraph induced on `mask`.
pub(crate) fn max_p3_packing_size_in(g: &Graph, mask: u64) -> usize {
    let mut total = 0usize;
    for comp in components_within(g, mask) {
        let mut memo: FxHashMap<u64, u8> = FxHashMap::default();
        total += pack_rec(g, comp, &mut memo) as usize;
    }
    total
}

pub(crate) fn components_within(g: &Graph, mask: u64) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in bits(mask) {
        if seen & bit(v) != 0 {
            continue;
        }
        let mut comp = bit(v);
        loop {
            let mut grown = comp;
            for u in bits(comp) {
                grown |= g.neighbors(u) & mask;
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

fn pack_rec(g: &Graph, live: u64, memo: &mut FxHashMap<u64, u8>) -> u8 {
    if live.count_ones() < 3 {
        return 0;
    }
    // connected subgraphs of maximum degree <= 2 are paths or cycles, where
    // the packing number is just floor(size / 3) per component
    if bits(live).all(|v| (g.neighbors(v) & live).count_ones() <= 2) {
        return components_within(g, live)
            .iter()
            .map(|c| (c.count_ones() / 3) as u8)
            .sum();
    }
    if let Some(&k) = memo.get(&live) {
        return k;
    }
    // a greedy packing meeting the floor(|live|/3) ceiling is already optimal
    let ub = (live.count_ones() / 3) as u8;
    let lb = greedy_pack(g, live);
    if lb == ub {
        memo.insert(live, ub);
        return ub;
    }
    let v = live.trailing_zeros() as usize;
    let mut best = 0;
    for t in triples_through(g, v, live) {
        best = best.max(1 + pack_rec(g, live & !t, memo));
        if best == ub {
            break;
        }
    }
    if best < ub {
        best = best.max(pack_rec(g, live & !bit(v), memo));
    }
    best = best.max(lb);
    memo.insert(live, best);
    best
}

/// Take lexicographically-first triples until none remain; a lower bound.
fn greedy_pack(g: &Graph, mut live: u64) -> u8 {
    let mut k = 0;
    'outer: while live.count_ones() >= 3 {
        for v in bits(live) {
            let nv = g.neighbors(v) & live;
            if nv.count_ones() >= 2 {
                let a = nv.trailing_zeros();
                let b = (nv & (nv - 1)).trailing_zeros();
                live &= !(bit(v) | 1 << a | 1 << b);
                k += 1;
                continue 'outer;
            }
            if nv != 0 {
                let m = nv.trailing_zeros() as usize;
                let nm = g.neighbors(m) & live & !bit(v);
                if nm != 0 {
                    live &= !(bit(v) | bit(m) | 1 << nm.trailing_zeros());
                    k += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    k
}

/// Masks of all P3 triples inside `live` that contain `v`, deduplicated and
/// ascending.
fn triples_through(g: &Graph, v: usize, live: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let nv = g.neighbors(v) & live;
    // v is the middle
    for a in bits(nv) {
        for b in bits(nv & !low_bits(a + 1)) {
            out.push(bit(v) | bit(a) | bit(b));
        }
    }
    // v is an endpoint with middle m
    for m in bits(nv) {
        for b in bits(g.neighbors(m) & live & !bit(v)) {
            out.push(bit(v) | bit(m) | bit(b));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn reconstruct_packing(
    g: &Graph,
    comp: u64,
    k: u8,
    memo: &FxHashMap<u64, u8>,
    out: &mut Vec<[usize; 3]>,
) {
    let mut live = comp;
    let mut need = k;
    'walk: while need > 0 {
        // closed-form region: peel paths/cycles greedily by triples
        if bits(live).all(|v| (g.neighbors(v) & live).count_ones() <= 2) {
            for c in components_within(g, live) {
                let mut rest = c;
                while rest.count_ones() >= 3 && need > 0 {
                    // endpoints first so path triples stay contiguous
                    let v = bits(rest)
                        .min_by_key(|&v| ((g.neighbors(v) & rest).count_ones(), v))
                        .unwrap();
                    let t = triples_through(g, v, rest)
                        .into_iter()
                        .find(|t| {
                            pack_size_delta_ok(g, rest, *t)
                        })
                        .expect("closed form guarantees a triple");
                    push_triple(t, out);
                    rest &= !t;
                    need -= 1;
                }
            }
            return;
        }
        let v = live.trailing_zeros() as usize;
        let skip = memo.get(&(live & !bit(v))).copied().unwrap_or_else(|| {
            let mut m = FxHashMap::default();
            pack_rec(g, live & !bit(v), &mut m)
        });
        if skip == need {
            live &= !bit(v);
            continue 'walk;
        }
        for t in triples_through(g, v, live) {
            let rest = live & !t;
            let sub = memo.get(&rest).copied().unwrap_or_else(|| {
                let mut m = FxHashMap::default();
                pack_rec(g, rest, &mut m)
            });
            if 1 + sub == need {
                push_triple(t, out);
                live = rest;
                need -= 1;
                continue 'walk;
            }
        }
        unreachable!("memoized packing value has a realizing branch");
    }
}

fn pack_size_delta_ok(g: &Graph, live: u64, t: u64) -> bool {
    let before: u8 = components_within(g, live)
        .iter()
        .map(|c| (c.count_ones() / 3) as u8)
        .sum();
    let after: u8 = components_within(g, live & !t)
        .iter()
        .map(|c| (c.count_ones() / 3) as u8)
        .sum();
    after + 1 == before
}

fn push_triple(t: u64, out: &mut Vec<[usize; 3]>) {
    let vs: Vec<usize> = bits(t).collect();
    out.push([vs[0], vs[1], vs[2]]);
}

// ============================================================================
// The MIS bound and the remark constant
// ============================================================================

/// Result of checking `MIS(G) <= 2^(n/2 - k/25)` on a triangle-free graph.
/// `slack` is the base-2 logarithmic gap; `exact_holds` is the same
/// inequality in integer form `MIS(G)^50 <= 2^(25n - 2k)`, free of rounding.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub n: usize,
    pub k: usize,
    pub mis: MisCount,
    pub bound_log2: f64,
    pub slack: f64,
    pub exact_holds: bool,
}

/// Checks the P3-packing bound on a triangle-free graph: computes `k` by
/// maximum packing, `MIS` by exact count, and the slack
/// `n/2 - k/25 - log2(MIS)`.
pub fn verify_mis_bound(g: &Graph) -> Result<BoundCheck> {
    if g.n() > PACKING_MAX_N {
        return Err(Error::Regime {
            op: "verify_mis_bound",
            max: PACKING_MAX_N,
            got: g.n(),
        });
    }
    if let Some(t) = g.first_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let n = g.n();
    let k = max_p3_packing_size_in(g, g.vertex_mask());
    let mis = count_mis(g);
    let bound_log2 = n as f64 / 2.0 - k as f64 / 25.0;
    let slack = bound_log2 - (mis.to_u64() as f64).log2();
    let exact_holds = mis.value.pow(50) <= BigUint::one() << (25 * n - 2 * k);
    Ok(BoundCheck {
        n,
        k,
        mis,
        bound_log2,
        slack,
        exact_holds,
    })
}

/// Least constant `c` with `MIS(G) <= 2^(n/2 - k/c)` tight-or-better on the
/// family `G = a.C5 + b.K2` (disjoint unions), i.e.
/// `c = a / (n/2 - log2(5^a 2^b))` with `n = 5a + 2b`, `k = a`. The `b`
/// matchings contribute zero slack, so the value is `1/(5/2 - log2 5)`
/// independent of `a` and `b`.
pub fn min_constant_for_family(a: u64, b: u64) -> Result<f64> {
    if a == 0 {
        return Err(Error::Parameter(
            "family needs at least one C5 (a >= 1); k = 0 leaves the constant undefined".into(),
        ));
    }
    let n = 5 * a + 2 * b;
    let k = a as f64;
    let mis_log2 = a as f64 * 5f64.log2() + b as f64;
    Ok(k / (n as f64 / 2.0 - mis_log2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        // MIS(P2) = 2: {0}, {1}
        assert_eq!(enumerate_mis(&Graph::path(2).unwrap()), vec![0b01, 0b10]);

        // MIS(C5) = 5, all of size 2
        let sets = enumerate_mis(&Graph::cycle(5).unwrap());
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.count_ones() == 2));

        // empty graph: the single set of all vertices
        assert_eq!(enumerate_mis(&Graph::empty(6).unwrap()), vec![0b111111]);
    }

    #[test]
    fn enumerated_sets_are_maximal_independent() {
        for g in [
            Graph::cycle(7).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]),
        ] {
            let sets = enumerate_mis(&g);
            for &s in &sets {
                assert!(is_maximal_independent_set(&g, s));
            }
            let mut dedup = sets.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), sets.len());
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_mis(&Graph::path(3).unwrap()), 2);
        assert_eq!(count_mis(&Graph::cycle(4).unwrap()), 2);
        assert_eq!(count_mis(&Graph::cycle(5).unwrap()), 5);
        // perfect matching on m edges: 2^m
        for m in 1..=8 {
            assert_eq!(count_mis(&Graph::perfect_matching(m).unwrap()), 1u64 << m);
        }
    }

    #[test]
    fn count_agrees_with_enumeration() {
        // structured inputs
        for n in 1..=12 {
            let p = Graph::path(n).unwrap();
            assert_eq!(count_mis(&p).to_u64(), enumerate_mis(&p).len() as u64);
        }
        for n in 3..=12 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(count_mis(&c).to_u64(), enumerate_mis(&c).len() as u64);
        }
        // pseudorandom inputs
        let mut state = 0x9e3779b97f4a7c15u64;
        for trial in 0..300 {
            let n = 1 + (trial % 12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if state >> 61 & 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = graph(n, &edges);
            assert_eq!(
                count_mis(&g).to_u64(),
                enumerate_mis(&g).len() as u64,
                "mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn count_is_multiplicative_over_disjoint_unions() {
        let parts = [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::perfect_matching(2).unwrap(),
        ];
        for a in &parts {
            for b in &parts {
                let u = a.disjoint_union(b).unwrap();
                assert_eq!(
                    count_mis(&u).value,
                    count_mis(a).value * count_mis(b).value
                );
            }
        }
    }

    #[test]
    fn branching_bound_dominates_exact_count() {
        let mut state = 12345u64;
        for trial in 0..200 {
            let n = 2 + (trial % 10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                    if state >> 62 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = graph(n, &edges);
            assert!(mis_branching_upper_bound(&g) >= count_mis(&g).value);
        }
    }

    #[test]
    fn path_cycle_recurrences() {
        assert_eq!(mis_path(1).unwrap(), 1);
        assert_eq!(mis_path(2).unwrap(), 2);
        assert_eq!(mis_path(3).unwrap(), 2);
        assert_eq!(mis_path(4).unwrap(), 3); // MIS(P2) + MIS(P1)
        assert_eq!(mis_cycle(5).unwrap(), 5);
        assert!(mis_path(0).is_err());
        assert!(mis_cycle(2).is_err());

        for n in 1..=15 {
            assert_eq!(
                mis_path(n).unwrap().value,
                count_mis(&Graph::path(n).unwrap()).value,
                "path n={n}"
            );
        }
        for n in 3..=15 {
            assert_eq!(
                mis_cycle(n).unwrap().value,
                count_mis(&Graph::cycle(n).unwrap()).value,
                "cycle n={n}"
            );
        }
    }

    /// Brute-force maximum P3 packing: try all ways of picking disjoint
    /// spanning-P3 triples.
    fn packing_brute(g: &Graph) -> usize {
        fn all_triples(g: &Graph) -> Vec<u64> {
            let n = g.n();
            let mut out = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let spans_p3 = (g.has_edge(a, b) && g.has_edge(a, c))
                            || (g.has_edge(b, a) && g.has_edge(b, c))
                            || (g.has_edge(c, a) && g.has_edge(c, b));
                        if spans_p3 {
                            out.push(bit(a) | bit(b) | bit(c));
                        }
                    }
                }
            }
            out
        }
        fn best(triples: &[u64], used: u64) -> usize {
            let mut b = 0;
            for (i, &t) in triples.iter().enumerate() {
                if used & t == 0 {
                    b = b.max(1 + best(&triples[i + 1..], used | t));
                }
            }
            b
        }
        best(&all_triples(g), 0)
    }

    #[test]
    fn packing_examples() {
        assert_eq!(max_p3_packing(&Graph::perfect_matching(4).unwrap()).unwrap().k(), 0);
        assert_eq!(max_p3_packing(&Graph::path(3).unwrap()).unwrap().k(), 1);
        assert_eq!(max_p3_packing(&Graph::path(6).unwrap()).unwrap().k(), 2);
        assert_eq!(max_p3_packing(&Graph::cycle(5).unwrap()).unwrap().k(), 1);
        assert!(max_p3_packing(&Graph::empty(31).unwrap()).is_err());
    }

    #[test]
    fn packing_matches_brute_force_and_is_valid() {
        let mut state = 777u64;
        for trial in 0..200 {
            let n = 3 + (trial % 7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 62 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = graph(n, &edges);
            let p = max_p3_packing(&g).unwrap();
            assert_eq!(p.k(), packing_brute(&g), "size mismatch on {g:?}");
            // triples disjoint and each spans a P3
            let mut used = 0u64;
            for t in &p.triples {
                let m = bit(t[0]) | bit(t[1]) | bit(t[2]);
                assert_eq!(m.count_ones(), 3);
                assert_eq!(used & m, 0);
                used |= m;
                let [a, b, c] = *t;
                assert!(
                    (g.has_edge(a, b) && g.has_edge(a, c))
                        || (g.has_edge(b, a) && g.has_edge(b, c))
                        || (g.has_edge(c, a) && g.has_edge(c, b))
                );
            }
        }
    }

    #[test]
    fn bound_check_examples() {
        // C5: slack = 5/2 - 1/25 - log2(5)
        let c5 = verify_mis_bound(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.k, 1);
        assert_eq!(c5.mis, 5);
        let expected = 2.5 - 1.0 / 25.0 - 5f64.log2();
        assert!((c5.slack - expected).abs() < 1e-12);
        assert!(c5.slack > 0.0);
        assert!(c5.exact_holds);

        // perfect matching: slack is exactly zero (tightness case)
        for m in 1..=6 {
            let check = verify_mis_bound(&Graph::perfect_matching(m).unwrap()).unwrap();
            assert_eq!(check.k, 0);
            assert!(check.slack.abs() < 1e-12);
            assert!(check.exact_holds);
            // equality in integer form
            assert_eq!(
                check.mis.value.pow(50),
                BigUint::one() << (25 * 2 * m)
            );
        }

        // P3: slack = 1.5 - 0.04 - 1 = 0.46
        let p3 = verify_mis_bound(&Graph::path(3).unwrap()).unwrap();
        assert!((p3.slack - 0.46).abs() < 1e-12);

        // hypothesis violation is an error carrying a triangle
        assert!(matches!(
            verify_mis_bound(&Graph::complete(3).unwrap()),
            Err(Error::NotTriangleFree((0, 1, 2)))
        ));
    }

    #[test]
    fn remark_constant() {
        let closed_form = 1.0 / (2.5 - 5f64.log2());
        let c10 = min_constant_for_family(1, 0).unwrap();
        assert!((c10 - closed_form).abs() < 1e-12);
        // a cancels; matchings contribute zero slack
        assert!((min_constant_for_family(2, 0).unwrap() - closed_form).abs() < 1e-12);
        assert!((min_constant_for_family(1, 3).unwrap() - closed_form).abs() < 1e-12);
        assert!(c10 > 5.6);
        assert!(min_constant_for_family(0, 1).is_err());
    }
}
