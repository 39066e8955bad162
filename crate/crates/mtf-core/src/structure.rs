//! The structure predicate: a vertex partition X u Y with G[X] an induced
//! perfect matching and Y independent, plus the per-cut statistics (disjoint
//! P3's, matching size, isolated vertices, inner degrees), bipartite
//! distance, and population fractions over the maximal triangle-free graphs.

use crate::enumeration::{enumerate_mtf_with, EnumerationReport};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, max_cut, Bipartition, Edge, Graph, MatchingResult};
use crate::mis::max_p3_packing_size_in;
use rustc_hash::FxHashMap;
use std::time::Instant;

/// A certificate that `G` has the matching/independent-set structure:
/// `G[X]` is exactly the listed perfect matching (induced, 1-regular) and
/// `Y` induces no edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureWitness {
    pub partition: Bipartition,
    pub matching: MatchingResult,
}

const STRUCTURE_MAX_N: usize = 24;

/// Deterministic witness search: candidate `Y` runs over independent sets in
/// ascending mask order (so the numerically smallest `y_mask` wins, and
/// `Y = 0` is admissible); for each, `G[V - Y]` must be 1-regular.
/// Returns `None` when no partition exists. `n <= 24`.
pub fn find_structure_partition(g: &Graph) -> Result<Option<StructureWitness>> {
    if g.n() > STRUCTURE_MAX_N {
        return Err(Error::Regime {
            op: "find_structure_partition",
            max: STRUCTURE_MAX_N,
            got: g.n(),
        });
    }
    match search(g, g.n() as isize - 1, 0, 0) {
        Some(y_mask) => {
            let w = witness_from_y(g, y_mask)?;
            // independent re-validation, not trusting the search path
            validate_witness(g, &w)?;
            Ok(Some(w))
        }
        None => Ok(None),
    }
}

/// Assign vertices from the top index down; taking the X side first makes
/// discovered y-masks ascend numerically. Prunes on Y-independence and on
/// X vertices already seeing two X neighbors.
fn search(g: &Graph, v: isize, y_mask: u64, x_mask: u64) -> Option<u64> {
    if v < 0 {
        let one_regular = bits(x_mask).all(|u| (g.neighbors(u) & x_mask).count_ones() == 1);
        return one_regular.then_some(y_mask);
    }
    let vb = bit(v as usize);
    let nv = g.neighbors(v as usize);

    // v into X: v and each X-neighbor must keep inner degree <= 1
    let new_x = x_mask | vb;
    let v_ok = (nv & new_x).count_ones() <= 1
        && bits(nv & x_mask).all(|u| (g.neighbors(u) & new_x).count_ones() <= 1);
    if v_ok {
        if let Some(y) = search(g, v - 1, y_mask, new_x) {
            return Some(y);
        }
    }
    // v into Y: must stay independent
    if nv & y_mask == 0 {
        if let Some(y) = search(g, v - 1, y_mask | vb, x_mask) {
            return Some(y);
        }
    }
    None
}

fn witness_from_y(g: &Graph, y_mask: u64) -> Result<StructureWitness> {
    let x_mask = g.vertex_mask() & !y_mask;
    let edges: Vec<Edge> = bits(x_mask)
        .filter_map(|u| {
            let partner = g.neighbors(u) & x_mask;
            let v = partner.trailing_zeros() as usize;
            (v > u).then(|| Edge::new(u, v))
        })
        .collect();
    Ok(StructureWitness {
        partition: Bipartition::new(x_mask, y_mask, g.n())?,
        matching: MatchingResult { edges },
    })
}

/// Checks a claimed witness by direct inspection: sides partition the
/// vertices, `Y` is independent, the matching covers `X` exactly once, and
/// `G[X]` has no edge outside the matching.
pub fn validate_witness(g: &Graph, w: &StructureWitness) -> Result<()> {
    let Bipartition { x_mask, y_mask } = w.partition;
    if x_mask & y_mask != 0 || x_mask | y_mask != g.vertex_mask() {
        return Err(Error::InvalidWitness("sides do not partition [n]".into()));
    }
    for v in bits(y_mask) {
        if g.neighbors(v) & y_mask != 0 {
            return Err(Error::InvalidWitness(format!("Y contains an edge at {v}")));
        }
    }
    let mut covered = 0u64;
    for e in &w.matching.edges {
        if !g.has_edge(e.u(), e.v()) {
            return Err(Error::InvalidWitness(format!("matching edge {e} absent")));
        }
        if e.mask() & x_mask != e.mask() {
            return Err(Error::InvalidWitness(format!("matching edge {e} leaves X")));
        }
        if covered & e.mask() != 0 {
            return Err(Error::InvalidWitness(format!("matching reuses {e}")));
        }
        covered |= e.mask();
    }
    if covered != x_mask {
        return Err(Error::InvalidWitness("matching does not cover X".into()));
    }
    for u in bits(x_mask) {
        if (g.neighbors(u) & x_mask).count_ones() != 1 {
            return Err(Error::InvalidWitness(format!(
                "G[X] is not 1-regular at {u}"
            )));
        }
    }
    Ok(())
}

/// For a valid witness of `g`: does every (matching edge, Y-vertex) pair
/// have exactly one connecting edge? Certifies only; validity of the witness
/// is enforced, maximality of `g` is not assumed.
pub fn check_one_cross_edge(g: &Graph, w: &StructureWitness) -> Result<bool> {
    validate_witness(g, w)?;
    for e in &w.matching.edges {
        for y in bits(w.partition.y_mask) {
            let cnt = g.has_edge(e.u(), y) as usize + g.has_edge(e.v(), y) as usize;
            if cnt != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per-graph statistics under one vertex cut: `s` = maximum vertex-disjoint
/// P3's in `G[X]`, `t` = maximum matching in `G[Y]`, `r` = isolated vertices
/// of `G[X]`, plus the largest inner degree on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub cut: Bipartition,
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub max_inner_degree_x: usize,
    pub max_inner_degree_y: usize,
}

const STATS_MAX_N: usize = 24;

/// Statistics under the deterministic max-cut witness. `n <= 24`.
pub fn graph_stats(g: &Graph) -> Result<GraphStats> {
    if g.n() > STATS_MAX_N {
        return Err(Error::Regime {
            op: "graph_stats",
            max: STATS_MAX_N,
            got: g.n(),
        });
    }
    let (_, cut) = max_cut(g)?;
    Ok(stats_under_cut(g, cut))
}

fn stats_under_cut(g: &Graph, cut: Bipartition) -> GraphStats {
    let inner = |mask: u64| -> usize {
        bits(mask)
            .map(|v| (g.neighbors(v) & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    };
    GraphStats {
        cut,
        s: max_p3_packing_size_in(g, cut.x_mask),
        t: matching_size_in_mask(g, cut.y_mask),
        r: bits(cut.x_mask)
            .filter(|&v| g.neighbors(v) & cut.x_mask == 0)
            .count(),
        max_inner_degree_x: inner(cut.x_mask),
        max_inner_degree_y: inner(cut.y_mask),
    }
}

fn matching_size_in_mask(g: &Graph, mask: u64) -> usize {
    let mut memo = FxHashMap::default();
    crate::graph::matching_size(g, mask, &mut memo)
}

const ALL_CUTS_MAX_N: usize = 16;

/// Statistics for every max-cut (each counted once with vertex 0 on the X
/// side), ascending by `x_mask`. The full quantification costs `2^(n-1)`
/// cut evaluations, so `n <= 16`.
pub fn graph_stats_all_cuts(g: &Graph) -> Result<Vec<GraphStats>> {
    if g.n() > ALL_CUTS_MAX_N {
        return Err(Error::Regime {
            op: "graph_stats_all_cuts",
            max: ALL_CUTS_MAX_N,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let (best, _) = max_cut(g)?;
    let full = g.vertex_mask();
    let mut out = Vec::new();
    for rest in 0..1u64 << (g.n() - 1) {
        let x_mask = rest << 1 | 1;
        let y_mask = full & !x_mask;
        if crate::graph::cross_edge_count(g, x_mask, y_mask) == best {
            out.push(stats_under_cut(g, Bipartition { x_mask, y_mask }));
        }
    }
    Ok(out)
}

/// Exact number of edge deletions to reach a bipartite graph:
/// `e(G) - maxcut(G)`. `n <= 28`.
pub fn closeness_to_bipartite(g: &Graph) -> Result<usize> {
    let (cut, _) = max_cut(g)?;
    Ok(g.edge_count() - cut)
}

/// Enumerates all labeled maximal triangle-free graphs on `[n]` and counts
/// how many admit a structure witness.
pub fn structure_fraction(n: usize) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut structured = 0u64;
    let mut err = None;
    let total = enumerate_mtf_with(n, |g| {
        if err.is_some() {
            return;
        }
        match find_structure_partition(g) {
            Ok(Some(_)) => structured += 1,
            Ok(None) => {}
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(EnumerationReport {
        n,
        total,
        by_structure: Some(structured),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
