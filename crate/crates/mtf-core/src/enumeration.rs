//! Exhaustive enumeration of labeled maximal triangle-free graphs on `[n]`,
//! an independent brute-force oracle, and deterministic maximal completion.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use serde::Serialize;
use std::collections::BTreeSet;

/// Aggregate counts for one enumeration run.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_structure: Option<u64>,
    pub elapsed_ms: u64,
}

const BRUTE_MAX_N: usize = 6;
const ENUMERATE_MAX_N: usize = 10;

fn slot_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every graph on `n` labeled vertices, in lexicographic edge-set order.
/// `n <= 6` keeps the family at `2^15`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > BRUTE_MAX_N {
        return Err(Error::Regime {
            op: "all_graphs",
            max: BRUTE_MAX_N,
            got: n,
        });
    }
    let slots = slot_list(n);
    let mut out = Vec::with_capacity(1 << slots.len());
    for mask in 0u64..1 << slots.len() {
        let mut g = Graph::empty(n)?;
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Feeds every triangle-free graph on `n` labeled vertices to `f`, by DFS
/// over edge slots that prunes any addition closing a triangle (so exactly
/// the triangle-free graphs are visited, once each).
pub fn for_each_triangle_free(n: usize, f: &mut impl FnMut(&Graph)) {
    fn rec(g: &mut Graph, slots: &[(usize, usize)], i: usize, f: &mut impl FnMut(&Graph)) {
        if i == slots.len() {
            f(g);
            return;
        }
        rec(g, slots, i + 1, f);
        let (u, v) = slots[i];
        if g.common_neighbors(u, v) == 0 {
            g.add_edge_unchecked(u, v);
            rec(g, slots, i + 1, f);
            g.remove_edge_unchecked(u, v);
        }
    }
    let slots = slot_list(n);
    let mut g = Graph::empty(n).expect("caller keeps n <= 64");
    rec(&mut g, &slots, 0, f);
}

/// Oracle: iterate all `2^(n(n-1)/2)` graphs (lexicographic edge-set order,
/// edge slots indexed lexicographically) and keep the maximal triangle-free
/// ones. `n <= 6`.
pub fn brute_force_mtf(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.is_maximal_triangle_free())
        .collect())
}

/// Streams every labeled maximal triangle-free graph on `[n]` exactly once
/// and returns the count. `n <= 10`.
///
/// DFS over triangle-free edge additions in increasing slot order, so each
/// graph is produced only along its lexicographically minimal generation
/// path (its sorted edge sequence) and no seen-set is needed. A branch is
/// pruned when some skipped slot is addable now and no future addition can
/// ever block it: every graph below would fail maximality at that slot.
pub fn enumerate_mtf_with<F: FnMut(&Graph)>(n: usize, mut emit: F) -> Result<u64> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(Error::Regime {
            op: "enumerate_mtf",
            max: ENUMERATE_MAX_N,
            got: n,
        });
    }
    let slots = slot_list(n);
    let mut g = Graph::empty(n)?;
    let mut count = 0u64;
    dfs(&mut g, &slots, 0, &mut count, &mut emit);
    Ok(count)
}

/// Collecting variant of [`enumerate_mtf_with`].
pub fn enumerate_mtf(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    enumerate_mtf_with(n, |g| out.push(g.clone()))?;
    Ok(out)
}

fn dfs<F: FnMut(&Graph)>(
    g: &mut Graph,
    slots: &[(usize, usize)],
    next: usize,
    count: &mut u64,
    emit: &mut F,
) {
    let mut any_addable = false;
    for (i, &(u, v)) in slots.iter().enumerate() {
        if g.has_edge(u, v) || g.common_neighbors(u, v) != 0 {
            continue;
        }
        any_addable = true;
        // slots below `next` can never be added on this path; if one can
        // also never be blocked, no descendant is maximal
        if i < next && !future_blockable(g, slots, u, v, next) {
            return;
        }
    }
    if !any_addable {
        *count += 1;
        emit(g);
        return;
    }
    for i in next..slots.len() {
        let (u, v) = slots[i];
        if !g.has_edge(u, v) && g.common_neighbors(u, v) == 0 {
            g.add_edge_unchecked(u, v);
            dfs(g, slots, i + 1, count, emit);
            g.remove_edge_unchecked(u, v);
        }
    }
}

/// Can the non-edge `(u, v)` still gain a common neighbor using only edges
/// already present or slots at index >= `next`?
fn future_blockable(
    g: &Graph,
    slots: &[(usize, usize)],
    u: usize,
    v: usize,
    next: usize,
) -> bool {
    let slot_index = |a: usize, b: usize| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        // lexicographic slot index of (a, b), a < b
        slots.len() - (g.n() - a) * (g.n() - a - 1) / 2 + (b - a - 1)
    };
    for w in 0..g.n() {
        if w == u || w == v {
            continue;
        }
        let uw_ok = g.has_edge(u, w) || slot_index(u, w) >= next;
        let vw_ok = g.has_edge(v, w) || slot_index(v, w) >= next;
        if uw_ok && vw_ok {
            return true;
        }
    }
    false
}

/// Repeatedly adds the first non-edge in `order` (default lexicographic)
/// whose addition creates no triangle, until none remains. The result is
/// maximal triangle-free and contains `g`.
///
/// A custom `order` must be a permutation of all vertex pairs of the graph.
pub fn maximal_completion(g: &Graph, order: Option<&[Edge]>) -> Result<Graph> {
    if let Some(t) = g.first_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let lex: Vec<Edge>;
    let order = match order {
        Some(o) => {
            let mut sorted: Vec<Edge> = o.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            let all = slot_list(g.n());
            if sorted.len() != all.len()
                || sorted
                    .iter()
                    .zip(all.iter())
                    .any(|(e, &(u, v))| (e.u(), e.v()) != (u, v))
            {
                return Err(Error::Parameter(
                    "completion order must be a permutation of all vertex pairs".into(),
                ));
            }
            o
        }
        None => {
            lex = slot_list(g.n())
                .into_iter()
                .map(|(u, v)| Edge::new(u, v))
                .collect();
            &lex
        }
    };
    let mut g = g.clone();
    'scan: loop {
        for e in order {
            if !g.has_edge(e.u(), e.v()) && g.common_neighbors(e.u(), e.v()) == 0 {
                g.add_edge_unchecked(e.u(), e.v());
                continue 'scan;
            }
        }
        break;
    }
    debug_assert!(g.is_maximal_triangle_free());
    Ok(g)
}

const COMPLETION_BUDGET: u64 = 1 << 20;
const COMPLETION_MAX_N: usize = 16; // pair indices must fit the u128 mask

/// The set of all maximal triangle-free supergraphs of `g` on the same
/// vertex set, by include/exclude branching on the first addable edge.
/// Errors once the search tree exceeds `2^20` nodes; `n <= 16`.
pub fn all_completions(g: &Graph) -> Result<BTreeSet<Graph>> {
    if g.n() > COMPLETION_MAX_N {
        return Err(Error::Regime {
            op: "all_completions",
            max: COMPLETION_MAX_N,
            got: g.n(),
        });
    }
    if let Some(t) = g.first_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let slots = slot_list(g.n());
    let mut out = BTreeSet::new();
    let mut budget = COMPLETION_BUDGET;
    let mut g = g.clone();
    complete_rec(&mut g, &slots, 0, &mut out, &mut budget)?;
    Ok(out)
}

fn complete_rec(
    g: &mut Graph,
    slots: &[(usize, usize)],
    forbidden: u128,
    out: &mut BTreeSet<Graph>,
    budget: &mut u64,
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::Budget(COMPLETION_BUDGET));
    }
    *budget -= 1;
    let candidate = slots.iter().enumerate().find(|(i, &(u, v))| {
        forbidden >> *i & 1 == 0 && !g.has_edge(u, v) && g.common_neighbors(u, v) == 0
    });
    match candidate {
        None => {
            // no addable edge outside the forbidden set; the graph is a
            // valid completion iff the forbidden edges are blocked too
            let ok = (0..slots.len()).all(|i| {
                let (u, v) = slots[i];
                forbidden >> i & 1 == 0
                    || g.has_edge(u, v)
                    || g.common_neighbors(u, v) != 0
            });
            if ok {
                out.insert(g.clone());
            }
            Ok(())
        }
        Some((i, &(u, v))) => {
            g.add_edge_unchecked(u, v);
            complete_rec(g, slots, forbidden, out, budget)?;
            g.remove_edge_unchecked(u, v);
            // excluding (u, v) is only viable if it can still be blocked:
            // some w with both (u, w) and (v, w) present or not forbidden
            let blockable = (0..g.n()).any(|w| {
                if w == u || w == v {
                    return false;
                }
                let ok = |a: usize, b: usize| {
                    g.has_edge(a, b) || forbidden >> slot_index_of(g.n(), a, b) & 1 == 0
                };
                ok(u, w) && ok(v, w)
            });
            if blockable {
                complete_rec(g, slots, forbidden | 1 << i, out, budget)?;
            }
            Ok(())
        }
    }
}

fn slot_index_of(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    n * (n - 1) / 2 - (n - a) * (n - a - 1) / 2 + (b - a - 1)
}

const CANONICAL_MAX_N: usize = 10;

/// Canonical representative of the isomorphism class of `g`: the relabeling
/// minimizing `(n, adjacency rows)`, by full permutation search. `n <= 10`;
/// an optional accelerator for isomorphism-reduced counting, expensive for
/// n >= 9.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.n() > CANONICAL_MAX_N {
        return Err(Error::Regime {
            op: "canonical_form",
            max: CANONICAL_MAX_N,
            got: g.n(),
        });
    }
    let n = g.n();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Graph> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut h = Graph::empty(n).expect("n validated");
        for e in &edges {
            h.add_edge_unchecked(p[e.u()], p[e.v()]);
        }
        if best.as_ref().is_none_or(|b| h < *b) {
            best = Some(h);
        }
    });
    Ok(best.expect("at least the identity permutation"))
}

fn permute<F: FnMut(&[usize])>(perm: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}
