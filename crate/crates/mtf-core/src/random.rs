//! Seeded instance generators for randomized hypothesis tests. All output is
//! a pure function of the supplied RNG, so recording the seed reproduces a
//! run exactly.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

fn all_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Erdos-Renyi graph with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("caller keeps n <= 64");
    for (u, v) in all_slots(n) {
        if rng.random_bool(p) {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Random triangle-free graph: visit the vertex pairs in shuffled order and
/// add each with probability `p` when the addition closes no triangle. With
/// `p = 1` the result is maximal triangle-free.
pub fn random_triangle_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("caller keeps n <= 64");
    let mut slots = all_slots(n);
    slots.shuffle(rng);
    for (u, v) in slots {
        if g.common_neighbors(u, v) == 0 && rng.random_bool(p) {
            g.add_edge_unchecked(u, v);
        }
    }
    debug_assert!(g.is_triangle_free());
    g
}

/// Random pair of edge-disjoint triangle-free graphs on the same vertex set:
/// each pair lands in `S`, in `A`, or nowhere, skipped when it would close a
/// triangle on its side.
pub fn random_edge_disjoint_tf_pair<R: Rng>(
    n: usize,
    p_s: f64,
    p_a: f64,
    rng: &mut R,
) -> (Graph, Graph) {
    let mut s = Graph::empty(n).expect("caller keeps n <= 64");
    let mut a = Graph::empty(n).expect("caller keeps n <= 64");
    let mut slots = all_slots(n);
    slots.shuffle(rng);
    for (u, v) in slots {
        let roll: f64 = rng.random();
        if roll < p_s {
            if s.common_neighbors(u, v) == 0 {
                s.add_edge_unchecked(u, v);
            }
        } else if roll < p_s + p_a && a.common_neighbors(u, v) == 0 {
            a.add_edge_unchecked(u, v);
        }
    }
    debug_assert!(s.is_triangle_free() && a.is_triangle_free());
    (s, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangle_free_generator_is_triangle_free_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_triangle_free(12, 0.7, &mut rng);
            assert!(g.is_triangle_free());
        }
        let a = random_triangle_free(10, 0.5, &mut ChaCha8Rng::seed_from_u64(42));
        let b = random_triangle_free(10, 0.5, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a, b);
    }

    #[test]
    fn full_probability_yields_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_triangle_free(9, 1.0, &mut rng);
            assert!(g.is_maximal_triangle_free());
        }
    }

    #[test]
    fn pair_generator_is_edge_disjoint_and_triangle_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (s, a) = random_edge_disjoint_tf_pair(10, 0.3, 0.4, &mut rng);
            assert!(s.is_triangle_free());
            assert!(a.is_triangle_free());
            for e in a.edges() {
                assert!(!s.has_edge(e.u(), e.v()));
            }
        }
    }
}
