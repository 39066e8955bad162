//! Lower-bound generators: the 2^(n^2/8) triangle-free seed family (one
//! cross edge per matching-edge/vertex pair) and its clique-free
//! generalization across r classes, with distinctness verification.

use crate::enumeration::maximal_completion;
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph, MatchingResult, MAX_VERTICES};
use rand::Rng;

/// Selects one concrete seed from a construction family.
///
/// For each unordered pair of matching edges in *different* X classes there
/// is one entry in `cross` (which of the four cross edges is omitted, so
/// exactly three are placed); for each (matching edge, Y-vertex) pair there
/// is one entry in `bits` (which endpoint the Y-vertex joins). With `r = 2`
/// there are no cross pairs and the choice is the bit vector alone.
///
/// Entry order is lexicographic: cross entries by (class i, class j, edge
/// index in i, edge index in j) with i < j; bit entries by (class, edge
/// index, Y index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedChoice {
    pub cross: Vec<u8>,
    pub bits: Vec<bool>,
}

/// The fixed partition shape behind the generators: classes are contiguous
/// blocks of `[n]`, each X class carries the matching `{2i, 2i+1}` within
/// its block, and Y is the final block.
#[derive(Clone, Debug)]
pub struct ConstructionFamily {
    pub n: usize,
    pub r: usize,
    /// Class masks `X_1, ..., X_{r-1}, Y`.
    pub classes: Vec<u64>,
    /// Perfect matchings of the X classes.
    pub matchings: Vec<MatchingResult>,
}

impl ConstructionFamily {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Parameter(format!("need r >= 2, got {r}")));
        }
        if n == 0 || !n.is_multiple_of(2 * r) {
            return Err(Error::Divisibility { n, d: 2 * r });
        }
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let class_size = n / r;
        let mut classes = Vec::with_capacity(r);
        let mut matchings = Vec::with_capacity(r - 1);
        for c in 0..r {
            let base = c * class_size;
            let mask = ((1u128 << class_size) - 1) as u64;
            classes.push(mask << base);
            if c + 1 < r {
                let edges = (0..class_size / 2)
                    .map(|i| Edge::new(base + 2 * i, base + 2 * i + 1))
                    .collect();
                matchings.push(MatchingResult { edges });
            }
        }
        Ok(ConstructionFamily {
            n,
            r,
            classes,
            matchings,
        })
    }

    pub fn y_mask(&self) -> u64 {
        *self.classes.last().expect("r >= 2")
    }

    /// X side: everything except Y.
    pub fn x_mask(&self) -> u64 {
        self.classes[..self.r - 1].iter().fold(0, |m, c| m | c)
    }

    pub fn y_vertices(&self) -> Vec<usize> {
        bits(self.y_mask()).collect()
    }

    /// All matching edges across X classes, in class order.
    pub fn all_matching_edges(&self) -> Vec<Edge> {
        self.matchings
            .iter()
            .flat_map(|m| m.edges.iter().copied())
            .collect()
    }

    /// Number of cross-pair entries and of bit entries a choice must have.
    pub fn choice_shape(&self) -> (usize, usize) {
        let per_class = self.matchings[0].edges.len();
        let x_classes = self.r - 1;
        let cross = x_classes * (x_classes - 1) / 2 * per_class * per_class;
        let bits = x_classes * per_class * (self.n / self.r);
        (cross, bits)
    }
}

impl SeedChoice {
    /// All-zero choice of the right shape for `(n, r)`.
    pub fn zeros(n: usize, r: usize) -> Result<Self> {
        let fam = ConstructionFamily::new(n, r)?;
        let (c, b) = fam.choice_shape();
        Ok(SeedChoice {
            cross: vec![0; c],
            bits: vec![false; b],
        })
    }

    /// The `r = 2` choice whose bit `i` is bit `i` of `index`; inverse of
    /// interpreting the bit vector as a little-endian integer.
    pub fn from_index_r2(n: usize, index: u64) -> Result<Self> {
        let fam = ConstructionFamily::new(n, 2)?;
        let (_, nbits) = fam.choice_shape();
        if nbits < 64 && index >> nbits != 0 {
            return Err(Error::Parameter(format!(
                "choice index {index} out of range for {nbits} bits"
            )));
        }
        Ok(SeedChoice {
            cross: Vec::new(),
            bits: (0..nbits).map(|i| index >> i & 1 == 1).collect(),
        })
    }

    pub fn random<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<Self> {
        let fam = ConstructionFamily::new(n, r)?;
        let (c, b) = fam.choice_shape();
        Ok(SeedChoice {
            cross: (0..c).map(|_| rng.random_range(0..4u8)).collect(),
            bits: (0..b).map(|_| rng.random_bool(0.5)).collect(),
        })
    }

    /// Hex form of the choice: cross entries as two bits each, then the bit
    /// vector, packed least-significant-bit first into bytes.
    pub fn to_hex(&self) -> String {
        let mut stream: Vec<bool> = Vec::with_capacity(2 * self.cross.len() + self.bits.len());
        for &c in &self.cross {
            stream.push(c & 1 == 1);
            stream.push(c >> 1 & 1 == 1);
        }
        stream.extend_from_slice(&self.bits);
        let mut bytes = vec![0u8; stream.len().div_ceil(8)];
        for (i, &b) in stream.iter().enumerate() {
            if b {
                bytes[i / 8] |= 1 << (i % 8);
            }
        }
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Parses the hex form for the `(n, r)` shape.
    pub fn from_hex(n: usize, r: usize, hex: &str) -> Result<Self> {
        let fam = ConstructionFamily::new(n, r)?;
        let (nc, nb) = fam.choice_shape();
        let total = 2 * nc + nb;
        let expected_bytes = total.div_ceil(8);
        if hex.len() != 2 * expected_bytes {
            return Err(Error::ChoiceShape {
                expected: 2 * expected_bytes,
                got: hex.len(),
            });
        }
        let mut bytes = Vec::with_capacity(expected_bytes);
        for i in 0..expected_bytes {
            let b = u8::from_str_radix(&hex[2 * i..2 * i + 2], 16)
                .map_err(|e| Error::Parameter(format!("bad hex choice: {e}")))?;
            bytes.push(b);
        }
        let get = |i: usize| bytes[i / 8] >> (i % 8) & 1 == 1;
        // padding bits must be zero
        for i in total..8 * expected_bytes {
            if get(i) {
                return Err(Error::Parameter("nonzero padding in choice hex".into()));
            }
        }
        let cross = (0..nc)
            .map(|i| get(2 * i) as u8 | (get(2 * i + 1) as u8) << 1)
            .collect();
        let bits = (0..nb).map(|i| get(2 * nc + i)).collect();
        Ok(SeedChoice { cross, bits })
    }

    fn validate(&self, fam: &ConstructionFamily) -> Result<()> {
        let (nc, nb) = fam.choice_shape();
        if self.cross.len() != nc {
            return Err(Error::ChoiceShape {
                expected: nc,
                got: self.cross.len(),
            });
        }
        if self.bits.len() != nb {
            return Err(Error::ChoiceShape {
                expected: nb,
                got: self.bits.len(),
            });
        }
        if let Some(&c) = self.cross.iter().find(|&&c| c > 3) {
            return Err(Error::Parameter(format!(
                "cross choice {c} out of range 0..4"
            )));
        }
        Ok(())
    }
}

/// The triangle-free seed for `r = 2`: `X = {0..n/2}` induces the matching
/// `{2i, 2i+1}`, `Y` is independent, and each (matching edge, y) pair gets
/// exactly one cross edge, to endpoint `2i + bit`. Requires `4 | n`.
pub fn seed_graph(n: usize, choice: &SeedChoice) -> Result<Graph> {
    let g = seed_graph_general(n, 2, choice)?;
    debug_assert!(g.is_triangle_free());
    Ok(g)
}

/// The generalized seed across `r` classes: three of the four cross edges
/// between matching edges of different X classes (the choice says which is
/// omitted), one edge per (matching edge, Y-vertex) pair. Requires
/// `2r | n`. The output is verified `K_{r+1}`-free.
pub fn seed_graph_general(n: usize, r: usize, choice: &SeedChoice) -> Result<Graph> {
    let fam = ConstructionFamily::new(n, r)?;
    choice.validate(&fam)?;
    let mut g = Graph::empty(n)?;
    for m in &fam.matchings {
        for e in &m.edges {
            g.add_edge_unchecked(e.u(), e.v());
        }
    }
    // three of four cross edges per pair of matching edges across classes
    let mut ci = 0;
    for i in 0..fam.matchings.len() {
        for j in i + 1..fam.matchings.len() {
            for e in &fam.matchings[i].edges {
                for f in &fam.matchings[j].edges {
                    let corners = [
                        (e.u(), f.u()),
                        (e.u(), f.v()),
                        (e.v(), f.u()),
                        (e.v(), f.v()),
                    ];
                    let omit = choice.cross[ci] as usize;
                    ci += 1;
                    for (k, &(a, b)) in corners.iter().enumerate() {
                        if k != omit {
                            g.add_edge_unchecked(a, b);
                        }
                    }
                }
            }
        }
    }
    // one endpoint per (matching edge, y) pair
    let ys = fam.y_vertices();
    let mut bi = 0;
    for m in &fam.matchings {
        for e in &m.edges {
            for &y in &ys {
                let x = if choice.bits[bi] { e.v() } else { e.u() };
                bi += 1;
                g.add_edge_unchecked(x, y);
            }
        }
    }
    if g.has_clique_of_size(r + 1) {
        return Err(Error::Internal(format!(
            "seed for n={n}, r={r} contains K_{}",
            r + 1
        )));
    }
    Ok(g)
}

/// Outcome of the seed-distinctness experiment for `r = 2`.
#[derive(Clone, Debug)]
pub struct DistinctnessReport {
    pub n: usize,
    pub seed_count: u64,
    pub distinct_seeds: u64,
    pub distinct_completions: u64,
    pub all_seeds_triangle_free: bool,
    pub all_completions_maximal: bool,
    /// No `[X, Y]` non-edge of any seed can be added without a triangle.
    pub cross_nonedges_all_blocked: bool,
    /// Every completion's cross-edge set equals its seed's.
    pub cross_edges_preserved: bool,
    /// Hex choices of a colliding completion pair, if any.
    pub colliding_pair: Option<(String, String)>,
}

impl DistinctnessReport {
    pub fn all_hold(&self) -> bool {
        self.distinct_seeds == self.seed_count
            && self.distinct_completions == self.seed_count
            && self.all_seeds_triangle_free
            && self.all_completions_maximal
            && self.cross_nonedges_all_blocked
            && self.cross_edges_preserved
    }
}

/// Completes every `r = 2` seed lexicographically and verifies the seeds are
/// triangle-free and injective in the choice, the completions are pairwise
/// distinct and maximal, no cross non-edge is addable in any seed, and the
/// cross-edge sets survive completion unchanged. `n` in `{4, 8}` keeps the
/// family at `2^(n^2/8) <= 256` members.
pub fn verify_distinct_completions(n: usize) -> Result<DistinctnessReport> {
    if !(n == 4 || n == 8) {
        return Err(Error::Parameter(format!(
            "distinctness experiment runs at n in {{4, 8}}, got {n}"
        )));
    }
    let fam = ConstructionFamily::new(n, 2)?;
    let (_, nbits) = fam.choice_shape();
    let x_mask = fam.x_mask();
    let y_mask = fam.y_mask();

    let mut report = DistinctnessReport {
        n,
        seed_count: 1 << nbits,
        distinct_seeds: 0,
        distinct_completions: 0,
        all_seeds_triangle_free: true,
        all_completions_maximal: true,
        cross_nonedges_all_blocked: true,
        cross_edges_preserved: true,
        colliding_pair: None,
    };
    let mut seeds = std::collections::BTreeSet::new();
    let mut completions = std::collections::BTreeMap::new();

    for index in 0..1u64 << nbits {
        let choice = SeedChoice::from_index_r2(n, index)?;
        let seed = seed_graph(n, &choice)?;
        report.all_seeds_triangle_free &= seed.is_triangle_free();
        seeds.insert(seed.clone());

        for x in bits(x_mask) {
            for y in bits(y_mask) {
                if !seed.has_edge(x, y) && seed.common_neighbors(x, y) == 0 {
                    report.cross_nonedges_all_blocked = false;
                }
            }
        }

        let completion = maximal_completion(&seed, None)?;
        report.all_completions_maximal &= completion.is_maximal_triangle_free();

        let cross = |g: &Graph| -> Vec<Edge> {
            g.edges()
                .into_iter()
                .filter(|e| {
                    let m = e.mask();
                    m & x_mask != 0 && m & y_mask != 0
                })
                .collect()
        };
        if cross(&seed) != cross(&completion) {
            report.cross_edges_preserved = false;
        }

        if let Some(prev) = completions.insert(completion, choice.to_hex()) {
            if report.colliding_pair.is_none() {
                report.colliding_pair = Some((prev, choice.to_hex()));
            }
        }
    }
    report.distinct_seeds = seeds.len() as u64;
    report.distinct_completions = completions.len() as u64;
    Ok(report)
}

/// Extends `g` to a maximal `K_{r+1}`-free graph by lexicographic greedy
/// addition. With `r = 2` this is ordinary maximal completion.
pub fn maximal_completion_krfree(g: &Graph, r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::Parameter(format!("need r >= 2, got {r}")));
    }
    if g.has_clique_of_size(r + 1) {
        return Err(Error::Parameter(format!(
            "input already contains K_{}",
            r + 1
        )));
    }
    let mut g = g.clone();
    'scan: loop {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                // adding uv creates K_{r+1} iff the common neighborhood
                // contains K_{r-1}
                let common = g.common_neighbors(u, v);
                if !clique_in_mask(&g, common, r - 1) {
                    g.add_edge_unchecked(u, v);
                    continue 'scan;
                }
            }
        }
        break;
    }
    Ok(g)
}

fn clique_in_mask(g: &Graph, cand: u64, need: usize) -> bool {
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
        if clique_in_mask(g, rest & g.neighbors(v), need - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_shape() {
        let fam = ConstructionFamily::new(8, 2).unwrap();
        assert_eq!(fam.classes, vec![0x0f, 0xf0]);
        assert_eq!(fam.matchings.len(), 1);
        assert_eq!(fam.choice_shape(), (0, 8));

        let fam3 = ConstructionFamily::new(12, 3).unwrap();
        assert_eq!(fam3.classes.len(), 3);
        assert_eq!(fam3.choice_shape(), (4, 16)); // 2x2 cross pairs, 4 edges x 4 ys

        assert!(matches!(
            ConstructionFamily::new(6, 2),
            Err(Error::Divisibility { n: 6, d: 4 })
        ));
    }

    #[test]
    fn all_zero_seed_n4() {
        let choice = SeedChoice::zeros(4, 2).unwrap();
        let g = seed_graph(4, &choice).unwrap();
        assert_eq!(
            g,
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
        );
    }

    #[test]
    fn seeds_are_triangle_free_and_injective() {
        for n in [4usize, 8] {
            let nbits = (n / 4) * (n / 2);
            let mut seen = std::collections::BTreeSet::new();
            for index in 0..1u64 << nbits {
                let choice = SeedChoice::from_index_r2(n, index).unwrap();
                let g = seed_graph(n, &choice).unwrap();
                assert!(g.is_triangle_free());
                assert!(seen.insert(g), "choice {index} collided");
            }
            assert_eq!(seen.len() as u64, 1 << nbits);
        }
    }

    #[test]
    fn seed_count_is_two_to_the_n_squared_over_eight() {
        // n = 4: 2^(16/8) = 4 distinct seeds
        let seeds: std::collections::BTreeSet<Graph> = (0..4)
            .map(|i| seed_graph(4, &SeedChoice::from_index_r2(4, i).unwrap()).unwrap())
            .collect();
        assert_eq!(seeds.len(), 4);
    }

    #[test]
    fn seed_has_exactly_one_cross_edge_per_pair_and_so_does_completion() {
        let fam = ConstructionFamily::new(8, 2).unwrap();
        for index in [0u64, 1, 37, 255] {
            let choice = SeedChoice::from_index_r2(8, index).unwrap();
            let seed = seed_graph(8, &choice).unwrap();
            let completion = maximal_completion(&seed, None).unwrap();
            for g in [&seed, &completion] {
                for e in fam.all_matching_edges() {
                    for y in fam.y_vertices() {
                        let cnt = g.has_edge(e.u(), y) as usize + g.has_edge(e.v(), y) as usize;
                        assert_eq!(cnt, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn general_reduces_to_r2() {
        for index in 0..16u64 {
            let choice = SeedChoice::from_index_r2(8, index).unwrap();
            assert_eq!(
                seed_graph(8, &choice).unwrap(),
                seed_graph_general(8, 2, &choice).unwrap()
            );
        }
    }

    #[test]
    fn general_seeds_are_clique_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (n, r) in [(12usize, 3usize), (16, 4), (12, 2), (16, 2)] {
            for _ in 0..25 {
                let choice = SeedChoice::random(n, r, &mut rng).unwrap();
                let g = seed_graph_general(n, r, &choice).unwrap();
                assert!(!g.has_clique_of_size(r + 1));
                assert!(g.clique_number() <= r);
            }
        }
    }

    #[test]
    fn general_choice_injectivity_sampled() {
        // 4^4 * 2^16 choices at (12, 3); sample a subset and require
        // distinct seeds
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut seen = std::collections::BTreeMap::new();
        for _ in 0..200 {
            let choice = SeedChoice::random(12, 3, &mut rng).unwrap();
            let g = seed_graph_general(12, 3, &choice).unwrap();
            if let Some(prev) = seen.insert(g, choice.clone()) {
                assert_eq!(prev, choice, "distinct choices produced one seed");
            }
        }
    }

    #[test]
    fn hex_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (n, r) in [(8usize, 2usize), (12, 3), (16, 4)] {
            for _ in 0..20 {
                let c = SeedChoice::random(n, r, &mut rng).unwrap();
                let back = SeedChoice::from_hex(n, r, &c.to_hex()).unwrap();
                assert_eq!(c, back);
            }
        }
        assert!(SeedChoice::from_hex(8, 2, "zz").is_err());
        assert!(SeedChoice::from_hex(8, 2, "abcd").is_err()); // wrong length
    }

    #[test]
    fn distinctness_n4() {
        let rep = verify_distinct_completions(4).unwrap();
        assert_eq!(rep.seed_count, 4);
        assert!(rep.all_hold(), "{rep:?}");
    }

    #[test]
    fn distinctness_rejects_other_n() {
        assert!(verify_distinct_completions(6).is_err());
        assert!(verify_distinct_completions(12).is_err());
    }

    #[test]
    fn krfree_completion_is_maximal() {
        let choice = SeedChoice::zeros(12, 3).unwrap();
        let seed = seed_graph_general(12, 3, &choice).unwrap();
        let c = maximal_completion_krfree(&seed, 3).unwrap();
        assert!(!c.has_clique_of_size(4));
        // maximal: every addition creates K4
        for e in c.non_edges() {
            let mut g = c.clone();
            g.add_edge(e.u(), e.v()).unwrap();
            assert!(g.has_clique_of_size(4));
        }
        // r = 2 case agrees with the triangle completion
        let s2 = seed_graph(8, &SeedChoice::zeros(8, 2).unwrap()).unwrap();
        assert_eq!(
            maximal_completion_krfree(&s2, 2).unwrap(),
            maximal_completion(&s2, None).unwrap()
        );
    }
}
