//! Exact combinatorics laboratory for maximal triangle-free graphs at desk
//! scale: bitmask graph kernels, maximal-independent-set counting, link
//! graphs, exhaustive enumeration, lower-bound generators, and the
//! matching/independent-set structure detector.
//!
//! Everything here is exact: searches are exhaustive or memoized branchings,
//! counts are integers, and each verifier is paired with an independent
//! brute-force oracle in the test suite.

pub mod error;
pub mod graph;
pub mod graph6;
pub mod construction;
pub mod enumeration;
pub mod link;
pub mod mis;
pub mod random;
pub mod structure;

pub use construction::{ConstructionFamily, DistinctnessReport, SeedChoice};
pub use enumeration::EnumerationReport;
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, MatchingResult};
pub use link::LinkGraph;
pub use mis::{BoundCheck, MisCount, P3Packing};
pub use structure::{GraphStats, StructureWitness};
