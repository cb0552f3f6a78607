//! Approximation algorithms for maximum induced matchings.
//!
//! * [`graph`]: simple graphs with stable edge ids, conflict sets, structural predicates.
//! * [`greedy`]: threshold greedy, local search, the bipartite-regular pipeline,
//!   the degenerate-graph greedy and greedy strong edge coloring.
//! * [`exact`]: branch-and-bound optimum for small instances.
//! * [`generators`]: seeded instance families and named fixtures.
//! * [`harness`]: bound verification, reports and corpus benchmarks.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, Graph};
