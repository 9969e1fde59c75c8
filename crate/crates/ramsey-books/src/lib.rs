//! Ramsey numbers of books versus complete multipartite graphs, at desk
//! scale: lower-bound witness constructions with machine-checked
//! certificates, exhaustive small-order Ramsey values over an isomorph-free
//! graph stream, the degree-constrained extremal function behind the join
//! assembly, partition and clique diagnostics for the structural arguments,
//! and graph6/DIMACS interchange.
//!
//! Graphs are immutable bitset adjacency matrices capped at [`MAX_ORDER`]
//! vertices; exhaustive engines carry much smaller explicit caps and report
//! capacity errors rather than attempt infeasible sweeps.

mod bits;

pub mod cli;
pub mod cnf;
pub mod constructions;
pub mod dk;
pub mod enumerate;
pub mod error;
pub mod freeness;
pub mod graph;
pub mod graph6;
pub mod ramsey;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{build_graph, disjoint_union, join, Graph, VertexSet, MAX_ORDER};
