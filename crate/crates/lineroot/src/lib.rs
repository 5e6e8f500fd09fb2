//! Recognize line graphs of multigraphs and reconstruct their root graphs.
//!
//! A multigraph (parallel edges allowed, loops not) has two natural line
//! graphs on its edge set: the *1-line graph*, where two edges are adjacent
//! when they share exactly one endpoint, and the *≥1-line graph*, where
//! sharing at least one endpoint suffices. This crate decides whether an
//! ordinary graph arises this way and, when it does, rebuilds a canonical
//! root multigraph together with the explicit correspondence from input
//! vertices to root edges — in time linear in the size of the input.
//!
//! The reconstruction runs in four steps: partition the input into twin
//! classes (false twins for the 1-line flavor, true twins for ≥1), collapse
//! each class to a representative, solve the classical simple-graph root
//! problem on the quotient, and lift each twin class of size s back to s
//! parallel root edges. Canonicality means the root never has exactly four
//! vertices (1-line mode) or contains no collapsible three-vertex
//! configuration (≥1 mode); under those normalizations the root is unique
//! up to isomorphism, with one genuine boundary: a ≥1-line graph whose root
//! has exactly four vertices and a dense underlying shape can admit two
//! non-isomorphic canonical roots, because the line graph there has
//! symmetries no vertex bijection of the root induces. The reconstruction
//! still returns a canonical root with a verified correspondence in that
//! case; see [`reconstruct::reconstruct_root`] for details.

pub mod graph;
pub mod io;
pub mod iso;
pub mod krausz;
pub mod linegraph;
pub mod oracle;
pub mod reconstruct;
pub mod selftest;
pub mod twins;

mod canon;

pub use graph::{
    EdgeId, GraphError, MultiGraph, MultiGraphBuilder, ParallelClass, SimpleGraph,
    SimpleGraphBuilder, VertexId,
};
pub use io::{
    emit_multigraph, emit_root, emit_root_labeled, emit_simple_graph, parse_multigraph,
    parse_root, parse_simple_graph, MalformedInput, ParsedRoot,
};
pub use iso::{isomorphism_from_edge_map, multigraph_isomorphic, MultiGraphIsomorphism};
pub use krausz::{krausz_cover, simple_line_graph_root, K3Policy, KrauszCover, NotALineGraph, SimpleRootResult};
pub use linegraph::{geq1_line_graph, l1_line_graph};
pub use oracle::{
    brute_force_roots, collapse_by_rewriting, enumerate_multigraphs, enumerate_simple_graphs,
    permuted_multigraph, random_multigraph, OracleError, RandomConstraints, RewriteStep,
};
pub use reconstruct::{
    delta0_collapse, delta0_witness, is_delta0_free, is_generalized_line_graph, lift_isomorphism,
    reconstruct_root, verify, CannotLift, Delta0Witness, InvalidInput, LineMode, ReconstructError,
    RootResult,
};
pub use twins::{
    false_twin_partition, quotient, true_twin_partition, QuotientGraph, TwinKind, TwinPartition,
};
