//! Connectivity primitives for directed graphs built around strong
//! biconnectivity, and an approximation algorithm for the minimum 2-edge
//! strongly biconnected spanning subgraph problem.
//!
//! A digraph is *strongly biconnected* when it is strongly connected and its
//! underlying undirected graph is biconnected. It is *2-edge strongly
//! biconnected* when it has at least three vertices and stays strongly
//! biconnected after deleting any single arc.
//!
//! Module map:
//!
//! - [`graph`]: the [`Digraph`] model, subgraph views, edge-list and DOT I/O.
//! - [`connectivity`]: SCCs, blocks, strong bridges, 2-edge-connectivity.
//! - [`sbc`]: strongly biconnected components, b-bridges and the
//!   2-edge-strong-biconnectivity check.
//! - [`optimizer`]: minimal 2-edge-connected subgraphs and the approximation.
//! - [`oracle`]: brute-force re-implementations and an exhaustive exact solver.
//! - [`testkit`]: the reference fixtures and a seeded instance generator.

pub mod connectivity;
pub mod error;
pub mod graph;
pub mod optimizer;
pub mod oracle;
pub mod sbc;
pub mod testkit;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{
    parse_edge_list, to_dot, Arc, ArcId, ArcSet, Digraph, DigraphView, Subgraph, UndirectedView,
    Vertex, Without,
};
pub use optimizer::{approx_m2esbss, bound_report, minimal_two_ecss, ApproxTrace, BoundReport};
pub use sbc::{is_two_edge_strongly_biconnected, SbcCheckReport, SbcDecomposition, Witness};
