//! Minimum tessellation covers of simple graphs.
//!
//! A tessellation partitions the vertices into cliques (polygons); its edges
//! are those inside a polygon. A tessellation cover is a family of
//! tessellations whose edges together are all edges of the graph, and the
//! tessellation number `T(G)` is the smallest size of such a family.
//!
//! The crate provides graph generators and interchange formats, maximal
//! clique enumeration and the clique graph `K(G)`, exact coloring, bounds
//! `lower_bound(G) <= T(G) <= χ(K(G))`, an exact solver, a greedy set-cover
//! heuristic, and a suite of reproducible checks.

pub mod cliques;
pub mod coloring;
pub mod corpus;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod par;
pub mod tessellation;
pub mod verify;

pub use cliques::{clique_graph, maximal_cliques, Clique, CliqueGraph};
pub use coloring::{
    chromatic_index, chromatic_number, is_bipartite, Bipartition, Coloring, EdgeColoring,
};
pub use cover::{
    bounds, decide_k_tessellable, greedy_cover, lower_bound, maximal_polygon_check,
    tessellation_number, upper_bound_via_clique_coloring, BoundsReport, CoverResult, LowerReason,
    Method, SolveOptions,
};
pub use enumerate::enumerate_tessellations_restricted;
pub use error::{GraphError, ParseError, SolveError};
pub use families::{gen_family, Family, FamilySpec};
pub use graph::Graph;
pub use par::Execution;
pub use tessellation::{
    edge_set, is_valid_cover, validate_tessellation, Tessellation, TessellationCover,
};
