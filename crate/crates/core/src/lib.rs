//! Graph level order layering, degree-doubling detection and lemma auditing
//! for oriented graphs.
//!
//! A node `v` is a *Seymour vertex* when its second out-neighborhood is at
//! least as large as its first, `|N⁺⁺(v)| ≥ |N⁺(v)|`. The crate provides a
//! brute-force oracle for that property, a breadth-first layering of the
//! graph from a root, the decreasing-neighborhood search that tries to find
//! such a vertex from the layering, a checker that evaluates a catalogue of
//! structural claims about layered graphs, and a transitive-triangle census.

pub mod bench;
pub mod claims;
pub mod cli;
pub mod digraph;
pub mod dnsa;
pub mod error;
pub mod generate;
pub mod io;
pub mod layering;
pub mod seymour;
pub mod triangles;

pub use digraph::{build_graph, Digraph, InducedSubgraph, NeighborSet, NodeId, OrientedGraph};
pub use dnsa::{map_interior_degrees, run_dnsa, verify_dnsa, DnsaResult, HaltReason, VerificationRecord};
pub use error::{GraphError, Result};
pub use generate::{fixture, gen_cycle, gen_random_oriented, gen_tournament, Fixture, GenKind, GenSpec};
pub use layering::{build_layering, min_out_degree_node, ArcClass, NeighborPartition, RootedLayering, TieBreak};
pub use seymour::{seymour_oracle, SeymourReport};
