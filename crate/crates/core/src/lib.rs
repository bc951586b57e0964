//! Matching vertex-cutsets: matchings whose endpoints, once deleted, leave
//! a graph disconnected or with a single vertex.
//!
//! The crate provides
//! - graph plumbing, the cutset check and named/random generators
//!   ([`graph`], [`generators`], [`io`]),
//! - the primitives the approximation is built from: vertex-split
//!   max-flow ([`flow`]), blossom matching ([`matching`]) and
//!   Hopcroft–Karp with Hall witnesses ([`bipartite`]),
//! - a factor-two approximation of the minimum cutset ([`approx`]),
//! - brute-force oracles for κ_M and edge domination ([`exact`]),
//! - the edge-domination reduction gadget ([`reduction`]),
//! - planar corpora and the planar bound suite ([`planar`]).

pub mod approx;
pub mod bipartite;
pub mod error;
pub mod exact;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod planar;
pub mod reduction;

pub use approx::{approx_min_matching_vertex_cutset, CaseTrace, CutsetResult};
pub use exact::{exact_min_matching_vertex_cutset, ExactAnswer};
pub use graph::{check_cutset, classify_special, Graph, Matching, SpecialClass, Verdict, Vertex};
