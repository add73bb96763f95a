//! Proper-connection edge colorings.
//!
//! A path in an edge-colored graph is *proper* when consecutive edges have
//! different colors. This crate verifies proper connectivity (and its
//! strong and k-disjoint variants), computes the proper connection numbers
//! `pc(G)` and `pc_k(G)` exactly on small graphs, and builds colorings with
//! a guaranteed palette for several structural graph classes.

pub mod budget;
pub mod colored;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;

pub use budget::Budget;
pub use error::{Error, Result};
pub use colored::{Color, EdgeColoring};
pub use graph::{EdgeId, Graph, Vertex};
