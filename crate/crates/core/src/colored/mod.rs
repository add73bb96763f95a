//! Verification of colored graphs: proper paths, proper connectivity, the
//! strong property, and k internally disjoint proper paths.

mod coloring;
pub(crate) mod engine;
mod verify;

pub use coloring::{Color, EdgeColoring};
pub use engine::PathEngine;
pub use verify::{
    enumerate_proper_paths, exists_proper_path, exists_proper_path_with, has_strong_property,
    is_k_proper_connected, is_proper_connected, is_proper_path, PathEnumeration, ProperPath,
    VerificationReport, DEFAULT_PATH_CAP,
};
pub(crate) use verify::{disjoint_proper_paths, strong_pair};
