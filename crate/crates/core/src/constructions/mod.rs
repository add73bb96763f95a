//! Constructive colorings with guaranteed palette bounds.
//!
//! Every public construction re-verifies its output with the checkers in
//! [`crate::colored`] before returning it; a failed check surfaces as
//! [`Error::Defect`].

mod basic;
mod bridgeless;
mod compose;
mod dense;
mod extend;
mod hamiltonian;

pub use basic::{color_cycle, color_cycle_chord, color_tree, cycle_chord_graph};
pub use bridgeless::{color_bridgeless, minimal_two_connected_spanning, strong_color_block};
pub use compose::{color_general, compose_cut_edge, split_at_bridge, BridgeSplit};
pub use dense::{
    augment_bipartite, color_dense_three, color_dense_two, extract_bipartite_spanning,
    extract_bipartite_spanning_any, find_bipartite_spanning, Bipartition,
};
pub use extend::{extend_pendants, extend_two_attachments, find_attachment_cover, PendantPath, PendantSet};
pub use hamiltonian::{color_dirac_pc2, color_ore_pc2};

use crate::colored::{has_strong_property, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphMap};

/// A coloring together with the palette bound it was built to meet and the
/// steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub coloring: EdgeColoring,
    pub bound: usize,
    /// One entry per step, as `rule: scope`.
    pub provenance: Vec<String>,
}

impl Construction {
    pub fn palette(&self) -> usize {
        self.coloring.palette() as usize
    }
}

/// A coloring verified to have the strong property on its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongColoring {
    pub coloring: EdgeColoring,
    pub strong: bool,
}

impl StrongColoring {
    /// Checks the strong property; fails with a precondition error otherwise.
    pub fn verify(g: &Graph, coloring: EdgeColoring) -> Result<Self> {
        if !has_strong_property(g, &coloring)?.holds {
            return Err(Error::precondition("coloring lacks the strong property"));
        }
        Ok(StrongColoring {
            coloring,
            strong: true,
        })
    }

    pub(crate) fn trusted(coloring: EdgeColoring) -> Self {
        StrongColoring {
            coloring,
            strong: true,
        }
    }
}

/// Palette is the largest color present.
pub(crate) fn finish(colors: Vec<Color>) -> EdgeColoring {
    if colors.is_empty() {
        return EdgeColoring::uniform(0, 1);
    }
    debug_assert!(colors.iter().all(|&c| c > 0), "every edge colored");
    EdgeColoring::from_colors(colors).expect("colors are positive")
}

/// Copies a subgraph's colors onto the parent's edge ids.
pub(crate) fn lift(colors: &mut [Color], map: &SubgraphMap, sub: &EdgeColoring) {
    for (local, &parent) in map.edges.iter().enumerate() {
        colors[parent] = sub.color(local);
    }
}

pub(crate) fn defect_unless(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::defect(what.to_string()))
    }
}

pub(crate) fn scope(vertices: &[usize]) -> String {
    let parts: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
