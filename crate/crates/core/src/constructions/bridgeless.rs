//! Strong colorings of 2-connected blocks and of bridgeless graphs.

use super::{defect_unless, finish, lift, scope, Construction, StrongColoring};
use crate::budget::Budget;
use crate::colored::{has_strong_property, Color};
use crate::error::{Error, Result};
use crate::graph::{bipartition, blocks_and_cuts, bridges, is_k_connected, EdgeId, Graph, Vertex};
use crate::solver::strong_search;

/// Edge ids of a 2-connected spanning subgraph from which no edge can be
/// dropped without losing 2-connectivity. Edges are tried for removal from
/// the highest id down.
pub fn minimal_two_connected_spanning(g: &Graph) -> Result<Vec<EdgeId>> {
    if !is_k_connected(g, 2) {
        return Err(Error::precondition("graph is not 2-connected"));
    }
    let mut keep = vec![true; g.m()];
    for e in (0..g.m()).rev() {
        keep[e] = false;
        let ids: Vec<EdgeId> = (0..g.m()).filter(|&f| keep[f]).collect();
        let (sub, _) = g.spanning_subgraph(&ids);
        if !is_k_connected(&sub, 2) {
            keep[e] = true;
        }
    }
    Ok((0..g.m()).filter(|&e| keep[e]).collect())
}

/// Strong coloring of a 2-connected graph with at most 2 colors when it is
/// bipartite and at most 3 otherwise.
///
/// The search runs on a minimal 2-connected spanning subgraph (bipartite
/// whenever `b` is); the remaining edges take color 1, which cannot destroy
/// any path the subgraph provides.
pub fn strong_color_block(b: &Graph, max_colors: usize, budget: Budget) -> Result<StrongColoring> {
    if !is_k_connected(b, 2) {
        return Err(Error::precondition("block is not 2-connected"));
    }
    let needed = if bipartition(b).is_some() { 2 } else { 3 };
    if max_colors < needed {
        return Err(Error::precondition(format!(
            "a strong coloring of this block may need {needed} colors, {max_colors} allowed"
        )));
    }
    let keep = minimal_two_connected_spanning(b)?;
    let (sub, map) = b.spanning_subgraph(&keep);
    let Some(sub_coloring) = strong_search(&sub, needed, budget)? else {
        return Err(Error::defect(format!(
            "no strong coloring with {needed} colors on a 2-connected block"
        )));
    };
    let mut colors: Vec<Color> = vec![1; b.m()];
    lift(&mut colors, &map, &sub_coloring);
    let coloring = finish(colors);
    defect_unless(
        has_strong_property(b, &coloring)?.holds,
        "block coloring lost the strong property",
    )?;
    Ok(StrongColoring::trusted(coloring))
}

/// Strong coloring of a connected bridgeless graph with at most 3 colors (2
/// when bipartite), peeling one end-block at a time.
pub fn color_bridgeless(g: &Graph, budget: Budget) -> Result<Construction> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !bridges(g).is_empty() {
        return Err(Error::precondition("graph has a bridge"));
    }
    let bipartite = bipartition(g).is_some();
    let bound = if bipartite { 2 } else { 3 };
    let mut colors: Vec<Color> = vec![0; g.m()];
    let mut provenance = Vec::new();
    let mut rest: Vec<Vertex> = (0..g.n()).collect();
    while rest.len() > 1 {
        let (h, hmap) = g.induced_subgraph(&rest);
        let dec = blocks_and_cuts(&h)?;
        let (block, rule, drop) = if dec.blocks.len() == 1 {
            (rest.clone(), "bridgeless/last-block", rest.clone())
        } else {
            let (x_block, x) = dec
                .end_blocks()
                .map(|(i, x)| {
                    let mut vs: Vec<Vertex> = dec.blocks[i].iter().map(|&v| hmap.vertices[v]).collect();
                    vs.sort_unstable();
                    (vs, hmap.vertices[x])
                })
                .min()
                .expect("a graph with two blocks has an end-block");
            let drop: Vec<Vertex> = x_block.iter().copied().filter(|&v| v != x).collect();
            (x_block, "bridgeless/end-block", drop)
        };
        let (b, bmap) = g.induced_subgraph(&block);
        let strong = strong_color_block(&b, bound, budget)?;
        lift(&mut colors, &bmap, &strong.coloring);
        provenance.push(format!("{rule}: {}", scope(&block)));
        rest.retain(|v| !drop.contains(v));
    }
    let coloring = finish(colors);
    defect_unless(coloring.palette() as usize <= bound, "bridgeless palette above bound")?;
    defect_unless(
        has_strong_property(g, &coloring)?.holds,
        "bridgeless coloring lacks the strong property",
    )?;
    Ok(Construction {
        coloring,
        bound,
        provenance,
    })
}
