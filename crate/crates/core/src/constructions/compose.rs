//! Gluing colorings across a bridge, and the general bound built on it.

use super::bridgeless::color_bridgeless;
use super::extend::{extend_pendants, PendantSet};
use super::{defect_unless, finish, scope, Construction, StrongColoring};
use crate::budget::Budget;
use crate::colored::{is_proper_connected, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{bridge_block_tree, bridges, EdgeId, Graph, SubgraphMap, Vertex};

/// The two pieces of a graph cut at a bridge `ab`: `first` is the side of
/// `a` plus `b` as a pendant vertex, `second` the side of `b` plus `a`.
#[derive(Clone, Debug)]
pub struct BridgeSplit {
    pub edge: EdgeId,
    pub first: Graph,
    pub first_map: SubgraphMap,
    pub second: Graph,
    pub second_map: SubgraphMap,
}

impl BridgeSplit {
    /// Position of the bridge in each piece's edge list.
    pub fn local_edges(&self) -> (EdgeId, EdgeId) {
        let find = |map: &SubgraphMap| {
            map.edges
                .iter()
                .position(|&e| e == self.edge)
                .expect("bridge belongs to both pieces")
        };
        (find(&self.first_map), find(&self.second_map))
    }
}

pub fn split_at_bridge(g: &Graph, e: EdgeId) -> Result<BridgeSplit> {
    if e >= g.m() || !bridges(g).contains(&e) {
        return Err(Error::precondition(format!("edge {e} is not a bridge")));
    }
    let (a, b) = g.edge(e);
    let mut side = vec![false; g.n()];
    side[a] = true;
    let mut stack = vec![a];
    while let Some(v) = stack.pop() {
        for &(w, f) in g.adjacency(v) {
            if f != e && !side[w] {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    let first: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] || v == b).collect();
    let second: Vec<Vertex> = (0..g.n()).filter(|&v| !side[v] || v == a).collect();
    let (g1, m1) = g.induced_subgraph(&first);
    let (g2, m2) = g.induced_subgraph(&second);
    Ok(BridgeSplit {
        edge: e,
        first: g1,
        first_map: m1,
        second: g2,
        second_map: m2,
    })
}

fn swap_colors(c: &EdgeColoring, x: Color, y: Color) -> Vec<Color> {
    c.colors()
        .iter()
        .map(|&z| match z {
            _ if z == x => y,
            _ if z == y => x,
            _ => z,
        })
        .collect()
}

/// Merges proper-path colorings of the two pieces of a bridge split. The
/// piece with the smaller palette is renamed so that both agree on the
/// bridge; the result uses the larger palette.
pub fn compose_cut_edge(
    g: &Graph,
    e: EdgeId,
    c1: &EdgeColoring,
    c2: &EdgeColoring,
) -> Result<Construction> {
    let split = split_at_bridge(g, e)?;
    c1.check_fits(&split.first)?;
    c2.check_fits(&split.second)?;
    if !is_proper_connected(&split.first, c1)?.holds || !is_proper_connected(&split.second, c2)?.holds {
        return Err(Error::precondition("piece coloring is not proper connected"));
    }
    let (l1, l2) = split.local_edges();
    let (x, y) = (c1.color(l1), c2.color(l2));
    let (k1, k2) = (c1.max_color(), c2.max_color());
    let (first, second) = if k2 <= k1 {
        (c1.colors().to_vec(), swap_colors(c2, y, x))
    } else {
        (swap_colors(c1, x, y), c2.colors().to_vec())
    };
    let mut colors: Vec<Color> = vec![0; g.m()];
    for (local, &parent) in split.first_map.edges.iter().enumerate() {
        colors[parent] = first[local];
    }
    for (local, &parent) in split.second_map.edges.iter().enumerate() {
        colors[parent] = second[local];
    }
    let coloring = finish(colors);
    let bound = k1.max(k2) as usize;
    defect_unless(coloring.palette() as usize <= bound, "composition palette grew")?;
    defect_unless(
        is_proper_connected(g, &coloring)?.holds,
        "composed coloring is not proper connected",
    )?;
    Ok(Construction {
        coloring,
        bound,
        provenance: vec![format!("cut-edge/compose: edge {e}")],
    })
}

/// Proper-path coloring with at most `max(3, Δ(G*))` colors, where `G*` is
/// the tree of bridgeless components.
///
/// The graph is cut at bridges whose ends both have degree at least 2 until
/// every piece is one component with its cut edges hanging off as pendant
/// edges. A singleton piece is a star and gets distinct colors; any other
/// piece gets a strong bridgeless coloring extended to its pendants. Pieces
/// are glued back with [`compose_cut_edge`].
pub fn color_general(g: &Graph, budget: Budget) -> Result<Construction> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = bridge_block_tree(g)?;
    let bound = tree.max_degree().max(3);
    let labels: Vec<Vertex> = (0..g.n()).collect();
    let mut built = general(g, &labels, budget)?;
    defect_unless(
        built.coloring.palette() as usize <= bound,
        "general coloring exceeds max(3, Δ(G*))",
    )?;
    built.bound = bound;
    Ok(built)
}

fn general(g: &Graph, labels: &[Vertex], budget: Budget) -> Result<Construction> {
    if g.n() == 1 {
        return Ok(Construction {
            coloring: EdgeColoring::uniform(0, 1),
            bound: 0,
            provenance: vec![format!("general/single-vertex: {}", scope(labels))],
        });
    }
    if g.n() == 2 {
        return Ok(Construction {
            coloring: EdgeColoring::uniform(1, 1),
            bound: 1,
            provenance: vec![format!("general/single-edge: {}", scope(labels))],
        });
    }
    let cut = bridges(g).into_iter().find(|&e| {
        let (a, b) = g.edge(e);
        g.degree(a) >= 2 && g.degree(b) >= 2
    });
    if let Some(e) = cut {
        let split = split_at_bridge(g, e)?;
        let relabel = |map: &SubgraphMap| -> Vec<Vertex> { map.vertices.iter().map(|&v| labels[v]).collect() };
        let left = general(&split.first, &relabel(&split.first_map), budget)?;
        let right = general(&split.second, &relabel(&split.second_map), budget)?;
        let mut glued = compose_cut_edge(g, e, &left.coloring, &right.coloring)?;
        let (a, b) = g.edge(e);
        let mut provenance = left.provenance;
        provenance.extend(right.provenance);
        provenance.push(format!("cut-edge/compose: {}", scope(&[labels[a], labels[b]])));
        glued.provenance = provenance;
        return Ok(glued);
    }
    // every bridge is a pendant edge: one component plus its cut edges
    let pendants = PendantSet::of(g);
    let (core, core_map) = g.remove_vertices(&pendants.vertices);
    let core_labels: Vec<Vertex> = core_map.vertices.iter().map(|&v| labels[v]).collect();
    if core.n() == 1 {
        let colors: Vec<Color> = (1..=g.m() as Color).collect();
        let coloring = finish(colors);
        defect_unless(is_proper_connected(g, &coloring)?.holds, "star coloring failed")?;
        return Ok(Construction {
            bound: g.m(),
            coloring,
            provenance: vec![format!("general/singleton-star: {}", scope(&core_labels))],
        });
    }
    let inner = color_bridgeless(&core, budget)?;
    let strong = StrongColoring::trusted(inner.coloring);
    let mut built = extend_pendants(g, &strong, &pendants)?;
    let mut provenance: Vec<String> = inner
        .provenance
        .iter()
        .map(|p| format!("{p} within {}", scope(&core_labels)))
        .collect();
    provenance.push(format!(
        "general/bridgeless-with-pendants: {}",
        scope(&core_labels)
    ));
    built.provenance = provenance;
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::pc_exact;

    fn triangles_bridged() -> Graph {
        Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn split_pieces() {
        let g = triangles_bridged();
        let s = split_at_bridge(&g, 3).unwrap();
        assert_eq!(s.first_map.vertices, vec![0, 1, 2, 3]);
        assert_eq!(s.second_map.vertices, vec![2, 3, 4, 5]);
        assert!(split_at_bridge(&g, 0).is_err());
    }

    #[test]
    fn compose_two_triangles() {
        let g = triangles_bridged();
        let s = split_at_bridge(&g, 3).unwrap();
        let c1 = pc_exact(&s.first, Budget::DEFAULT).unwrap().witness;
        let c2 = pc_exact(&s.second, Budget::DEFAULT).unwrap().witness;
        let c = compose_cut_edge(&g, 3, &c1, &c2).unwrap();
        assert_eq!(c.palette(), 2);
        assert_eq!(pc_exact(&g, Budget::DEFAULT).unwrap().value, 2);
    }

    #[test]
    fn compose_star_and_k4() {
        // K4 on 0..3, bridge 3-4, star centered at 4 with leaves 5,6,7
        let mut edges = Graph::complete(4).edges().to_vec();
        edges.extend([(3, 4), (4, 5), (4, 6), (4, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let e = g.edge_between(3, 4).unwrap();
        let s = split_at_bridge(&g, e).unwrap();
        let p1 = pc_exact(&s.first, Budget::DEFAULT).unwrap();
        let p2 = pc_exact(&s.second, Budget::DEFAULT).unwrap();
        let c = compose_cut_edge(&g, e, &p1.witness, &p2.witness).unwrap();
        assert_eq!(c.palette(), p1.value.max(p2.value));
        assert_eq!(c.palette(), 4);
    }

    #[test]
    fn general_examples() {
        let t = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (3, 6)]).unwrap();
        let c = color_general(&t, Budget::DEFAULT).unwrap();
        assert_eq!(c.palette(), 4);
        let c = color_general(&Graph::petersen(), Budget::DEFAULT).unwrap();
        assert!(c.palette() <= 3);
        let c = color_general(&triangles_bridged(), Budget::DEFAULT).unwrap();
        assert!(c.palette() <= 3);
        assert!(color_general(&Graph::empty(2), Budget::DEFAULT).is_err());
    }
}
