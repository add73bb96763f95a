//! Extending a strong coloring of a core by pendant vertices or by at most
//! two pendant paths.

use super::{defect_unless, finish, lift, Construction, StrongColoring};
use crate::colored::engine::{find_path, PathEngine, PathQuery};
use crate::colored::{is_proper_connected, strong_pair, Color};
use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphMap, Vertex};

/// Degree-one vertices and their neighbors, ascending by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantSet {
    pub vertices: Vec<Vertex>,
    pub neighbors: Vec<Vertex>,
}

impl PendantSet {
    pub fn of(g: &Graph) -> Self {
        let vertices: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
        let neighbors = vertices
            .iter()
            .map(|&v| g.adjacency(v)[0].0)
            .collect();
        PendantSet { vertices, neighbors }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A path `vertices[0] .. vertices[L-1]` hanging off the core vertex
/// `anchor`, which is adjacent to `vertices[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantPath {
    pub anchor: Vertex,
    pub vertices: Vec<Vertex>,
}

fn local(map: &SubgraphMap, v: Vertex) -> Vertex {
    map.vertices
        .iter()
        .position(|&w| w == v)
        .expect("vertex belongs to the subgraph")
}

/// Colors of the first and last edge of a vertex sequence.
fn ends(g: &Graph, colors: &[Color], p: &[Vertex]) -> (Color, Color) {
    let first = g.edge_between(p[0], p[1]).expect("path edge");
    let last = g.edge_between(p[p.len() - 2], p[p.len() - 1]).expect("path edge");
    (colors[first], colors[last])
}

fn smallest_outside(avoid: &[Color]) -> Color {
    (1..).find(|c| !avoid.contains(c)).expect("unbounded range")
}

/// Colors `g` from a strong coloring (at most 3 colors) of `g` minus its
/// pendant vertices, using at most `max(3, |pendants|)` colors.
///
/// With at most two pendants the pendant edges reuse core colors; otherwise
/// pendant edge `j >= 4` gets color `j` and the first three are chosen from
/// `{1, 2, 3}` according to which of their neighbors coincide.
pub fn extend_pendants(g: &Graph, core: &StrongColoring, pendants: &PendantSet) -> Result<Construction> {
    for (i, &v) in pendants.vertices.iter().enumerate() {
        let u = pendants.neighbors[i];
        if g.degree(v) != 1 || !g.has_edge(u, v) {
            return Err(Error::precondition(format!("vertex {v} is not a pendant at {u}")));
        }
        if pendants.vertices.contains(&u) {
            return Err(Error::precondition(format!("pendant {v} has its neighbor outside the core")));
        }
    }
    let (h, hmap) = g.remove_vertices(&pendants.vertices);
    core.coloring.check_fits(&h)?;
    if core.coloring.palette() > 3 {
        return Err(Error::precondition("core coloring uses more than 3 colors"));
    }
    let mut colors: Vec<Color> = vec![0; g.m()];
    lift(&mut colors, &hmap, &core.coloring);
    let core_colors = core.coloring.colors();
    let k = pendants.len();
    let pendant_edge = |i: usize| {
        g.edge_between(pendants.vertices[i], pendants.neighbors[i])
            .expect("pendant edge")
    };
    let u: Vec<Vertex> = pendants.neighbors.iter().map(|&x| local(&hmap, x)).collect();
    let rule;
    match k {
        0 => rule = "pendants/none",
        1 => {
            colors[pendant_edge(0)] = 1;
            rule = "pendants/one-or-two";
        }
        2 => {
            let (a, b) = if u[0] == u[1] {
                (1, 2)
            } else {
                let [_, p2] = strong_pair(&h, core_colors, u[0], u[1], PathEngine::default())
                    .ok_or_else(|| Error::precondition("core coloring is not strong"))?;
                ends(&h, core_colors, &p2)
            };
            colors[pendant_edge(0)] = a;
            colors[pendant_edge(1)] = b;
            rule = "pendants/one-or-two";
        }
        _ => {
            for j in 3..k {
                colors[pendant_edge(j)] = j as Color + 1;
            }
            let path = |a: Vertex, b: Vertex| -> Result<(Color, Color)> {
                let q = PathQuery::new(&h, core_colors, a, b);
                let p = find_path(&q, PathEngine::default())
                    .ok_or_else(|| Error::precondition("core coloring is not proper connected"))?;
                Ok(ends(&h, core_colors, &p))
            };
            // order the first three so that an equal pair, if any, comes first
            let order: [usize; 3] = if u[0] == u[1] || (u[0] != u[2] && u[1] != u[2]) {
                [0, 1, 2]
            } else if u[0] == u[2] {
                [0, 2, 1]
            } else {
                [1, 2, 0]
            };
            let [i1, i2, i3] = order;
            let picked: [Color; 3] = if u[i1] == u[i2] && u[i2] == u[i3] {
                rule = "pendants/three-shared";
                [1, 2, 3]
            } else if u[i1] == u[i2] {
                rule = "pendants/two-shared";
                let (start, end) = path(u[i1], u[i3])?;
                let free: Vec<Color> = (1..=3).filter(|&c| c != start).collect();
                [free[0], free[1], smallest_outside(&[end])]
            } else {
                rule = "pendants/distinct";
                let (s12, e12) = path(u[i1], u[i2])?;
                let (s13, e13) = path(u[i1], u[i3])?;
                let (s23, e23) = path(u[i2], u[i3])?;
                [
                    smallest_outside(&[s12, s13]),
                    smallest_outside(&[e12, s23]),
                    smallest_outside(&[e13, e23]),
                ]
            };
            for (slot, &i) in order.iter().enumerate() {
                colors[pendant_edge(i)] = picked[slot];
            }
        }
    }
    let coloring = finish(colors);
    let bound = k.max(3);
    defect_unless(coloring.palette() as usize <= bound, "pendant extension above bound")?;
    defect_unless(
        is_proper_connected(g, &coloring)?.holds,
        "pendant extension is not proper connected",
    )?;
    Ok(Construction {
        coloring,
        bound,
        provenance: vec![format!("{rule}: {} pendants", k)],
    })
}

/// Colors `h` from a strong coloring of `h[core_vertices]` when the rest of
/// `h` is covered by at most two pendant paths. Each path alternates two
/// colors; its first color is picked against a strong witness pair so that
/// the two paths connect through the core. Edges outside the core and the
/// paths get color 1.
pub fn extend_two_attachments(
    h: &Graph,
    core_vertices: &[Vertex],
    core: &StrongColoring,
    attach: &[PendantPath],
) -> Result<Construction> {
    if attach.len() > 2 {
        return Err(Error::precondition("more than two attachments"));
    }
    let mut core_sorted = core_vertices.to_vec();
    core_sorted.sort_unstable();
    core_sorted.dedup();
    let (c, cmap) = h.induced_subgraph(&core_sorted);
    core.coloring.check_fits(&c)?;
    let mut covered = vec![false; h.n()];
    core_sorted.iter().for_each(|&v| covered[v] = true);
    for p in attach {
        if !covered[p.anchor] || !core_sorted.contains(&p.anchor) || p.vertices.is_empty() {
            return Err(Error::precondition("attachment must hang off a core vertex"));
        }
        let mut prev = p.anchor;
        for &v in &p.vertices {
            if v >= h.n() || covered[v] || !h.has_edge(prev, v) {
                return Err(Error::precondition("attachment is not a pendant path"));
            }
            covered[v] = true;
            prev = v;
        }
    }
    if covered.iter().any(|&b| !b) {
        return Err(Error::precondition("attachments do not cover the graph"));
    }
    let k = (core.coloring.palette() as usize).max(2);
    let core_colors = core.coloring.colors();
    let mut colors: Vec<Color> = vec![1; h.m()];
    lift(&mut colors, &cmap, &core.coloring);
    let firsts: Vec<Color> = match attach {
        [] => vec![],
        [_] => vec![1],
        [p, q] if p.anchor == q.anchor => vec![1, 2],
        [p, q] => {
            let (a, b) = (local(&cmap, p.anchor), local(&cmap, q.anchor));
            let [_, p2] = strong_pair(&c, core_colors, a, b, PathEngine::default())
                .ok_or_else(|| Error::precondition("core coloring is not strong"))?;
            let (s, e) = ends(&c, core_colors, &p2);
            vec![s, e]
        }
        _ => unreachable!("at most two attachments"),
    };
    for (p, &first) in attach.iter().zip(&firsts) {
        let other = if first == 1 { 2 } else { 1 };
        let mut prev = p.anchor;
        for (i, &v) in p.vertices.iter().enumerate() {
            let e = h.edge_between(prev, v).expect("checked above");
            colors[e] = if i % 2 == 0 { first } else { other };
            prev = v;
        }
    }
    let coloring = finish(colors);
    defect_unless(coloring.palette() as usize <= k, "attachment palette above core palette")?;
    defect_unless(
        is_proper_connected(h, &coloring)?.holds,
        "attachment extension is not proper connected",
    )?;
    Ok(Construction {
        coloring,
        bound: k,
        provenance: vec![format!("attachments/pendant-paths: {} paths", attach.len())],
    })
}

/// At most two vertex-disjoint pendant paths of `h` covering every vertex
/// outside `core_vertices`, tried in lexicographic order of vertex
/// arrangements.
pub fn find_attachment_cover(h: &Graph, core_vertices: &[Vertex]) -> Option<Vec<PendantPath>> {
    let mut in_core = vec![false; h.n()];
    core_vertices.iter().for_each(|&v| in_core[v] = true);
    let outside: Vec<Vertex> = (0..h.n()).filter(|&v| !in_core[v]).collect();
    if outside.is_empty() {
        return Some(Vec::new());
    }
    let anchor_of = |v: Vertex| h.neighbors(v).find(|&w| in_core[w]);
    let chain = |seq: &[Vertex]| -> Option<PendantPath> {
        let anchor = anchor_of(seq[0])?;
        seq.windows(2)
            .all(|w| h.has_edge(w[0], w[1]))
            .then(|| PendantPath {
                anchor,
                vertices: seq.to_vec(),
            })
    };
    let mut perm = outside.clone();
    loop {
        for split in (0..=perm.len()).rev() {
            let (a, b) = perm.split_at(split);
            let mut paths = Vec::new();
            let ok = [a, b].iter().all(|part| {
                if part.is_empty() {
                    return true;
                }
                match chain(part) {
                    Some(p) => {
                        paths.push(p);
                        true
                    }
                    None => false,
                }
            });
            if ok {
                return Some(paths);
            }
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(a: &mut [Vertex]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("pivot has a successor");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructions::strong_color_block;

    fn k4_with_pendants(anchors: &[Vertex]) -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = Graph::complete(4).edges().to_vec();
        for (i, &a) in anchors.iter().enumerate() {
            edges.push((a, 4 + i));
        }
        Graph::from_edges(4 + anchors.len(), edges).unwrap()
    }

    fn k4_core() -> StrongColoring {
        strong_color_block(&Graph::complete(4), 3, Budget::DEFAULT).unwrap()
    }

    #[test]
    fn five_pendants_use_five_colors() {
        let g = k4_with_pendants(&[0, 1, 2, 3, 0]);
        let c = extend_pendants(&g, &k4_core(), &PendantSet::of(&g)).unwrap();
        assert_eq!(c.palette(), 5);
        assert_eq!(c.bound, 5);
    }

    #[test]
    fn pendant_cases() {
        for anchors in [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 1, 2]] {
            let g = k4_with_pendants(&anchors);
            let c = extend_pendants(&g, &k4_core(), &PendantSet::of(&g)).unwrap();
            assert!(c.palette() <= 3, "{anchors:?}");
        }
        let g = k4_with_pendants(&[0, 0, 0]);
        let c = extend_pendants(&g, &k4_core(), &PendantSet::of(&g)).unwrap();
        let pendant_colors: Vec<Color> = (6..9).map(|e| c.coloring.color(e)).collect();
        assert_eq!(pendant_colors, vec![1, 2, 3]);
        let g = k4_with_pendants(&[1, 2]);
        assert!(extend_pendants(&g, &k4_core(), &PendantSet::of(&g)).unwrap().palette() <= 3);
    }

    #[test]
    fn pendant_preconditions() {
        let k2 = Graph::path(2);
        let core = StrongColoring::trusted(crate::colored::EdgeColoring::uniform(0, 1));
        assert!(extend_pendants(&k2, &core, &PendantSet::of(&k2)).is_err());
    }

    #[test]
    fn attachments() {
        // C4 core 0..3 and a pendant path 0-4-5-6
        let mut edges = Graph::cycle(4).edges().to_vec();
        edges.extend([(0, 4), (4, 5), (5, 6)]);
        let h = Graph::from_edges(7, edges).unwrap();
        let core = strong_color_block(&Graph::cycle(4), 2, Budget::DEFAULT).unwrap();
        let cover = find_attachment_cover(&h, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cover.len(), 1);
        let c = extend_two_attachments(&h, &[0, 1, 2, 3], &core, &cover).unwrap();
        assert_eq!(c.palette(), 2);

        // two single vertices hanging off different core vertices
        let mut edges = Graph::cycle(4).edges().to_vec();
        edges.extend([(1, 4), (2, 5), (3, 5)]);
        let h = Graph::from_edges(6, edges).unwrap();
        let cover = find_attachment_cover(&h, &[0, 1, 2, 3]).unwrap();
        let c = extend_two_attachments(&h, &[0, 1, 2, 3], &core, &cover).unwrap();
        assert_eq!(c.palette(), 2);

        let h = Graph::cycle(4);
        let c = extend_two_attachments(&h, &[0, 1, 2, 3], &core, &[]).unwrap();
        assert_eq!(c.coloring, core.coloring);
    }

    #[test]
    fn too_many_attachments() {
        let h = Graph::star(3);
        let core = StrongColoring::trusted(crate::colored::EdgeColoring::uniform(0, 1));
        let paths: Vec<PendantPath> = (1..4)
            .map(|v| PendantPath {
                anchor: 0,
                vertices: vec![v],
            })
            .collect();
        assert!(extend_two_attachments(&h, &[0], &core, &paths).is_err());
        assert!(find_attachment_cover(&h, &[0]).is_none());
    }
}
