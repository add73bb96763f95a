//! Dense graphs: 2-connected bipartite spanning subgraphs, and colorings
//! with 2 or 3 colors above the edge-count thresholds.

use super::bridgeless::{color_bridgeless, strong_color_block};
use super::compose::{compose_cut_edge, split_at_bridge};
use super::extend::{extend_two_attachments, find_attachment_cover, PendantSet};
use super::{defect_unless, finish, lift, scope, Construction, StrongColoring};
use crate::budget::Budget;
use crate::colored::{is_proper_connected, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::families::dense_thresholds;
use crate::graph::{binomial2, bridges, is_k_connected, EdgeId, Graph, SubgraphMap, Vertex};
use crate::solver::pc_exact;

/// Two disjoint vertex sets covering the graph; the subgraph it stands for
/// has every edge of the host crossing between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

impl Bipartition {
    fn new(mut x: Vec<Vertex>, mut y: Vec<Vertex>) -> Self {
        x.sort_unstable();
        y.sort_unstable();
        Bipartition { x, y }
    }

    pub fn crossing_edges(&self, g: &Graph) -> Vec<EdgeId> {
        let mut side = vec![None; g.n()];
        self.x.iter().for_each(|&v| side[v] = Some(false));
        self.y.iter().for_each(|&v| side[v] = Some(true));
        (0..g.m())
            .filter(|&e| {
                let (a, b) = g.edge(e);
                matches!((side[a], side[b]), (Some(p), Some(q)) if p != q)
            })
            .collect()
    }

    /// Covers all vertices and its crossing subgraph is 2-connected.
    pub fn is_spanning_two_connected(&self, g: &Graph) -> bool {
        if self.x.len() + self.y.len() != g.n() {
            return false;
        }
        let (sub, _) = g.spanning_subgraph(&self.crossing_edges(g));
        is_k_connected(&sub, 2)
    }

    fn map_up(self, map: &SubgraphMap) -> Self {
        let up = |s: Vec<Vertex>| s.into_iter().map(|v| map.vertices[v]).collect();
        Bipartition::new(up(self.x), up(self.y))
    }
}

/// Grows a 2-connected bipartite subgraph with `u, v` on side X: start from
/// X = {u, v} and Y = their common neighbors, then repeatedly move the
/// smallest outside vertex with two neighbors in one side into the other
/// side. Fails when fewer than two common neighbors exist or no vertex can
/// be absorbed.
pub fn augment_bipartite(g: &Graph, u: Vertex, v: Vertex) -> Result<Bipartition> {
    if u == v || u >= g.n() || v >= g.n() {
        return Err(Error::precondition("need two distinct vertices"));
    }
    let common: Vec<Vertex> = g.neighbors(u).filter(|&w| g.has_edge(v, w)).collect();
    if common.len() < 2 {
        return Err(Error::precondition(format!(
            "{u} and {v} have fewer than 2 common neighbors"
        )));
    }
    // 0 = outside, 1 = X, 2 = Y
    let mut side = vec![0u8; g.n()];
    side[u] = 1;
    side[v] = 1;
    common.iter().for_each(|&w| side[w] = 2);
    loop {
        let count = |w: Vertex, s: u8| g.neighbors(w).filter(|&z| side[z] == s).count();
        let next = (0..g.n()).filter(|&w| side[w] == 0).find_map(|w| {
            if count(w, 1) >= 2 {
                Some((w, 2))
            } else if count(w, 2) >= 2 {
                Some((w, 1))
            } else {
                None
            }
        });
        match next {
            Some((w, s)) => side[w] = s,
            None => break,
        }
    }
    if side.contains(&0) {
        return Err(Error::precondition("augmentation stalls before spanning"));
    }
    let x = (0..g.n()).filter(|&w| side[w] == 1).collect();
    let y = (0..g.n()).filter(|&w| side[w] == 2).collect();
    Ok(Bipartition::new(x, y))
}

/// Spanning 2-connected bipartite subgraph with `u, v` on the same side, for
/// `n >= 6` and at least `C(n-1, 2) + 3` edges.
pub fn extract_bipartite_spanning(g: &Graph, u: Vertex, v: Vertex) -> Result<Bipartition> {
    let n = g.n();
    if n < 6 || g.m() < binomial2(n - 1) + 3 {
        return Err(Error::precondition(format!(
            "need n >= 6 and m >= C(n-1,2)+3 (n = {n}, m = {})",
            g.m()
        )));
    }
    let bip = augment_bipartite(g, u, v).map_err(|e| match e {
        Error::Precondition(msg) => Error::defect(msg),
        other => other,
    })?;
    defect_unless(bip.is_spanning_two_connected(g), "augmented subgraph is not 2-connected")?;
    Ok(bip)
}

/// Spanning 2-connected bipartite subgraph of a 2-connected graph with
/// `n >= 12` and at least `C(n-1, 2) - 5` edges.
///
/// Removes a minimum-degree vertex `v`: with two neighbors, the rest is dense
/// enough for [`extract_bipartite_spanning`] around them; otherwise the rest
/// is handled recursively and `v` joins the side opposite two of its
/// neighbors. On 12 vertices all bipartitions are searched.
pub fn extract_bipartite_spanning_any(g: &Graph) -> Result<Bipartition> {
    let n = g.n();
    if n < 12 || !is_k_connected(g, 2) || g.m() + 5 < binomial2(n - 1) {
        return Err(Error::precondition(format!(
            "need a 2-connected graph with n >= 12 and m >= C(n-1,2)-5 (n = {n}, m = {})",
            g.m()
        )));
    }
    if g.is_complete() {
        let x: Vec<Vertex> = (0..n / 2).collect();
        let y: Vec<Vertex> = (n / 2..n).collect();
        return Ok(Bipartition::new(x, y));
    }
    if n == 12 {
        return find_bipartite_spanning(g)?
            .ok_or_else(|| Error::defect("no 2-connected bipartite spanning subgraph on 12 vertices"));
    }
    let v = min_degree_vertex(g);
    let (h, hmap) = g.remove_vertices(&[v]);
    let to_local = |w: Vertex| if w < v { w } else { w - 1 };
    let bip = if g.degree(v) == 2 {
        let nb: Vec<Vertex> = g.neighbors(v).map(to_local).collect();
        let inner = extract_bipartite_spanning(&h, nb[0], nb[1])?.map_up(&hmap);
        let mut y = inner.y;
        y.push(v);
        Bipartition::new(inner.x, y)
    } else {
        let inner = extract_bipartite_spanning_any(&h)
            .map_err(|e| match e {
                Error::Precondition(msg) => Error::defect(msg),
                other => other,
            })?
            .map_up(&hmap);
        let in_x = inner.x.iter().filter(|&&w| g.has_edge(v, w)).count();
        if in_x >= 2 {
            let mut y = inner.y;
            y.push(v);
            Bipartition::new(inner.x, y)
        } else {
            let mut x = inner.x;
            x.push(v);
            Bipartition::new(x, inner.y)
        }
    };
    defect_unless(bip.is_spanning_two_connected(g), "extracted subgraph is not 2-connected")?;
    Ok(bip)
}

/// First bipartition (vertex 0 in X, the others by the bits of an
/// increasing mask) whose crossing subgraph is spanning and 2-connected.
pub fn find_bipartite_spanning(g: &Graph) -> Result<Option<Bipartition>> {
    let n = g.n();
    if n < 4 {
        return Ok(None);
    }
    if n > 24 {
        return Err(Error::precondition("exhaustive bipartition search is limited to 24 vertices"));
    }
    let mut side = vec![false; n];
    for mask in 0u32..(1 << (n - 1)) {
        for (v, s) in side.iter_mut().enumerate().skip(1) {
            *s = mask >> (v - 1) & 1 == 1;
        }
        let crossing_degree_ok = (0..n).all(|v| g.neighbors(v).filter(|&w| side[w] != side[v]).take(2).count() == 2);
        if !crossing_degree_ok {
            continue;
        }
        let bip = Bipartition::new(
            (0..n).filter(|&v| !side[v]).collect(),
            (0..n).filter(|&v| side[v]).collect(),
        );
        if bip.is_spanning_two_connected(g) {
            return Ok(Some(bip));
        }
    }
    Ok(None)
}

fn min_degree_vertex(g: &Graph) -> Vertex {
    (0..g.n()).min_by_key(|&v| (g.degree(v), v)).expect("nonempty graph")
}

/// Strong 2-coloring of `g` from a strong coloring of its bipartite spanning
/// subgraph; the remaining edges get color 1.
fn strong_two(g: &Graph, bip: &Bipartition, budget: Budget) -> Result<StrongColoring> {
    let (b, bmap) = g.spanning_subgraph(&bip.crossing_edges(g));
    let strong = strong_color_block(&b, 2, budget)?;
    let mut colors: Vec<Color> = vec![1; g.m()];
    lift(&mut colors, &bmap, &strong.coloring);
    Ok(StrongColoring::trusted(finish(colors)))
}

/// Colors `g` from a strong 2-coloring of `g[core]`, covering the remaining
/// vertices by at most two pendant paths.
fn attach(g: &Graph, core: &[Vertex], core_coloring: &StrongColoring) -> Result<Construction> {
    let cover = find_attachment_cover(g, core)
        .ok_or_else(|| Error::defect("peeled vertices are not covered by two pendant paths"))?;
    extend_two_attachments(g, core, core_coloring, &cover)
}

fn core_without(g: &Graph, removed: &[Vertex]) -> Vec<Vertex> {
    (0..g.n()).filter(|v| !removed.contains(v)).collect()
}

/// `pc = 2` coloring for connected noncomplete graphs with `n >= 14` and
/// `C(n-3, 2) + 4 <= m <= C(n, 2) - 1`.
///
/// 3-connected graphs are colored through a bipartite spanning subgraph
/// found by search. Otherwise minimum-degree vertices are peeled (one, two,
/// or two plus a pendant of the remainder) until the rest has a 2-connected
/// bipartite spanning subgraph; its strong 2-coloring is extended back over
/// the peeled vertices as at most two pendant paths.
pub fn color_dense_two(g: &Graph, budget: Budget) -> Result<Construction> {
    let n = g.n();
    let t = dense_thresholds(n)
        .filter(|t| t.two_lo.is_some())
        .ok_or_else(|| Error::precondition(format!("need n >= 14 (n = {n})")))?;
    let (lo, hi) = (t.two_lo.expect("checked"), t.two_hi.expect("checked"));
    if !(lo..=hi).contains(&g.m()) {
        return Err(Error::precondition(format!(
            "edge count {} outside [{lo}, {hi}]",
            g.m()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut built = if is_k_connected(g, 3) {
        let bip = find_bipartite_spanning(g)?
            .ok_or_else(|| Error::defect("3-connected dense graph without bipartite spanning subgraph"))?;
        let strong = strong_two(g, &bip, budget)?;
        Construction {
            coloring: strong.coloring,
            bound: 2,
            provenance: vec!["dense2/three-connected: all".into()],
        }
    } else {
        defect_unless(g.min_degree() <= 5, "minimum degree above 5 without 3-connectivity")?;
        let v = min_degree_vertex(g);
        let core = core_without(g, &[v]);
        let (h, hmap) = g.induced_subgraph(&core);
        defect_unless(h.m() + 1 >= binomial2(n - 3), "G - v below C(n-3,2) - 1 edges")?;
        if is_k_connected(&h, 3) {
            let bip = find_bipartite_spanning(&h)?
                .ok_or_else(|| Error::defect("3-connected G - v without bipartite spanning subgraph"))?;
            let strong = strong_two(&h, &bip, budget)?;
            let mut c = attach(g, &core, &strong)?;
            c.provenance = vec![format!("dense2/peel-one: {}", scope(&[v]))];
            c
        } else {
            defect_unless(h.min_degree() <= 4, "G - v has minimum degree above 4")?;
            let u = hmap.vertices[min_degree_vertex(&h)];
            let core = core_without(g, &[u, v]);
            let (f, fmap) = g.induced_subgraph(&core);
            if is_k_connected(&f, 2) {
                let bip = extract_bipartite_spanning_any(&f)
                    .map_err(|e| match e {
                        Error::Precondition(msg) => Error::defect(msg),
                        other => other,
                    })?;
                let strong = strong_two(&f, &bip, budget)?;
                let mut c = attach(g, &core, &strong)?;
                c.provenance = vec![format!("dense2/peel-two: {}", scope(&[v, u]))];
                c
            } else {
                let w_local = (0..f.n())
                    .find(|&x| f.degree(x) == 1)
                    .ok_or_else(|| Error::defect("G - u - v has a cut vertex but no pendant vertex"))?;
                let w = fmap.vertices[w_local];
                defect_unless(g.degree(w) >= 2, "third peeled vertex is a pendant of G")?;
                let core = core_without(g, &[u, v, w]);
                let (f2, _) = g.induced_subgraph(&core);
                let bip = extract_bipartite_spanning(&f2, 0, 1)?;
                let strong = strong_two(&f2, &bip, budget)?;
                let mut c = attach(g, &core, &strong)?;
                c.provenance = vec![format!("dense2/peel-three: {}", scope(&[v, u, w]))];
                c
            }
        }
    };
    built.bound = 2;
    defect_unless(built.coloring.palette() == 2, "dense coloring must use exactly 2 colors")?;
    defect_unless(
        is_proper_connected(g, &built.coloring)?.holds,
        "dense coloring is not proper connected",
    )?;
    Ok(built)
}

/// At most 2 colors on a nearly complete piece: complete graphs get one
/// color, 2-connected ones a strong coloring via a bipartite spanning
/// subgraph, and up to two pendant vertices are attached afterwards.
fn two_color_dense_piece(g: &Graph, budget: Budget) -> Result<(EdgeColoring, &'static str)> {
    if g.is_complete() {
        return Ok((EdgeColoring::uniform(g.m(), 1), "complete"));
    }
    if is_k_connected(g, 2) {
        let bip = find_bipartite_spanning(g)?
            .ok_or_else(|| Error::defect("dense piece without bipartite spanning subgraph"))?;
        return Ok((strong_two(g, &bip, budget)?.coloring, "bipartite-spanning"));
    }
    let pendants = PendantSet::of(g);
    let core = core_without(g, &pendants.vertices);
    let (c, _) = g.induced_subgraph(&core);
    if pendants.len() > 2 || !is_k_connected(&c, 2) {
        return Err(Error::defect("dense piece is neither 2-connected nor a block with pendants"));
    }
    let bip = find_bipartite_spanning(&c)?
        .ok_or_else(|| Error::defect("dense piece core without bipartite spanning subgraph"))?;
    let strong = strong_two(&c, &bip, budget)?;
    Ok((attach(g, &core, &strong)?.coloring, "bipartite-spanning-with-pendants"))
}

/// At most 3 colors for connected graphs with `n >= 15` and
/// `m >= C(n-4, 2) + 5`.
///
/// Bridgeless graphs use the strong bridgeless coloring. A pendant vertex is
/// removed, the rest 2-colored, and the pendant edge gets color 3.
/// Otherwise a bridge separates a piece of 3 or 4 vertices; both sides get
/// at most 2 colors, the bridge color 3, and the sides are composed.
pub fn color_dense_three(g: &Graph, budget: Budget) -> Result<Construction> {
    let n = g.n();
    let t = dense_thresholds(n)
        .filter(|t| t.three_lo.is_some())
        .ok_or_else(|| Error::precondition(format!("need n >= 15 (n = {n})")))?;
    let lo = t.three_lo.expect("checked");
    if g.m() < lo {
        return Err(Error::precondition(format!("edge count {} below {lo}", g.m())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cut_edges = bridges(g);
    let mut built = if cut_edges.is_empty() {
        let mut c = color_bridgeless(g, budget)?;
        c.provenance.push("dense3/bridgeless: all".into());
        c
    } else if g.min_degree() == 1 {
        let v = (0..n).find(|&x| g.degree(x) == 1).expect("minimum degree is 1");
        let core = core_without(g, &[v]);
        let (h, hmap) = g.induced_subgraph(&core);
        let pendant_edge = g.adjacency(v)[0].1;
        let mut colors: Vec<Color> = vec![0; g.m()];
        let rule = if h.is_complete() {
            colors.iter_mut().for_each(|c| *c = 1);
            colors[pendant_edge] = 2;
            "dense3/pendant-on-complete"
        } else {
            let inner = color_dense_two(&h, budget).map_err(|e| match e {
                Error::Precondition(msg) => Error::defect(msg),
                other => other,
            })?;
            lift(&mut colors, &hmap, &inner.coloring);
            colors[pendant_edge] = 3;
            "dense3/pendant"
        };
        Construction {
            coloring: finish(colors),
            bound: 3,
            provenance: vec![format!("{rule}: {}", scope(&[v]))],
        }
    } else {
        let e = cut_edges[0];
        let split = split_at_bridge(g, e)?;
        let (l1, l2) = split.local_edges();
        let mut sides = Vec::new();
        let mut rules = Vec::new();
        for (piece, map, local) in [
            (&split.first, &split.first_map, l1),
            (&split.second, &split.second_map, l2),
        ] {
            // the piece minus its pendant bridge end is one side of G - e
            let (a, b) = piece.edge(local);
            let outer = if piece.degree(a) == 1 { a } else { b };
            let side: Vec<Vertex> = (0..piece.n()).filter(|&x| x != outer).collect();
            let (s, smap) = piece.induced_subgraph(&side);
            let (coloring, rule) = if s.n() <= 4 {
                defect_unless(s.n() >= 3, "small side of the bridge has fewer than 3 vertices")?;
                let r = pc_exact(&s, budget)?;
                defect_unless(r.value <= 2, "small side needs more than 2 colors")?;
                (r.witness, "exact")
            } else {
                let in_window = dense_thresholds(s.n())
                    .and_then(|t| Some((t.two_lo?, t.two_hi?)))
                    .is_some_and(|(lo, hi)| (lo..=hi).contains(&s.m()));
                if in_window {
                    (color_dense_two(&s, budget)?.coloring, "dense2")
                } else {
                    two_color_dense_piece(&s, budget)?
                }
            };
            let mut colors: Vec<Color> = vec![3; piece.m()];
            lift(&mut colors, &smap, &coloring);
            sides.push(finish(colors));
            let label: Vec<Vertex> = side.iter().map(|&x| map.vertices[x]).collect();
            rules.push(format!("dense3/bridge-side-{rule}: {}", scope(&label)));
        }
        defect_unless(
            split.first.n().min(split.second.n()) <= 5,
            "bridge splits off more than 4 vertices",
        )?;
        let mut c = compose_cut_edge(g, e, &sides[0], &sides[1])?;
        rules.push(format!("dense3/split-at-bridge: edge {e}"));
        c.provenance = rules;
        c
    };
    built.bound = 3;
    defect_unless(built.coloring.palette() <= 3, "dense coloring above 3 colors")?;
    defect_unless(
        is_proper_connected(g, &built.coloring)?.holds,
        "dense coloring is not proper connected",
    )?;
    Ok(built)
}
