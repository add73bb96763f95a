//! Trees, cycles, and the odd cycle with a chord between two vertices at
//! distance two.

use super::{defect_unless, finish, Construction};
use crate::colored::{is_k_proper_connected, is_proper_connected, Color, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Proper edge coloring of a tree with exactly `Δ` colors: rooted at 0, each
/// child edge takes the smallest color not on the parent edge or an earlier
/// sibling edge.
pub fn color_tree(t: &Graph) -> Result<Construction> {
    if t.n() < 2 || !t.is_tree() {
        return Err(Error::precondition("input is not a tree on at least 2 vertices"));
    }
    let mut colors: Vec<Color> = vec![0; t.m()];
    let mut stack: Vec<(Vertex, Option<Vertex>, Color)> = vec![(0, None, 0)];
    while let Some((v, parent, above)) = stack.pop() {
        let mut next: Color = 1;
        for &(w, e) in t.adjacency(v) {
            if Some(w) == parent {
                continue;
            }
            if next == above {
                next += 1;
            }
            colors[e] = next;
            stack.push((w, Some(v), next));
            next += 1;
        }
    }
    let coloring = finish(colors);
    let delta = t.max_degree();
    defect_unless(coloring.palette() as usize == delta, "tree coloring palette differs from Δ")?;
    defect_unless(
        is_proper_connected(t, &coloring)?.holds,
        "tree coloring is not proper connected",
    )?;
    Ok(Construction {
        coloring,
        bound: delta,
        provenance: vec!["tree/proper-edge-coloring: all".into()],
    })
}

/// Colors `C_n` (edges `i(i+1)`, closing edge `0(n-1)` last): alternating
/// `1,2` when `n` is even; for odd `n` the closing edge gets color 3.
pub fn color_cycle(n: usize) -> Result<(Graph, Construction)> {
    if n < 3 {
        return Err(Error::precondition("a cycle needs at least 3 vertices"));
    }
    let g = Graph::cycle(n);
    let mut colors: Vec<Color> = (0..n).map(|i| 1 + (i % 2) as Color).collect();
    let construction = if n.is_multiple_of(2) {
        let coloring = finish(colors);
        defect_unless(
            is_k_proper_connected(&g, &coloring, 2, DEFAULT_PATH_CAP)?.holds,
            "even cycle coloring is not 2-proper connected",
        )?;
        Construction {
            coloring,
            bound: 2,
            provenance: vec!["cycle/even-alternating: all".into()],
        }
    } else {
        colors[n - 1] = 3;
        let coloring = finish(colors);
        defect_unless(
            is_proper_connected(&g, &coloring)?.holds,
            "odd cycle coloring is not proper connected",
        )?;
        Construction {
            coloring,
            bound: 3,
            provenance: vec!["cycle/odd-three-colors: all".into()],
        }
    };
    Ok((g, construction))
}

/// `C_n` on `v_1..v_n` (vertex `i` is `v_{i+1}`) plus the chord
/// `v_{n-1} v_1`. Cycle edges come first in cycle order, the chord last.
pub fn cycle_chord_graph(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::precondition("cycle with chord needs n >= 4"));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.push((n - 2, 0));
    Graph::from_edges(n, edges)
}

/// 2-coloring of the cycle with a chord under which every pair has two
/// internally disjoint proper paths.
pub fn color_cycle_chord(n: usize) -> Result<(Graph, Construction)> {
    let g = cycle_chord_graph(n)?;
    let seq: Vec<Vertex> = (0..n).collect();
    let (colors, rule) = if n.is_multiple_of(2) {
        (alternating_cycle_colors(&g, &seq), "cycle-chord/even-alternating")
    } else {
        (chord_cycle_colors(&g, &seq), "cycle-chord/odd")
    };
    let coloring = finish(colors);
    defect_unless(coloring.palette() == 2, "cycle-chord coloring must use 2 colors")?;
    defect_unless(
        is_k_proper_connected(&g, &coloring, 2, DEFAULT_PATH_CAP)?.holds,
        "cycle-chord coloring is not 2-proper connected",
    )?;
    Ok((
        g,
        Construction {
            coloring,
            bound: 2,
            provenance: vec![format!("{rule}: all")],
        },
    ))
}

/// Even cycle `seq` (closing edge implied) colored `1,2,1,2,...` starting at
/// `seq[0]seq[1]`; every other edge of `g` gets color 1.
pub(crate) fn alternating_cycle_colors(g: &Graph, seq: &[Vertex]) -> Vec<Color> {
    debug_assert!(seq.len().is_multiple_of(2));
    let mut colors = vec![1; g.m()];
    for i in 0..seq.len() {
        let e = g
            .edge_between(seq[i], seq[(i + 1) % seq.len()])
            .expect("cycle edge present");
        colors[e] = 1 + (i % 2) as Color;
    }
    colors
}

/// `seq = v_1..v_n` with `n` odd, a cycle of `g` whose vertices `v_{n-1}` and
/// `v_1` are adjacent. Edges `v_{2i-1}v_{2i}` get color 1 and the remaining
/// edges of the cycle and chord get color 2; every other edge gets color 1.
pub(crate) fn chord_cycle_colors(g: &Graph, seq: &[Vertex]) -> Vec<Color> {
    let n = seq.len();
    debug_assert!(n % 2 == 1 && n >= 5);
    let mut colors = vec![1; g.m()];
    let mut paint = |a: Vertex, b: Vertex, c: Color| {
        colors[g.edge_between(a, b).expect("structure edge present")] = c;
    };
    for i in 0..n {
        // 0-based i is v_{i+1}; v_{2j-1}v_{2j} is 0-based (2j-2, 2j-1)
        let c = if i % 2 == 0 && i + 1 < n { 1 } else { 2 };
        paint(seq[i], seq[(i + 1) % n], c);
    }
    paint(seq[n - 2], seq[0], 2);
    colors
}
