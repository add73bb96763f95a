//! 2-colorings with two disjoint proper paths per pair, built on Hamiltonian
//! cycles for graphs meeting the Dirac or Ore degree conditions.

use super::basic::{alternating_cycle_colors, chord_cycle_colors};
use super::{defect_unless, finish, Construction};
use crate::budget::Budget;
use crate::colored::{is_k_proper_connected, Color, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};
use crate::graph::{cycle_of_length, hamiltonian_cycle, Graph, Vertex};

fn verified_pc2(g: &Graph, colors: Vec<Color>, rule: &str) -> Result<Construction> {
    let coloring = finish(colors);
    defect_unless(coloring.palette() == 2, "construction must use exactly 2 colors")?;
    defect_unless(
        is_k_proper_connected(g, &coloring, 2, DEFAULT_PATH_CAP)?.holds,
        "construction is not 2-proper connected",
    )?;
    Ok(Construction {
        coloring,
        bound: 2,
        provenance: vec![format!("{rule}: all")],
    })
}

fn found<T>(x: Option<T>, what: &str) -> Result<T> {
    x.ok_or_else(|| Error::defect(format!("{what} not found although guaranteed")))
}

/// Rotates an odd cycle so that its chord `seq[i] seq[i+2]` becomes
/// `v_{n-1} v_1` with `seq[i+1]` as `v_n`.
fn around_chord(cycle: &[Vertex], i: usize) -> Vec<Vertex> {
    let n = cycle.len();
    (0..n).map(|t| cycle[(i + 2 + t) % n]).collect()
}

/// `δ >= n/2`, `n >= 4`: alternate colors on a Hamiltonian cycle when `n` is
/// even; for odd `n` drop the last cycle vertex `w`, find a Hamiltonian cycle
/// of the rest with an edge whose ends both see `w`, and color that cycle
/// plus `w` as an odd cycle with a chord.
pub fn color_dirac_pc2(g: &Graph, budget: Budget) -> Result<Construction> {
    let n = g.n();
    if n < 4 || 2 * g.min_degree() < n {
        return Err(Error::precondition(format!(
            "need n >= 4 and minimum degree >= n/2 (n = {n}, δ = {})",
            g.min_degree()
        )));
    }
    let cycle = found(hamiltonian_cycle(g, budget)?, "Hamiltonian cycle")?;
    if n.is_multiple_of(2) {
        return verified_pc2(g, alternating_cycle_colors(g, &cycle), "dirac/even-hamiltonian");
    }
    let w = cycle[n - 1];
    let (h, hmap) = g.remove_vertices(&[w]);
    let inner = found(hamiltonian_cycle(&h, budget)?, "Hamiltonian cycle of G - v")?;
    let inner: Vec<Vertex> = inner.iter().map(|&v| hmap.vertices[v]).collect();
    let len = inner.len();
    let i = found(
        (0..len).find(|&i| g.has_edge(w, inner[i]) && g.has_edge(w, inner[(i + 1) % len])),
        "cycle edge with both ends adjacent to the removed vertex",
    )?;
    // v_1 = inner[i+1] .. v_{n-1} = inner[i], v_n = w
    let mut seq: Vec<Vertex> = (0..len).map(|t| inner[(i + 1 + t) % len]).collect();
    seq.push(w);
    verified_pc2(g, chord_cycle_colors(g, &seq), "dirac/odd-cycle-with-chord")
}

/// Degree sum of every nonadjacent pair at least `n`, `n >= 4`.
pub fn color_ore_pc2(g: &Graph, budget: Budget) -> Result<Construction> {
    let n = g.n();
    if n < 4 {
        return Err(Error::precondition("need at least 4 vertices"));
    }
    if let Some((u, v)) = g.non_edges().find(|&(u, v)| g.degree(u) + g.degree(v) < n) {
        return Err(Error::precondition(format!(
            "nonadjacent {u},{v} have degree sum {} < {n}",
            g.degree(u) + g.degree(v)
        )));
    }
    defect_unless(4 * g.m() >= n * n, "degree-sum condition without m >= n^2/4")?;
    let cycle = found(hamiltonian_cycle(g, budget)?, "Hamiltonian cycle")?;
    if n.is_multiple_of(2) {
        return verified_pc2(g, alternating_cycle_colors(g, &cycle), "ore/even-hamiltonian");
    }
    let delta = g.min_degree();
    if n == 5 || delta <= 3 {
        let rule = if n == 5 { "ore/five-vertices" } else { "ore/low-degree-chord" };
        let i = found(distance_two_chord(g, &cycle), "cycle chord at distance two")?;
        return verified_pc2(g, chord_cycle_colors(g, &around_chord(&cycle, i)), rule);
    }
    let short = found(cycle_of_length(g, n - 1, budget)?, "cycle on n - 1 vertices")?;
    let v = (0..n).find(|x| !short.contains(x)).expect("one vertex is off the cycle");
    let first = short
        .iter()
        .position(|&x| g.has_edge(v, x))
        .expect("all neighbors of v lie on the cycle");
    let u: Vec<Vertex> = (0..n - 1).map(|t| short[(first + t) % (n - 1)]).collect();
    let hits: Vec<usize> = (0..n - 1).filter(|&t| g.has_edge(v, u[t])).take(4).collect();
    defect_unless(hits.len() == 4, "vertex off the cycle has fewer than 4 neighbors")?;
    let (pi, pj, pk) = (hits[1], hits[2], hits[3]);
    let mut colors = alternating_cycle_colors(g, &u);
    // cycle edge t joins u[t] and u[t+1]; it has color 1 when t is even
    let edge_color = |t: usize| 1 + (t % 2) as Color;
    let mut paint = |x: Vertex, c: Color| colors[g.edge_between(v, x).expect("neighbor")] = c;
    paint(u[0], edge_color(n - 2));
    paint(u[pi], edge_color(pi));
    paint(u[pj], edge_color(pj - 1));
    paint(u[pk], edge_color(pk));
    verified_pc2(g, colors, "ore/long-cycle-four-neighbors")
}

/// Index `i` such that `cycle[i]` and `cycle[i+2]` are adjacent. The search
/// starts from the nonneighbors of a minimum-degree vertex, whose high degree
/// forces such a chord next to them.
fn distance_two_chord(g: &Graph, cycle: &[Vertex]) -> Option<usize> {
    let n = cycle.len();
    let chord = |i: usize| g.has_edge(cycle[i % n], cycle[(i + 2) % n]);
    let low = (0..n).min_by_key(|&i| (g.degree(cycle[i]), cycle[i]))?;
    let far = (0..n)
        .map(|t| (low + t) % n)
        .filter(|&i| !g.has_edge(cycle[low], cycle[i]) && i != low);
    for j in far {
        if chord(j + n - 2) {
            return Some((j + n - 2) % n);
        }
        if chord(j) {
            return Some(j);
        }
    }
    (0..n).find(|&i| chord(i))
}
