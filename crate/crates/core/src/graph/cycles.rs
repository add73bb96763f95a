//! Exact cycle searches: Hamiltonian cycles, cycles of a given length, and
//! the circumference.

use super::{Graph, Vertex};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};

/// A Hamiltonian cycle as a vertex sequence starting at 0 (the closing edge
/// back to 0 is implied), or `None` when the graph has none.
pub fn hamiltonian_cycle(g: &Graph, budget: Budget) -> Result<Option<Vec<Vertex>>> {
    if g.n() < 3 {
        return Ok(None);
    }
    if g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let mut search = CycleSearch::new(g, g.n(), Meter::new(budget, "hamiltonian cycle"));
    search.run_from(0)
}

/// A cycle with exactly `r` vertices, starting at its smallest vertex, or
/// `None` when no such cycle exists.
pub fn cycle_of_length(g: &Graph, r: usize, budget: Budget) -> Result<Option<Vec<Vertex>>> {
    if r < 3 || r > g.n() {
        return Err(Error::precondition(format!(
            "cycle length {r} outside 3..={}",
            g.n()
        )));
    }
    let mut search = CycleSearch::new(g, r, Meter::new(budget, "cycle of given length"));
    for s in 0..g.n() {
        if let Some(c) = search.run_from(s)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Length of a longest cycle.
pub fn circumference(g: &Graph, budget: Budget) -> Result<usize> {
    let acyclic = g.components().iter().all(|c| {
        let (sub, _) = g.induced_subgraph(c);
        sub.m() + 1 == sub.n()
    });
    if acyclic {
        return Err(Error::precondition("graph has no cycle"));
    }
    let mut meter_budget = budget;
    for r in (3..=g.n()).rev() {
        let mut search = CycleSearch::new(g, r, Meter::new(meter_budget, "circumference"));
        for s in 0..g.n() {
            if search.run_from(s)?.is_some() {
                return Ok(r);
            }
        }
        meter_budget = Budget(meter_budget.0.saturating_sub(search.meter.used));
    }
    unreachable!("a graph with a cycle has circumference at least 3")
}

/// Backtracking over paths `start = p0 < p1, ...` restricted to vertices
/// larger than `start`, closed into a cycle of `target` vertices. Requiring
/// `p1 < p_last` visits every cycle in one direction only.
struct CycleSearch<'a> {
    g: &'a Graph,
    target: usize,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    meter: Meter,
}

impl<'a> CycleSearch<'a> {
    fn new(g: &'a Graph, target: usize, meter: Meter) -> Self {
        CycleSearch {
            g,
            target,
            on_path: vec![false; g.n()],
            path: Vec::with_capacity(target),
            meter,
        }
    }

    fn run_from(&mut self, start: Vertex) -> Result<Option<Vec<Vertex>>> {
        if self.g.n() - start < self.target {
            return Ok(None);
        }
        self.path.clear();
        self.on_path.iter_mut().for_each(|b| *b = false);
        self.path.push(start);
        self.on_path[start] = true;
        if self.extend(start)? {
            Ok(Some(self.path.clone()))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, start: Vertex) -> Result<bool> {
        self.meter.tick()?;
        let v = *self.path.last().expect("path is never empty");
        if self.path.len() == self.target {
            return Ok(self.g.has_edge(v, start) && self.path[1] < v);
        }
        if self.target == self.g.n() && !self.remaining_can_close(start) {
            return Ok(false);
        }
        for &(w, _) in self.g.adjacency(v) {
            if w <= start || self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            if self.extend(start)? {
                return Ok(true);
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        Ok(false)
    }

    /// Hamiltonian pruning: every unvisited vertex still needs two usable
    /// neighbors (unvisited ones, the current end, or the start).
    fn remaining_can_close(&self, start: Vertex) -> bool {
        let end = *self.path.last().expect("path is never empty");
        (0..self.g.n()).filter(|&w| !self.on_path[w]).all(|w| {
            self.g
                .neighbors(w)
                .filter(|&x| !self.on_path[x] || x == end || x == start)
                .take(2)
                .count()
                == 2
        })
    }
}
