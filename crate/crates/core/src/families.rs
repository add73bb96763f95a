//! Named graph families, edge-count thresholds for dense graphs, and seeded
//! random graphs.
//!
//! Random graphs are drawn from SplitMix64 (`rand_xoshiro::SplitMix64`),
//! seeded with the given 64-bit seed. A value below a bound `b` is taken as
//! `x % b` for the first draw `x` below the largest multiple of `b`, so a
//! corpus can be replayed from the seed alone.

use std::fmt;
use std::str::FromStr;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{binomial2, Graph, Vertex};

/// A member of one of the named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_{1,m}`
    Star { m: usize },
    Complete { n: usize },
    /// `C_n` plus the chord between vertices `n-2` and `0`.
    CycleChord { n: usize },
    /// `r` disjoint copies of `K_t` and an apex joined to one vertex of each.
    Srt { r: usize, t: usize },
    /// `K_{n-k-1}` with `k+1` pendant vertices on one clique vertex.
    Gk { n: usize, k: usize },
    /// An apex joined to every vertex of two disjoint copies of `K_k`.
    K1Join2Kk { k: usize },
    /// `K_n` minus the edges `(2i, 2i+1)` for `i < pairs`.
    CompleteMinusMatching { n: usize, pairs: usize },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Star { .. } => "star",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CycleChord { .. } => "cycle_chord",
            FamilySpec::Srt { .. } => "srt",
            FamilySpec::Gk { .. } => "gk",
            FamilySpec::K1Join2Kk { .. } => "k1_join_2kk",
            FamilySpec::CompleteMinusMatching { .. } => "complete_minus_matching",
        }
    }

    /// Builds from a tag and `key=value` parameters separated by commas or
    /// whitespace, e.g. `("srt", "r=4,t=3")`.
    pub fn parse(tag: &str, params: &str) -> Result<Self> {
        let mut values: Vec<(String, usize)> = Vec::new();
        for item in params.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("parameter `{item}` is not key=value")))?;
            let value = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("parameter `{item}` is not a nonnegative integer")))?;
            values.push((key.trim().to_string(), value));
        }
        let get = |key: &str| {
            values
                .iter()
                .find(|(k, _)| k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::Parse(format!("family `{tag}` needs parameter `{key}`")))
        };
        let spec = match tag {
            "star" => FamilySpec::Star { m: get("m")? },
            "complete" => FamilySpec::Complete { n: get("n")? },
            "cycle_chord" => FamilySpec::CycleChord { n: get("n")? },
            "srt" => FamilySpec::Srt {
                r: get("r")?,
                t: get("t")?,
            },
            "gk" => FamilySpec::Gk {
                n: get("n")?,
                k: get("k")?,
            },
            "k1_join_2kk" => FamilySpec::K1Join2Kk { k: get("k")? },
            "complete_minus_matching" => {
                let n = get("n")?;
                FamilySpec::CompleteMinusMatching {
                    n,
                    pairs: get("pairs").unwrap_or(n / 2),
                }
            }
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Star { m } => m >= 1,
            FamilySpec::Complete { n } => n >= 1,
            FamilySpec::CycleChord { n } => n >= 4,
            FamilySpec::Srt { r, t } => r >= 1 && t >= 2,
            FamilySpec::Gk { n, k } => k >= 1 && n >= k + 4,
            FamilySpec::K1Join2Kk { k } => k >= 1,
            FamilySpec::CompleteMinusMatching { n, pairs } => n >= 2 && 2 * pairs <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::precondition(format!("parameters out of range for {self}")))
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::Star { m } => Graph::star(m),
            FamilySpec::Complete { n } => Graph::complete(n),
            FamilySpec::CycleChord { n } => crate::constructions::cycle_chord_graph(n)?,
            FamilySpec::Srt { r, t } => gen_srt(r, t)?,
            FamilySpec::Gk { n, k } => gen_gk(n, k)?,
            FamilySpec::K1Join2Kk { k } => gen_k1_join_2kk(k)?,
            FamilySpec::CompleteMinusMatching { n, pairs } => complete_minus_matching(n, pairs)?,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Star { m } => write!(f, "star m={m}"),
            FamilySpec::Complete { n } => write!(f, "complete n={n}"),
            FamilySpec::CycleChord { n } => write!(f, "cycle_chord n={n}"),
            FamilySpec::Srt { r, t } => write!(f, "srt r={r},t={t}"),
            FamilySpec::Gk { n, k } => write!(f, "gk n={n},k={k}"),
            FamilySpec::K1Join2Kk { k } => write!(f, "k1_join_2kk k={k}"),
            FamilySpec::CompleteMinusMatching { n, pairs } => {
                write!(f, "complete_minus_matching n={n},pairs={pairs}")
            }
        }
    }
}

fn clique_edges(first: Vertex, size: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (first..first + size).flat_map(move |u| (u + 1..first + size).map(move |v| (u, v)))
}

/// `r` copies of `K_t` on vertices `it..(i+1)t`, each attached through its
/// first vertex to the apex `rt`.
pub fn gen_srt(r: usize, t: usize) -> Result<Graph> {
    if r < 1 || t < 2 {
        return Err(Error::precondition("srt needs r >= 1 and t >= 2"));
    }
    let apex = r * t;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..r {
        edges.extend(clique_edges(i * t, t));
        edges.push((i * t, apex));
    }
    Graph::from_edges(apex + 1, edges)
}

/// `K_{n-k-1}` on `0..n-k-1` with pendants `n-k-1..n` on vertex 0; one edge
/// short of [`f_lower_bound`] yet needing `k + 1` colors.
pub fn gen_gk(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < k + 4 {
        return Err(Error::precondition("gk needs k >= 1 and n - k - 1 >= 3"));
    }
    let c = n - k - 1;
    let mut edges: Vec<(Vertex, Vertex)> = clique_edges(0, c).collect();
    edges.extend((c..n).map(|v| (0, v)));
    Graph::from_edges(n, edges)
}

/// Two copies of `K_k` on `0..k` and `k..2k`, apex `2k` joined to all.
pub fn gen_k1_join_2kk(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::precondition("k1_join_2kk needs k >= 1"));
    }
    let apex = 2 * k;
    let mut edges: Vec<(Vertex, Vertex)> = clique_edges(0, k).chain(clique_edges(k, k)).collect();
    edges.extend((0..apex).map(|v| (v, apex)));
    Graph::from_edges(apex + 1, edges)
}

pub fn complete_minus_matching(n: usize, pairs: usize) -> Result<Graph> {
    if 2 * pairs > n {
        return Err(Error::precondition("matching larger than n/2"));
    }
    let edges = clique_edges(0, n).filter(|&(a, b)| !(b == a + 1 && a % 2 == 0 && b < 2 * pairs));
    Graph::from_edges(n, edges)
}

/// `C(n-k-1, 2) + k + 2`: no graph with this many edges is known to need
/// more than `k` colors.
pub fn f_lower_bound(n: usize, k: usize) -> Result<usize> {
    if k < 1 || k + 3 > n {
        return Err(Error::precondition("need 1 <= k and n - k - 1 >= 2"));
    }
    Ok(binomial2(n - k - 1) + k + 2)
}

/// Edge-count bounds for the dense colorings: `[two_lo, two_hi]` is the
/// 2-color window (`n >= 14`), `three_lo` the 3-color threshold (`n >= 15`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenseThresholds {
    pub two_lo: Option<usize>,
    pub two_hi: Option<usize>,
    pub three_lo: Option<usize>,
}

/// `None` below 14 vertices.
pub fn dense_thresholds(n: usize) -> Option<DenseThresholds> {
    if n < 14 {
        return None;
    }
    Some(DenseThresholds {
        two_lo: Some(binomial2(n - 3) + 4),
        two_hi: Some(binomial2(n) - 1),
        three_lo: (n >= 15).then(|| binomial2(n - 4) + 5),
    })
}

/// What a random graph must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomConstraint {
    /// Minimum degree at least this.
    MinDegree(usize),
    /// Connected with exactly this many edges.
    EdgeCount(usize),
    /// Connected, and every nonadjacent pair has degree sum at least `n`.
    OreSum,
}

impl FromStr for RandomConstraint {
    type Err = Error;

    /// `min-degree=D`, `edges=M` or `ore`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown constraint `{s}`"));
        match s.split_once('=') {
            None if s == "ore" => Ok(RandomConstraint::OreSum),
            Some(("min-degree", v)) => Ok(RandomConstraint::MinDegree(v.parse().map_err(|_| bad())?)),
            Some(("edges", v)) => Ok(RandomConstraint::EdgeCount(v.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

struct Sampler(SplitMix64);

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler(SplitMix64::seed_from_u64(seed))
    }

    /// Uniform in `0..bound`.
    fn below(&mut self, bound: usize) -> usize {
        let b = bound as u64;
        let zone = u64::MAX - u64::MAX % b;
        loop {
            let x = self.0.next_u64();
            if x < zone {
                return (x % b) as usize;
            }
        }
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())]
    }

    fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }
}

struct Builder {
    n: usize,
    adj: Vec<Vec<bool>>,
    degree: Vec<usize>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            adj: vec![vec![false; n]; n],
            degree: vec![0; n],
            edges: Vec::new(),
        }
    }

    fn add(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && !self.adj[u][v]);
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.edges.push((u.min(v), u.max(v)));
    }

    fn non_neighbors(&self, u: Vertex) -> Vec<Vertex> {
        (0..self.n).filter(|&v| v != u && !self.adj[u][v]).collect()
    }

    fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adj[u][v])
            .collect()
    }

    /// Random spanning tree: each vertex of a shuffled order hangs off an
    /// earlier one.
    fn spanning_tree(&mut self, rng: &mut Sampler) {
        let mut order: Vec<Vertex> = (0..self.n).collect();
        rng.shuffle(&mut order);
        for i in 1..self.n {
            let parent = order[rng.below(i)];
            self.add(order[i], parent);
        }
    }

    fn finish(mut self) -> Result<Graph> {
        self.edges.sort_unstable();
        Graph::from_edges(self.n, self.edges)
    }
}

/// Seeded random graph on `n` vertices certified to satisfy `constraint`.
///
/// * `MinDegree(d)`: vertices in random order receive random new neighbors
///   until each has degree `d`.
/// * `EdgeCount(m)`: random spanning tree plus uniformly chosen extra edges.
/// * `OreSum`: a random connected graph with between `n - 1` and `n^2/4`
///   edges, then edges are added between random violating pairs.
pub fn gen_random_graph(n: usize, constraint: RandomConstraint, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::precondition("need at least one vertex"));
    }
    let mut rng = Sampler::new(seed);
    let mut b = Builder::new(n);
    match constraint {
        RandomConstraint::MinDegree(d) => {
            if d >= n {
                return Err(Error::precondition(format!("minimum degree {d} impossible on {n} vertices")));
            }
            let mut order: Vec<Vertex> = (0..n).collect();
            rng.shuffle(&mut order);
            for &u in &order {
                while b.degree[u] < d {
                    let v = rng.pick(&b.non_neighbors(u));
                    b.add(u, v);
                }
            }
        }
        RandomConstraint::EdgeCount(m) => {
            if m + 1 < n || m > binomial2(n) {
                return Err(Error::precondition(format!(
                    "no connected graph on {n} vertices has {m} edges"
                )));
            }
            b.spanning_tree(&mut rng);
            let mut rest = b.non_edges();
            rng.shuffle(&mut rest);
            for &(u, v) in rest.iter().take(m + 1 - n.max(1)) {
                b.add(u, v);
            }
        }
        RandomConstraint::OreSum => {
            b.spanning_tree(&mut rng);
            let extra = rng.below((n * n / 4 + 1).saturating_sub(n - 1).max(1));
            let mut rest = b.non_edges();
            rng.shuffle(&mut rest);
            for &(u, v) in rest.iter().take(extra) {
                b.add(u, v);
            }
            loop {
                let bad: Vec<(Vertex, Vertex)> = b
                    .non_edges()
                    .into_iter()
                    .filter(|&(u, v)| b.degree[u] + b.degree[v] < n)
                    .collect();
                if bad.is_empty() {
                    break;
                }
                let (u, v) = rng.pick(&bad);
                b.add(u, v);
            }
        }
    }
    let g = b.finish()?;
    let ok = match constraint {
        RandomConstraint::MinDegree(d) => g.min_degree() >= d,
        RandomConstraint::EdgeCount(m) => g.m() == m && g.is_connected(),
        RandomConstraint::OreSum => {
            g.is_connected() && g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) >= n)
        }
    };
    if !ok {
        return Err(Error::defect("random graph misses its constraint"));
    }
    Ok(g)
}
