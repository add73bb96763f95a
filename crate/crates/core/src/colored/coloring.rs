use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub type Color = u32;

/// A total assignment of colors `1..=k` to edge ids. Adjacent edges may
/// share a color.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    k: Color,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, k: Color) -> Result<Self> {
        if let Some((e, &c)) = colors
            .iter()
            .enumerate()
            .find(|&(_, &c)| c == 0 || c > k)
        {
            return Err(Error::Parse(format!(
                "edge {e} has color {c} outside 1..={k}"
            )));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// Palette is the largest color used (at least 1).
    pub fn from_colors(colors: Vec<Color>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        EdgeColoring::new(colors, k)
    }

    pub fn uniform(m: usize, color: Color) -> Self {
        EdgeColoring {
            colors: vec![color; m],
            k: color.max(1),
        }
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Declared palette size.
    pub fn palette(&self) -> Color {
        self.k
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Adjacent edges always differ.
    pub fn is_proper_edge_coloring(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let mut seen: Vec<Color> = g.adjacency(v).iter().map(|&(_, e)| self.colors[e]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub(crate) fn check_fits(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.m() {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "coloring has {} entries for a graph with {} edges",
                self.colors.len(),
                g.m()
            )))
        }
    }

    /// Text form: `m k`, then one color per edge id.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.colors.len(), self.k);
        for c in &self.colors {
            writeln!(out, "{c}").expect("writing to a String");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("coloring: bad token {t:?}")))
        });
        let m = tokens
            .next()
            .ok_or_else(|| Error::Parse("coloring: missing header".into()))??;
        let k = tokens
            .next()
            .ok_or_else(|| Error::Parse("coloring: missing palette size".into()))??;
        let colors = tokens
            .map(|t| t.map(|c| c as Color))
            .collect::<Result<Vec<_>>>()?;
        if colors.len() as u64 != m {
            return Err(Error::Parse(format!(
                "coloring: header announces {m} edges, found {}",
                colors.len()
            )));
        }
        EdgeColoring::new(colors, k as Color)
    }
}
