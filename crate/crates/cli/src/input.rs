use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::Args;
use pconn::families::FamilySpec;
use pconn::graph::{parse_edge_list, parse_graph6};
use pconn::{Error, Graph};

use crate::Failure;

/// Where the graph comes from. At most one source; stdin when none is given.
#[derive(Args, Debug, Clone, Default)]
pub struct GraphSource {
    /// Graph file, graph6 or edge list (detected from the content)
    #[arg(short, long, value_name = "FILE", group = "source")]
    pub input: Option<PathBuf>,

    /// Graph given inline as a graph6 string
    #[arg(long, value_name = "G6", group = "source")]
    pub graph6: Option<String>,

    /// Named family: star, complete, cycle_chord, srt, gk, k1_join_2kk,
    /// complete_minus_matching
    #[arg(long, value_name = "TAG", group = "source")]
    pub family: Option<String>,

    /// Family parameters as key=value pairs, e.g. "r=4,t=3"
    #[arg(long, value_name = "PARAMS", default_value = "")]
    pub params: String,
}

impl GraphSource {
    pub fn family_spec(&self) -> Result<Option<FamilySpec>, Failure> {
        match &self.family {
            Some(tag) => Ok(Some(FamilySpec::parse(tag, &self.params).map_err(Failure::usage)?)),
            None => Ok(None),
        }
    }

    pub fn load(&self) -> Result<Graph, Failure> {
        if let Some(spec) = self.family_spec()? {
            return spec.generate().map_err(Failure::from);
        }
        if let Some(text) = &self.graph6 {
            return parse_graph6(text).map_err(Failure::usage);
        }
        let text = match &self.input {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
            None => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
                buf
            }
        };
        parse_graph_text(&text).map_err(Failure::usage)
    }
}

/// A single whitespace-free token is graph6; anything else is an edge list.
pub fn parse_graph_text(text: &str) -> Result<Graph, Error> {
    let trimmed = text.trim();
    if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) {
        parse_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}
