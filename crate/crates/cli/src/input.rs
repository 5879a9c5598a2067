//! Graph families from graph6 strings, files, builder specs and enumeration.

use crate::CliError;
use clap::Args;
use edgereg::graph::{self, canonical_form, enumerate_graphs};
use edgereg::Graph;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

#[derive(Debug, Clone, Args, Default)]
pub struct GraphSource {
    /// Graph in graph6 format (repeatable).
    #[arg(long = "graph6", value_name = "STRING")]
    pub graph6: Vec<String>,
    /// File with one graph6 string per line; `-` reads stdin.
    #[arg(long = "graph6-file", value_name = "PATH")]
    pub graph6_file: Option<PathBuf>,
    /// Builder spec such as `cycle:5`, `anticycle:5`, `path:4`, `complete:3` (repeatable).
    #[arg(long, value_name = "SPEC")]
    pub builder: Vec<String>,
    /// Enumerate all isomorphism classes with at most this many vertices.
    #[arg(long = "max-n", value_name = "N")]
    pub max_n: Option<usize>,
    /// Smallest vertex count for `--max-n` enumeration.
    #[arg(long = "min-n", value_name = "N", default_value_t = 0)]
    pub min_n: usize,
}

impl GraphSource {
    /// All graphs in source order: inline graph6, file, builders, enumeration.
    pub fn load(&self) -> Result<Vec<Graph>, CliError> {
        let mut out = Vec::new();
        for s in &self.graph6 {
            out.push(graph::graph6::decode(s)?);
        }
        if let Some(path) = &self.graph6_file {
            let mut text = String::new();
            if path.as_os_str() == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            } else {
                text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                out.push(graph::graph6::decode(line)?);
            }
        }
        for spec in &self.builder {
            out.push(Graph::from_builder_spec(spec)?);
        }
        if let Some(max) = self.max_n {
            if max > 8 {
                return Err(CliError::Parse(format!("--max-n {max} exceeds the enumeration limit of 8")));
            }
            for n in self.min_n..=max {
                out.extend(enumerate_graphs(n));
            }
        }
        Ok(out)
    }

    /// Canonical forms with duplicates removed, sorted by graph6.
    pub fn load_canonical(&self) -> Result<Vec<Graph>, CliError> {
        let set: BTreeMap<String, Graph> = self
            .load()?
            .iter()
            .map(canonical_form)
            .map(|g| (g.to_string(), g))
            .collect();
        Ok(set.into_values().collect())
    }
}

/// Comma-separated vertex list such as `0,2`; empty for the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexList(pub Vec<usize>);

pub fn parse_vertex_list(s: &str) -> Result<VertexList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(VertexList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex `{t}`")))
        .collect::<Result<_, _>>()
        .map(VertexList)
}
