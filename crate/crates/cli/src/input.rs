use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use mvcut::generators::{make_named, NamedGraph};
use mvcut::io::{self, Format, LabeledGraph};
use mvcut::{Matching, Vertex};

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

/// Where a graph comes from: a file, stdin, or a built-in family.
#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph file; reads stdin when omitted or `-`
    pub path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
    /// Built-in graph family instead of a file
    #[arg(long, conflicts_with = "path")]
    pub named: Option<String>,
    /// First size parameter of --named
    #[arg(short = 'n', requires = "named")]
    pub a: Option<usize>,
    /// Second size parameter of --named
    #[arg(short = 'm', requires = "named")]
    pub b: Option<usize>,
}

impl GraphInput {
    pub fn load(&self) -> Result<LabeledGraph> {
        if let Some(name) = &self.named {
            let which = NamedGraph::from_name(name, self.a, self.b)?;
            return Ok(LabeledGraph::unlabeled(make_named(which)?));
        }
        let text = match self.path.as_deref() {
            Some(p) if p.as_os_str() != "-" => {
                std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
            }
            _ => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
                buf
            }
        };
        Ok(io::parse(&text, self.format.into())?)
    }

    /// How the input was named, for the result document.
    pub fn describe(&self) -> String {
        match (&self.named, &self.path) {
            (Some(name), _) => {
                let params: Vec<String> = [self.a, self.b].iter().flatten().map(|p| p.to_string()).collect();
                std::iter::once(name.clone()).chain(params).collect::<Vec<_>>().join(":")
            }
            (None, Some(p)) if p.as_os_str() != "-" => p.display().to_string(),
            _ => "<stdin>".into(),
        }
    }
}

pub fn vertex(lg: &LabeledGraph, label: &str) -> Result<Vertex> {
    let label = label.trim();
    match lg.vertex_of(label) {
        Some(v) => Ok(v),
        None => bail!("unknown vertex `{label}`"),
    }
}

/// Parses `u-v,u-v,...` against the graph's labels.
pub fn parse_matching(lg: &LabeledGraph, spec: &str) -> Result<Matching> {
    let mut pairs = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((a, b)) = item.split_once('-') else {
            bail!("matching edge `{item}` is not of the form u-v");
        };
        pairs.push((vertex(lg, a)?, vertex(lg, b)?));
    }
    let m = Matching::new(pairs)?;
    m.validate_in(&lg.graph)?;
    Ok(m)
}

/// Parses a comma or space separated vertex list.
pub fn parse_vertex_list(lg: &LabeledGraph, spec: &str) -> Result<Vec<Vertex>> {
    spec.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| vertex(lg, s))
        .collect()
}
