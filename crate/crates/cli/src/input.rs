use std::io::BufRead;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use coalition_core::graph6::HEADER;
use coalition_core::{from_graph6, load_catalog, Error, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One graph6 string per line.
    Graph6,
    /// `n; u-v, u-v, ...` per line.
    Edgelist,
    /// Built-in names: petersen, kN, cN, pN, kA_B, cubicN:I.
    Name,
}

/// A graph together with where it came from.
#[derive(Debug, Clone)]
pub struct Labeled {
    pub source: String,
    pub graph: Graph,
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let text = text.trim();
    match format {
        Format::Graph6 => Ok(from_graph6(text)?),
        Format::Edgelist => Ok(Graph::parse_edge_list(text)?),
        Format::Name => named(text),
    }
}

fn number(s: &str, name: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("unknown graph name `{name}`")).into())
}

/// Resolves a built-in graph name.
pub fn named(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(Graph::petersen());
    }
    if let Some(rest) = lower.strip_prefix("cubic") {
        let (order, index) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected cubicN:I, got `{name}`")))?;
        let catalog = load_catalog(number(order, name)?)?;
        let index = number(index, name)?;
        let entry = catalog
            .into_iter()
            .nth(index)
            .ok_or_else(|| Error::Parse(format!("`{name}`: catalog index out of range")))?;
        return Ok(entry.graph);
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once('_') {
            return Ok(Graph::complete_bipartite(number(a, name)?, number(b, name)?)?);
        }
        return Ok(Graph::complete(number(rest, name)?)?);
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return Ok(Graph::cycle(number(rest, name)?)?);
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return Ok(Graph::path(number(rest, name)?)?);
    }
    Err(Error::Parse(format!("unknown graph name `{name}`")).into())
}

/// Parses one graph per non-blank line; `#` starts a comment line.
pub fn read_lines<R: BufRead>(reader: R, format: Format, origin: &str) -> Result<Vec<Labeled>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.with_context(|| format!("reading {origin}"))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text == HEADER {
            continue;
        }
        let graph = parse_graph(text, format).with_context(|| format!("{origin} line {lineno}: `{text}`"))?;
        out.push(Labeled {
            source: format!("{origin}:{lineno}"),
            graph,
        });
    }
    Ok(out)
}

pub fn catalog_graphs(orders: &[usize]) -> Result<Vec<Labeled>> {
    let mut out = Vec::new();
    for &order in orders {
        for e in load_catalog(order)? {
            out.push(Labeled {
                source: e.reference(),
                graph: e.graph,
            });
        }
    }
    if out.is_empty() {
        bail!("no catalog orders given");
    }
    Ok(out)
}
