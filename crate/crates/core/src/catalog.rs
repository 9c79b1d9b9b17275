//! Embedded catalogs of every cubic graph on 6, 8 and 10 vertices, connected or
//! not, plus ingestion of external graph6 files.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, HEADER};
use crate::iso::is_isomorphic;

const CUBIC6: &str = include_str!("../data/cubic6.g6");
const CUBIC8: &str = include_str!("../data/cubic8.g6");
const CUBIC10: &str = include_str!("../data/cubic10.g6");

/// Orders with an embedded catalog and the number of cubic graphs of each.
pub const CATALOG_SIZES: [(usize, usize); 3] = [(6, 2), (8, 6), (10, 21)];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub order: usize,
    /// Position within its catalog or file, from 0.
    pub index: usize,
    pub graph6: String,
    pub graph: Graph,
    pub connected: bool,
    pub is_petersen: bool,
}

impl CatalogEntry {
    fn new(index: usize, graph6: &str, graph: Graph) -> Self {
        let is_petersen = graph.order() == 10 && is_isomorphic(&graph, &Graph::petersen());
        CatalogEntry {
            order: graph.order(),
            index,
            graph6: graph6.to_string(),
            connected: graph.is_connected(),
            is_petersen,
            graph,
        }
    }

    /// Short reference such as `cubic10:16`.
    pub fn reference(&self) -> String {
        format!("cubic{}:{}", self.order, self.index)
    }
}

/// Loads the embedded catalog of cubic graphs of the given order and checks
/// its count, regularity, pairwise non-isomorphism and Petersen membership.
pub fn load_catalog(order: usize) -> Result<Vec<CatalogEntry>> {
    let (text, expected) = match order {
        6 => (CUBIC6, 2),
        8 => (CUBIC8, 6),
        10 => (CUBIC10, 21),
        _ => return Err(Error::Catalog(format!("no embedded catalog for order {order}"))),
    };
    let entries = parse_lines(text.as_bytes(), Some(3)).map_err(|e| Error::Catalog(e.to_string()))?;
    if entries.len() != expected {
        return Err(Error::Catalog(format!(
            "order {order}: expected {expected} graphs, found {}",
            entries.len()
        )));
    }
    for e in &entries {
        if e.order != order {
            return Err(Error::Catalog(format!("{} has order {}", e.reference(), e.order)));
        }
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if is_isomorphic(&a.graph, &b.graph) {
                return Err(Error::Catalog(format!(
                    "{} and {} are isomorphic",
                    a.reference(),
                    b.reference()
                )));
            }
        }
    }
    let petersen = entries.iter().filter(|e| e.is_petersen).count();
    if order == 10 && petersen != 1 {
        return Err(Error::Catalog(format!("expected one Petersen graph, found {petersen}")));
    }
    Ok(entries)
}

/// The three embedded catalogs in order 6, 8, 10.
pub fn all_catalogs() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (order, _) in CATALOG_SIZES {
        out.extend(load_catalog(order)?);
    }
    Ok(out)
}

/// Reads a graph6 file. Blank lines are skipped and a leading `>>graph6<<`
/// header is tolerated; errors carry the 1-based line number.
pub fn ingest_graph6_file(path: &Path, expect_regular: Option<usize>) -> Result<Vec<CatalogEntry>> {
    let file = std::fs::File::open(path)?;
    parse_lines(std::io::BufReader::new(file), expect_regular)
}

/// Like [`ingest_graph6_file`] over any buffered reader.
pub fn parse_lines<R: BufRead>(reader: R, expect_regular: Option<usize>) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line?;
        let text = line.trim();
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        let g = from_graph6(text).map_err(|e| e.at_line(lineno))?;
        if let Some(d) = expect_regular {
            if g.regularity() != Some(d) {
                return Err(Error::Parse(format!("graph `{text}` is not {d}-regular")).at_line(lineno));
            }
        }
        out.push(CatalogEntry::new(out.len(), text, g));
    }
    Ok(out)
}
