//! Set partitions of the vertex set in restricted-growth form.
//!
//! Vertex 0 is always in block 0, and every later vertex is either in an
//! existing block or opens block `max + 1`. Each set partition has exactly one
//! such string, so enumerating strings visits every partition once.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Partition {
    assignment: Vec<u8>,
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Builds a partition from a restricted-growth string.
    pub fn from_assignment(assignment: &[u8]) -> Result<Self> {
        let n = assignment.len();
        if n == 0 {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        let mut blocks: Vec<VertexSet> = Vec::new();
        for (v, &b) in assignment.iter().enumerate() {
            let b = b as usize;
            if b > blocks.len() {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} opens block {b} before block {}",
                    blocks.len()
                )));
            }
            if b == blocks.len() {
                blocks.push(VertexSet::empty(n));
            }
            blocks[b].insert(v);
        }
        Ok(Partition {
            assignment: assignment.to_vec(),
            blocks,
        })
    }

    /// Builds a partition of `0..n` from blocks in any order; the blocks are
    /// renumbered by their smallest vertex.
    pub fn from_blocks(n: usize, blocks: &[VertexSet]) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for v in b.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::RepeatedVertex(v));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no block")));
        }
        let mut relabel = vec![usize::MAX; blocks.len()];
        let mut next = 0u8;
        let mut assignment = Vec::with_capacity(n);
        for &o in &owner {
            if relabel[o] == usize::MAX {
                relabel[o] = next as usize;
                next += 1;
            }
            assignment.push(relabel[o] as u8);
        }
        Partition::from_assignment(&assignment)
    }

    pub fn from_vertex_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(lists.len());
        for list in lists {
            let mut set = VertexSet::empty(n);
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if set.contains(v) {
                    return Err(Error::RepeatedVertex(v));
                }
                set.insert(v);
            }
            blocks.push(set);
        }
        Partition::from_blocks(n, &blocks)
    }

    /// Parses `"0,3|1,4|2,5"`: 0-based vertices, `|` between blocks.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut lists = Vec::new();
        for (i, part) in text.trim().split('|').enumerate() {
            let list = part
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex `{s}` in block {i}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if list.is_empty() {
                return Err(Error::Parse(format!("block {i} is empty")));
            }
            lists.push(list);
        }
        Partition::from_vertex_lists(n, &lists)
    }

    /// The single-block partition {V}.
    pub fn whole(n: usize) -> Self {
        Partition::from_assignment(&vec![0; n]).expect("all-zero string is restricted growth")
    }

    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        let a: Vec<u8> = (0..n as u8).collect();
        Partition::from_assignment(&a).expect("0,1,2,... is restricted growth")
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.blocks[i]
    }

    /// True if the partition is over exactly the vertices of `g`.
    pub fn fits(&self, g: &Graph) -> bool {
        self.order() == g.order()
    }

    pub fn to_vertex_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.to_vertex_lists()
    }
}

impl TryFrom<Vec<Vec<usize>>> for Partition {
    type Error = Error;

    fn try_from(lists: Vec<Vec<usize>>) -> Result<Self> {
        let n = lists.iter().map(Vec::len).sum();
        Partition::from_vertex_lists(n, &lists)
    }
}

/// Enumerates restricted-growth strings of length `n` in lexicographic order.
///
/// A lending cursor rather than an `Iterator`, so the hot loop of the
/// exhaustive solver does not allocate per partition.
pub struct RestrictedGrowth {
    a: Vec<u8>,
    // prefix_max[i] = max(a[0..i]), with prefix_max[0] unused
    prefix_max: Vec<u8>,
    started: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        assert!((1..=64).contains(&n));
        RestrictedGrowth {
            a: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
        }
    }

    /// Advances to the next string; false once every string was visited.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.a.len();
        let Some(i) = (1..n).rev().find(|&i| self.a[i] <= self.prefix_max[i]) else {
            return false;
        };
        self.a[i] += 1;
        let m = self.prefix_max[i].max(self.a[i]);
        for j in i + 1..n {
            self.a[j] = 0;
            self.prefix_max[j] = m;
        }
        true
    }

    pub fn current(&self) -> &[u8] {
        &self.a
    }

    /// Number of blocks of the current string.
    pub fn block_count(&self) -> usize {
        let n = self.a.len();
        self.prefix_max[n - 1].max(self.a[n - 1]) as usize + 1
    }

    /// Writes the block bitmasks of the current string into `out`.
    pub fn fill_blocks(&self, out: &mut Vec<u64>) {
        out.clear();
        out.resize(self.block_count(), 0);
        for (v, &b) in self.a.iter().enumerate() {
            out[b as usize] |= 1 << v;
        }
    }
}

/// Bell number B(n), the number of set partitions of an n-set.
pub fn bell(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_bell_many() {
        for n in 1..=9 {
            let mut rg = RestrictedGrowth::new(n);
            let mut count = 0u128;
            let mut prev: Option<Vec<u8>> = None;
            while rg.advance() {
                let cur = rg.current().to_vec();
                assert!(Partition::from_assignment(&cur).is_ok());
                if let Some(p) = &prev {
                    assert!(p < &cur, "lexicographic order");
                }
                prev = Some(cur);
                count += 1;
            }
            assert_eq!(count, bell(n), "n = {n}");
        }
    }

    #[test]
    fn bell_values() {
        let known = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597];
        for (n, &b) in known.iter().enumerate() {
            assert_eq!(bell(n), b);
        }
    }

    #[test]
    fn block_count_tracks_string() {
        let mut rg = RestrictedGrowth::new(4);
        let mut blocks = Vec::new();
        while rg.advance() {
            rg.fill_blocks(&mut blocks);
            let p = Partition::from_assignment(rg.current()).unwrap();
            assert_eq!(rg.block_count(), p.len());
            assert_eq!(blocks, p.blocks().iter().map(|b| b.bits()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn from_blocks_canonicalizes() {
        let n = 6;
        let p = Partition::parse(n, "2,5|0,3|1,4").unwrap();
        assert_eq!(p.assignment(), &[0, 1, 2, 0, 1, 2]);
        assert_eq!(p.to_string(), "0,3|1,4|2,5");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Partition::parse(4, "0,1|1,2,3"),
            Err(Error::RepeatedVertex(1))
        ));
        assert!(matches!(Partition::parse(4, "0,1|2"), Err(Error::InvalidPartition(_))));
        assert!(matches!(Partition::parse(4, "0,1||2,3"), Err(Error::Parse(_))));
        assert!(matches!(Partition::parse(4, "0,x|1,2,3"), Err(Error::Parse(_))));
        assert!(matches!(
            Partition::parse(4, "0,1|2,3,4"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_non_restricted_growth() {
        assert!(Partition::from_assignment(&[0, 2, 1]).is_err());
        assert!(Partition::from_assignment(&[1, 0]).is_err());
        assert!(Partition::from_assignment(&[]).is_err());
    }

    #[test]
    fn serde_as_vertex_lists() {
        let p = Partition::parse(4, "0,2|1|3").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[0,2],[1],[3]]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[[0,1],[1]]").is_err());
    }
}
