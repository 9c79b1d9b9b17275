//! Domination predicates and the exact domination-type invariants γ(G) and
//! d(G).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, VertexSet};

/// Largest order accepted by the exhaustive minimal-dominating-set scan.
pub const MINIMAL_SCAN_CAP: usize = 24;

/// Union of closed neighborhoods of the members of `bits`.
#[inline]
pub(crate) fn closed_cover(g: &Graph, bits: u64) -> u64 {
    let closed = g.closed_bits();
    let mut cover = 0;
    let mut rest = bits;
    while rest != 0 {
        cover |= closed[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    cover
}

/// Union of open neighborhoods of the members of `bits`.
#[inline]
pub(crate) fn open_cover(g: &Graph, bits: u64) -> u64 {
    let open = g.open_bits();
    let mut cover = 0;
    let mut rest = bits;
    while rest != 0 {
        cover |= open[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    cover
}

#[inline]
pub(crate) fn dominates_bits(g: &Graph, bits: u64) -> bool {
    closed_cover(g, bits) == g.full_bits()
}

#[inline]
pub(crate) fn totally_dominates_bits(g: &Graph, bits: u64) -> bool {
    open_cover(g, bits) == g.full_bits()
}

/// True iff every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    dominates_bits(g, s.bits())
}

/// True iff every vertex has a neighbor in `s`. Undefined, and rejected, when
/// the graph has an isolated vertex.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    require_no_isolated(g)?;
    Ok(totally_dominates_bits(g, s.bits()))
}

pub(crate) fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.degree_profile().isolated_vertices.min() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Iterates the `k`-subsets of `0..n` in increasing bitmask order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    // Gosper's hack, carried in u128 so n = 64 cannot overflow.
    let limit = 1u128 << n;
    let mut next = if k <= n { Some((1u128 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some(ripple | (((cur ^ ripple) >> 2) / low))
        };
        Some(cur as u64)
    })
}

/// All dominating sets of cardinality `k`, in increasing bitmask order.
pub fn enumerate_dominating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.order();
    k_subsets(n, k)
        .filter(|&bits| dominates_bits(g, bits))
        .map(|bits| VertexSet::from_bits_unchecked(bits, n))
        .collect()
}

/// A minimum dominating set: the first dominating set, in increasing bitmask
/// order, of the smallest cardinality.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.order();
    (1..=n)
        .find_map(|k| k_subsets(n, k).find(|&bits| dominates_bits(g, bits)))
        .map(|bits| VertexSet::from_bits_unchecked(bits, n))
        .expect("V itself dominates")
}

/// The domination number γ(G).
pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// True iff `s` dominates and no `s ∖ {v}` does.
pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && s.iter().all(|v| !dominates_bits(g, s.bits() & !(1 << v)))
}

/// Every minimal dominating set, in increasing bitmask order.
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > MINIMAL_SCAN_CAP {
        return Err(Error::SearchCap {
            solver: "minimal dominating set scan",
            order: n,
            cap: MINIMAL_SCAN_CAP,
        });
    }
    Ok((1..=full_mask(n))
        .map(|bits| VertexSet::from_bits_unchecked(bits, n))
        .filter(|&s| is_minimal_dominating(g, s))
        .collect())
}

/// Shrinks a dominating set to a minimal one by dropping members in
/// increasing vertex order whenever the rest still dominates.
pub fn shrink_to_minimal(g: &Graph, s: VertexSet) -> VertexSet {
    debug_assert!(is_dominating(g, s));
    let mut bits = s.bits();
    for v in s.iter() {
        let without = bits & !(1 << v);
        if dominates_bits(g, without) {
            bits = without;
        }
    }
    VertexSet::from_bits_unchecked(bits, g.order())
}

/// A partition of the vertex set into dominating sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomaticPartition {
    pub blocks: Vec<VertexSet>,
}

impl DomaticPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Re-checks disjointness, coverage and that every block dominates.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for b in &self.blocks {
            if b.is_empty() || b.bits() & seen != 0 || !is_dominating(g, *b) {
                return false;
            }
            seen |= b.bits();
        }
        seen == g.full_bits()
    }
}

/// The domatic number d(G) with one witness partition.
///
/// Tries k = δ + 1 first and walks down; for each k vertices are placed in
/// index order into at most k blocks (restricted growth, so block relabelings
/// are never revisited). A branch is cut when some block can no longer become
/// dominating even if it received every unplaced vertex.
pub fn domatic_number(g: &Graph) -> (usize, DomaticPartition) {
    let n = g.order();
    let delta = g.degree_profile().min_degree;
    let closed = g.closed_bits();
    let mut suffix = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] | closed[v];
    }
    for k in (2..=(delta + 1).min(n)).rev() {
        let mut search = DomaticSearch {
            g,
            k,
            suffix: &suffix,
            cover: vec![0; k],
            members: vec![0; k],
        };
        if search.place(0, 0) {
            let blocks = search
                .members
                .iter()
                .map(|&b| VertexSet::from_bits_unchecked(b, n))
                .collect();
            return (k, DomaticPartition { blocks });
        }
    }
    (
        1,
        DomaticPartition {
            blocks: vec![g.vertices()],
        },
    )
}

struct DomaticSearch<'a> {
    g: &'a Graph,
    k: usize,
    suffix: &'a [u64],
    cover: Vec<u64>,
    members: Vec<u64>,
}

impl DomaticSearch<'_> {
    fn place(&mut self, v: usize, used: usize) -> bool {
        let full = self.g.full_bits();
        let n = self.g.order();
        let rest = self.suffix[v];
        if used + (n - v) < self.k {
            return false;
        }
        if self.cover[..used].iter().any(|&c| c | rest != full) {
            return false;
        }
        if used < self.k && rest != full {
            return false;
        }
        if v == n {
            return used == self.k;
        }
        let nb = self.g.closed_bits()[v];
        for b in 0..(used + 1).min(self.k) {
            let (c, m) = (self.cover[b], self.members[b]);
            self.cover[b] |= nb;
            self.members[b] |= 1 << v;
            if self.place(v + 1, used.max(b + 1)) {
                return true;
            }
            self.cover[b] = c;
            self.members[b] = m;
        }
        false
    }
}

/// Symmetric table of which vertex pairs dominate: entry (u, v) is
/// `is_dominating({u, v})`, so the diagonal marks full vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable {
    rows: Vec<u64>,
}

impl PairTable {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Partners `v` of `u` with `{u, v}` dominating, diagonal included.
    pub fn row(&self, u: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.rows[u], self.rows.len())
    }
}

pub fn singleton_pair_table(g: &Graph) -> PairTable {
    let n = g.order();
    let closed = g.closed_bits();
    let full = g.full_bits();
    let rows = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| closed[u] | closed[v] == full)
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();
    PairTable { rows }
}

/// γ(G), d(G) and the dominating-pair table of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationSummary {
    pub gamma: usize,
    pub domatic: usize,
    pub pair_table: PairTable,
}

pub fn summarize(g: &Graph) -> DominationSummary {
    DominationSummary {
        gamma: domination_number(g),
        domatic: domatic_number(g).0,
        pair_table: singleton_pair_table(g),
    }
}
