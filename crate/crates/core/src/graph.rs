//! Simple undirected graphs on at most 64 vertices, stored as one neighborhood
//! bitmask per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold; one [`VertexSet`] is a single `u64`.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices `0..universe` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= MAX_ORDER);
        VertexSet {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            bits: full_mask(universe),
            universe: universe as u8,
        }
    }

    /// Builds a set from raw bits; bits at or above `universe` are rejected.
    pub fn from_bits(bits: u64, universe: usize) -> Result<Self> {
        if universe > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: universe,
                cap: MAX_ORDER,
            });
        }
        if bits & !full_mask(universe) != 0 {
            let v = 63 - (bits & !full_mask(universe)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: universe,
            });
        }
        Ok(VertexSet {
            bits,
            universe: universe as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, universe: usize) -> Self {
        debug_assert_eq!(bits & !full_mask(universe), 0);
        VertexSet {
            bits,
            universe: universe as u8,
        }
    }

    pub fn singleton(v: usize, universe: usize) -> Self {
        debug_assert!(v < universe);
        VertexSet {
            bits: 1 << v,
            universe: universe as u8,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I, universe: usize) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe());
        self.bits |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1 << v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph.
///
/// Both open and closed neighborhoods are stored so the domination predicates
/// reduce to OR-ing masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    open: Vec<u64>,
    closed: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph {
            order: n,
            open: vec![0; n],
            closed: (0..n).map(|v| 1u64 << v).collect(),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency_unchecked(open: Vec<u64>) -> Self {
        let order = open.len();
        let closed = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        Graph { order, open, closed }
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.open[u] |= 1 << v;
        self.open[v] |= 1 << u;
        self.closed[u] |= 1 << v;
        self.closed[v] |= 1 << u;
        Ok(())
    }

    /// Parses the human edge-list syntax `"n; u-v, u-v, ..."`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, tail) = match text.split_once(';') {
            Some((h, t)) => (h, t),
            None => (text, ""),
        };
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{}`", head.trim())))?;
        let mut edges = Vec::new();
        for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge `{item}`, expected u-v")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex `{}` in edge `{item}`", s.trim())))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Cycle C_n, n ≥ 3.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parse(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Path P_n on n vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Complete bipartite K_{a,b}.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(a + b, &edges)
    }

    /// The Kneser graph K(5,2): 2-subsets of a 5-set, adjacent iff disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<u8> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (1u8 << i) | (1u8 << j)))
            .collect();
        let mut edges = Vec::new();
        for (a, &p) in pairs.iter().enumerate() {
            for (b, &q) in pairs.iter().enumerate().skip(a + 1) {
                if p & q == 0 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edge_list(10, &edges).expect("Kneser construction is a simple graph")
    }

    /// Disjoint union, with `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.order, v + self.order)));
        Graph::from_edge_list(n, &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Parse(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen >> p & 1 == 1 {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.order, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn open_nbhd(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.open[v], self.order)
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.closed[v], self.order)
    }

    #[inline]
    pub(crate) fn open_bits(&self) -> &[u64] {
        &self.open
    }

    #[inline]
    pub(crate) fn closed_bits(&self) -> &[u64] {
        &self.closed
    }

    #[inline]
    pub(crate) fn full_bits(&self) -> u64 {
        full_mask(self.order)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.open[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.open[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.open.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in VertexSet::from_bits_unchecked(self.open[u] & !full_mask(u + 1), self.order) {
                out.push((u, v));
            }
        }
        out
    }

    /// Some `d` with every vertex of degree `d`, if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut min_degree = usize::MAX;
        let mut max_degree = 0;
        let mut full_vertices = VertexSet::empty(self.order);
        let mut isolated_vertices = VertexSet::empty(self.order);
        for v in 0..self.order {
            let d = self.degree(v);
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
            if d + 1 == self.order {
                full_vertices.insert(v);
            }
            if d == 0 {
                isolated_vertices.insert(v);
            }
        }
        DegreeProfile {
            min_degree,
            max_degree,
            full_vertices,
            isolated_vertices,
        }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.full_bits();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in VertexSet::from_bits_unchecked(frontier, self.order) {
                    next |= self.open[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
            out.push(VertexSet::from_bits_unchecked(comp, self.order));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order;
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.open_nbhd(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += (self.open[u] & self.open[v] & !full_mask(v + 1)).count_ones() as usize;
        }
        count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// Degree statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Vertices of degree n − 1.
    pub full_vertices: VertexSet,
    /// Vertices of degree 0.
    pub isolated_vertices: VertexSet,
}
