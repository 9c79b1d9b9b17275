//! Coalitions, c-partitions and the coalition number C(G).
//!
//! Two exact solvers are provided. [`CoalitionSolver::oracle`] scans every set
//! partition; [`CoalitionSolver::pruned`] is a branch-and-bound that tries the
//! largest admissible order first. Both report the same certificate: the
//! lexicographically first restricted-growth string of maximum order.

use serde::{Deserialize, Serialize};

use crate::domination::{domatic_number, dominates_bits, shrink_to_minimal};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::report::SearchReport;
use crate::search::{self, Closed};

/// Default order limit of the exhaustive solver (Bell(12) ≈ 4.2M partitions).
pub const DEFAULT_ORACLE_CAP: usize = 12;
/// Default order limit of the branch-and-bound solvers.
pub const DEFAULT_SEARCH_CAP: usize = 16;

/// True iff `a` and `b` are both non-dominating and `a ∪ b` dominates.
pub fn is_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    check_pair(a, b)?;
    Ok(!dominates_bits(g, a.bits()) && !dominates_bits(g, b.bits()) && dominates_bits(g, a.union(b).bits()))
}

pub(crate) fn check_pair(a: VertexSet, b: VertexSet) -> Result<()> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(Error::BadSetPair);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockStatus {
    SingletonDominating,
    CoalitionMember,
}

/// A c-partition together with the evidence that makes it one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalitionCertificate {
    pub partition: Partition,
    pub block_status: Vec<BlockStatus>,
    /// For each coalition member, the first block it forms a coalition with.
    pub witness: Vec<Option<usize>>,
}

impl CoalitionCertificate {
    pub fn order(&self) -> usize {
        self.partition.len()
    }
}

/// Checks whether `p` is a c-partition of `g`; on success returns a
/// certificate naming the first partner of every non-dominating block.
pub fn is_c_partition(g: &Graph, p: &Partition) -> Option<CoalitionCertificate> {
    if !p.fits(g) {
        return None;
    }
    let blocks: Vec<u64> = p.blocks().iter().map(|b| b.bits()).collect();
    let witness = search::partners::<Closed>(g, &blocks)?;
    let block_status = witness
        .iter()
        .map(|w| match w {
            None => BlockStatus::SingletonDominating,
            Some(_) => BlockStatus::CoalitionMember,
        })
        .collect();
    Some(CoalitionCertificate {
        partition: p.clone(),
        block_status,
        witness,
    })
}

/// Re-checks a certificate from scratch using plain adjacency queries, not the
/// neighborhood masks the solvers use.
pub fn verify_certificate(g: &Graph, c: &CoalitionCertificate) -> bool {
    let p = &c.partition;
    let k = p.len();
    if p.order() != g.order() || c.block_status.len() != k || c.witness.len() != k {
        return false;
    }
    let mut seen = VertexSet::empty(g.order());
    for b in p.blocks() {
        if b.is_empty() || !b.is_disjoint(seen) {
            return false;
        }
        seen = seen.union(*b);
    }
    if seen != g.vertices() {
        return false;
    }
    let dominating: Vec<bool> = p.blocks().iter().map(|&b| dominates_by_adjacency(g, b)).collect();
    (0..k).all(|i| match (c.block_status[i], c.witness[i]) {
        (BlockStatus::SingletonDominating, None) => p.block(i).len() == 1 && dominating[i],
        (BlockStatus::CoalitionMember, Some(j)) => {
            j < k
                && j != i
                && !dominating[i]
                && !dominating[j]
                && dominates_by_adjacency(g, p.block(i).union(p.block(j)))
        }
        _ => false,
    })
}

fn dominates_by_adjacency(g: &Graph, s: VertexSet) -> bool {
    (0..g.order()).all(|u| s.contains(u) || s.iter().any(|v| g.has_edge(u, v)))
}

/// The coalition graph of a partition: one vertex per block, an edge between
/// two blocks iff they form a coalition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionGraph {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
}

impl CoalitionGraph {
    pub fn max_degree(&self) -> usize {
        self.graph.degree_profile().max_degree
    }

    /// Undirected DOT rendering; node labels list block contents.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph coalition {\n");
        for (i, b) in self.blocks.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{b}\"];\n"));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn coalition_graph(g: &Graph, p: &Partition) -> Result<CoalitionGraph> {
    if !p.fits(g) {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices, graph has {}",
            p.order(),
            g.order()
        )));
    }
    let blocks = p.blocks().to_vec();
    let mut edges = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if is_coalition(g, blocks[i], blocks[j])? {
                edges.push((i, j));
            }
        }
    }
    Ok(CoalitionGraph {
        graph: Graph::from_edge_list(blocks.len(), &edges)?,
        blocks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

impl Bounds {
    pub fn contains(&self, value: usize) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Lower bound δ + 2 for graphs with no full vertex and δ ≥ 1 (else 1); upper
/// bound `min(n, ⌊(Δ + 3)² / 4⌋)`.
pub fn coalition_bounds(g: &Graph) -> Bounds {
    let p = g.degree_profile();
    let lower = if p.full_vertices.is_empty() && p.min_degree >= 1 {
        p.min_degree + 2
    } else {
        1
    };
    let upper = g.order().min((p.max_degree + 3).pow(2) / 4);
    Bounds { lower, upper }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoalitionSolver {
    pub oracle_cap: usize,
    pub search_cap: usize,
    /// Cut branches where some block can no longer reach any coalition
    /// partner. Checked against the oracle in the test suite.
    pub partner_lookahead: bool,
}

impl Default for CoalitionSolver {
    fn default() -> Self {
        CoalitionSolver {
            oracle_cap: DEFAULT_ORACLE_CAP,
            search_cap: DEFAULT_SEARCH_CAP,
            partner_lookahead: true,
        }
    }
}

impl CoalitionSolver {
    pub fn oracle(&self, g: &Graph) -> Result<SearchReport<CoalitionCertificate>> {
        check_cap("exhaustive coalition solver", g, self.oracle_cap)?;
        Ok(certify(g, search::exhaustive::<Closed>(g)))
    }

    pub fn pruned(&self, g: &Graph) -> Result<SearchReport<CoalitionCertificate>> {
        check_cap("pruned coalition solver", g, self.search_cap)?;
        let upper = coalition_bounds(g).upper;
        // Searches all the way down to 1; the lower bound is checked, not assumed.
        Ok(certify(
            g,
            search::top_down::<Closed>(g, upper, 1, self.partner_lookahead),
        ))
    }
}

pub(crate) fn check_cap(solver: &'static str, g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::SearchCap {
            solver,
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

fn certify(g: &Graph, r: SearchReport<Partition>) -> SearchReport<CoalitionCertificate> {
    SearchReport {
        value: r.value,
        certificate: r
            .certificate
            .map(|p| is_c_partition(g, &p).expect("solver returned a c-partition")),
        nodes_explored: r.nodes_explored,
        prunes: r.prunes,
        elapsed: r.elapsed,
    }
}

/// C(G) by exhaustive enumeration with default caps.
pub fn coalition_number_oracle(g: &Graph) -> Result<SearchReport<CoalitionCertificate>> {
    CoalitionSolver::default().oracle(g)
}

/// C(G) by branch-and-bound with default caps.
pub fn coalition_number_pruned(g: &Graph) -> Result<SearchReport<CoalitionCertificate>> {
    CoalitionSolver::default().pruned(g)
}

/// Builds a c-partition from a maximum domatic partition.
///
/// Each domatic block is shrunk to a minimal dominating set `D`. A singleton
/// `D` stays as a dominating singleton; otherwise `D` is split into its
/// smallest vertex and the rest, two non-dominating sets whose union
/// dominates. The vertices dropped while shrinking are gathered into one
/// extra block, which cannot dominate when the domatic partition is maximum.
/// If that block has no partner it is merged into a split part instead.
///
/// Returns `None` when neither placement yields a c-partition.
pub fn split_domatic_construction(g: &Graph) -> Option<Partition> {
    let n = g.order();
    let (_, domatic) = domatic_number(g);
    let mut parts = Vec::new();
    let mut leftover = VertexSet::empty(n);
    for &block in &domatic.blocks {
        let d = shrink_to_minimal(g, block);
        leftover = leftover.union(block.difference(d));
        let first = d.min().expect("dominating sets are nonempty");
        if d.len() == 1 {
            parts.push(d);
        } else {
            let head = VertexSet::singleton(first, n);
            parts.push(head);
            parts.push(d.difference(head));
        }
    }
    if leftover.is_empty() {
        return Partition::from_blocks(n, &parts).ok();
    }
    let mut with_extra = parts.clone();
    with_extra.push(leftover);
    if let Some(p) = Partition::from_blocks(n, &with_extra)
        .ok()
        .filter(|p| is_c_partition(g, p).is_some())
    {
        return Some(p);
    }
    (0..parts.len()).find_map(|i| {
        let mut merged = parts.clone();
        merged[i] = merged[i].union(leftover);
        Partition::from_blocks(n, &merged)
            .ok()
            .filter(|p| is_c_partition(g, p).is_some())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize], n: usize) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied(), n).unwrap()
    }

    #[test]
    fn coalition_pairs() {
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_coalition(&k2, set(&[0], 2), set(&[1], 2)).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_coalition(&c4, set(&[0], 4), set(&[1], 4)).unwrap());
        let p = Graph::petersen();
        for u in 0..10 {
            for v in 0..10 {
                if u != v {
                    assert!(!is_coalition(&p, set(&[u], 10), set(&[v], 10)).unwrap());
                }
            }
        }
    }

    #[test]
    fn coalition_rejects_bad_pairs() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_coalition(&c4, set(&[0, 1], 4), set(&[1], 4)).is_err());
        assert!(is_coalition(&c4, VertexSet::empty(4), set(&[1], 4)).is_err());
    }

    #[test]
    fn c_partitions() {
        let k4 = Graph::complete(4).unwrap();
        let cert = is_c_partition(&k4, &Partition::discrete(4)).unwrap();
        assert!(cert.block_status.iter().all(|&s| s == BlockStatus::SingletonDominating));
        assert!(verify_certificate(&k4, &cert));

        assert!(is_c_partition(&Graph::petersen(), &Partition::discrete(10)).is_none());

        let c4 = Graph::cycle(4).unwrap();
        let cert = is_c_partition(&c4, &Partition::discrete(4)).unwrap();
        assert_eq!(cert.witness, vec![Some(1), Some(0), Some(0), Some(0)]);
        assert!(verify_certificate(&c4, &cert));
        // V itself is a non-singleton dominating block.
        assert!(is_c_partition(&c4, &Partition::whole(4)).is_none());
    }

    #[test]
    fn corrupted_certificates_fail() {
        let c4 = Graph::cycle(4).unwrap();
        let good = is_c_partition(&c4, &Partition::discrete(4)).unwrap();

        let mut bad = good.clone();
        bad.witness[0] = Some(0);
        assert!(!verify_certificate(&c4, &bad));

        let mut short = good.clone();
        short.partition = Partition::discrete(3);
        short.block_status.pop();
        short.witness.pop();
        assert!(!verify_certificate(&c4, &short));

        let mut wrong_status = good;
        wrong_status.block_status[1] = BlockStatus::SingletonDominating;
        assert!(!verify_certificate(&c4, &wrong_status));
    }

    #[test]
    fn witness_union_not_dominating_fails() {
        // P4: blocks {0},{1},{2},{3}; {0} ∪ {1} misses vertex 3.
        let p4 = Graph::path(4).unwrap();
        let forged = CoalitionCertificate {
            partition: Partition::discrete(4),
            block_status: vec![BlockStatus::CoalitionMember; 4],
            witness: vec![Some(1), Some(0), Some(0), Some(0)],
        };
        assert!(!verify_certificate(&p4, &forged));
    }

    #[test]
    fn coalition_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let cg = coalition_graph(&k4, &Partition::discrete(4)).unwrap();
        assert_eq!(cg.graph.order(), 4);
        assert_eq!(cg.graph.edge_count(), 0);

        let c4 = Graph::cycle(4).unwrap();
        let cg = coalition_graph(&c4, &Partition::discrete(4)).unwrap();
        assert_eq!(cg.graph, Graph::complete(4).unwrap());
        let dot = cg.to_dot();
        assert!(dot.starts_with("graph coalition {"));
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("0 [label=\"{0}\"]"));
    }

    #[test]
    fn bounds() {
        let p = Graph::petersen();
        assert_eq!(coalition_bounds(&p), Bounds { lower: 5, upper: 9 });
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(coalition_bounds(&k33), Bounds { lower: 5, upper: 6 });
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(coalition_bounds(&k4), Bounds { lower: 1, upper: 4 });
        let one = Graph::empty(1).unwrap();
        assert_eq!(coalition_bounds(&one), Bounds { lower: 1, upper: 1 });
    }

    #[test]
    fn small_coalition_numbers() {
        for n in 1..=6 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(coalition_number_oracle(&kn).unwrap().value, n);
            assert_eq!(coalition_number_pruned(&kn).unwrap().value, n);
        }
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(coalition_number_oracle(&k33).unwrap().value, 6);
        assert_eq!(coalition_number_oracle(&Graph::cycle(4).unwrap()).unwrap().value, 4);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        let r = coalition_number_pruned(&g).unwrap();
        assert_eq!(r.value, 1);
        let c = r.certificate.unwrap();
        assert_eq!(c.block_status, vec![BlockStatus::SingletonDominating]);
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::cycle(13).unwrap();
        assert!(matches!(
            coalition_number_oracle(&big),
            Err(Error::SearchCap { cap: 12, .. })
        ));
        let huge = Graph::cycle(17).unwrap();
        assert!(matches!(
            coalition_number_pruned(&huge),
            Err(Error::SearchCap { cap: 16, .. })
        ));
    }

    #[test]
    fn solvers_agree_on_certificate() {
        let p = Graph::petersen();
        let a = coalition_number_oracle(&p).unwrap();
        let b = coalition_number_pruned(&p).unwrap();
        assert_eq!(a.value, 6);
        assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn splitting_construction_is_valid() {
        for g in [
            Graph::petersen(),
            Graph::complete_bipartite(3, 3).unwrap(),
            Graph::cycle(5).unwrap(),
        ] {
            let p = split_domatic_construction(&g).unwrap();
            assert!(is_c_partition(&g, &p).is_some());
        }
    }
}
