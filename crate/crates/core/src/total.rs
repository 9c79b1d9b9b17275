//! Total coalitions and the total coalition number TC(G).
//!
//! Same search skeleton as [`crate::coalition`], with open neighborhoods in
//! place of closed ones and no dominating block of any size allowed. All
//! operations reject graphs with an isolated vertex.

use serde::{Deserialize, Serialize};

use crate::coalition::{check_cap, check_pair, DEFAULT_ORACLE_CAP, DEFAULT_SEARCH_CAP};
use crate::domination::{require_no_isolated, totally_dominates_bits};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::report::SearchReport;
use crate::search::{self, Open};

pub fn is_total_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    require_no_isolated(g)?;
    check_pair(a, b)?;
    Ok(!totally_dominates_bits(g, a.bits())
        && !totally_dominates_bits(g, b.bits())
        && totally_dominates_bits(g, a.union(b).bits()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalCoalitionCertificate {
    pub partition: Partition,
    pub witness: Vec<usize>,
}

impl TotalCoalitionCertificate {
    pub fn order(&self) -> usize {
        self.partition.len()
    }
}

/// Checks whether `p` is a total coalition partition; returns a certificate
/// with the first partner of every block on success.
pub fn is_tc_partition(g: &Graph, p: &Partition) -> Result<Option<TotalCoalitionCertificate>> {
    require_no_isolated(g)?;
    if !p.fits(g) {
        return Ok(None);
    }
    let blocks: Vec<u64> = p.blocks().iter().map(|b| b.bits()).collect();
    Ok(search::partners::<Open>(g, &blocks).map(|w| TotalCoalitionCertificate {
        partition: p.clone(),
        witness: w
            .into_iter()
            .map(|j| j.expect("no block may totally dominate"))
            .collect(),
    }))
}

/// Independent re-check by adjacency queries.
pub fn verify_total_certificate(g: &Graph, c: &TotalCoalitionCertificate) -> bool {
    let p = &c.partition;
    let k = p.len();
    if p.order() != g.order() || c.witness.len() != k || g.degree_profile().min_degree == 0 {
        return false;
    }
    let totally = |s: VertexSet| (0..g.order()).all(|u| s.iter().any(|v| g.has_edge(u, v)));
    let td: Vec<bool> = p.blocks().iter().map(|&b| totally(b)).collect();
    (0..k).all(|i| {
        let j = c.witness[i];
        j < k && j != i && !td[i] && !td[j] && totally(p.block(i).union(p.block(j)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Pruned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TotalCoalitionSolver {
    pub oracle_cap: usize,
    pub search_cap: usize,
    pub partner_lookahead: bool,
}

impl Default for TotalCoalitionSolver {
    fn default() -> Self {
        TotalCoalitionSolver {
            oracle_cap: DEFAULT_ORACLE_CAP,
            search_cap: DEFAULT_SEARCH_CAP,
            partner_lookahead: true,
        }
    }
}

impl TotalCoalitionSolver {
    /// TC(G); `value` is 0 and the certificate absent when no total
    /// coalition partition exists.
    pub fn solve(&self, g: &Graph, method: Method) -> Result<SearchReport<TotalCoalitionCertificate>> {
        require_no_isolated(g)?;
        let raw = match method {
            Method::Oracle => {
                check_cap("exhaustive total coalition solver", g, self.oracle_cap)?;
                search::exhaustive::<Open>(g)
            }
            Method::Pruned => {
                check_cap("pruned total coalition solver", g, self.search_cap)?;
                // k = 1 is the block V, which totally dominates.
                search::top_down::<Open>(g, g.order(), 2, self.partner_lookahead)
            }
        };
        Ok(SearchReport {
            value: raw.value,
            certificate: raw.certificate.map(|p| {
                is_tc_partition(g, &p)
                    .ok()
                    .flatten()
                    .expect("solver returned a tc-partition")
            }),
            nodes_explored: raw.nodes_explored,
            prunes: raw.prunes,
            elapsed: raw.elapsed,
        })
    }
}

pub fn total_coalition_number(g: &Graph, method: Method) -> Result<SearchReport<TotalCoalitionCertificate>> {
    TotalCoalitionSolver::default().solve(g, method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn set(vs: &[usize], n: usize) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied(), n).unwrap()
    }

    #[test]
    fn total_coalition_pairs() {
        let k2 = Graph::complete(2).unwrap();
        assert!(is_total_coalition(&k2, set(&[0], 2), set(&[1], 2)).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(!is_total_coalition(&c4, set(&[0], 4), set(&[2], 4)).unwrap());
        assert!(is_total_coalition(&c4, set(&[0], 4), set(&[1], 4)).unwrap());
        // {0,1} totally dominates C4 already.
        assert!(!is_total_coalition(&c4, set(&[0, 1], 4), set(&[2], 4)).unwrap());
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            is_total_coalition(&g, set(&[0], 3), set(&[1], 3)),
            Err(Error::IsolatedVertex(2))
        ));
        assert!(is_tc_partition(&g, &Partition::discrete(3)).is_err());
        assert!(total_coalition_number(&g, Method::Oracle).is_err());
        assert!(total_coalition_number(&g, Method::Pruned).is_err());
    }

    #[test]
    fn tc_partitions() {
        let k2 = Graph::complete(2).unwrap();
        let c = is_tc_partition(&k2, &Partition::discrete(2)).unwrap().unwrap();
        assert_eq!(c.witness, vec![1, 0]);
        assert!(verify_total_certificate(&k2, &c));

        let c4 = Graph::cycle(4).unwrap();
        let c = is_tc_partition(&c4, &Partition::discrete(4)).unwrap().unwrap();
        for (i, &j) in c.witness.iter().enumerate() {
            assert!(c4.has_edge(i, j));
        }
        assert!(is_tc_partition(&c4, &Partition::whole(4)).unwrap().is_none());
        // {1} and {3} each pair with {0,2}; {1} ∪ {3} alone only covers {0,2}.
        let p = Partition::parse(4, "0,2|1|3").unwrap();
        assert!(is_tc_partition(&c4, &p).unwrap().is_some());
    }

    #[test]
    fn small_values() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        for m in [Method::Oracle, Method::Pruned] {
            assert_eq!(total_coalition_number(&k2, m).unwrap().value, 2);
            let r = total_coalition_number(&c4, m).unwrap();
            assert_eq!(r.value, 4);
            assert!(verify_total_certificate(&c4, &r.certificate.unwrap()));
        }
    }

    #[test]
    fn forged_total_certificate() {
        let c4 = Graph::cycle(4).unwrap();
        let forged = TotalCoalitionCertificate {
            partition: Partition::discrete(4),
            witness: vec![2, 3, 0, 1],
        };
        assert!(!verify_total_certificate(&c4, &forged));
    }
}
