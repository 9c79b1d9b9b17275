use std::collections::BTreeSet;

use anyhow::Result;
use clap::ValueEnum;
use coalition_core::{
    coalition_bounds, domatic_number, domination_number, to_graph6, CoalitionCertificate, CoalitionSolver, Error,
    Graph, Method, PruneCounts, SearchReport, TotalCoalitionCertificate, TotalCoalitionSolver,
};
use serde::{Deserialize, Serialize};

/// Largest order for which `auto` uses exhaustive enumeration.
const AUTO_ORACLE_MAX: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Pruned,
}

impl MethodArg {
    fn resolve(self, g: &Graph) -> Method {
        match self {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Pruned => Method::Pruned,
            MethodArg::Auto if g.order() <= AUTO_ORACLE_MAX => Method::Oracle,
            MethodArg::Auto => Method::Pruned,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Quantity {
    Coalition,
    Total,
    Gamma,
    Domatic,
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub method: MethodArg,
    pub what: BTreeSet<Quantity>,
    pub search_cap: usize,
    pub timings: bool,
}

impl Settings {
    pub fn coalition_solver(&self) -> CoalitionSolver {
        CoalitionSolver {
            search_cap: self.search_cap,
            ..CoalitionSolver::default()
        }
    }

    fn total_solver(&self) -> TotalCoalitionSolver {
        TotalCoalitionSolver {
            search_cap: self.search_cap,
            ..TotalCoalitionSolver::default()
        }
    }

    pub fn coalition(&self, g: &Graph) -> Result<SearchReport<CoalitionCertificate>, Error> {
        let solver = self.coalition_solver();
        match self.method.resolve(g) {
            Method::Oracle => solver.oracle(g),
            Method::Pruned => solver.pruned(g),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coalition: Option<CoalitionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<TotalCoalitionCertificate>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverStats {
    pub nodes: u64,
    pub prunes: PruneCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub source: String,
    pub graph6: String,
    pub order: usize,
    pub connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domatic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coalition: Option<usize>,
    /// `null` when requested but undefined (the graph has an isolated vertex).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_coalition: Option<Option<usize>>,
    pub certificate: Certificates,
    pub stats: SolverStats,
}

fn add(stats: &mut SolverStats, nodes: u64, prunes: &PruneCounts, ms: f64, timings: bool) {
    stats.nodes += nodes;
    stats.prunes.dominating_block += prunes.dominating_block;
    stats.prunes.too_few_blocks += prunes.too_few_blocks;
    stats.prunes.partner_lookahead += prunes.partner_lookahead;
    stats.prunes.invalid_leaf += prunes.invalid_leaf;
    if timings {
        *stats.elapsed_ms.get_or_insert(0.0) += ms;
    }
}

pub fn compute(source: String, g: &Graph, s: &Settings) -> Result<ResultRecord, Error> {
    let mut record = ResultRecord {
        source,
        graph6: to_graph6(g),
        order: g.order(),
        connected: g.is_connected(),
        gamma: None,
        domatic: None,
        coalition: None,
        total_coalition: None,
        certificate: Certificates::default(),
        stats: SolverStats::default(),
    };
    if s.what.contains(&Quantity::Gamma) {
        record.gamma = Some(domination_number(g));
    }
    if s.what.contains(&Quantity::Domatic) {
        record.domatic = Some(domatic_number(g).0);
    }
    if s.what.contains(&Quantity::Coalition) {
        let r = s.coalition(g)?;
        debug_assert!(coalition_bounds(g).contains(r.value));
        add(
            &mut record.stats,
            r.nodes_explored,
            &r.prunes,
            r.elapsed.as_secs_f64() * 1e3,
            s.timings,
        );
        record.coalition = Some(r.value);
        record.certificate.coalition = r.certificate;
    }
    if s.what.contains(&Quantity::Total) {
        match s.total_solver().solve(g, s.method.resolve(g)) {
            Ok(r) => {
                add(
                    &mut record.stats,
                    r.nodes_explored,
                    &r.prunes,
                    r.elapsed.as_secs_f64() * 1e3,
                    s.timings,
                );
                record.total_coalition = Some(Some(r.value));
                record.certificate.total = r.certificate;
            }
            Err(Error::IsolatedVertex(_)) => record.total_coalition = Some(None),
            Err(e) => return Err(e),
        }
    }
    Ok(record)
}
