//! Exact solvers for coalition partitions in small graphs.
//!
//! The crate computes the coalition number C(G), the total coalition number
//! TC(G), the domination number γ(G) and the domatic number d(G) of graphs on
//! up to 16 vertices (64 for the cheap predicates), and ships the complete
//! catalogs of cubic graphs on 6, 8 and 10 vertices.
//!
//! ```
//! use coalition_core::{coalition_number_pruned, verify_certificate, Graph};
//!
//! let petersen = Graph::petersen();
//! let report = coalition_number_pruned(&petersen).unwrap();
//! assert_eq!(report.value, 6);
//! assert!(verify_certificate(&petersen, report.certificate.as_ref().unwrap()));
//! ```

pub mod catalog;
pub mod coalition;
pub mod domination;
mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod partition;
mod report;
mod search;
pub mod total;

pub use catalog::{all_catalogs, ingest_graph6_file, load_catalog, CatalogEntry};
pub use coalition::{
    coalition_bounds, coalition_graph, coalition_number_oracle, coalition_number_pruned, is_c_partition, is_coalition,
    split_domatic_construction, verify_certificate, BlockStatus, Bounds, CoalitionCertificate, CoalitionGraph,
    CoalitionSolver,
};
pub use domination::{
    domatic_number, domination_number, enumerate_dominating_sets, enumerate_minimal_dominating_sets, is_dominating,
    is_total_dominating, singleton_pair_table, DomaticPartition, DominationSummary,
};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6};
pub use iso::is_isomorphic;
pub use partition::Partition;
pub use report::{PruneCounts, SearchReport};
pub use total::{
    is_tc_partition, is_total_coalition, total_coalition_number, verify_total_certificate, Method,
    TotalCoalitionCertificate, TotalCoalitionSolver,
};
