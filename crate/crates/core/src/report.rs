use std::time::Duration;

use serde::{Deserialize, Serialize};

/// How often each pruning rule fired during a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneCounts {
    /// A block became a forbidden dominating set (non-singleton, or any
    /// block under total domination).
    pub dominating_block: u64,
    /// Too few unplaced vertices left to open the remaining blocks.
    pub too_few_blocks: u64,
    /// Some block had no partner left that could complete a coalition.
    pub partner_lookahead: u64,
    /// A complete assignment failed final validation.
    pub invalid_leaf: u64,
}

impl PruneCounts {
    pub fn total(&self) -> u64 {
        self.dominating_block + self.too_few_blocks + self.partner_lookahead + self.invalid_leaf
    }
}

/// Outcome of one exact solve.
#[derive(Debug, Clone)]
pub struct SearchReport<C> {
    pub value: usize,
    pub certificate: Option<C>,
    /// Search-tree nodes for the pruned solver, partitions visited for the
    /// exhaustive one.
    pub nodes_explored: u64,
    pub prunes: PruneCounts,
    pub elapsed: Duration,
}
