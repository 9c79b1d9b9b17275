//! Search machinery shared by the coalition and total-coalition solvers.
//!
//! The two problems differ only in the domination predicate (closed versus
//! open neighborhoods) and in whether a dominating singleton is an acceptable
//! block; [`Rule`] captures both.

use std::time::Instant;

use crate::graph::Graph;
use crate::partition::{Partition, RestrictedGrowth};
use crate::report::{PruneCounts, SearchReport};

pub(crate) trait Rule {
    /// Whether a block consisting of one dominating vertex is acceptable.
    const SINGLETON_MAY_DOMINATE: bool;

    /// Neighborhood mask contributed by vertex `v`.
    fn nbhd(g: &Graph, v: usize) -> u64;

    #[inline]
    fn cover(g: &Graph, bits: u64) -> u64 {
        let mut c = 0;
        let mut rest = bits;
        while rest != 0 {
            c |= Self::nbhd(g, rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        c
    }

    #[inline]
    fn dominates(g: &Graph, bits: u64) -> bool {
        Self::cover(g, bits) == g.full_bits()
    }
}

/// Ordinary domination: closed neighborhoods, dominating singletons allowed.
pub(crate) struct Closed;

impl Rule for Closed {
    const SINGLETON_MAY_DOMINATE: bool = true;

    #[inline]
    fn nbhd(g: &Graph, v: usize) -> u64 {
        g.closed_bits()[v]
    }
}

/// Total domination: open neighborhoods, no dominating block at all.
pub(crate) struct Open;

impl Rule for Open {
    const SINGLETON_MAY_DOMINATE: bool = false;

    #[inline]
    fn nbhd(g: &Graph, v: usize) -> u64 {
        g.open_bits()[v]
    }
}

/// For each block, the index of its first valid partner, `None` for an
/// accepted dominating singleton. `None` overall if some block fails.
pub(crate) fn partners<R: Rule>(g: &Graph, blocks: &[u64]) -> Option<Vec<Option<usize>>> {
    let dom: Vec<bool> = blocks.iter().map(|&b| R::dominates(g, b)).collect();
    let mut out = Vec::with_capacity(blocks.len());
    for (i, &b) in blocks.iter().enumerate() {
        if dom[i] {
            if R::SINGLETON_MAY_DOMINATE && b.count_ones() == 1 {
                out.push(None);
                continue;
            }
            return None;
        }
        let j = (0..blocks.len()).find(|&j| j != i && !dom[j] && R::dominates(g, b | blocks[j]))?;
        out.push(Some(j));
    }
    Some(out)
}

/// Exhaustive search over every partition. Among partitions of maximum
/// order the lexicographically first restricted-growth string wins.
pub(crate) fn exhaustive<R: Rule>(g: &Graph) -> SearchReport<Partition> {
    let start = Instant::now();
    let n = g.order();
    let mut rg = RestrictedGrowth::new(n);
    let mut blocks = Vec::with_capacity(n);
    let mut best: Option<Vec<u8>> = None;
    let mut best_k = 0;
    let mut visited = 0u64;
    let mut rejected = 0u64;
    while rg.advance() {
        visited += 1;
        if rg.block_count() <= best_k {
            continue;
        }
        rg.fill_blocks(&mut blocks);
        if partners::<R>(g, &blocks).is_some() {
            best_k = blocks.len();
            best = Some(rg.current().to_vec());
        } else {
            rejected += 1;
        }
    }
    SearchReport {
        value: best_k,
        certificate: best.map(|a| Partition::from_assignment(&a).expect("enumerator yields restricted growth")),
        nodes_explored: visited,
        prunes: PruneCounts {
            invalid_leaf: rejected,
            ..PruneCounts::default()
        },
        elapsed: start.elapsed(),
    }
}

/// Branch-and-bound over target orders `upper, upper-1, ..., floor`; the
/// first order admitting a valid partition is the answer.
pub(crate) fn top_down<R: Rule>(g: &Graph, upper: usize, floor: usize, lookahead: bool) -> SearchReport<Partition> {
    let start = Instant::now();
    let n = g.order();
    let mut suffix = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] | R::nbhd(g, v);
    }
    let mut nodes = 0;
    let mut prunes = PruneCounts::default();
    for k in (floor.max(1)..=upper.min(n)).rev() {
        let mut s = Branch::<R> {
            g,
            k,
            lookahead,
            suffix: &suffix,
            assignment: vec![0; n],
            members: Vec::with_capacity(k),
            cover: Vec::with_capacity(k),
            nodes: 0,
            prunes: PruneCounts::default(),
            rule: std::marker::PhantomData,
        };
        let found = s.place(0);
        nodes += s.nodes;
        add_prunes(&mut prunes, &s.prunes);
        if found {
            return SearchReport {
                value: k,
                certificate: Some(Partition::from_assignment(&s.assignment).expect("search builds restricted growth")),
                nodes_explored: nodes,
                prunes,
                elapsed: start.elapsed(),
            };
        }
    }
    SearchReport {
        value: 0,
        certificate: None,
        nodes_explored: nodes,
        prunes,
        elapsed: start.elapsed(),
    }
}

fn add_prunes(acc: &mut PruneCounts, p: &PruneCounts) {
    acc.dominating_block += p.dominating_block;
    acc.too_few_blocks += p.too_few_blocks;
    acc.partner_lookahead += p.partner_lookahead;
    acc.invalid_leaf += p.invalid_leaf;
}

struct Branch<'a, R> {
    g: &'a Graph,
    k: usize,
    lookahead: bool,
    suffix: &'a [u64],
    assignment: Vec<u8>,
    members: Vec<u64>,
    cover: Vec<u64>,
    nodes: u64,
    prunes: PruneCounts,
    rule: std::marker::PhantomData<R>,
}

impl<R: Rule> Branch<'_, R> {
    fn place(&mut self, v: usize) -> bool {
        self.nodes += 1;
        let n = self.g.order();
        let used = self.members.len();
        if used + (n - v) < self.k {
            self.prunes.too_few_blocks += 1;
            return false;
        }
        if self.lookahead && v < n && !self.partners_reachable(v) {
            self.prunes.partner_lookahead += 1;
            return false;
        }
        if v == n {
            if partners::<R>(self.g, &self.members).is_some() {
                return true;
            }
            self.prunes.invalid_leaf += 1;
            return false;
        }

        let full = self.g.full_bits();
        let nb = R::nbhd(self.g, v);
        for b in 0..used {
            if self.cover[b] == full {
                // Only an accepted dominating singleton survives to here;
                // growing it would make a non-singleton dominating block.
                self.prunes.dominating_block += 1;
                continue;
            }
            let new_cover = self.cover[b] | nb;
            if new_cover == full && !(R::SINGLETON_MAY_DOMINATE && self.members[b] == 0) {
                self.prunes.dominating_block += 1;
                continue;
            }
            let saved = self.cover[b];
            self.cover[b] = new_cover;
            self.members[b] |= 1 << v;
            self.assignment[v] = b as u8;
            if self.place(v + 1) {
                return true;
            }
            self.members[b] &= !(1 << v);
            self.cover[b] = saved;
        }
        if used < self.k {
            if nb == full && !R::SINGLETON_MAY_DOMINATE {
                self.prunes.dominating_block += 1;
                return false;
            }
            self.members.push(1 << v);
            self.cover.push(nb);
            self.assignment[v] = used as u8;
            if self.place(v + 1) {
                return true;
            }
            self.members.pop();
            self.cover.pop();
        }
        false
    }

    /// Necessary condition: every non-dominating block can still reach a
    /// dominating union with some block that is not itself dominating, using
    /// only vertices that are still unplaced.
    fn partners_reachable(&self, v: usize) -> bool {
        let full = self.g.full_bits();
        let rest = self.suffix[v];
        let used = self.members.len();
        let can_open = used < self.k;
        for i in 0..used {
            let ci = self.cover[i];
            if ci == full {
                continue;
            }
            if can_open && ci | rest == full {
                continue;
            }
            let ok = (0..used).any(|j| j != i && self.cover[j] != full && ci | self.cover[j] | rest == full);
            if !ok {
                return false;
            }
        }
        true
    }
}
