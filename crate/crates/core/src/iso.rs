//! Pairwise isomorphism testing for small graphs.
//!
//! Both graphs are colored jointly by iterated degree refinement; if the color
//! histograms agree, a backtracking search extends a partial bijection one
//! vertex at a time, only pairing vertices of equal color and checking
//! adjacency against every vertex mapped so far.

use std::collections::HashMap;

use crate::graph::Graph;

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A bijection `map` with `a.has_edge(u, v) == b.has_edge(map[u], map[v])`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, cb) = refine(a, b)?;

    let order = search_order(a, &ca);
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used).then_some(map)
}

/// Joint color refinement. Returns `None` as soon as the color histograms of
/// the two graphs differ.
fn refine(a: &Graph, b: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = a.order();
    let mut ca: Vec<u32> = (0..n).map(|v| a.degree(v) as u32).collect();
    let mut cb: Vec<u32> = (0..n).map(|v| b.degree(v) as u32).collect();
    let mut classes = 0;
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let mut table: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
        let mut relabel = |g: &Graph, colors: &[u32]| -> Vec<u32> {
            (0..n)
                .map(|v| {
                    let mut sig: Vec<u32> = g.open_nbhd(v).iter().map(|w| colors[w]).collect();
                    sig.sort_unstable();
                    let next = table.len() as u32;
                    *table.entry((colors[v], sig)).or_insert(next)
                })
                .collect()
        };
        let na = relabel(a, &ca);
        let nb = relabel(b, &cb);
        ca = na;
        cb = nb;
        let count = table.len();
        if count == classes {
            break;
        }
        classes = count;
    }
    (histogram(&ca) == histogram(&cb)).then_some((ca, cb))
}

fn histogram(colors: &[u32]) -> Vec<(u32, usize)> {
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *counts.entry(c).or_default() += 1;
    }
    let mut h: Vec<_> = counts.into_iter().collect();
    h.sort_unstable();
    h
}

/// Orders the vertices of `a` so each next vertex has as many already-placed
/// neighbors as possible, breaking ties by the size of its color class.
fn search_order(a: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = a.order();
    let class_size = |v: usize| colors.iter().filter(|&&c| c == colors[v]).count();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let links = (a.open_nbhd(v).bits() & placed).count_ones();
                (std::cmp::Reverse(links), class_size(v), v)
            })
            .expect("an unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[u32],
    cb: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for w in 0..b.order() {
        if *used >> w & 1 == 1 || cb[w] != ca[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| a.has_edge(u, x) == b.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[u] = w;
        *used |= 1 << w;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn c4_matches_k4_minus_matching() {
        let k4_minus = Graph::from_edge_list(4, &[(0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert!(is_isomorphic(&Graph::cycle(4).unwrap(), &k4_minus));
    }

    #[test]
    fn k33_is_not_the_prism() {
        assert!(!is_isomorphic(&Graph::complete_bipartite(3, 3).unwrap(), &prism()));
    }

    #[test]
    fn petersen_relabelled() {
        let p = Graph::petersen();
        let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
        let q = p.permuted(&perm).unwrap();
        let map = find_isomorphism(&p, &q).unwrap();
        for (u, v) in p.edges() {
            assert!(q.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn petersen_is_not_the_pentagonal_prism() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
            edges.push((i, 5 + i));
        }
        let prism5 = Graph::from_edge_list(10, &edges).unwrap();
        assert!(!is_isomorphic(&Graph::petersen(), &prism5));
    }

    #[test]
    fn regular_graphs_refinement_cannot_split() {
        // C6 and two triangles: both 2-regular on 6 vertices.
        let two_triangles = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &two_triangles));
    }

    #[test]
    fn different_orders() {
        assert!(!is_isomorphic(&Graph::cycle(4).unwrap(), &Graph::cycle(5).unwrap()));
    }
}
