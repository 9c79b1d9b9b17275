mod common;

use coalition_core::domination::is_minimal_dominating;
use coalition_core::partition::RestrictedGrowth;
use coalition_core::*;
use proptest::prelude::*;

fn graph_on(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_on(n, &bits))
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(1, max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn no_isolated(g: &Graph) -> bool {
    g.degree_profile().min_degree > 0
}

/// Largest number of blocks in a partition of V into dominating sets, by
/// scanning every set partition.
fn domatic_by_scan(g: &Graph) -> usize {
    let mut rg = RestrictedGrowth::new(g.order());
    let mut blocks = Vec::new();
    let mut best = 0;
    while rg.advance() {
        rg.fill_blocks(&mut blocks);
        let all = blocks
            .iter()
            .all(|&b| is_dominating(g, VertexSet::from_bits(b, g.order()).unwrap()));
        if all {
            best = best.max(blocks.len());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacency_is_symmetric(g in arb_graph(1, 20)) {
        for u in 0..g.order() {
            prop_assert!(!g.open_nbhd(u).contains(u));
            prop_assert!(g.closed_nbhd(u).contains(u));
            prop_assert_eq!(g.closed_nbhd(u).len(), g.open_nbhd(u).len() + 1);
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(1, 64)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn isomorphism_is_permutation_invariant((g, perm) in arb_graph_with_perm(12)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert!(is_isomorphic(&g, &g));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&h, &g));
    }

    #[test]
    fn isomorphism_respects_invariants(a in arb_graph(7, 7), b in arb_graph(7, 7)) {
        let degrees = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        let differ = degrees(&a) != degrees(&b)
            || a.triangle_count() != b.triangle_count()
            || a.girth() != b.girth();
        if differ {
            prop_assert!(!is_isomorphic(&a, &b));
        }
        if is_isomorphic(&a, &b) {
            prop_assert_eq!(degrees(&a), degrees(&b));
        }
    }

    #[test]
    fn domination_is_monotone(g in arb_graph(1, 16), s in any::<u64>(), extra in any::<u64>()) {
        let n = g.order();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let small = VertexSet::from_bits(s & mask, n).unwrap();
        let big = VertexSet::from_bits((s | extra) & mask, n).unwrap();
        if is_dominating(&g, small) {
            prop_assert!(is_dominating(&g, big));
        }
        if no_isolated(&g) && is_total_dominating(&g, small).unwrap() {
            prop_assert!(is_total_dominating(&g, big).unwrap());
        }
    }

    #[test]
    fn no_singleton_totally_dominates(g in arb_graph(2, 16)) {
        prop_assume!(no_isolated(&g));
        for v in 0..g.order() {
            prop_assert!(!is_total_dominating(&g, VertexSet::singleton(v, g.order())).unwrap());
        }
    }

    #[test]
    fn dominating_set_enumeration_matches_scan(g in arb_graph(1, 10), k in 0usize..=10) {
        let n = g.order();
        let listed = enumerate_dominating_sets(&g, k);
        let scanned: Vec<VertexSet> = (0..1u64 << n)
            .map(|b| VertexSet::from_bits(b, n).unwrap())
            .filter(|s| s.len() == k && is_dominating(&g, *s))
            .collect();
        prop_assert_eq!(listed, scanned);
    }

    #[test]
    fn gamma_is_smallest_minimal_set(g in arb_graph(1, 12)) {
        let minimal = enumerate_minimal_dominating_sets(&g).unwrap();
        prop_assert!(minimal.iter().all(|&s| is_minimal_dominating(&g, s)));
        let smallest = minimal.iter().map(|s| s.len()).min().unwrap();
        prop_assert_eq!(domination_number(&g), smallest);
    }

    #[test]
    fn domatic_number_matches_scan(g in arb_graph(1, 8)) {
        let (d, part) = domatic_number(&g);
        prop_assert!(part.validate(&g));
        prop_assert_eq!(part.len(), d);
        prop_assert!(d <= g.degree_profile().min_degree + 1);
        prop_assert_eq!(d, domatic_by_scan(&g));
    }

    #[test]
    fn splitting_minimal_dominating_sets(g in arb_graph(1, 10)) {
        for d in enumerate_minimal_dominating_sets(&g).unwrap() {
            if d.len() < 2 {
                continue;
            }
            let members = d.to_vec();
            // Every nonempty proper subset A, with B = D \ A.
            for pick in 1..(1u64 << members.len()) - 1 {
                let a = VertexSet::from_vertices(
                    members.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &v)| v),
                    g.order(),
                ).unwrap();
                let b = d.difference(a);
                prop_assert!(is_coalition(&g, a, b).unwrap());
            }
        }
    }

    #[test]
    fn coalition_solutions_are_certified(g in arb_graph(1, 8)) {
        let r = coalition_number_pruned(&g).unwrap();
        let cert = r.certificate.as_ref().unwrap();
        prop_assert!(verify_certificate(&g, cert));
        prop_assert_eq!(cert.order(), r.value);
        prop_assert!(coalition_bounds(&g).contains(r.value));
        let cg = coalition_graph(&g, &cert.partition).unwrap();
        prop_assert!(cg.max_degree() <= g.degree_profile().max_degree + 1);
        let again = coalition_number_pruned(&g).unwrap();
        prop_assert_eq!(again.certificate, r.certificate);
    }

    #[test]
    fn splitting_construction_is_a_lower_bound(g in arb_graph(1, 8)) {
        if let Some(p) = split_domatic_construction(&g) {
            prop_assert!(is_c_partition(&g, &p).is_some());
            prop_assert!(p.len() <= coalition_number_pruned(&g).unwrap().value);
        }
    }

    #[test]
    fn total_coalition_solutions_are_certified(g in arb_graph(2, 8)) {
        prop_assume!(no_isolated(&g));
        let r = total_coalition_number(&g, Method::Pruned).unwrap();
        match &r.certificate {
            Some(c) => {
                prop_assert!(verify_total_certificate(&g, c));
                prop_assert_eq!(c.order(), r.value);
                for b in c.partition.blocks() {
                    prop_assert!(!is_total_dominating(&g, *b).unwrap());
                }
            }
            None => prop_assert_eq!(r.value, 0),
        }
    }
}

#[test]
fn petersen_relabelings_stay_isomorphic() {
    let mut rng = common::rng(11);
    let p = Graph::petersen();
    for _ in 0..50 {
        let perm = common::random_permutation(&mut rng, 10);
        assert!(is_isomorphic(&p, &p.permuted(&perm).unwrap()));
    }
}

#[test]
fn random_cubic_graph6_round_trip() {
    let mut rng = common::rng(5);
    for n in (4..=20).step_by(2) {
        let g = common::random_cubic(&mut rng, n);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn petersen_dominating_triple_exists_by_brute_force() {
    let p = Graph::petersen();
    let mut found = 0;
    for a in 0..10 {
        for b in a + 1..10 {
            for c in b + 1..10 {
                let s = VertexSet::from_vertices([a, b, c], 10).unwrap();
                let covered = (0..10).all(|u| [a, b, c].iter().any(|&v| u == v || p.has_edge(u, v)));
                assert_eq!(is_dominating(&p, s), covered);
                found += covered as usize;
            }
        }
    }
    assert!(found > 0);
    assert_eq!(enumerate_dominating_sets(&p, 3).len(), found);
}
