//! The pruned solvers must agree with exhaustive enumeration.

mod common;

use coalition_core::*;

fn solvers() -> [(CoalitionSolver, TotalCoalitionSolver); 2] {
    [true, false].map(|lookahead| {
        (
            CoalitionSolver {
                partner_lookahead: lookahead,
                ..CoalitionSolver::default()
            },
            TotalCoalitionSolver {
                partner_lookahead: lookahead,
                ..TotalCoalitionSolver::default()
            },
        )
    })
}

fn check(g: &Graph) {
    let oracle = coalition_number_oracle(g).unwrap();
    let total_oracle = total_coalition_number(g, Method::Oracle).unwrap();
    for (cs, ts) in solvers() {
        let pruned = cs.pruned(g).unwrap();
        assert_eq!(pruned.value, oracle.value, "{g:?} lookahead={}", cs.partner_lookahead);
        assert_eq!(pruned.certificate, oracle.certificate, "{g:?}");
        let total = ts.solve(g, Method::Pruned).unwrap();
        assert_eq!(
            total.value, total_oracle.value,
            "{g:?} lookahead={}",
            ts.partner_lookahead
        );
        assert_eq!(total.certificate, total_oracle.certificate, "{g:?}");
    }
}

#[test]
fn random_connected_graphs() {
    let mut rng = common::rng(2024);
    let mut count = 0;
    for n in 2..=8 {
        for p in [0.25, 0.4, 0.6, 0.8] {
            for _ in 0..5 {
                check(&common::random_connected(&mut rng, n, p));
                count += 1;
            }
        }
    }
    assert!(count >= 100);
}

#[test]
fn catalog_graphs() {
    for e in all_catalogs().unwrap() {
        check(&e.graph);
    }
}

#[test]
fn named_graphs() {
    for g in [
        Graph::complete(5).unwrap(),
        Graph::cycle(7).unwrap(),
        Graph::path(6).unwrap(),
        Graph::complete_bipartite(2, 5).unwrap(),
        Graph::complete(2).unwrap(),
    ] {
        check(&g);
    }
}

#[test]
fn disconnected_graphs_with_full_components() {
    // Graphs with isolated vertices skip the total-coalition half.
    let g = Graph::from_edge_list(5, &[(0, 1), (2, 3)]).unwrap();
    let oracle = coalition_number_oracle(&g).unwrap();
    let pruned = coalition_number_pruned(&g).unwrap();
    assert_eq!(oracle.value, pruned.value);
    assert_eq!(oracle.certificate, pruned.certificate);
}
