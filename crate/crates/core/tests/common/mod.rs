#![allow(dead_code)]

use coalition_core::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) conditioned on connectivity.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform random cubic graph by the pairing model with rejection.
pub fn random_cubic(rng: &mut StdRng, n: usize) -> Graph {
    assert!(n.is_multiple_of(2) && n >= 4);
    let mut points: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    loop {
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let ok = points.chunks(2).all(|pair| {
            let e = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if e.0 == e.1 || edges.contains(&e) {
                return false;
            }
            edges.push(e);
            true
        });
        if ok {
            return Graph::from_edge_list(n, &edges).unwrap();
        }
    }
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
