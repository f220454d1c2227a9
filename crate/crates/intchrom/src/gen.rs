//! Seeded random graph generators.

use intchrom_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n.max(1), edges).expect("generated edges are simple")
}

/// Random forest on `n >= 2` nodes with at least one edge; roughly one node
/// in four starts a new tree.
pub fn forest(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 2, "a forest with an edge needs two nodes");
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        if !rng.random_bool(0.25) {
            edges.push((rng.random_range(0..v), v));
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let n = n.max(1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// Connected graph on `n >= 3` nodes with at least one cycle.
pub fn connected_cyclic(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3, "a cycle needs three nodes");
    loop {
        let g = connected(n, p, rng);
        if !g.is_forest() {
            return g;
        }
    }
}
