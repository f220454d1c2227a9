#![allow(dead_code)]

use std::collections::BTreeSet;

use intchrom_core::Graph;
use proptest::prelude::*;

/// Random simple graph on `1..=max_n` nodes with each pair an edge with probability 1/2.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on exactly `n` nodes.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let pairs = n * (n - 1) / 2;
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u32..1 << pairs {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        let g = graph_from_bits(n, &bits);
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            reps.push(g);
        }
    }
    reps
}
