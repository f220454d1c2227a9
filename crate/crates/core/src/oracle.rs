//! Brute-force reference implementations for cross-checking at tiny sizes.
//!
//! These deliberately avoid the algorithms used elsewhere in the crate:
//! colorings are searched directly instead of through orientations, cycles
//! are found by permuting node subsets instead of by depth-first search, and
//! acyclicity is tested by directed DFS instead of topological sorting.

use alloc::{collections::BTreeSet, vec, vec::Vec};

use crate::{Error, Graph, KTupleColoring, Result, SimpleCycle};

pub const MAX_CHI_K_NODES: usize = 6;
pub const MAX_CHI_K_K: usize = 3;
pub const MAX_CHROMATIC_NODES: usize = 10;
pub const MAX_CYCLE_NODES: usize = 8;
pub const MAX_ACYCLIC_EDGES: usize = 12;

fn cap(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::CapExceeded { what, limit })
    } else {
        Ok(())
    }
}

/// Size of a largest clique, by checking every node subset.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.node_count();
    (0u32..1 << n)
        .filter(|&mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            members
                .iter()
                .enumerate()
                .all(|(a, &u)| members[a + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Least palette of a (plain or interleaved) `k`-tuple coloring.
pub fn brute_chi_k(g: &Graph, k: usize, interleaved: bool) -> Result<usize> {
    Ok(brute_k_coloring(g, k, interleaved)?.palette())
}

/// A palette-minimal (plain or interleaved) `k`-tuple coloring found by
/// raising the palette from `k·ω(G)` and backtracking over `k`-subsets.
pub fn brute_k_coloring(g: &Graph, k: usize, interleaved: bool) -> Result<KTupleColoring> {
    cap("node count", g.node_count(), MAX_CHI_K_NODES)?;
    cap("k", k, MAX_CHI_K_K)?;
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let mut palette = k * clique_number(g).max(1);
    loop {
        let mut assigned: Vec<Vec<usize>> = Vec::with_capacity(g.node_count());
        if assign(g, k, palette, interleaved, &mut assigned) {
            return KTupleColoring::new(g, k, assigned);
        }
        palette += 1;
    }
}

fn assign(
    g: &Graph,
    k: usize,
    palette: usize,
    interleaved: bool,
    assigned: &mut Vec<Vec<usize>>,
) -> bool {
    let v = assigned.len();
    if v == g.node_count() {
        return true;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    if k > palette {
        return false;
    }
    loop {
        let compatible = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w < v)
            .all(|&w| compatible(&subset, &assigned[w], interleaved));
        if compatible {
            assigned.push(subset.clone());
            if assign(g, k, palette, interleaved, assigned) {
                return true;
            }
            assigned.pop();
        }
        if !next_combination(&mut subset, palette) {
            return false;
        }
    }
}

/// Advances an ascending `k`-subset of `0..palette` in lexicographic order.
fn next_combination(subset: &mut [usize], palette: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < palette - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn compatible(a: &[usize], b: &[usize], interleaved: bool) -> bool {
    if a.iter().any(|c| b.contains(c)) {
        return false;
    }
    if !interleaved {
        return true;
    }
    // merged in increasing order, the owners must alternate
    let mut merged: Vec<(usize, bool)> = a
        .iter()
        .map(|&c| (c, true))
        .chain(b.iter().map(|&c| (c, false)))
        .collect();
    merged.sort_unstable();
    merged.windows(2).all(|w| w[0].1 != w[1].1)
}

/// Chromatic number by backtracking with an increasing color budget.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    cap("node count", g.node_count(), MAX_CHROMATIC_NODES)?;
    let mut budget = 1;
    loop {
        let mut colors = vec![usize::MAX; g.node_count()];
        if color_from(g, 0, budget, &mut colors) {
            return Ok(budget);
        }
        budget += 1;
    }
}

fn color_from(g: &Graph, v: usize, budget: usize, colors: &mut [usize]) -> bool {
    if v == g.node_count() {
        return true;
    }
    let highest_used = colors[..v].iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..budget.min(highest_used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_from(g, v + 1, budget, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// All simple cycles, by testing every ordering of every node subset.
pub fn brute_cycles(g: &Graph) -> Result<Vec<SimpleCycle>> {
    let n = g.node_count();
    cap("node count", n, MAX_CYCLE_NODES)?;
    let mut found = BTreeSet::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 3 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut rest = members[1..].to_vec();
        permute(&mut rest, 0, &mut |order| {
            let closes = |u: usize, v: usize| g.has_edge(u, v);
            let first = members[0];
            let ring = core::iter::once(first).chain(order.iter().copied());
            let seq: Vec<usize> = ring.collect();
            let is_cycle = (0..seq.len()).all(|i| closes(seq[i], seq[(i + 1) % seq.len()]));
            if is_cycle {
                found.insert(SimpleCycle::new(g, &seq).expect("verified cycle"));
            }
        });
    }
    Ok(found.into_iter().collect())
}

fn permute(items: &mut [usize], at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

/// Number of direction vectors whose digraph has no directed cycle, decided
/// by three-color depth-first search.
pub fn brute_acyclic_count(g: &Graph) -> Result<u64> {
    let m = g.edge_count();
    cap("edge count", m, MAX_ACYCLIC_EDGES)?;
    let n = g.node_count();
    let mut count = 0;
    for mask in 0u32..1 << m {
        let mut out = vec![Vec::new(); n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                out[u].push(v);
            } else {
                out[v].push(u);
            }
        }
        let mut state = vec![0u8; n];
        if (0..n).all(|v| state[v] != 0 || !dfs_finds_cycle(&out, v, &mut state)) {
            count += 1;
        }
    }
    Ok(count)
}

// state: 0 unvisited, 1 on stack, 2 done
fn dfs_finds_cycle(out: &[Vec<usize>], v: usize, state: &mut [u8]) -> bool {
    state[v] = 1;
    for &w in &out[v] {
        let found = match state[w] {
            0 => dfs_finds_cycle(out, w, state),
            1 => true,
            _ => false,
        };
        if found {
            return true;
        }
    }
    state[v] = 2;
    false
}
