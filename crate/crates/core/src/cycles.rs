//! Simple cycles of undirected graphs and their direction counts under an
//! orientation.

use alloc::{vec, vec::Vec};

use crate::{AcyclicOrientation, Error, Graph, Result};

/// A simple cycle in canonical form.
///
/// The stored sequence starts at the cycle's least node and continues toward
/// the smaller of that node's two cycle neighbors. This order is the cycle's
/// *plus* traversal direction; its reversal is the *minus* direction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleCycle {
    nodes: Vec<usize>,
}

impl SimpleCycle {
    /// Validates `nodes` as a cycle of `g` (any rotation or direction) and
    /// canonicalizes it.
    pub fn new(g: &Graph, nodes: &[usize]) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::InvalidCycle("fewer than three nodes"));
        }
        let mut seen = vec![false; g.node_count()];
        for &v in nodes {
            if v >= g.node_count() {
                return Err(Error::NodeOutOfRange {
                    node: v,
                    n: g.node_count(),
                });
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCycle("repeated node"));
            }
        }
        for i in 0..nodes.len() {
            let (u, v) = (nodes[i], nodes[(i + 1) % nodes.len()]);
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(SimpleCycle {
            nodes: canonicalize(nodes),
        })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Number of edges, equal to the number of nodes.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Consecutive node pairs in the plus direction, wrapping around.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.nodes.len();
        (0..len).map(move |i| (self.nodes[i], self.nodes[(i + 1) % len]))
    }

    /// For each step of the plus traversal: the edge index, and whether the
    /// step runs from the lower-id endpoint to the higher-id one.
    pub fn edge_steps(&self, g: &Graph) -> Result<Vec<(usize, bool)>> {
        self.steps()
            .map(|(u, v)| {
                g.edge_index(u, v)
                    .map(|e| (e, u < v))
                    .ok_or(Error::NotAnEdge(u, v))
            })
            .collect()
    }
}

/// Rotates `nodes` to start at its minimum and reflects it so the second
/// entry is smaller than the last.
pub fn canonicalize(nodes: &[usize]) -> Vec<usize> {
    let len = nodes.len();
    let Some(start) = (0..len).min_by_key(|&i| nodes[i]) else {
        return Vec::new();
    };
    let next = nodes[(start + 1) % len];
    let prev = nodes[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|i| nodes[(start + i) % len]).collect()
    } else {
        (0..len).map(|i| nodes[(start + len - i) % len]).collect()
    }
}

/// Every simple cycle of `g` exactly once, in canonical form, sorted.
///
/// Each cycle is found from its least node by depth-first search through
/// larger nodes only; reflections are dropped by requiring the second node
/// to be smaller than the last. Fails with a cap error instead of returning
/// a partial set.
pub fn enumerate_simple_cycles(g: &Graph, max_cycles: usize) -> Result<Vec<SimpleCycle>> {
    let mut found = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    for anchor in 0..g.node_count() {
        let mut path = vec![anchor];
        on_path[anchor] = true;
        extend(g, anchor, &mut path, &mut on_path, &mut found, max_cycles)?;
        on_path[anchor] = false;
    }
    found.sort_unstable();
    Ok(found)
}

fn extend(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<SimpleCycle>,
    max_cycles: usize,
) -> Result<()> {
    let last = *path.last().expect("path starts at the anchor");
    for &w in g.neighbors(last) {
        if w == anchor && path.len() >= 3 && path[1] < last {
            if found.len() == max_cycles {
                return Err(Error::CapExceeded {
                    what: "simple cycle count",
                    limit: max_cycles,
                });
            }
            found.push(SimpleCycle {
                nodes: path.clone(),
            });
        } else if w > anchor && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, anchor, path, on_path, found, max_cycles)?;
            path.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

/// `(m_plus, m_minus)`: how many cycle edges the orientation directs along the
/// plus traversal, and how many against it.
pub fn direction_counts(
    g: &Graph,
    c: &SimpleCycle,
    o: &AcyclicOrientation,
) -> Result<(usize, usize)> {
    o.check_graph(g)?;
    let steps = c.edge_steps(g)?;
    Ok(counts_from_steps(&steps, o.dirs()))
}

pub(crate) fn counts_from_steps(steps: &[(usize, bool)], dirs: &[bool]) -> (usize, usize) {
    let plus = steps.iter().filter(|&&(e, up)| dirs[e] == up).count();
    (plus, steps.len() - plus)
}
