//! Immutable undirected simple graphs on nodes `0..n`.

use alloc::{collections::BTreeSet, vec, vec::Vec};

use crate::{Error, Result};

/// Undirected simple graph with a canonical edge list.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. The
/// position of an edge in that list is its *edge index*, which orientations
/// use to address per-edge directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut builder = GraphBuilder::new(n)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    /// Cycle on `n >= 3` nodes, `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three nodes");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph")
    }

    /// Disjoint union; nodes of `other` are shifted by `self.node_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs")
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Index of the edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Connected components, each sorted, ordered by their least node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut block = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        block.push(w);
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff the graph has no simple cycle.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Subgraph induced by `nodes`, relabelled `0..nodes.len()` in the given order.
    pub fn induced(&self, nodes: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            if v >= self.n {
                return Err(Error::NodeOutOfRange { node: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(nodes.len(), edges)
    }
}

/// Incremental graph construction with per-edge validation.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoNodes);
        }
        Ok(GraphBuilder {
            n,
            edges: BTreeSet::new(),
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for node in [u, v] {
            if node >= self.n {
                return Err(Error::NodeOutOfRange { node, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        Ok(())
    }

    pub fn build(self) -> Graph {
        let edges: Vec<_> = self.edges.into_iter().collect();
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n: self.n,
            edges,
            adj,
        }
    }
}
