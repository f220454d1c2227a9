//! Acyclic orientations, their enumeration, and longest directed paths.

use alloc::{collections::VecDeque, vec, vec::Vec};

use crate::{Error, Graph, Result};

/// Direction bit per canonical edge: `true` sends `(u, v)` from `u` to `v`
/// (lower id to higher id), `false` from `v` to `u`. The induced digraph
/// is guaranteed acyclic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AcyclicOrientation {
    dirs: Vec<bool>,
}

impl AcyclicOrientation {
    pub fn new(g: &Graph, dirs: Vec<bool>) -> Result<Self> {
        if is_acyclic(g, &dirs)? {
            Ok(AcyclicOrientation { dirs })
        } else {
            Err(Error::Cyclic)
        }
    }

    pub(crate) fn new_unchecked(dirs: Vec<bool>) -> Self {
        AcyclicOrientation { dirs }
    }

    /// Every edge from its lower-id endpoint to its higher-id endpoint.
    pub fn increasing(g: &Graph) -> Self {
        AcyclicOrientation {
            dirs: vec![true; g.edge_count()],
        }
    }

    /// Orientation given as one directed pair `(from, to)` per edge, in any order.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != g.edge_count() {
            return Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: arcs.len(),
            });
        }
        let mut dirs = vec![None; g.edge_count()];
        for &(from, to) in arcs {
            let e = g.edge_index(from, to).ok_or(Error::NotAnEdge(from, to))?;
            if dirs[e].replace(from < to).is_some() {
                let (u, v) = g.edges()[e];
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Self::new(g, dirs.into_iter().map(|d| d.unwrap_or(true)).collect())
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dirs
    }

    pub fn edge_count(&self) -> usize {
        self.dirs.len()
    }

    /// `(from, to)` of edge `e`.
    pub fn arc(&self, g: &Graph, e: usize) -> (usize, usize) {
        let (u, v) = g.edges()[e];
        if self.dirs[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Directed pairs in canonical edge order.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        (0..self.dirs.len()).map(|e| self.arc(g, e)).collect()
    }

    /// True iff the orientation sends `from -> to` along an edge.
    pub fn points(&self, g: &Graph, from: usize, to: usize) -> Option<bool> {
        g.edge_index(from, to).map(|e| self.dirs[e] == (from < to))
    }

    pub fn reversed(&self) -> Self {
        AcyclicOrientation {
            dirs: self.dirs.iter().map(|d| !d).collect(),
        }
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.dirs.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: self.dirs.len(),
            })
        }
    }
}

/// True iff the digraph induced by `dirs` has a topological order.
pub fn is_acyclic(g: &Graph, dirs: &[bool]) -> Result<bool> {
    if dirs.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            found: dirs.len(),
        });
    }
    Ok(Digraph::from_dirs(g, dirs).topological_order().is_some())
}

/// All acyclic orientations of `g`, in lexicographic order of their
/// direction vectors (`false < true`, edge 0 most significant).
///
/// Fails when `g` has more than `max_edges` edges.
pub fn enumerate_acyclic(g: &Graph, max_edges: usize) -> Result<AcyclicOrientations<'_>> {
    let m = g.edge_count();
    let limit = max_edges.min(63);
    if m > limit {
        return Err(Error::CapExceeded {
            what: "edge count",
            limit,
        });
    }
    Ok(AcyclicOrientations {
        graph: g,
        next: 0,
        end: 1u64 << m,
        dirs: vec![false; m],
    })
}

/// Iterator returned by [`enumerate_acyclic`].
#[derive(Debug, Clone)]
pub struct AcyclicOrientations<'g> {
    graph: &'g Graph,
    next: u64,
    end: u64,
    dirs: Vec<bool>,
}

impl Iterator for AcyclicOrientations<'_> {
    type Item = AcyclicOrientation;

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.dirs.len();
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            for (e, d) in self.dirs.iter_mut().enumerate() {
                *d = (mask >> (m - 1 - e)) & 1 == 1;
            }
            if Digraph::from_dirs(self.graph, &self.dirs)
                .topological_order()
                .is_some()
            {
                return Some(AcyclicOrientation::new_unchecked(self.dirs.clone()));
            }
        }
        None
    }
}

/// Nodes with no incoming edge. Isolated nodes are both sources and sinks.
pub fn sources(g: &Graph, o: &AcyclicOrientation) -> Vec<usize> {
    let mut indeg = vec![0usize; g.node_count()];
    for e in 0..g.edge_count() {
        indeg[o.arc(g, e).1] += 1;
    }
    (0..g.node_count()).filter(|&v| indeg[v] == 0).collect()
}

/// Nodes with no outgoing edge. Isolated nodes are both sources and sinks.
pub fn sinks(g: &Graph, o: &AcyclicOrientation) -> Vec<usize> {
    let mut outdeg = vec![0usize; g.node_count()];
    for e in 0..g.edge_count() {
        outdeg[o.arc(g, e).0] += 1;
    }
    (0..g.node_count()).filter(|&v| outdeg[v] == 0).collect()
}

/// Directed graph on nodes `0..n` given by sorted successor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    succ: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut succ = vec![Vec::new(); n];
        for (u, v) in arcs {
            succ[u].push(v);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        Digraph { succ }
    }

    pub fn from_orientation(g: &Graph, o: &AcyclicOrientation) -> Self {
        Self::from_dirs(g, o.dirs())
    }

    pub(crate) fn from_dirs(g: &Graph, dirs: &[bool]) -> Self {
        let arcs = g
            .edges()
            .iter()
            .zip(dirs)
            .map(|(&(u, v), &d)| if d { (u, v) } else { (v, u) });
        Self::new(g.node_count(), arcs)
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Kahn's algorithm, smallest ready node first; `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.succ.len();
        let mut indeg = vec![0usize; n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut ready: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop_front() {
            order.push(u);
            for &v in &self.succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push_back(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// For each node, the node count of the longest directed path starting there.
    pub fn longest_from(&self) -> Result<Vec<usize>> {
        let order = self.topological_order().ok_or(Error::Cyclic)?;
        let mut down = vec![1usize; self.succ.len()];
        for &u in order.iter().rev() {
            down[u] = 1 + self.succ[u].iter().map(|&v| down[v]).max().unwrap_or(0);
        }
        Ok(down)
    }
}

/// Node sequence whose consecutive pairs are arcs of some digraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedPath {
    nodes: Vec<usize>,
}

impl DirectedPath {
    pub fn new(d: &Digraph, nodes: Vec<usize>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        for &v in &nodes {
            if v >= d.node_count() {
                return Err(Error::NodeOutOfRange {
                    node: v,
                    n: d.node_count(),
                });
            }
        }
        for w in nodes.windows(2) {
            if !d.has_arc(w[0], w[1]) {
                return Err(Error::NotAnEdge(w[0], w[1]));
            }
        }
        Ok(DirectedPath { nodes })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Number of nodes on the path.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Node count of a longest directed path, with the lexicographically least
/// node sequence among all longest paths as witness.
pub fn longest_path(d: &Digraph) -> Result<(usize, DirectedPath)> {
    let down = d.longest_from()?;
    let best = down.iter().copied().max().unwrap_or(0);
    let Some(mut v) = down.iter().position(|&c| c == best) else {
        return Ok((0, DirectedPath { nodes: Vec::new() }));
    };
    let mut nodes = vec![v];
    while down[v] > 1 {
        v = *d
            .successors(v)
            .iter()
            .find(|&&w| down[w] + 1 == down[v])
            .expect("longest-path level has a continuation");
        nodes.push(v);
    }
    Ok((best, DirectedPath { nodes }))
}
