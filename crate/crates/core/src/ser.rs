//! Scheduling by edge reversal: at every step all sinks reverse all of their
//! incident edges at once.
//!
//! Starting from an acyclic orientation the dynamics is eventually periodic.
//! On a connected graph every node is a sink the same number `r` of times per
//! period `p`, and `r / p` measures the concurrency the orientation allows.

use alloc::{collections::BTreeMap, vec, vec::Vec};

use crate::{orientation::sinks, AcyclicOrientation, Error, Graph, Rational, Result};

/// One application of the dynamics.
pub fn step(g: &Graph, o: &AcyclicOrientation) -> Result<AcyclicOrientation> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    o.check_graph(g)?;
    let mut is_sink = vec![false; g.node_count()];
    for v in sinks(g, o) {
        is_sink[v] = true;
    }
    let dirs = g
        .edges()
        .iter()
        .zip(o.dirs())
        .map(|(&(u, v), &d)| if is_sink[u] || is_sink[v] { !d } else { d })
        .collect();
    // a sink turned source cannot close a directed cycle
    Ok(AcyclicOrientation::new_unchecked(dirs))
}

/// `2 · 2^|E|`, saturating: more steps than there are orientations.
pub fn default_max_steps(g: &Graph) -> usize {
    1usize
        .checked_shl(g.edge_count() as u32 + 1)
        .filter(|&s| s != 0)
        .unwrap_or(usize::MAX)
}

/// Trajectory of the dynamics up to its first repeated state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerRun {
    pub graph: Graph,
    /// Visited states; the last one equals `states[tail_start]`.
    pub states: Vec<AcyclicOrientation>,
    pub tail_start: usize,
    pub period: usize,
    /// Per node, how many of the `period` periodic states have it as a sink.
    pub ops_per_node: Vec<usize>,
}

impl SerRun {
    pub fn initial(&self) -> &AcyclicOrientation {
        &self.states[0]
    }

    /// The common per-period operation count, if all nodes agree.
    pub fn uniform_rate(&self) -> Option<usize> {
        let first = *self.ops_per_node.first()?;
        self.ops_per_node
            .iter()
            .all(|&r| r == first)
            .then_some(first)
    }
}

pub fn run(g: &Graph, o: &AcyclicOrientation, max_steps: usize) -> Result<SerRun> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    o.check_graph(g)?;
    let mut first_seen: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut states = vec![o.clone()];
    first_seen.insert(o.dirs().to_vec(), 0);
    for steps in 1..=max_steps {
        let next = step(g, states.last().expect("nonempty"))?;
        let seen = first_seen.get(next.dirs()).copied();
        states.push(next);
        if let Some(tail_start) = seen {
            let period = steps - tail_start;
            let mut ops_per_node = vec![0; g.node_count()];
            for state in &states[tail_start..steps] {
                for v in sinks(g, state) {
                    ops_per_node[v] += 1;
                }
            }
            return Ok(SerRun {
                graph: g.clone(),
                states,
                tail_start,
                period,
                ops_per_node,
            });
        }
        first_seen.insert(states[steps].dirs().to_vec(), steps);
    }
    Err(Error::NoPeriod(max_steps))
}

/// Operations per node per period, `r / p`, on a connected graph with a cycle.
pub fn concurrency(run: &SerRun) -> Result<Rational> {
    if !run.graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if run.graph.is_forest() {
        return Err(Error::Forest);
    }
    let r = run.uniform_rate().ok_or(Error::NonUniformRate)?;
    Ok(Rational::new(r as u64, run.period as u64))
}
