//! The interleaved multichromatic number and the chromatic number, both as
//! optimizations over acyclic orientations.
//!
//! For a graph that is not a forest,
//!
//! ```text
//! chi_int_star(G) = min over acyclic ω of  max over simple cycles κ of  |κ| / min(m⁺(κ,ω), m⁻(κ,ω))
//! ```
//!
//! and forests (with at least one edge) have value 2. The chromatic number is
//! the least, over acyclic ω, of the node count of ω's longest directed path.

use alloc::vec::Vec;

use crate::{
    cycles::{self, counts_from_steps},
    orientation::{enumerate_acyclic, longest_path},
    AcyclicOrientation, Digraph, Error, Graph, Limits, Rational, Result, SimpleCycle,
};

/// Value of the interleaved multichromatic number with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntWitness {
    pub value: Rational,
    /// Minimizing orientation. For forests, the lexicographically least
    /// orientation in which every node is a source or a sink.
    pub orientation: AcyclicOrientation,
    /// Cycle attaining the maximum under `orientation`; `None` for forests.
    pub critical_cycle: Option<SimpleCycle>,
    /// `min(m⁺, m⁻)` of the critical cycle under `orientation`.
    pub suggested_k: Option<usize>,
    /// Number of acyclic orientations examined.
    pub orientations_scanned: usize,
    /// Number of simple cycles of the graph.
    pub cycle_count: usize,
}

impl IntWitness {
    pub fn is_forest(&self) -> bool {
        self.critical_cycle.is_none()
    }
}

/// Ratio `size / min(m⁺, m⁻)` kept unreduced so comparisons are a single
/// cross-multiplication.
#[derive(Debug, Clone, Copy)]
struct Ratio {
    size: u64,
    split: u64,
}

impl Ratio {
    fn exceeds(self, other: Ratio) -> bool {
        u128::from(self.size) * u128::from(other.split)
            > u128::from(other.size) * u128::from(self.split)
    }

    fn reaches(self, other: Ratio) -> bool {
        !other.exceeds(self)
    }

    fn value(self) -> Rational {
        Rational::new(self.size, self.split)
    }
}

struct Scored {
    ratio: Ratio,
    cycle: usize,
}

/// Largest `|κ| / min(m⁺, m⁻)` over `cycles`, with the first maximizing cycle
/// (cycles are expected in canonical order).
pub fn orientation_score(
    g: &Graph,
    o: &AcyclicOrientation,
    cycles: &[SimpleCycle],
) -> Result<(Rational, SimpleCycle)> {
    o.check_graph(g)?;
    if !crate::orientation::is_acyclic(g, o.dirs())? {
        return Err(Error::Cyclic);
    }
    let steps = cycle_steps(g, cycles)?;
    let scored = score(&steps, o.dirs(), None).ok_or(Error::NoCycles)?;
    Ok((scored.ratio.value(), cycles[scored.cycle].clone()))
}

fn cycle_steps(g: &Graph, cycles: &[SimpleCycle]) -> Result<Vec<Vec<(usize, bool)>>> {
    cycles.iter().map(|c| c.edge_steps(g)).collect()
}

/// Running max over cycles; gives up (returns `None`) once the max reaches `bound`.
fn score(steps: &[Vec<(usize, bool)>], dirs: &[bool], bound: Option<Ratio>) -> Option<Scored> {
    let mut best: Option<Scored> = None;
    for (i, cycle) in steps.iter().enumerate() {
        let (plus, minus) = counts_from_steps(cycle, dirs);
        let ratio = Ratio {
            size: cycle.len() as u64,
            split: plus.min(minus) as u64,
        };
        if best.as_ref().is_none_or(|b| ratio.exceeds(b.ratio)) {
            if bound.is_some_and(|bound| ratio.reaches(bound)) {
                return None;
            }
            best = Some(Scored { ratio, cycle: i });
        }
    }
    best
}

/// The interleaved multichromatic number of `g`.
///
/// Ties between orientations go to the lexicographically least direction
/// vector, ties between cycles to the canonically least cycle.
pub fn chi_int_star(g: &Graph, limits: &Limits) -> Result<IntWitness> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    if g.is_forest() {
        return Ok(IntWitness {
            value: Rational::from_integer(2),
            orientation: bipartite_orientation(g),
            critical_cycle: None,
            suggested_k: None,
            orientations_scanned: 0,
            cycle_count: 0,
        });
    }
    let cycles = cycles::enumerate_simple_cycles(g, limits.max_cycles)?;
    let steps = cycle_steps(g, &cycles)?;
    let mut best: Option<(Scored, AcyclicOrientation)> = None;
    let mut scanned = 0;
    for o in enumerate_acyclic(g, limits.max_edges)? {
        scanned += 1;
        let bound = best.as_ref().map(|(s, _)| s.ratio);
        if let Some(s) = score(&steps, o.dirs(), bound) {
            best = Some((s, o));
        }
    }
    let (scored, orientation) = best.expect("a graph with a cycle has acyclic orientations");
    let critical = cycles[scored.cycle].clone();
    Ok(IntWitness {
        value: scored.ratio.value(),
        orientation,
        critical_cycle: Some(critical),
        suggested_k: Some(scored.ratio.split as usize),
        orientations_scanned: scanned,
        cycle_count: cycles.len(),
    })
}

/// Orients a forest from one side of its bipartition to the other, choosing
/// per component the side that makes its first canonical edge `false`.
fn bipartite_orientation(g: &Graph) -> AcyclicOrientation {
    let mut side = alloc::vec![false; g.node_count()];
    for block in g.components() {
        let mut stack = alloc::vec![block[0]];
        let mut seen = alloc::collections::BTreeSet::from([block[0]]);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if seen.insert(w) {
                    side[w] = !side[v];
                    stack.push(w);
                }
            }
        }
    }
    // the block's first edge starts at block[0], whose side is false
    let dirs = g.edges().iter().map(|&(u, _)| side[u]).collect();
    AcyclicOrientation::new_unchecked(dirs)
}

/// The chromatic number as the least longest-path node count over acyclic
/// orientations, with the lexicographically least minimizing orientation.
pub fn chi_via_orientations(g: &Graph, limits: &Limits) -> Result<(usize, AcyclicOrientation)> {
    let mut best: Option<(usize, AcyclicOrientation)> = None;
    for o in enumerate_acyclic(g, limits.max_edges)? {
        let (count, _) = longest_path(&Digraph::from_orientation(g, &o))?;
        if best.as_ref().is_none_or(|(b, _)| count < *b) {
            best = Some((count, o));
        }
    }
    Ok(best.expect("every graph has an acyclic orientation"))
}
