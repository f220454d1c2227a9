//! Lexicographic products `G^k = G[K_k]`, layered orientations, and the
//! correspondence between interleaved `k`-tuple colorings of `G` and
//! monotonic colorings of `G^k`.
//!
//! Product nodes are pairs `(i, layer)` with `layer` in `1..=k`, flattened to
//! the id `i * k + (layer - 1)`.

use alloc::{collections::BTreeSet, vec, vec::Vec};

use crate::{
    orientation::{enumerate_acyclic, longest_path},
    AcyclicOrientation, Digraph, DirectedPath, Error, Graph, Limits, Result, SimpleCycle,
};

/// Edge count of `G^k`: `|E| k² + n k(k-1)/2`.
pub fn product_edge_count(g: &Graph, k: usize) -> Option<usize> {
    let k2 = k.checked_mul(k)?;
    let cross = g.edge_count().checked_mul(k2)?;
    let within = g.node_count().checked_mul(k)?.checked_mul(k - 1)? / 2;
    cross.checked_add(within)
}

fn check_product_size(g: &Graph, k: usize, limits: &Limits) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let cap = Error::CapExceeded {
        what: "product edge count",
        limit: limits.max_product_edges,
    };
    match product_edge_count(g, k) {
        Some(m) if m <= limits.max_product_edges => Ok(()),
        _ => Err(cap),
    }
}

/// `G^k`: `k` copies of each node, complete among copies of one node and
/// complete bipartite between the copies of adjacent nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    base: Graph,
    k: usize,
    graph: Graph,
}

impl ProductGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The product as a plain graph on `n * k` nodes.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn node(&self, i: usize, layer: usize) -> usize {
        product_node(self.k, i, layer)
    }

    /// `(base node, layer)` of a product node.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        locate(self.k, v)
    }
}

fn product_node(k: usize, i: usize, layer: usize) -> usize {
    debug_assert!((1..=k).contains(&layer));
    i * k + layer - 1
}

fn locate(k: usize, v: usize) -> (usize, usize) {
    (v / k, v % k + 1)
}

pub fn build_product(g: &Graph, k: usize, limits: &Limits) -> Result<ProductGraph> {
    check_product_size(g, k, limits)?;
    let mut edges = Vec::with_capacity(product_edge_count(g, k).unwrap_or(0));
    for i in 0..g.node_count() {
        for a in 1..=k {
            for b in a + 1..=k {
                edges.push((product_node(k, i, a), product_node(k, i, b)));
            }
        }
    }
    for &(u, v) in g.edges() {
        for a in 1..=k {
            for b in 1..=k {
                edges.push((product_node(k, u, a), product_node(k, v, b)));
            }
        }
    }
    let graph = Graph::new(g.node_count() * k, edges)?;
    Ok(ProductGraph {
        base: g.clone(),
        k,
        graph,
    })
}

/// Arcs of the layered orientation of `G^k` induced by `o`: every layer is
/// oriented like `o`, every other edge runs from the higher layer down.
pub fn layered_digraph(g: &Graph, o: &AcyclicOrientation, k: usize) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..g.node_count() {
        for high in 2..=k {
            for low in 1..high {
                arcs.push((product_node(k, i, high), product_node(k, i, low)));
            }
        }
    }
    for e in 0..g.edge_count() {
        let (from, to) = o.arc(g, e);
        for layer in 1..=k {
            arcs.push((product_node(k, from, layer), product_node(k, to, layer)));
        }
        for high in 2..=k {
            for low in 1..high {
                arcs.push((product_node(k, from, high), product_node(k, to, low)));
                arcs.push((product_node(k, to, high), product_node(k, from, low)));
            }
        }
    }
    Digraph::new(g.node_count() * k, arcs)
}

/// The layered orientation of `G^k` that copies a base orientation into every layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredOrientation {
    product: ProductGraph,
    base_orientation: AcyclicOrientation,
    orientation: AcyclicOrientation,
}

impl LayeredOrientation {
    pub fn product(&self) -> &ProductGraph {
        &self.product
    }

    pub fn base_orientation(&self) -> &AcyclicOrientation {
        &self.base_orientation
    }

    /// The orientation as direction bits over the product's canonical edges.
    pub fn orientation(&self) -> &AcyclicOrientation {
        &self.orientation
    }

    pub fn digraph(&self) -> Digraph {
        Digraph::from_orientation(self.product.graph(), &self.orientation)
    }
}

pub fn layered_orientation(
    g: &Graph,
    o: &AcyclicOrientation,
    k: usize,
    limits: &Limits,
) -> Result<LayeredOrientation> {
    o.check_graph(g)?;
    let product = build_product(g, k, limits)?;
    let dirs = product
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let ((i, la), (j, lb)) = (locate(k, a), locate(k, b));
            if la != lb {
                la > lb
            } else {
                // same layer, so i < j and (i, j) is a base edge
                o.points(g, i, j)
                    .expect("same-layer product edge is a base edge")
            }
        })
        .collect();
    let orientation = AcyclicOrientation::new(product.graph(), dirs)?;
    Ok(LayeredOrientation {
        product,
        base_orientation: o.clone(),
        orientation,
    })
}

/// Interleaved `k`-chromatic number: the least longest-path node count over
/// the layered orientations of `G^k`, scanned through the orientations of `G`.
pub fn chi_int_k(g: &Graph, k: usize, limits: &Limits) -> Result<(usize, LayeredOrientation)> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    check_product_size(g, k, limits)?;
    let mut best: Option<(usize, AcyclicOrientation)> = None;
    for o in enumerate_acyclic(g, limits.max_edges)? {
        let (count, _) = longest_path(&layered_digraph(g, &o, k))?;
        if best.as_ref().is_none_or(|(b, _)| count < *b) {
            best = Some((count, o));
        }
    }
    let (value, o) = best.expect("every graph has an acyclic orientation");
    Ok((value, layered_orientation(g, &o, k, limits)?))
}

/// Colors each node by the length of the longest path leaving it, minus one.
///
/// Colors strictly decrease along every arc and the number of distinct
/// colors equals the longest-path node count.
pub fn monotonic_coloring(d: &Digraph) -> Result<Vec<usize>> {
    Ok(d.longest_from()?.into_iter().map(|c| c - 1).collect())
}

/// Orients every edge from its higher-colored endpoint to its lower one.
pub fn orientation_from_coloring(g: &Graph, coloring: &[usize]) -> Result<AcyclicOrientation> {
    if coloring.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            expected: g.node_count(),
            found: coloring.len(),
        });
    }
    let dirs = g
        .edges()
        .iter()
        .map(|&(u, v)| match coloring[u].cmp(&coloring[v]) {
            core::cmp::Ordering::Equal => Err(Error::ImproperColoring(u, v)),
            ord => Ok(ord.is_gt()),
        })
        .collect::<Result<Vec<_>>>()?;
    // colors strictly decrease along every arc, so no directed cycle exists
    Ok(AcyclicOrientation::new_unchecked(dirs))
}

/// A `k`-tuple coloring: `k` distinct colors per node, none shared across an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTupleColoring {
    k: usize,
    colors: Vec<Vec<usize>>,
    palette: usize,
    interleaved: bool,
}

impl KTupleColoring {
    /// Validates and normalizes (each list sorted ascending) a `k`-tuple
    /// coloring of `g`. The interleaved flag is computed, not asserted.
    pub fn new(g: &Graph, k: usize, mut colors: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if colors.len() != g.node_count() {
            return Err(Error::LengthMismatch {
                expected: g.node_count(),
                found: colors.len(),
            });
        }
        for list in &mut colors {
            if list.len() != k {
                return Err(Error::InvalidColoring(
                    "node does not carry exactly k colors",
                ));
            }
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidColoring("node repeats a color"));
            }
        }
        for &(u, v) in g.edges() {
            if colors[u].iter().any(|c| colors[v].binary_search(c).is_ok()) {
                return Err(Error::ImproperColoring(u, v));
            }
        }
        let interleaved = g
            .edges()
            .iter()
            .all(|&(u, v)| alternates(&colors[u], &colors[v]));
        let palette = colors.iter().flatten().collect::<BTreeSet<_>>().len();
        Ok(KTupleColoring {
            k,
            colors,
            palette,
            interleaved,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Ascending colors of node `v`.
    pub fn colors(&self, v: usize) -> &[usize] {
        &self.colors[v]
    }

    pub fn node_count(&self) -> usize {
        self.colors.len()
    }

    /// Number of distinct colors used.
    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn is_interleaved(&self) -> bool {
        self.interleaved
    }
}

/// `a₁ < b₁ < a₂ < b₂ < … < a_k < b_k` or the same with `a` and `b` swapped.
fn alternates(a: &[usize], b: &[usize]) -> bool {
    let zipped = |x: &[usize], y: &[usize]| {
        x.iter()
            .zip(y)
            .flat_map(|(p, q)| [*p, *q])
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] < w[1])
    };
    zipped(a, b) || zipped(b, a)
}

/// Colors `G^k` monotonically under the layered orientation of `o` and hands
/// node `i` the colors of its copies `i¹..i^k`.
pub fn derive_interleaved_coloring(
    g: &Graph,
    o: &AcyclicOrientation,
    k: usize,
    limits: &Limits,
) -> Result<KTupleColoring> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    o.check_graph(g)?;
    check_product_size(g, k, limits)?;
    let levels = monotonic_coloring(&layered_digraph(g, o, k))?;
    let colors = (0..g.node_count())
        .map(|i| (1..=k).map(|l| levels[product_node(k, i, l)]).collect())
        .collect();
    KTupleColoring::new(g, k, colors)
}

/// A directed path of `G^k` that laps a cycle of `G`: steps that agree with
/// the base orientation stay in a layer, steps against it drop one layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingPath {
    pub cycle: SimpleCycle,
    pub orientation: AcyclicOrientation,
    pub k: usize,
    /// The cycle's nodes in the traversal direction used, the one with more
    /// agreeing edges.
    pub traversal: Vec<usize>,
    /// Agreeing and opposing edge counts along `traversal`.
    pub m_plus: usize,
    pub m_minus: usize,
    /// Full laps: `(k - 1) / m_minus`.
    pub t: usize,
    /// Agreeing and opposing steps taken on the final, partial lap.
    pub eps_plus: usize,
    pub eps_minus: usize,
    /// Node sequence in product ids.
    pub path: DirectedPath,
}

impl WindingPath {
    /// Number of product nodes on the path.
    pub fn node_count(&self) -> usize {
        self.path.len()
    }
}

pub fn winding_path(
    g: &Graph,
    c: &SimpleCycle,
    o: &AcyclicOrientation,
    k: usize,
    limits: &Limits,
) -> Result<WindingPath> {
    o.check_graph(g)?;
    check_product_size(g, k, limits)?;
    let (plus, minus) = crate::cycles::direction_counts(g, c, o)?;
    let len = c.size();
    let traversal: Vec<usize> = if plus >= minus {
        c.nodes().to_vec()
    } else {
        core::iter::once(c.nodes()[0])
            .chain(c.nodes()[1..].iter().rev().copied())
            .collect()
    };
    let agrees: Vec<bool> = (0..len)
        .map(|s| {
            o.points(g, traversal[s], traversal[(s + 1) % len])
                .expect("cycle steps are edges")
        })
        .collect();
    let (m_plus, m_minus) = (plus.max(minus), plus.min(minus));
    if m_minus == 0 {
        return Err(Error::Cyclic);
    }

    // Lap from `start` until k-1 descents are spent and the next step would
    // need another one; returns the traversal positions visited.
    let walk = |start: usize| -> Vec<usize> {
        let mut visited = vec![start];
        let mut pos = start;
        let mut descents = 0;
        loop {
            if !agrees[pos] {
                if descents == k - 1 {
                    break;
                }
                descents += 1;
            }
            pos = (pos + 1) % len;
            visited.push(pos);
        }
        visited
    };
    let segment_len = |start: usize| (0..len).take_while(|&d| agrees[(start + d) % len]).count();

    // Candidate starts are segment origins: positions right after an opposing
    // step. Keep the longest walk, then the longest opening segment, then the
    // earliest position.
    let (mut best_start, mut best_walk) = (usize::MAX, Vec::new());
    for start in (0..len).filter(|&s| !agrees[(s + len - 1) % len]) {
        let candidate = walk(start);
        let better = best_walk.is_empty()
            || candidate.len() > best_walk.len()
            || (candidate.len() == best_walk.len() && segment_len(start) > segment_len(best_start));
        if better {
            best_start = start;
            best_walk = candidate;
        }
    }

    let mut nodes = Vec::with_capacity(best_walk.len());
    let mut layer = k;
    for (step, &pos) in best_walk.iter().enumerate() {
        if step > 0 {
            let prev = best_walk[step - 1];
            if !agrees[prev] {
                layer -= 1;
            }
        }
        nodes.push(product_node(k, traversal[pos], layer));
    }
    let path = DirectedPath::new(&layered_digraph(g, o, k), nodes)?;

    let t = (k - 1) / m_minus;
    let eps_minus = (k - 1) % m_minus;
    let steps = best_walk.len() - 1;
    let eps_plus = steps - t * len - eps_minus;
    Ok(WindingPath {
        cycle: c.clone(),
        orientation: o.clone(),
        k,
        traversal,
        m_plus,
        m_minus,
        t,
        eps_plus,
        eps_minus,
        path,
    })
}

/// How an arc on a longest path departs from the layered-path morphology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma3ViolationKind {
    /// The arc climbs to a higher layer.
    Ascent,
    /// The arc drops two or more layers.
    LayerJump,
    /// The arc drops one layer between two copies of the same base node.
    SameNodeDrop,
    /// A same-layer arc `i → j` is missing in the given layer.
    MissingLayerArc { layer: usize },
    /// A one-layer drop `i → j` is not matched by `j → i` in the given layer.
    MissingReverseArc { layer: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma3Violation {
    /// Index of the offending path in enumeration order.
    pub path_index: usize,
    /// `(base node, layer)` endpoints of the offending arc.
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub kind: Lemma3ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma3Report {
    /// Node count shared by all longest paths.
    pub longest: usize,
    pub paths_checked: usize,
    pub violations: Vec<Lemma3Violation>,
}

impl Lemma3Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every longest path of the layered orientation of `o` on `G^k`
/// and checks that each arc stays within a layer or drops exactly one layer
/// between distinct base nodes `i → j`, with `j → i` in every layer.
pub fn check_lemma3(
    g: &Graph,
    o: &AcyclicOrientation,
    k: usize,
    limits: &Limits,
) -> Result<Lemma3Report> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    o.check_graph(g)?;
    check_product_size(g, k, limits)?;
    check_path_morphology(g, k, &layered_digraph(g, o, k), limits)
}

/// Same check for an arbitrary acyclic orientation `d` of `G^k`, layered or not.
pub fn check_path_morphology(
    g: &Graph,
    k: usize,
    d: &Digraph,
    limits: &Limits,
) -> Result<Lemma3Report> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if d.node_count() != g.node_count() * k {
        return Err(Error::LengthMismatch {
            expected: g.node_count() * k,
            found: d.node_count(),
        });
    }
    let down = d.longest_from()?;
    let longest = down.iter().copied().max().unwrap_or(0);
    let mut report = Lemma3Report {
        longest,
        paths_checked: 0,
        violations: Vec::new(),
    };
    let mut path = Vec::with_capacity(longest);
    for start in (0..d.node_count()).filter(|&v| down[v] == longest) {
        path.push(start);
        walk_longest(k, d, &down, &mut path, &mut report, limits)?;
        path.pop();
    }
    Ok(report)
}

fn walk_longest(
    k: usize,
    d: &Digraph,
    down: &[usize],
    path: &mut Vec<usize>,
    report: &mut Lemma3Report,
    limits: &Limits,
) -> Result<()> {
    let last = *path.last().expect("nonempty path");
    if down[last] == 1 {
        if report.paths_checked == limits.max_longest_paths {
            return Err(Error::CapExceeded {
                what: "longest path count",
                limit: limits.max_longest_paths,
            });
        }
        let index = report.paths_checked;
        report.paths_checked += 1;
        for w in path.windows(2) {
            if let Some(kind) = arc_violation(k, d, w[0], w[1]) {
                report.violations.push(Lemma3Violation {
                    path_index: index,
                    from: locate(k, w[0]),
                    to: locate(k, w[1]),
                    kind,
                });
            }
        }
        return Ok(());
    }
    for &next in d.successors(last) {
        if down[next] + 1 == down[last] {
            path.push(next);
            walk_longest(k, d, down, path, report, limits)?;
            path.pop();
        }
    }
    Ok(())
}

fn arc_violation(k: usize, d: &Digraph, from: usize, to: usize) -> Option<Lemma3ViolationKind> {
    let ((i, high), (j, low)) = (locate(k, from), locate(k, to));
    if low > high {
        return Some(Lemma3ViolationKind::Ascent);
    }
    if high - low >= 2 {
        return Some(Lemma3ViolationKind::LayerJump);
    }
    if high == low {
        return (1..=k)
            .find(|&l| !d.has_arc(product_node(k, i, l), product_node(k, j, l)))
            .map(|layer| Lemma3ViolationKind::MissingLayerArc { layer });
    }
    if i == j {
        return Some(Lemma3ViolationKind::SameNodeDrop);
    }
    (1..=k)
        .find(|&l| !d.has_arc(product_node(k, j, l), product_node(k, i, l)))
        .map(|layer| Lemma3ViolationKind::MissingReverseArc { layer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cycles::enumerate_simple_cycles, evaluate::chi_int_star, orientation::is_acyclic};

    const LIMITS: Limits = Limits::DEFAULT;

    #[test]
    fn product_sizes() {
        let p = build_product(&Graph::path(2), 2, &LIMITS).unwrap();
        assert_eq!(p.graph(), &Graph::complete(4));
        let p = build_product(&Graph::path(3), 2, &LIMITS).unwrap();
        assert_eq!(p.graph().node_count(), 6);
        assert_eq!(p.graph().edge_count(), 11);
        let g = Graph::cycle(5);
        assert_eq!(build_product(&g, 1, &LIMITS).unwrap().graph(), &g);
        assert_eq!(build_product(&g, 0, &LIMITS), Err(Error::InvalidK));
        let tight = Limits {
            max_product_edges: 10,
            ..LIMITS
        };
        assert!(build_product(&Graph::path(3), 2, &tight)
            .unwrap_err()
            .is_cap_exceeded());
    }

    #[test]
    fn layered_k2_edge() {
        let g = Graph::path(2);
        let o = AcyclicOrientation::increasing(&g);
        let lo = layered_orientation(&g, &o, 2, &LIMITS).unwrap();
        let p = lo.product();
        let (i1, i2, j1, j2) = (p.node(0, 1), p.node(0, 2), p.node(1, 1), p.node(1, 2));
        let mut arcs: Vec<_> = lo.digraph().arcs().collect();
        arcs.sort_unstable();
        let mut expected = vec![(i2, j2), (i1, j1), (i2, i1), (j2, j1), (i2, j1), (j2, i1)];
        expected.sort_unstable();
        assert_eq!(arcs, expected);
        assert_eq!(lo.digraph(), layered_digraph(&g, &o, 2));
    }

    #[test]
    fn layered_k1_is_the_base() {
        let g = Graph::cycle(5);
        for o in enumerate_acyclic(&g, 20).unwrap() {
            let lo = layered_orientation(&g, &o, 1, &LIMITS).unwrap();
            assert_eq!(lo.orientation(), &o);
        }
    }

    #[test]
    fn interleaved_chromatic_numbers() {
        assert_eq!(chi_int_k(&Graph::path(2), 2, &LIMITS).unwrap().0, 4);
        assert_eq!(chi_int_k(&Graph::cycle(5), 2, &LIMITS).unwrap().0, 5);
        assert_eq!(chi_int_k(&Graph::cycle(5), 1, &LIMITS).unwrap().0, 3);
        assert_eq!(
            chi_int_k(&Graph::edgeless(2).unwrap(), 1, &LIMITS),
            Err(Error::Edgeless)
        );
    }

    #[test]
    fn monotonic_levels() {
        let g = Graph::path(3);
        let d = Digraph::from_orientation(&g, &AcyclicOrientation::increasing(&g));
        assert_eq!(monotonic_coloring(&d).unwrap(), vec![2, 1, 0]);
        let g = Graph::cycle(4);
        let o = AcyclicOrientation::from_arcs(&g, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        let colors = monotonic_coloring(&Digraph::from_orientation(&g, &o)).unwrap();
        assert_eq!(colors.iter().collect::<BTreeSet<_>>().len(), 2);
        assert_eq!(monotonic_coloring(&Digraph::new(1, [])).unwrap(), vec![0]);
        assert_eq!(
            monotonic_coloring(&Digraph::new(2, [(0, 1), (1, 0)])),
            Err(Error::Cyclic)
        );
    }

    #[test]
    fn orientations_from_colorings() {
        let g = Graph::path(3);
        let o = orientation_from_coloring(&g, &[0, 1, 0]).unwrap();
        assert_eq!(crate::orientation::sources(&g, &o), vec![1]);
        let g = Graph::complete(3);
        let o = orientation_from_coloring(&g, &[0, 1, 2]).unwrap();
        assert_eq!(o.arcs(&g), vec![(1, 0), (2, 0), (2, 1)]);
        assert_eq!(
            orientation_from_coloring(&Graph::path(3), &[0, 0, 1]),
            Err(Error::ImproperColoring(0, 1))
        );
    }

    #[test]
    fn coloring_validation() {
        let g = Graph::path(2);
        let c = KTupleColoring::new(&g, 2, vec![vec![3, 1], vec![0, 2]]).unwrap();
        assert!(c.is_interleaved());
        assert_eq!(c.colors(0), &[1, 3]);
        let c = KTupleColoring::new(&g, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!c.is_interleaved());
        assert_eq!(
            KTupleColoring::new(&g, 2, vec![vec![0, 1], vec![1, 2]]),
            Err(Error::ImproperColoring(0, 1))
        );
        assert!(KTupleColoring::new(&g, 2, vec![vec![0, 0], vec![1, 2]]).is_err());
        assert!(KTupleColoring::new(&g, 2, vec![vec![0], vec![1, 2]]).is_err());
    }

    #[test]
    fn derived_coloring_of_an_edge() {
        let g = Graph::path(2);
        let c = derive_interleaved_coloring(&g, &AcyclicOrientation::increasing(&g), 2, &LIMITS)
            .unwrap();
        assert_eq!(c.colors(0), &[1, 3]);
        assert_eq!(c.colors(1), &[0, 2]);
        assert_eq!(c.palette(), 4);
        assert!(c.is_interleaved());
    }

    #[test]
    fn derived_coloring_of_c5_witness() {
        let g = Graph::cycle(5);
        let (value, lo) = chi_int_k(&g, 2, &LIMITS).unwrap();
        let c = derive_interleaved_coloring(&g, lo.base_orientation(), 2, &LIMITS).unwrap();
        assert!(c.is_interleaved());
        assert!(c.palette() <= value);
        assert_eq!(value, 5);
    }

    #[test]
    fn derived_coloring_of_a_tree() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let w = chi_int_star(&g, &LIMITS).unwrap();
        let c = derive_interleaved_coloring(&g, &w.orientation, 3, &LIMITS).unwrap();
        assert!(c.is_interleaved());
        assert_eq!(c.palette(), 6);
    }

    fn c5_three_two() -> (Graph, SimpleCycle, AcyclicOrientation) {
        let g = Graph::cycle(5);
        let c = enumerate_simple_cycles(&g, 10).unwrap().remove(0);
        let o =
            AcyclicOrientation::from_arcs(&g, &[(0, 1), (1, 2), (3, 2), (3, 4), (0, 4)]).unwrap();
        (g, c, o)
    }

    #[test]
    fn winding_path_on_c5() {
        let (g, c, o) = c5_three_two();
        let w = winding_path(&g, &c, &o, 3, &LIMITS).unwrap();
        assert_eq!((w.m_plus, w.m_minus), (3, 2));
        assert_eq!(w.t, 1);
        assert!(w.node_count() >= 8);
        assert!(w.eps_minus < w.m_minus);
        assert!(w.eps_plus * w.m_minus >= (1 + w.eps_minus) * w.m_plus);
    }

    #[test]
    fn winding_path_with_one_layer() {
        let (g, c, o) = c5_three_two();
        let w = winding_path(&g, &c, &o, 1, &LIMITS).unwrap();
        assert_eq!(w.t, 0);
        assert_eq!(w.node_count(), 3);
        let p = build_product(&g, 1, &LIMITS).unwrap();
        assert!(w.path.nodes().iter().all(|&v| p.locate(v).1 == 1));
    }

    #[test]
    fn winding_path_picks_the_best_start() {
        // segments along the traversal: +++ - +++ - -
        let g = Graph::cycle(9);
        let nodes: Vec<usize> = (0..9).collect();
        let c = SimpleCycle::new(&g, &nodes).unwrap();
        let against = [3, 7, 8];
        let arcs: Vec<_> = (0..9)
            .map(|s| {
                let (u, v) = (s, (s + 1) % 9);
                if against.contains(&s) {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect();
        let o = AcyclicOrientation::from_arcs(&g, &arcs).unwrap();
        for k in 1..=8 {
            let w = winding_path(&g, &c, &o, k, &LIMITS).unwrap();
            assert_eq!((w.m_plus, w.m_minus), (6, 3));
            assert!(
                w.eps_plus * w.m_minus >= (1 + w.eps_minus) * w.m_plus,
                "k = {k}"
            );
            assert!(w.node_count() * w.m_minus >= k * 9, "k = {k}");
        }
    }

    #[test]
    fn lemma3_small_cases() {
        let g = Graph::path(2);
        for o in enumerate_acyclic(&g, 20).unwrap() {
            assert!(check_lemma3(&g, &o, 3, &LIMITS).unwrap().passed());
        }
        let (g, _, o) = c5_three_two();
        let report = check_lemma3(&g, &o, 2, &LIMITS).unwrap();
        assert!(report.passed());
        assert!(report.paths_checked >= 1);
    }

    #[test]
    fn lemma3_negative_control() {
        // K2 with i→j, k=2, but the cross arc j²→i¹ flipped to i¹→j²
        let g = Graph::path(2);
        let k = 2;
        let n = |i, l| i * k + l - 1;
        let arcs = [
            (n(0, 2), n(1, 2)),
            (n(0, 1), n(1, 1)),
            (n(0, 2), n(0, 1)),
            (n(1, 2), n(1, 1)),
            (n(0, 2), n(1, 1)),
            (n(0, 1), n(1, 2)),
        ];
        let d = Digraph::new(4, arcs);
        let report = check_path_morphology(&g, k, &d, &LIMITS).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == Lemma3ViolationKind::SameNodeDrop));
    }

    #[test]
    fn layered_orientations_are_acyclic() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(4)] {
            for o in enumerate_acyclic(&g, 20).unwrap() {
                for k in 1..=3 {
                    let lo = layered_orientation(&g, &o, k, &LIMITS).unwrap();
                    assert!(is_acyclic(lo.product().graph(), lo.orientation().dirs()).unwrap());
                }
            }
        }
    }
}
