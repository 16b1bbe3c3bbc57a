//! Kernelization for "does `G` have a bisection of size at least `⌈m/2⌉ + k`?".
//!
//! Three phases run to a joint fixpoint:
//!
//! 1. a greedy maximal matching `M` with `|M| >= 2k` already certifies YES;
//! 2. a matched vertex `z` whose side set `S(z)` has at least `2k - |M| + 1`
//!    members yields a seeded greedy witness (also YES);
//! 3. otherwise a false-twin class `I` with `|I| = n/2 + j`, `j > 0`, loses
//!    `2j` members. Every bisection keeps at least `j` of `I` on each side, so
//!    the answer is unchanged.
//!
//! When nothing fires the graph has at most `4k(k+1)` vertices and
//! `4k·n + 8k²` edges. Deletions are recorded in a [`ReductionTrace`] so that
//! witnesses on the kernel can be lifted back with [`lift_witness`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Bisection, Graph, Matching, Vertex};
use crate::greedy::{greedy_bisection, SeedPartition};
use crate::matching::maximal_matching;

/// Which of the two candidate sets was chosen as `S(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideKind {
    /// `N(x) \ V(M)`
    NeighborsOutside,
    /// `V \ (V(M) ∪ N(x))`
    NonNeighborsOutside,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideSet {
    pub vertex: Vertex,
    pub members: Vec<Vertex>,
    pub kind: SideKind,
}

/// Sizes of `N(x) \ V(M)` and `V \ (V(M) ∪ N(x))`.
fn side_sizes(g: &Graph, m: &Matching, x: Vertex) -> (usize, usize) {
    let outside = g.vertex_count() - 2 * m.len();
    let nbrs = g.neighbors(x).iter().filter(|&&w| !m.covers(w)).count();
    (nbrs, outside - nbrs)
}

fn side_size(g: &Graph, m: &Matching, x: Vertex) -> usize {
    let (a, b) = side_sizes(g, m, x);
    a.min(b)
}

fn check_matching(g: &Graph, m: &Matching) -> Result<()> {
    if m.host_vertex_count() != g.vertex_count() {
        return Err(Error::InvalidMatching(format!(
            "matching belongs to a graph with {} vertices, not {}",
            m.host_vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// `S(x)`: the smaller of `N(x) \ V(M)` and `V \ (V(M) ∪ N(x))`, ties going to the neighbors.
pub fn side_set(g: &Graph, m: &Matching, x: Vertex) -> Result<SideSet> {
    check_matching(g, m)?;
    if !m.covers(x) {
        return Err(Error::InvalidArgument(format!("vertex {x} is not covered by the matching")));
    }
    let (nbrs, non_nbrs) = side_sizes(g, m, x);
    let (kind, members) = if nbrs <= non_nbrs {
        let members = g.neighbors(x).iter().copied().filter(|&w| !m.covers(w)).collect();
        (SideKind::NeighborsOutside, members)
    } else {
        let mut adjacent = vec![false; g.vertex_count()];
        for &w in g.neighbors(x) {
            adjacent[w] = true;
        }
        let members = g.vertices().filter(|&w| !m.covers(w) && !adjacent[w]).collect();
        (SideKind::NonNeighborsOutside, members)
    };
    Ok(SideSet {
        vertex: x,
        members,
        kind,
    })
}

fn case1_threshold(m: &Matching, k: usize) -> Result<usize> {
    if m.len() >= 2 * k {
        return Err(Error::InvalidArgument(format!(
            "matching of size {} already certifies k = {k}",
            m.len()
        )));
    }
    Ok(2 * k - m.len() + 1)
}

/// Smallest `z ∈ V(M)` with `|S(z)| >= 2k - |M| + 1`, if any. Requires `|M| < 2k`.
pub fn detect_case1(g: &Graph, m: &Matching, k: usize) -> Result<Option<Vertex>> {
    check_matching(g, m)?;
    let threshold = case1_threshold(m, k)?;
    Ok(m.covered_vertices().find(|&x| side_size(g, m, x) >= threshold))
}

/// Witness bisection for a vertex `z` found by [`detect_case1`].
///
/// `X'` takes the `t = 2k - |M| + 1` lowest neighbors of `z` outside `V(M)`,
/// `Y'` takes `z` and the `t - 1` lowest non-neighbors outside `V(M)`. Then the
/// rest of `M` is placed as forced pairs and everything else greedily. The cut
/// is at least `⌈m/2⌉ + k`.
pub fn case1_witness(g: &Graph, m: &Matching, k: usize, z: Vertex) -> Result<Bisection> {
    check_matching(g, m)?;
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    let t = case1_threshold(m, k)?;
    let side = side_set(g, m, z)?;
    if side.members.len() < t {
        return Err(Error::InvalidArgument(format!(
            "|S({z})| = {} is below the threshold {t}",
            side.members.len()
        )));
    }

    let mut adjacent = vec![false; n];
    for &w in g.neighbors(z) {
        adjacent[w] = true;
    }
    let seed_x: Vec<Vertex> = g
        .neighbors(z)
        .iter()
        .copied()
        .filter(|&w| !m.covers(w))
        .take(t)
        .collect();
    let seed_y: Vec<Vertex> = core::iter::once(z)
        .chain(
            g.vertices()
                .filter(|&w| !m.covers(w) && !adjacent[w] && w != z)
                .take(t - 1),
        )
        .collect();
    debug_assert_eq!(seed_x.len(), t);
    debug_assert_eq!(seed_y.len(), t);

    // X' ∪ Y' \ {z} lies outside V(M) and is independent; only z reaches across.
    let seed_edges: usize = seed_y
        .iter()
        .map(|&y| seed_x.iter().filter(|&&x| g.has_edge(x, y)).count())
        .sum();
    assert_eq!(seed_edges, t, "seed sides must be joined by exactly 2k - |M| + 1 edges");

    let partner = m.partner(z).expect("z is covered");
    assert!(!seed_x.contains(&partner) && !seed_y.contains(&partner));
    let rest: Vec<(Vertex, Vertex)> = m
        .pairs()
        .iter()
        .copied()
        .filter(|&(a, b)| a != z && b != z)
        .collect();
    let m_rest = Matching::new(g, rest)?;
    let seed = SeedPartition::new(seed_x, seed_y)?;
    let witness = greedy_bisection(g, &m_rest, &seed)?;
    assert!(
        witness.cut_size() >= g.edge_count().div_ceil(2) + k,
        "seeded greedy fell below ⌈m/2⌉ + k"
    );
    Ok(witness)
}

/// Classes of vertices with identical open neighborhoods, ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut by_nbhd: BTreeMap<&[Vertex], Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        by_nbhd.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut classes: Vec<Vec<Vertex>> = by_nbhd.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// One twin deletion: `deleted` (length `2j`) shared the open neighborhood `neighborhood`
/// in a graph with `n_before` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub neighborhood: Vec<Vertex>,
    pub deleted: Vec<Vertex>,
    pub degree: usize,
    pub n_before: usize,
}

impl ReductionStep {
    /// `j`: deleted vertices per side.
    pub fn per_side(&self) -> usize {
        self.deleted.len() / 2
    }
}

/// Twin deletions in the order they were applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn deleted_count(&self) -> usize {
        self.steps.iter().map(|s| s.deleted.len()).sum()
    }

    /// `Σ j·d`: how much lifting adds to a cut (and half of what the deletions removed from `m`).
    pub fn lift_gain(&self) -> usize {
        self.steps.iter().map(|s| s.per_side() * s.degree).sum()
    }

    fn relabel(&mut self, map: &[Vertex]) {
        for step in &mut self.steps {
            for v in step.neighborhood.iter_mut().chain(step.deleted.iter_mut()) {
                *v = map[*v];
            }
        }
    }
}

/// Result of [`reduce_large_twin_class`]. `trace` uses the input graph's ids;
/// `id_map[i]` is the input id of output vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinReduction {
    pub graph: Graph,
    pub trace: ReductionTrace,
    pub id_map: Vec<Vertex>,
}

/// Deletes the `2j` highest members of any twin class of size `n/2 + j`, `j > 0`,
/// until no class is larger than `n/2`.
pub fn reduce_large_twin_class(g: &Graph) -> Result<TwinReduction> {
    if g.vertex_count() % 2 == 1 {
        return Err(Error::OddVertexCount(g.vertex_count()));
    }
    let mut graph = g.clone();
    let mut id_map: Vec<Vertex> = g.vertices().collect();
    let mut trace = ReductionTrace::default();
    loop {
        let n = graph.vertex_count();
        let Some(class) = twin_classes(&graph).into_iter().find(|c| c.len() > n / 2) else {
            break;
        };
        let j = class.len() - n / 2;
        let deleted = &class[class.len() - 2 * j..];
        let mut keep = vec![true; n];
        for &v in deleted {
            keep[v] = false;
        }
        let neighborhood = graph.neighbors(class[0]).to_vec();
        trace.steps.push(ReductionStep {
            degree: neighborhood.len(),
            neighborhood: neighborhood.iter().map(|&v| id_map[v]).collect(),
            deleted: deleted.iter().map(|&v| id_map[v]).collect(),
            n_before: n,
        });
        let (next, local) = graph.induced_subgraph(&keep);
        id_map = local.into_iter().map(|v| id_map[v]).collect();
        graph = next;
    }
    Ok(TwinReduction {
        graph,
        trace,
        id_map,
    })
}

/// `4k(k+1)`.
pub fn vertex_bound(k: usize) -> usize {
    4 * k * (k + 1)
}

/// `4k·n + 8k²`.
pub fn edge_bound(k: usize, n: usize) -> usize {
    4 * k * n + 8 * k * k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EarlyYesReason {
    BigMatching,
    Case1,
}

/// Reduced instance with everything needed to map answers back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: Graph,
    pub k: usize,
    /// Twin deletions, in the input graph's ids.
    pub trace: ReductionTrace,
    /// `id_map[i]` is the input id of kernel vertex `i`.
    pub id_map: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    /// Witness on the input graph with cut at least `⌈m/2⌉ + k`.
    EarlyYes {
        witness: Bisection,
        reason: EarlyYesReason,
    },
    Reduced(Kernel),
}

/// Vertices outside `V(M)` and outside every side set share one neighborhood.
fn assert_residue_is_twin_class(g: &Graph, m: &Matching, k: usize) {
    let mut in_side_sets = vec![false; g.vertex_count()];
    let mut union_size = 0;
    for x in m.covered_vertices() {
        for w in side_set(g, m, x).expect("x is covered").members {
            if !in_side_sets[w] {
                in_side_sets[w] = true;
                union_size += 1;
            }
        }
    }
    assert!(union_size <= 2 * m.len() * (2 * k - m.len()));
    let mut residue = g.vertices().filter(|&v| !m.covers(v) && !in_side_sets[v]);
    if let Some(first) = residue.next() {
        let nbhd = g.neighbors(first);
        assert!(
            residue.all(|v| g.neighbors(v) == nbhd),
            "residue outside matching and side sets is not a twin class"
        );
    }
}

/// Kernelizes an even-order instance with parameter `k >= 1`.
///
/// Any witness found on an intermediate reduced graph is lifted back, so
/// `EarlyYes` always speaks about `g` itself.
pub fn kernelize(g: &Graph, k: usize) -> Result<KernelOutcome> {
    if g.vertex_count() % 2 == 1 {
        return Err(Error::OddVertexCount(g.vertex_count()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("the kernelization needs k >= 1".into()));
    }
    let bound = g.edge_count().div_ceil(2) + k;
    let mut current = g.clone();
    let mut id_map: Vec<Vertex> = g.vertices().collect();
    let mut trace = ReductionTrace::default();

    loop {
        let m = maximal_matching(&current);
        let early = if m.len() >= 2 * k {
            Some((greedy_bisection(&current, &m, &SeedPartition::empty())?, EarlyYesReason::BigMatching))
        } else if let Some(z) = detect_case1(&current, &m, k)? {
            Some((case1_witness(&current, &m, k, z)?, EarlyYesReason::Case1))
        } else {
            None
        };
        if let Some((local, reason)) = early {
            let witness = lift_witness(g, &local, &trace, &id_map)?;
            assert!(witness.cut_size() >= bound, "early witness below ⌈m/2⌉ + k");
            return Ok(KernelOutcome::EarlyYes { witness, reason });
        }

        assert_residue_is_twin_class(&current, &m, k);
        let reduction = reduce_large_twin_class(&current)?;
        if reduction.trace.is_empty() {
            let n = current.vertex_count();
            assert!(n <= vertex_bound(k), "kernel has {n} > 4k(k+1) vertices");
            assert!(
                current.edge_count() <= edge_bound(k, n),
                "kernel has {} > 4kn + 8k² edges",
                current.edge_count()
            );
            return Ok(KernelOutcome::Reduced(Kernel {
                graph: current,
                k,
                trace,
                id_map,
            }));
        }
        let mut steps = reduction.trace;
        steps.relabel(&id_map);
        trace.steps.extend(steps.steps);
        id_map = reduction.id_map.into_iter().map(|v| id_map[v]).collect();
        current = reduction.graph;
    }
}

/// Maps a bisection of the kernel back to `original`.
///
/// Kernel vertex `i` keeps its side as `id_map[i]`; each trace step, replayed
/// in reverse, sends the first `j` deleted twins to X and the other `j` to Y.
/// The cut grows by exactly `j·d` per step. The trace is checked against
/// `original` before anything is placed.
pub fn lift_witness(
    original: &Graph,
    kernel_witness: &Bisection,
    trace: &ReductionTrace,
    id_map: &[Vertex],
) -> Result<Bisection> {
    let n = original.vertex_count();
    if id_map.len() != kernel_witness.vertex_count() {
        return Err(Error::TraceMismatch(format!(
            "id map has {} entries, witness covers {} vertices",
            id_map.len(),
            kernel_witness.vertex_count()
        )));
    }
    if id_map.len() + trace.deleted_count() != n {
        return Err(Error::TraceMismatch(format!(
            "kernel ({}) plus deleted ({}) does not add up to {n} vertices",
            id_map.len(),
            trace.deleted_count()
        )));
    }

    let mut present = vec![true; n];
    let mut mark = vec![false; n];
    for (i, step) in trace.steps.iter().enumerate() {
        if step.deleted.is_empty() || step.deleted.len() % 2 == 1 {
            return Err(Error::TraceMismatch(format!(
                "step {i} deletes {} vertices",
                step.deleted.len()
            )));
        }
        if step.degree != step.neighborhood.len() {
            return Err(Error::TraceMismatch(format!("step {i} degree disagrees with neighborhood")));
        }
        for &v in step.neighborhood.iter().chain(&step.deleted) {
            if v >= n || !present[v] {
                return Err(Error::TraceMismatch(format!("step {i} names absent vertex {v}")));
            }
        }
        for &v in &step.neighborhood {
            mark[v] = true;
        }
        for &v in &step.deleted {
            let mut live = original.neighbors(v).iter().filter(|&&w| present[w]);
            let same = live.clone().count() == step.degree && live.all(|&w| mark[w]);
            if !same {
                return Err(Error::TraceMismatch(format!(
                    "step {i}: vertex {v} does not have the recorded neighborhood"
                )));
            }
        }
        for &v in &step.neighborhood {
            mark[v] = false;
        }
        for &v in &step.deleted {
            present[v] = false;
        }
    }

    let mut side: Vec<Option<bool>> = vec![None; n];
    let kernel_side = kernel_witness.membership();
    for (i, &v) in id_map.iter().enumerate() {
        if v >= n || !present[v] || side[v].is_some() {
            return Err(Error::TraceMismatch(format!("id map entry {i} -> {v} is not a kernel vertex")));
        }
        side[v] = Some(kernel_side[i]);
    }
    for step in trace.steps.iter().rev() {
        let j = step.per_side();
        for (idx, &v) in step.deleted.iter().enumerate() {
            side[v] = Some(idx < j);
        }
    }
    let in_x: Vec<bool> = side.into_iter().map(|s| s.expect("every vertex placed")).collect();
    Bisection::from_membership(original, &in_x)
}
