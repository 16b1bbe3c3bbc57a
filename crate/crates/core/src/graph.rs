//! Simple undirected graphs with dense vertex ids, plus the bisection and
//! matching value types built on top of them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Immutable simple undirected graph.
///
/// Edges are stored once as `(min, max)` pairs in lexicographic order; this
/// canonical order drives every deterministic tie-break downstream. Adjacency
/// is kept in compressed form with each neighbor list sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph, collapsing repeated unordered pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    /// `edges` must already be canonical: sorted, deduplicated, `u < v < n`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut neighbors = vec![0; 2 * edges.len()];
        // Smaller neighbors of w arrive (ascending) before any edge starting at w,
        // so every list ends up sorted without an extra pass.
        for &(u, v) in &edges {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        Graph {
            n,
            edges,
            offsets,
            neighbors,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n
    }

    /// Sorted open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Subgraph induced by the vertices with `keep[v] == true`, relabeled in
    /// ascending order. Also returns the new-to-old id map.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        assert_eq!(keep.len(), self.n);
        let mut new_id = vec![usize::MAX; self.n];
        let mut old_id = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            new_id[v] = old_id.len();
            old_id.push(v);
        }
        // relabeling is monotone, so canonical order is preserved
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Graph::from_canonical(old_id.len(), edges), old_id)
    }

    /// Same graph with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        Graph::from_canonical(self.n + extra, self.edges.clone())
    }

    /// Recomputes adjacency from the edge list and compares.
    pub fn is_consistent(&self) -> bool {
        let canonical = self.edges.windows(2).all(|w| w[0] < w[1])
            && self.edges.iter().all(|&(u, v)| u < v && v < self.n);
        canonical
            && self.neighbors.len() == 2 * self.edges.len()
            && self.edges.iter().all(|&(u, v)| {
                self.neighbors(u).binary_search(&v).is_ok()
                    && self.neighbors(v).binary_search(&u).is_ok()
            })
            && self
                .vertices()
                .all(|v| self.neighbors(v).windows(2).all(|w| w[0] < w[1]))
    }
}

/// Appends one isolated vertex when `n` is odd. The flag reports whether one was added.
pub fn normalize_even(g: &Graph) -> (Graph, bool) {
    if g.vertex_count() % 2 == 1 {
        (g.with_isolated(1), true)
    } else {
        (g.clone(), false)
    }
}

/// Membership mask for `x` after checking that `x` and `y` partition `V(g)`.
fn partition_mask(g: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<Vec<bool>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut in_x = vec![false; n];
    for (side, set) in [(true, x), (false, y)] {
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
            in_x[v] = side;
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartition(format!("vertex {v} is on neither side")));
    }
    Ok(in_x)
}

fn count_cut(g: &Graph, in_x: &[bool]) -> usize {
    g.edges().iter().filter(|&&(u, v)| in_x[u] != in_x[v]).count()
}

/// Number of edges with one endpoint in `x` and the other in `y`.
///
/// `x` and `y` must partition the vertex set; balance is not required here.
pub fn cut_size(g: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<usize> {
    let in_x = partition_mask(g, x, y)?;
    Ok(count_cut(g, &in_x))
}

/// A balanced two-way partition `(X, Y)` with `|X| <= |Y| <= |X| + 1`, and its cut size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisection {
    side_x: Vec<Vertex>,
    side_y: Vec<Vertex>,
    cut: usize,
}

impl Bisection {
    pub fn new(g: &Graph, mut x: Vec<Vertex>, mut y: Vec<Vertex>) -> Result<Self> {
        let in_x = partition_mask(g, &x, &y)?;
        if x.len() > y.len() || y.len() > x.len() + 1 {
            return Err(Error::Unbalanced {
                x: x.len(),
                y: y.len(),
            });
        }
        x.sort_unstable();
        y.sort_unstable();
        Ok(Bisection {
            side_x: x,
            side_y: y,
            cut: count_cut(g, &in_x),
        })
    }

    /// `in_x[v]` tells which side `v` is on.
    pub fn from_membership(g: &Graph, in_x: &[bool]) -> Result<Self> {
        if in_x.len() != g.vertex_count() {
            return Err(Error::NotAPartition(format!(
                "membership has {} entries for {} vertices",
                in_x.len(),
                g.vertex_count()
            )));
        }
        let (x, y): (Vec<Vertex>, Vec<Vertex>) = g.vertices().partition(|&v| in_x[v]);
        Self::new(g, x, y)
    }

    #[inline]
    pub fn side_x(&self) -> &[Vertex] {
        &self.side_x
    }

    #[inline]
    pub fn side_y(&self) -> &[Vertex] {
        &self.side_y
    }

    #[inline]
    pub fn cut_size(&self) -> usize {
        self.cut
    }

    pub fn vertex_count(&self) -> usize {
        self.side_x.len() + self.side_y.len()
    }

    pub fn membership(&self) -> Vec<bool> {
        let mut in_x = vec![false; self.vertex_count()];
        for &v in &self.side_x {
            in_x[v] = true;
        }
        in_x
    }

    /// Re-validates against `g` and recounts the cut.
    pub fn verify(&self, g: &Graph) -> Result<usize> {
        let again = Bisection::new(g, self.side_x.clone(), self.side_y.clone())?;
        Ok(again.cut)
    }
}

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(Vertex, Vertex)>,
    covered: Vec<bool>,
    maximal: bool,
}

impl Matching {
    /// Validates `pairs` against `g`; pairs are stored as `(min, max)` in the given order.
    pub fn new(g: &Graph, pairs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut covered = vec![false; g.vertex_count()];
        let mut oriented = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("{{{u}, {v}}} is not an edge")));
            }
            for w in [u, v] {
                if covered[w] {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {w} is covered twice"
                    )));
                }
                covered[w] = true;
            }
            oriented.push((u.min(v), u.max(v)));
        }
        let maximal = g.edges().iter().all(|&(u, v)| covered[u] || covered[v]);
        Ok(Matching {
            pairs: oriented,
            covered,
            maximal,
        })
    }

    pub(crate) fn from_parts(pairs: Vec<(Vertex, Vertex)>, covered: Vec<bool>, maximal: bool) -> Self {
        Matching {
            pairs,
            covered,
            maximal,
        }
    }

    #[inline]
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Whether `v ∈ V(M)`.
    #[inline]
    pub fn covers(&self, v: Vertex) -> bool {
        self.covered.get(v).copied().unwrap_or(false)
    }

    /// `V(M)` in ascending order.
    pub fn covered_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.covered
            .iter()
            .enumerate()
            .filter_map(|(v, &c)| c.then_some(v))
    }

    /// True if every edge of the host graph touches a covered vertex.
    #[inline]
    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// Partner of `v` in the matching, if covered.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub(crate) fn host_vertex_count(&self) -> usize {
        self.covered.len()
    }
}
