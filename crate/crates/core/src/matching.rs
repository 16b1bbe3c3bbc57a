//! Greedy maximal matching.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Matching};

/// Scans edges in canonical order and takes every edge whose endpoints are
/// both still free. The result is maximal, and `V \ V(M)` is independent.
/// Runs in `O(n + m)`.
pub fn maximal_matching(g: &Graph) -> Matching {
    let mut covered = vec![false; g.vertex_count()];
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            pairs.push((u, v));
        }
    }
    Matching::from_parts(pairs, covered, true)
}
