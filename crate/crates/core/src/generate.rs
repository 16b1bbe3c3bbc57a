//! Deterministic graph families.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rng::{BernoulliThreshold, SplitMix64};

/// `K_{1,leaves}`: vertex 0 is the center, `1..=leaves` are the leaves.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidArgument("a star needs at least one leaf".into()));
    }
    Ok(Graph::from_canonical(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_canonical(n, edges))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_canonical(a + b, edges)
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    Ok(Graph::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Vertex 0 (the hub) is adjacent to vertex 1 and to `hub_leaves` leaves;
/// vertex 1 has `partner_leaves` further leaves; `isolates` isolated vertices
/// come last.
pub fn double_star_with_isolates(hub_leaves: usize, partner_leaves: usize, isolates: usize) -> Graph {
    let n = 2 + hub_leaves + partner_leaves + isolates;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(1 + hub_leaves + partner_leaves);
    edges.push((0, 1));
    edges.extend((2..2 + hub_leaves).map(|v| (0, v)));
    edges.extend((2 + hub_leaves..2 + hub_leaves + partner_leaves).map(|v| (1, v)));
    Graph::from_canonical(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
///
/// Candidate pairs are visited in canonical order `(0,1), (0,2), ..., (n-2,n-1)`;
/// pair `i` is kept iff the `i`-th [`SplitMix64`] output (seeded with `seed`)
/// is below `⌊p · 2^64⌋` (`p = 1` keeps everything).
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} not in [0, 1]")));
    }
    let threshold = BernoulliThreshold::new(p);
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(threshold) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_canonical(n, edges))
}

/// Uniform graph with exactly `m` edges, for sizes where `G(n, p)` pair
/// enumeration is too slow.
///
/// Endpoints are drawn in rounds from [`SplitMix64::below`]; each round draws
/// as many pairs as are still missing, then loops and duplicates are discarded.
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max_edges {
        return Err(Error::InvalidArgument(format!(
            "{m} edges do not fit in a simple graph on {n} vertices"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    while edges.len() < m {
        for _ in edges.len()..m {
            let u = rng.below(n as u64) as Vertex;
            let v = rng.below(n as u64) as Vertex;
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
    }
    Ok(Graph::from_canonical(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shapes() {
        let s = star(5).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (6, 5));
        assert_eq!(s.degree(0), 5);
        assert_eq!(star(1).unwrap(), complete(2).unwrap());
        let s3 = star(3).unwrap();
        assert_eq!((s3.vertex_count(), s3.edge_count()), (4, 3));
        assert!(star(0).is_err());
    }

    #[test]
    fn complete_sizes() {
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(complete(1).unwrap().edge_count(), 0);
        assert_eq!(complete(6).unwrap().edge_count(), 15);
        assert!(complete(0).is_err());
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(10, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(10, 1.0, 1).unwrap(), complete(10).unwrap());
        assert!(gnp(10, 1.5, 1).is_err());
        assert!(gnp(10, f64::NAN, 1).is_err());
    }

    #[test]
    fn gnp_pinned_regression() {
        let g = gnp(12, 0.3, 42).unwrap();
        assert_eq!(g.edge_count(), GNP_12_03_42_EDGES);
        assert_eq!(&g.edges()[..5], &[(0, 2), (0, 3), (0, 5), (0, 7), (0, 11)]);
        assert_eq!(g, gnp(12, 0.3, 42).unwrap());
        assert!(g.is_consistent());
    }

    // Pinned once; reproduced by an independent SplitMix64 transcription.
    const GNP_12_03_42_EDGES: usize = 24;

    #[test]
    fn gnm_exact_edge_count() {
        let g = gnm(50, 200, 9).unwrap();
        assert_eq!(g.edge_count(), 200);
        assert!(g.is_consistent());
        assert_eq!(gnm(4, 6, 1).unwrap(), complete(4).unwrap());
        assert!(gnm(4, 7, 1).is_err());
    }

    #[test]
    fn graph_h_layout() {
        let h = double_star_with_isolates(5, 0, 5);
        assert_eq!((h.vertex_count(), h.edge_count()), (12, 6));
        assert_eq!(h.neighbors(0), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(h.degree(7), 0);
    }
}
