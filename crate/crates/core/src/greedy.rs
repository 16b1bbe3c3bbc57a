//! Pair placement: a random or conditional-expectation greedy assignment of
//! vertex pairs to opposite sides.
//!
//! The vertices are split into `n/2` ordered pairs `(u_i, v_i)`: matching
//! edges first, then the remaining vertices in ascending order. Every pair
//! lands on opposite sides, so each matching edge is always cut and any other
//! edge is cut with probability 1/2 under a fair coin. The greedy variant picks,
//! pair by pair, the orientation that cuts more edges towards the vertices
//! already placed; this never lowers the conditional expectation, so the final
//! cut is at least `|M| + (m - |M|)/2`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Bisection, Graph, Matching, Vertex};
use crate::rng::SplitMix64;

/// Vertices that are fixed on a side before any pair is placed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedPartition {
    seed_x: Vec<Vertex>,
    seed_y: Vec<Vertex>,
}

impl SeedPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Sides must be disjoint and of equal size.
    pub fn new(mut seed_x: Vec<Vertex>, mut seed_y: Vec<Vertex>) -> Result<Self> {
        if seed_x.len() != seed_y.len() {
            return Err(Error::InvalidArgument(format!(
                "seed sides differ in size ({} vs {})",
                seed_x.len(),
                seed_y.len()
            )));
        }
        seed_x.sort_unstable();
        seed_y.sort_unstable();
        let mut all: Vec<Vertex> = seed_x.iter().chain(&seed_y).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("seed sides overlap".into()));
        }
        Ok(SeedPartition { seed_x, seed_y })
    }

    pub fn seed_x(&self) -> &[Vertex] {
        &self.seed_x
    }

    pub fn seed_y(&self) -> &[Vertex] {
        &self.seed_y
    }

    pub fn is_empty(&self) -> bool {
        self.seed_x.is_empty()
    }
}

/// Ordered pairs `(u_i, v_i)` covering every non-seed vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSequence {
    pairs: Vec<(Vertex, Vertex)>,
    matched_prefix_len: usize,
}

impl PairSequence {
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    /// Number of leading pairs that come from the matching.
    pub fn matched_prefix_len(&self) -> usize {
        self.matched_prefix_len
    }
}

/// Forced matching pairs (oriented `(min, max)`, canonical order) followed by
/// the leftover vertices paired consecutively in ascending order.
pub fn pair_sequence(g: &Graph, m: &Matching, seed: &SeedPartition) -> Result<PairSequence> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    if m.host_vertex_count() != n {
        return Err(Error::InvalidMatching(format!(
            "matching belongs to a graph with {} vertices, not {n}",
            m.host_vertex_count()
        )));
    }
    let mut taken = vec![false; n];
    for &v in seed.seed_x.iter().chain(&seed.seed_y) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if m.covers(v) {
            return Err(Error::InvalidArgument(format!(
                "seed vertex {v} is covered by the matching"
            )));
        }
        taken[v] = true;
    }

    let mut pairs: Vec<(Vertex, Vertex)> = m.pairs().to_vec();
    pairs.sort_unstable();
    for &(u, v) in &pairs {
        taken[u] = true;
        taken[v] = true;
    }
    let matched_prefix_len = pairs.len();

    let leftover: Vec<Vertex> = g.vertices().filter(|&v| !taken[v]).collect();
    debug_assert!(leftover.len().is_multiple_of(2));
    pairs.extend(leftover.chunks_exact(2).map(|c| (c[0], c[1])));

    Ok(PairSequence {
        pairs,
        matched_prefix_len,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Unplaced,
    X,
    Y,
}

struct Placement {
    side: Vec<Side>,
}

impl Placement {
    fn seeded(n: usize, seed: &SeedPartition) -> Self {
        let mut side = vec![Side::Unplaced; n];
        for &v in &seed.seed_x {
            side[v] = Side::X;
        }
        for &v in &seed.seed_y {
            side[v] = Side::Y;
        }
        Placement { side }
    }

    /// Placed neighbors of `v` as `(in X, in Y)`.
    fn placed_neighbors(&self, g: &Graph, v: Vertex) -> (usize, usize) {
        g.neighbors(v)
            .iter()
            .fold((0, 0), |(x, y), &w| match self.side[w] {
                Side::X => (x + 1, y),
                Side::Y => (x, y + 1),
                Side::Unplaced => (x, y),
            })
    }

    fn place(&mut self, u: Vertex, v: Vertex, u_in_x: bool) {
        let (su, sv) = if u_in_x { (Side::X, Side::Y) } else { (Side::Y, Side::X) };
        self.side[u] = su;
        self.side[v] = sv;
    }

    fn into_bisection(self, g: &Graph) -> Result<Bisection> {
        let in_x: Vec<bool> = self.side.iter().map(|&s| s == Side::X).collect();
        debug_assert!(self.side.iter().all(|&s| s != Side::Unplaced));
        Bisection::from_membership(g, &in_x)
    }
}

/// Places each pair by a fair coin from a [`SplitMix64`] seeded with `rng_seed`:
/// heads puts `u_i` in X and `v_i` in Y.
pub fn randomized_bisection(
    g: &Graph,
    m: &Matching,
    seed: &SeedPartition,
    rng_seed: u64,
) -> Result<Bisection> {
    let seq = pair_sequence(g, m, seed)?;
    let mut rng = SplitMix64::new(rng_seed);
    let mut placement = Placement::seeded(g.vertex_count(), seed);
    for &(u, v) in seq.pairs() {
        placement.place(u, v, rng.coin());
    }
    placement.into_bisection(g)
}

/// Derandomized pair placement.
///
/// Step `i` puts `u_i` in X and `v_i` in Y iff
/// `|(u_i, Y)| + |(v_i, X)| >= |(u_i, X)| + |(v_i, Y)|` against the sides built
/// so far (seed vertices included), otherwise the reverse. With an empty seed
/// the cut is at least `⌈m/2⌉ + ⌊|M|/2⌋`. Each step reads only the adjacency of
/// `u_i` and `v_i`, so the total cost is `O(n + m)`.
pub fn greedy_bisection(g: &Graph, m: &Matching, seed: &SeedPartition) -> Result<Bisection> {
    let seq = pair_sequence(g, m, seed)?;
    let mut placement = Placement::seeded(g.vertex_count(), seed);
    for &(u, v) in seq.pairs() {
        let (ux, uy) = placement.placed_neighbors(g, u);
        let (vx, vy) = placement.placed_neighbors(g, v);
        placement.place(u, v, uy + vx >= ux + vy);
    }
    placement.into_bisection(g)
}

/// `⌈m/2⌉ + ⌊|M|/2⌋`.
pub fn matching_bound(edge_count: usize, matching_size: usize) -> usize {
    edge_count.div_ceil(2) + matching_size / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::matching::maximal_matching;

    fn brute_max(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == n / 2)
            .map(|mask| {
                g.edges()
                    .iter()
                    .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn pair_sequence_examples() {
        let p4 = generate::path(4).unwrap();
        let s = pair_sequence(&p4, &maximal_matching(&p4), &SeedPartition::empty()).unwrap();
        assert_eq!(s.pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(s.matched_prefix_len(), 2);

        let star = generate::star(5).unwrap();
        let s = pair_sequence(&star, &maximal_matching(&star), &SeedPartition::empty()).unwrap();
        assert_eq!(s.pairs(), &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(s.matched_prefix_len(), 1);

        let e = Graph::empty(6);
        let s = pair_sequence(&e, &maximal_matching(&e), &SeedPartition::empty()).unwrap();
        assert_eq!(s.pairs(), &[(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn pair_sequence_errors() {
        let odd = generate::star(2).unwrap();
        assert_eq!(
            pair_sequence(&odd, &maximal_matching(&odd), &SeedPartition::empty()),
            Err(Error::OddVertexCount(3))
        );
        let p4 = generate::path(4).unwrap();
        let seed = SeedPartition::new(vec![0], vec![3]).unwrap();
        assert!(matches!(
            pair_sequence(&p4, &maximal_matching(&p4), &seed),
            Err(Error::InvalidArgument(_))
        ));
        assert!(SeedPartition::new(vec![0, 1], vec![2]).is_err());
        assert!(SeedPartition::new(vec![0, 1], vec![1, 2]).is_err());
    }

    #[test]
    fn seeded_sequence_skips_seeds() {
        let g = generate::double_star_with_isolates(5, 0, 5);
        let m_prime = Matching::new(&g, vec![]).unwrap();
        let seed = SeedPartition::new(vec![2, 3], vec![0, 7]).unwrap();
        let s = pair_sequence(&g, &m_prime, &seed).unwrap();
        assert_eq!(s.pairs(), &[(1, 4), (5, 6), (8, 9), (10, 11)]);
        assert_eq!(s.matched_prefix_len(), 0);
    }

    #[test]
    fn randomized_examples() {
        let k2 = generate::complete(2).unwrap();
        let m = maximal_matching(&k2);
        for s in 0..16 {
            let b = randomized_bisection(&k2, &m, &SeedPartition::empty(), s).unwrap();
            assert_eq!(b.cut_size(), 1);
        }
        let e = Graph::empty(4);
        let b = randomized_bisection(&e, &maximal_matching(&e), &SeedPartition::empty(), 9).unwrap();
        assert_eq!(b.cut_size(), 0);
        assert_eq!(b.side_x().len(), 2);
    }

    #[test]
    fn randomized_is_reproducible() {
        let g = generate::gnp(20, 0.3, 42).unwrap();
        let m = maximal_matching(&g);
        let a = randomized_bisection(&g, &m, &SeedPartition::empty(), 77).unwrap();
        let b = randomized_bisection(&g, &m, &SeedPartition::empty(), 77).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn greedy_k2_meets_bound_exactly() {
        let k2 = generate::complete(2).unwrap();
        let m = maximal_matching(&k2);
        let b = greedy_bisection(&k2, &m, &SeedPartition::empty()).unwrap();
        assert_eq!(b.cut_size(), 1);
        assert_eq!(matching_bound(1, 1), 1);
    }

    #[test]
    fn greedy_c4() {
        let c4 = generate::cycle(4).unwrap();
        let m = maximal_matching(&c4);
        assert_eq!(m.pairs(), &[(0, 1), (2, 3)]);
        let b = greedy_bisection(&c4, &m, &SeedPartition::empty()).unwrap();
        assert!(b.cut_size() >= 3);
        assert_eq!(brute_max(&c4), 4);
        assert!(b.cut_size() <= 4);
    }

    #[test]
    fn greedy_star() {
        let g = generate::star(5).unwrap();
        let m = maximal_matching(&g);
        let b = greedy_bisection(&g, &m, &SeedPartition::empty()).unwrap();
        // hand trace: (0,1) -> 0 in X; (2,3) and (4,5) tie, lower id in X
        assert_eq!(b.side_x(), &[0, 2, 4]);
        assert_eq!(b.cut_size(), 3);
        assert_eq!(brute_max(&g), 3);
    }

    #[test]
    fn greedy_splits_forced_pairs() {
        let g = generate::gnp(16, 0.4, 3).unwrap();
        let m = maximal_matching(&g);
        let b = greedy_bisection(&g, &m, &SeedPartition::empty()).unwrap();
        let in_x = b.membership();
        assert!(m.pairs().iter().all(|&(u, v)| in_x[u] != in_x[v]));
        assert!(b.cut_size() >= matching_bound(g.edge_count(), m.len()));
    }
}
