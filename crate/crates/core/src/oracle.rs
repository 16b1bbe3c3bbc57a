//! Exhaustive max bisection, the end-to-end decision procedure, and the
//! `⌈p·m⌉` lower bound with `p = n / (2(n-1))`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{normalize_even, Bisection, Graph, Vertex};
use crate::greedy::{greedy_bisection, SeedPartition};
use crate::kernel::{kernelize, lift_witness, EarlyYesReason, KernelOutcome};
use crate::matching::maximal_matching;

/// Default vertex limit of [`max_bisection_exact`].
pub const DEFAULT_VERTEX_LIMIT: usize = 24;

/// Hard ceiling from the bitmask representation.
pub const MAX_ORACLE_VERTICES: usize = 64;

/// `a` is lexicographically smaller than `b` as sorted vertex lists (equal sizes).
#[inline]
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

fn masks_to_bisection(g: &Graph, x_mask: u64) -> Result<Bisection> {
    let (x, y): (Vec<Vertex>, Vec<Vertex>) = g.vertices().partition(|&v| x_mask >> v & 1 == 1);
    Bisection::new(g, x, y)
}

/// Drops the padding vertex `n` from a bisection of the padded graph, keeping
/// the smaller side as X.
fn strip_padding(g: &Graph, b: &Bisection) -> Result<Bisection> {
    let n = g.vertex_count();
    let x: Vec<Vertex> = b.side_x().iter().copied().filter(|&v| v < n).collect();
    let y: Vec<Vertex> = b.side_y().iter().copied().filter(|&v| v < n).collect();
    if x.len() > y.len() {
        Bisection::new(g, y, x)
    } else {
        Bisection::new(g, x, y)
    }
}

/// Maximum bisection by enumeration.
///
/// Visits every `X` of size `n/2` that contains vertex 0 (the other half are
/// mirror images) and keeps the largest cut, breaking ties towards the
/// lexicographically smallest `X`. Odd `n` is padded with an isolated vertex
/// that is removed from the returned bisection. Refuses graphs whose padded
/// order exceeds `vertex_limit` (or 64).
pub fn max_bisection_exact(g: &Graph, vertex_limit: usize) -> Result<(usize, Bisection)> {
    let (padded, added) = normalize_even(g);
    let n = padded.vertex_count();
    let limit = vertex_limit.min(MAX_ORACLE_VERTICES);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok((0, Bisection::new(g, Vec::new(), Vec::new())?));
    }

    let adj: Vec<u64> = padded
        .vertices()
        .map(|v| padded.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let cut_of = |x: u64| -> usize {
        let y = full & !x;
        let mut rest = x;
        let mut total = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            total += (adj[v] & y).count_ones() as usize;
            rest &= rest - 1;
        }
        total
    };

    // choose `pick` of the n-1 vertices above 0 (Gosper's hack on shifted masks)
    let pick = n / 2 - 1;
    let upper = n - 1;
    let mut best_mask = 0u64;
    let mut best_cut = 0usize;
    let mut first = true;
    let mut consider = |x: u64| {
        let c = cut_of(x);
        if first || c > best_cut || (c == best_cut && lex_less(x, best_mask)) {
            first = false;
            best_cut = c;
            best_mask = x;
        }
    };
    if pick == 0 {
        consider(1);
    } else {
        let limit_mask: u64 = if upper == 64 { 0 } else { 1u64 << upper };
        let mut comb: u64 = (1u64 << pick) - 1;
        loop {
            consider(comb << 1 | 1);
            let low = comb & comb.wrapping_neg();
            let ripple = comb.wrapping_add(low);
            if ripple == 0 {
                break;
            }
            comb = (((ripple ^ comb) >> 2) / low) | ripple;
            if comb >= limit_mask && upper < 64 {
                break;
            }
        }
    }

    let witness = masks_to_bisection(&padded, best_mask)?;
    let witness = if added { strip_padding(g, &witness)? } else { witness };
    debug_assert_eq!(witness.cut_size(), best_cut);
    Ok((best_cut, witness))
}

/// `⌈p·m⌉` with `p = n / (2(n-1))`, `n` taken after even-normalization.
///
/// Computed in integers: `⌈n·m / (2(n-1))⌉`. Zero when `n < 2`.
pub fn pm_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count() + g.vertex_count() % 2;
    if n < 2 {
        return 0;
    }
    let num = n as u128 * g.edge_count() as u128;
    let den = 2 * (n as u128 - 1);
    num.div_ceil(den) as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionPath {
    TrivialKNonPositive,
    EarlyBigMatching,
    EarlyCase1,
    KernelBruteForce,
}

impl DecisionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            DecisionPath::TrivialKNonPositive => "trivial_k_nonpositive",
            DecisionPath::EarlyBigMatching => "early_big_matching",
            DecisionPath::EarlyCase1 => "early_case1",
            DecisionPath::KernelBruteForce => "kernel_bruteforce",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionResult {
    pub answer: bool,
    /// Present iff `answer`; ids of the input graph.
    pub witness: Option<Bisection>,
    /// `⌈m/2⌉ + k`.
    pub bound_used: i64,
    pub path: DecisionPath,
}

/// Decides whether `g` has a bisection of size at least `⌈m/2⌉ + k`.
///
/// `k <= 0` is answered directly with the greedy bisection. Otherwise the
/// instance is kernelized; a reduced kernel is solved by [`max_bisection_exact`]
/// and a YES witness lifted back. A kernel above `vertex_limit` is reported as
/// [`Error::Undecided`].
pub fn decide_atlb(g: &Graph, k: i64, vertex_limit: usize) -> Result<DecisionResult> {
    let bound_used = g.edge_count().div_ceil(2) as i64 + k;
    let (even, added) = normalize_even(g);

    let (witness, path) = if k <= 0 {
        let m = maximal_matching(&even);
        let b = greedy_bisection(&even, &m, &SeedPartition::empty())?;
        (Some(b), DecisionPath::TrivialKNonPositive)
    } else {
        match kernelize(&even, k as usize)? {
            KernelOutcome::EarlyYes { witness, reason } => {
                let path = match reason {
                    EarlyYesReason::BigMatching => DecisionPath::EarlyBigMatching,
                    EarlyYesReason::Case1 => DecisionPath::EarlyCase1,
                };
                (Some(witness), path)
            }
            KernelOutcome::Reduced(kernel) => {
                let kernel_n = kernel.graph.vertex_count();
                let limit = vertex_limit.min(MAX_ORACLE_VERTICES);
                if kernel_n > limit {
                    return Err(Error::Undecided { kernel_n, limit });
                }
                let (best, b) = max_bisection_exact(&kernel.graph, limit)?;
                let kernel_bound = kernel.graph.edge_count().div_ceil(2) + kernel.k;
                let witness = if best >= kernel_bound {
                    Some(lift_witness(&even, &b, &kernel.trace, &kernel.id_map)?)
                } else {
                    None
                };
                (witness, DecisionPath::KernelBruteForce)
            }
        }
    };

    let witness = match witness {
        Some(b) if added => Some(strip_padding(g, &b)?),
        other => other,
    };
    if let Some(b) = &witness {
        assert!(b.cut_size() as i64 >= bound_used, "witness below ⌈m/2⌉ + k");
    }
    Ok(DecisionResult {
        answer: witness.is_some(),
        witness,
        bound_used,
        path,
    })
}
