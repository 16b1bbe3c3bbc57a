//! Algorithms for Max Bisection parameterized above the tight lower bound `⌈m/2⌉`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`graph`]: simple undirected graphs, bisections, matchings and generators,
//! - [`matching`]: a linear-time greedy maximal matching,
//! - [`greedy`]: the pair-placement procedure and its derandomization, which
//!   guarantees a bisection of size at least `⌈m/2⌉ + ⌊|M|/2⌋`,
//! - [`kernel`]: the kernelization for "is there a bisection of size at least
//!   `⌈m/2⌉ + k`?" down to `4k(k+1)` vertices, plus witness lifting,
//! - [`oracle`]: an exhaustive max-bisection solver and the end-to-end decision.
#![no_std]

extern crate alloc;

pub mod error;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod kernel;
pub mod matching;
pub mod oracle;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Bisection, Graph, Matching, Vertex};
pub use greedy::{greedy_bisection, pair_sequence, randomized_bisection, PairSequence, SeedPartition};
pub use kernel::{
    kernelize, lift_witness, EarlyYesReason, KernelOutcome, ReductionStep, ReductionTrace,
};
pub use matching::maximal_matching;
pub use oracle::{decide_atlb, max_bisection_exact, pm_lower_bound, DecisionPath, DecisionResult};

/// `⌈m/2⌉`, the bound every graph meets.
#[inline]
pub fn half_ceil(m: usize) -> usize {
    m.div_ceil(2)
}
