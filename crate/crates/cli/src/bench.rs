//! Grid sweeps over generated instances, one CSV row per instance.
//!
//! The config is plain text, one axis per line as `key = v1, v2, ...`;
//! `#` starts a comment. Keys:
//!
//! | key      | meaning                                                  | default |
//! |----------|----------------------------------------------------------|---------|
//! | `family` | `gnp`, `star`, `complete`, `path`, `cycle`               | none    |
//! | `n`      | vertex count (a star on `n` vertices has `n - 1` leaves) | none    |
//! | `p`      | edge probability, `gnp` only                             | none    |
//! | `seed`   | generator seed, `gnp` only                               | `0`     |
//! | `k`      | parameter                                                | `1`     |
//! | `limit`  | exhaustive oracle vertex limit (single value)            | `24`    |
//!
//! The grid is the product family × n × p × seed × k, where `p` and `seed`
//! only multiply `gnp`. An empty axis gives an empty grid.

use std::io::Write;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use maxbisect_core::graph::normalize_even;
use maxbisect_core::greedy::matching_bound;
use maxbisect_core::kernel::{edge_bound, vertex_bound};
use maxbisect_core::oracle::DEFAULT_VERTEX_LIMIT;
use maxbisect_core::{
    decide_atlb, generate, greedy_bisection, kernelize, maximal_matching, Error, Graph,
    KernelOutcome, SeedPartition,
};
use rayon::prelude::*;

pub const CSV_HEADER: [&str; 12] = [
    "graph_id",
    "n",
    "m",
    "k",
    "matching_size",
    "path",
    "kernel_n",
    "kernel_m",
    "bound_4k_k1",
    "greedy_cut",
    "lemma1_bound",
    "elapsed_ms",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gnp,
    Star,
    Complete,
    Path,
    Cycle,
}

impl Family {
    fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "gnp" => Family::Gnp,
            "star" => Family::Star,
            "complete" => Family::Complete,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            other => bail!("unknown family `{other}`"),
        })
    }

    fn name(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub n: Vec<usize>,
    pub p: Vec<f64>,
    pub seed: Vec<u64>,
    pub k: Vec<i64>,
    pub limit: usize,
}

fn parse_list<T: std::str::FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| v.parse().map_err(|_| anyhow!("bad value `{v}` for `{key}`")))
        .collect()
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = BenchConfig {
            families: Vec::new(),
            n: Vec::new(),
            p: Vec::new(),
            seed: vec![0],
            k: vec![1],
            limit: DEFAULT_VERTEX_LIMIT,
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected `key = values`", i + 1))?;
            let key = key.trim();
            let ctx = || format!("line {}", i + 1);
            match key {
                "family" => {
                    cfg.families = parse_list::<String>(key, value)
                        .and_then(|v| v.iter().map(|s| Family::parse(s)).collect())
                        .with_context(ctx)?
                }
                "n" => cfg.n = parse_list(key, value).with_context(ctx)?,
                "p" => cfg.p = parse_list(key, value).with_context(ctx)?,
                "seed" => cfg.seed = parse_list(key, value).with_context(ctx)?,
                "k" => cfg.k = parse_list(key, value).with_context(ctx)?,
                "limit" => {
                    cfg.limit = value
                        .trim()
                        .parse()
                        .map_err(|_| anyhow!("line {}: bad limit", i + 1))?
                }
                other => bail!("line {}: unknown key `{other}`", i + 1),
            }
        }
        if let Some(p) = cfg.p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            bail!("edge probability {p} not in [0, 1]");
        }
        Ok(cfg)
    }

    pub fn instances(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for &family in &self.families {
            for &n in &self.n {
                let variants: Vec<(Option<f64>, Option<u64>)> = if family == Family::Gnp {
                    self.p
                        .iter()
                        .flat_map(|&p| self.seed.iter().map(move |&s| (Some(p), Some(s))))
                        .collect()
                } else {
                    vec![(None, None)]
                };
                for (p, seed) in variants {
                    for &k in &self.k {
                        out.push(Instance { family, n, p, seed, k });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Instance {
    pub family: Family,
    pub n: usize,
    pub p: Option<f64>,
    pub seed: Option<u64>,
    pub k: i64,
}

impl Instance {
    pub fn graph_id(&self) -> String {
        match (self.p, self.seed) {
            (Some(p), Some(s)) => format!("{}-n{}-p{}-s{}", self.family.name(), self.n, p, s),
            _ => format!("{}-n{}", self.family.name(), self.n),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        let g = match self.family {
            Family::Gnp => generate::gnp(self.n, self.p.unwrap_or(0.0), self.seed.unwrap_or(0))?,
            Family::Star => generate::star(self.n.saturating_sub(1))?,
            Family::Complete => generate::complete(self.n)?,
            Family::Path => generate::path(self.n)?,
            Family::Cycle => generate::cycle(self.n)?,
        };
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub matching_size: usize,
    pub path: String,
    pub kernel: Option<(usize, usize)>,
    pub bound_4k_k1: usize,
    pub greedy_cut: usize,
    pub lemma1_bound: usize,
    pub elapsed_ms: f64,
}

impl BenchRow {
    pub fn record(&self) -> [String; 12] {
        let (kn, km) = match self.kernel {
            Some((n, m)) => (n.to_string(), m.to_string()),
            None => (String::new(), String::new()),
        };
        [
            self.graph_id.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.k.to_string(),
            self.matching_size.to_string(),
            self.path.clone(),
            kn,
            km,
            self.bound_4k_k1.to_string(),
            self.greedy_cut.to_string(),
            self.lemma1_bound.to_string(),
            format!("{:.3}", self.elapsed_ms),
        ]
    }
}

pub fn run_instance(inst: &Instance, limit: usize) -> Result<BenchRow> {
    let start = Instant::now();
    let g = inst.build().with_context(|| inst.graph_id())?;
    let (even, _) = normalize_even(&g);
    let matching = maximal_matching(&even);
    let greedy = greedy_bisection(&even, &matching, &SeedPartition::empty())?;
    let lemma1_bound = matching_bound(even.edge_count(), matching.len());
    if greedy.cut_size() < lemma1_bound {
        bail!("{}: greedy cut below the matching bound", inst.graph_id());
    }

    let k = inst.k;
    let kernel = if k >= 1 {
        match kernelize(&even, k as usize)? {
            KernelOutcome::Reduced(kernel) => {
                let (kn, km) = (kernel.graph.vertex_count(), kernel.graph.edge_count());
                let ku = k as usize;
                if kn > vertex_bound(ku) || km > edge_bound(ku, kn) {
                    bail!("{}: kernel ({kn}, {km}) exceeds its bounds", inst.graph_id());
                }
                Some((kn, km))
            }
            KernelOutcome::EarlyYes { .. } => None,
        }
    } else {
        None
    };
    let path = match decide_atlb(&g, k, limit) {
        Ok(r) => r.path.as_str().to_string(),
        Err(Error::Undecided { .. }) => "undecided".to_string(),
        Err(e) => return Err(e.into()),
    };
    let bound_4k_k1 = if k >= 1 { vertex_bound(k as usize) } else { 0 };

    Ok(BenchRow {
        graph_id: inst.graph_id(),
        n: g.vertex_count(),
        m: g.edge_count(),
        k,
        matching_size: matching.len(),
        path,
        kernel,
        bound_4k_k1,
        greedy_cut: greedy.cut_size(),
        lemma1_bound,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs the grid in parallel; rows come back in grid order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.instances()
        .par_iter()
        .map(|inst| run_instance(inst, cfg.limit))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for row in rows {
        out.write_record(row.record())?;
    }
    out.flush()?;
    Ok(())
}
