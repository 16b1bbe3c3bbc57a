use std::fs;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use maxbisect::bench::{run_bench, write_csv, BenchConfig};
use maxbisect::format::{edge_list_string, read_graph, ParsedGraph};
use maxbisect::trace::trace_to_json;
use maxbisect_core::graph::normalize_even;
use maxbisect_core::greedy::matching_bound;
use maxbisect_core::kernel::{edge_bound, vertex_bound};
use maxbisect_core::oracle::DEFAULT_VERTEX_LIMIT;
use maxbisect_core::{
    decide_atlb, generate, greedy_bisection, half_ceil, kernelize, maximal_matching,
    pm_lower_bound, EarlyYesReason, KernelOutcome, SeedPartition,
};
use serde_json::{json, Value};

/// Max Bisection above ⌈m/2⌉: greedy bisections, kernels and exact decisions.
#[derive(Parser)]
#[command(name = "maxbisect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a bisection of size at least ⌈m/2⌉ + k.
    /// Exit code 0 = yes, 1 = no, 2 = error or undecided.
    Solve {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Include the X side of the witness.
        #[arg(long)]
        witness: bool,
        /// Vertex limit for the exhaustive kernel solver.
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: usize,
    },
    /// Kernelize for parameter k; writes the kernel and its reduction trace.
    Kernelize {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Kernel edge-list output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Trace JSON output (default: `<out>.trace.json`).
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        witness: bool,
    },
    /// Greedy bisection from a maximal matching, with its guarantee.
    Bisect {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// The ⌈m/2⌉ and ⌈pm⌉ lower bounds.
    Bound { file: PathBuf },
    /// Write a generated graph in edge-list format.
    Gen {
        family: GenFamily,
        /// Vertex count (gnp, gnm, complete, path, cycle).
        #[arg(long)]
        n: Option<usize>,
        /// Leaf count (star).
        #[arg(long)]
        leaves: Option<usize>,
        /// Edge probability (gnp).
        #[arg(long)]
        p: Option<f64>,
        /// Edge count (gnm).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a grid of generated instances and write one CSV row each.
    Bench {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Star,
    Complete,
    Gnp,
    Gnm,
    Path,
    Cycle,
}

fn load(path: &PathBuf) -> Result<ParsedGraph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("json values serialize"));
}

fn solve(file: PathBuf, k: i64, witness: bool, limit: usize) -> Result<ExitCode> {
    let parsed = load(&file)?;
    let g = &parsed.graph;
    let r = decide_atlb(g, k, limit)?;
    let mut out = json!({
        "answer": r.answer,
        "k": k,
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "bound": r.bound_used,
        "path": r.path.as_str(),
        "cut": r.witness.as_ref().map(|b| b.cut_size()),
        "input_format": parsed.format.as_str(),
    });
    if witness {
        out["witness_x"] = json!(r.witness.as_ref().map(|b| b.side_x().to_vec()));
    }
    print_json(&out);
    Ok(if r.answer { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn kernelize_cmd(
    file: PathBuf,
    k: usize,
    out: Option<PathBuf>,
    trace: Option<PathBuf>,
    witness: bool,
) -> Result<ExitCode> {
    if k == 0 {
        bail!("kernelize needs --k >= 1");
    }
    let parsed = load(&file)?;
    let (g, padded) = normalize_even(&parsed.graph);
    let base = json!({
        "k": k,
        "n": parsed.graph.vertex_count(),
        "m": g.edge_count(),
        "padded": padded,
        "bound": half_ceil(g.edge_count()) + k,
        "input_format": parsed.format.as_str(),
    });
    let mut summary = base;
    match kernelize(&g, k)? {
        KernelOutcome::EarlyYes { witness: w, reason } => {
            summary["outcome"] = json!("early_yes");
            summary["reason"] = json!(match reason {
                EarlyYesReason::BigMatching => "big_matching",
                EarlyYesReason::Case1 => "case1",
            });
            summary["cut"] = json!(w.cut_size());
            if witness {
                summary["witness_x"] = json!(w.side_x());
            }
        }
        KernelOutcome::Reduced(kernel) => {
            let (kn, km) = (kernel.graph.vertex_count(), kernel.graph.edge_count());
            summary["outcome"] = json!("reduced");
            summary["kernel_n"] = json!(kn);
            summary["kernel_m"] = json!(km);
            summary["vertex_bound"] = json!(vertex_bound(k));
            summary["edge_bound"] = json!(edge_bound(k, kn));
            summary["trace_steps"] = json!(kernel.trace.steps.len());
            summary["id_map"] = json!(kernel.id_map);
            if let Some(out) = out {
                fs::write(&out, edge_list_string(&kernel.graph))
                    .with_context(|| format!("writing {}", out.display()))?;
                let trace_path = trace.unwrap_or_else(|| {
                    let mut p = out.clone().into_os_string();
                    p.push(".trace.json");
                    PathBuf::from(p)
                });
                let text = serde_json::to_string_pretty(&trace_to_json(&kernel.trace))?;
                fs::write(&trace_path, text + "\n")
                    .with_context(|| format!("writing {}", trace_path.display()))?;
                summary["kernel_file"] = json!(out.display().to_string());
                summary["trace_file"] = json!(trace_path.display().to_string());
            }
        }
    }
    print_json(&summary);
    Ok(ExitCode::SUCCESS)
}

fn bisect(file: PathBuf, witness: bool) -> Result<ExitCode> {
    let parsed = load(&file)?;
    let (g, _) = normalize_even(&parsed.graph);
    let m = maximal_matching(&g);
    let b = greedy_bisection(&g, &m, &SeedPartition::empty())?;
    let bound = matching_bound(g.edge_count(), m.len());
    if b.cut_size() < bound {
        bail!("greedy cut {} below guarantee {bound}", b.cut_size());
    }
    let mut out = json!({
        "cut": b.cut_size(),
        "bound": bound,
        "matching_size": m.len(),
    });
    if witness {
        let n = parsed.graph.vertex_count();
        out["witness_x"] = json!(b.side_x().iter().filter(|&&v| v < n).collect::<Vec<_>>());
    }
    print_json(&out);
    Ok(ExitCode::SUCCESS)
}

fn bound(file: PathBuf) -> Result<ExitCode> {
    let g = load(&file)?.graph;
    print_json(&json!({
        "half_m_ceil": half_ceil(g.edge_count()),
        "pm_ceil": pm_lower_bound(&g),
    }));
    Ok(ExitCode::SUCCESS)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("this family needs --{flag}"))
}

fn gen(
    family: GenFamily,
    n: Option<usize>,
    leaves: Option<usize>,
    p: Option<f64>,
    m: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let g = match family {
        GenFamily::Star => generate::star(need(leaves, "leaves")?)?,
        GenFamily::Complete => generate::complete(need(n, "n")?)?,
        GenFamily::Gnp => generate::gnp(need(n, "n")?, need(p, "p")?, seed)?,
        GenFamily::Gnm => generate::gnm(need(n, "n")?, need(m, "m")?, seed)?,
        GenFamily::Path => generate::path(need(n, "n")?)?,
        GenFamily::Cycle => generate::cycle(need(n, "n")?)?,
    };
    let text = edge_list_string(&g);
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(config: PathBuf, out: Option<PathBuf>) -> Result<ExitCode> {
    let text = fs::read_to_string(&config)
        .with_context(|| format!("reading {}", config.display()))?;
    let cfg = BenchConfig::parse(&text)?;
    let rows = run_bench(&cfg)?;
    match out {
        Some(path) => {
            let file = fs::File::create(&path)
                .with_context(|| format!("creating {}", path.display()))?;
            write_csv(&rows, io::BufWriter::new(file))?;
        }
        None => write_csv(&rows, io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { file, k, witness, limit } => solve(file, k, witness, limit),
        Command::Kernelize { file, k, out, trace, witness } => kernelize_cmd(file, k, out, trace, witness),
        Command::Bisect { file, witness } => bisect(file, witness),
        Command::Bound { file } => bound(file),
        Command::Gen { family, n, leaves, p, m, seed, out } => gen(family, n, leaves, p, m, seed, out),
        Command::Bench { config, out } => bench(config, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
