use std::path::PathBuf;
use std::process::{Command, Output};

use maxbisect::bench::CSV_HEADER;
use maxbisect::format::{parse_graph, read_graph};
use maxbisect::trace::trace_from_json;
use maxbisect_core::{generate, lift_witness, max_bisection_exact, Graph};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxbisect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn solve_star_is_no() {
    let out = run(&["solve", data("star6.el").to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_out(&out);
    assert_eq!(v["answer"], false);
    assert_eq!(v["bound"], 4);
    assert_eq!(v["path"], "kernel_bruteforce");
    assert!(v["cut"].is_null());
}

#[test]
fn solve_c4_is_yes() {
    let out = run(&["solve", data("c4.el").to_str().unwrap(), "--k", "2", "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_out(&out);
    assert_eq!(v["answer"], true);
    assert_eq!(v["cut"], 4);
    assert_eq!(v["m"], 4);
    assert_eq!(v["witness_x"].as_array().unwrap().len(), 2);
}

#[test]
fn solve_dimacs_input() {
    let out = run(&["solve", data("c4.col").to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_out(&out);
    assert_eq!(v["input_format"], "dimacs");
    assert_eq!(v["cut"], 4);
}

#[test]
fn solve_nonpositive_k() {
    let out = run(&["solve", data("star6.el").to_str().unwrap(), "--k", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out)["path"], "trivial_k_nonpositive");
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["solve", data("malformed.el").to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = run(&["solve", data("missing.el").to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn undecided_kernel_exits_2() {
    // K_{4,40}: the big side shrinks to 4, leaving an 8-vertex kernel for k = 3.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kab.el");
    std::fs::write(&path, maxbisect::format::edge_list_string(&generate::complete_bipartite(4, 40))).unwrap();
    let out = run(&["solve", path.to_str().unwrap(), "--k", "3", "--limit", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("undecided"));
}

#[test]
fn kernelize_star_writes_kernel_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let kernel_path = dir.path().join("kernel.el");
    let out = run(&[
        "kernelize",
        data("star6.el").to_str().unwrap(),
        "--k",
        "1",
        "--out",
        kernel_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_out(&out);
    assert_eq!(v["outcome"], "reduced");
    assert_eq!((v["kernel_n"].as_u64(), v["kernel_m"].as_u64()), (Some(2), Some(1)));
    assert_eq!(v["vertex_bound"], 8);
    assert_eq!(v["edge_bound"], 16);

    // the written files are enough to lift a kernel solution back
    let kernel = read_graph(&kernel_path).unwrap().graph;
    assert_eq!(kernel, generate::complete(2).unwrap());
    let trace_text = std::fs::read_to_string(dir.path().join("kernel.el.trace.json")).unwrap();
    let trace = trace_from_json(&trace_text).unwrap();
    let id_map: Vec<usize> = serde_json::from_value(v["id_map"].clone()).unwrap();
    let (_, kb) = max_bisection_exact(&kernel, 24).unwrap();
    let original = read_graph(data("star6.el")).unwrap().graph;
    let lifted = lift_witness(&original, &kb, &trace, &id_map).unwrap();
    assert_eq!(lifted.cut_size(), 3);
}

#[test]
fn kernelize_early_yes() {
    let out = run(&["kernelize", data("p4.el").to_str().unwrap(), "--k", "1"]);
    let v = json_out(&out);
    assert_eq!(v["outcome"], "early_yes");
    assert_eq!(v["reason"], "big_matching");
    assert!(v["cut"].as_u64().unwrap() >= 3);

    let out = run(&["kernelize", data("h12.el").to_str().unwrap(), "--k", "1"]);
    let v = json_out(&out);
    assert_eq!(v["reason"], "case1");
    assert!(v["cut"].as_u64().unwrap() >= 4);
}

#[test]
fn bisect_reports_guarantee() {
    for (file, bound, matching) in [("c4.el", 3, 2), ("star6.el", 3, 1), ("p4.el", 3, 2)] {
        let out = run(&["bisect", data(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let v = json_out(&out);
        assert_eq!(v["bound"], bound, "{file}");
        assert_eq!(v["matching_size"], matching, "{file}");
        assert!(v["cut"].as_u64().unwrap() >= bound);
    }
}

#[test]
fn bound_examples() {
    for (file, half, pm) in [("k4.el", 3, 4), ("edgeless4.el", 0, 0), ("star6.el", 3, 3)] {
        let v = json_out(&run(&["bound", data(file).to_str().unwrap()]));
        assert_eq!(v["half_m_ceil"], half, "{file}");
        assert_eq!(v["pm_ceil"], pm, "{file}");
    }
}

#[test]
fn gen_matches_generators() {
    let out = run(&["gen", "star", "--leaves", "5"]);
    let g = parse_graph(&String::from_utf8(out.stdout).unwrap()).unwrap().graph;
    assert_eq!(g, generate::star(5).unwrap());

    let out = run(&["gen", "gnp", "--n", "12", "--p", "0.3", "--seed", "42"]);
    let g = parse_graph(&String::from_utf8(out.stdout).unwrap()).unwrap().graph;
    assert_eq!(g.edge_count(), 24);

    let out = run(&["gen", "gnp", "--n", "12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.el");
    let out = run(&["gen", "complete", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(read_graph(&path).unwrap().graph, generate::complete(4).unwrap());
}

#[test]
fn round_trip_through_writer() {
    let dir = tempfile::tempdir().unwrap();
    for (i, g) in [
        generate::gnp(30, 0.2, 3).unwrap(),
        generate::star(7).unwrap(),
        Graph::empty(5),
        generate::cycle(9).unwrap(),
    ]
    .into_iter()
    .enumerate()
    {
        let path = dir.path().join(format!("g{i}.el"));
        std::fs::write(&path, maxbisect::format::edge_list_string(&g)).unwrap();
        assert_eq!(read_graph(&path).unwrap().graph, g);
    }
}

fn strip_elapsed(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| l.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_default())
        .collect()
}

#[test]
fn bench_smoke() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&["bench", data("smoke.cfg").to_str().unwrap(), "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let text_a = std::fs::read_to_string(&a).unwrap();
    let text_b = std::fs::read_to_string(&b).unwrap();
    assert_eq!(strip_elapsed(&text_a), strip_elapsed(&text_b));

    let mut reader = csv::Reader::from_reader(text_a.as_bytes());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    for row in &rows {
        if &row[5] == "kernel_bruteforce" {
            let kn: usize = row[6].parse().unwrap();
            let bound: usize = row[8].parse().unwrap();
            assert!(kn <= bound);
        }
        let cut: usize = row[9].parse().unwrap();
        let guarantee: usize = row[10].parse().unwrap();
        assert!(cut >= guarantee);
    }
}

#[test]
fn bench_empty_grid_and_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("empty.cfg");
    std::fs::write(&cfg, "family =\n").unwrap();
    let out = run(&["bench", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), CSV_HEADER.join(","));

    std::fs::write(&cfg, "family = moebius\n").unwrap();
    assert_eq!(run(&["bench", cfg.to_str().unwrap()]).status.code(), Some(2));
}
