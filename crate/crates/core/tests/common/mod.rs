#![allow(dead_code)]

use maxbisect_core::generate;
use maxbisect_core::Graph;

/// Max bisection over every subset of size `⌊n'/2⌋` of the padded vertex set,
/// without symmetry pruning. Only for tiny graphs.
pub fn brute_force_max_bisection(g: &Graph) -> usize {
    let n = g.vertex_count() + g.vertex_count() % 2;
    assert!(n <= 20, "brute force oracle is for tiny graphs");
    if n == 0 {
        return 0;
    }
    (0u32..1 << n)
        .filter(|x| x.count_ones() as usize == n / 2)
        .map(|x| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| (x >> u & 1) != (x >> v & 1))
                .count()
        })
        .max()
        .unwrap()
}

pub fn half_ceil(m: usize) -> usize {
    m.div_ceil(2)
}

#[derive(Clone)]
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: String, graph: Graph) -> Named {
    Named { name, graph }
}

/// G(n, p) for n in 10, 12, ..., 60, p in {0.1, 0.3, 0.7}, seven seeds each (546 graphs).
pub fn gnp_corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in (10..=60).step_by(2) {
        for p in [0.1, 0.3, 0.7] {
            for seed in 0..7u64 {
                let seed = seed * 1_000 + n as u64;
                out.push(named(
                    format!("gnp-{n}-{p}-{seed}"),
                    generate::gnp(n, p, seed).unwrap(),
                ));
            }
        }
    }
    out
}

/// 200 seeded G(n, p) graphs with 2 <= n <= 12.
pub fn small_gnp_corpus() -> Vec<Named> {
    let ps = [0.15, 0.3, 0.5, 0.7];
    (0..200u64)
        .map(|i| {
            let n = 2 + (i as usize % 11);
            let p = ps[(i as usize / 11) % ps.len()];
            named(format!("small-gnp-{n}-{p}-{i}"), generate::gnp(n, p, 7_000 + i).unwrap())
        })
        .collect()
}

/// Stars, paths, cycles, complete and complete bipartite graphs, double stars and edgeless graphs.
pub fn named_families(max_n: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for m in 1..max_n {
        out.push(named(format!("star-{m}"), generate::star(m).unwrap()));
    }
    for n in 1..=max_n {
        out.push(named(format!("path-{n}"), generate::path(n).unwrap()));
        out.push(named(format!("complete-{n}"), generate::complete(n).unwrap()));
        out.push(named(format!("edgeless-{n}"), Graph::empty(n)));
    }
    for n in 3..=max_n {
        out.push(named(format!("cycle-{n}"), generate::cycle(n).unwrap()));
    }
    for a in 1..=max_n / 2 {
        for b in a..=max_n - a {
            out.push(named(format!("kab-{a}-{b}"), generate::complete_bipartite(a, b)));
        }
    }
    for a in 0..=4 {
        for b in 0..=3 {
            for c in 0..=4 {
                if 2 + a + b + c <= max_n {
                    out.push(named(
                        format!("dstar-{a}-{b}-{c}"),
                        generate::double_star_with_isolates(a, b, c),
                    ));
                }
            }
        }
    }
    out
}

/// Everything the property and acceptance suites sweep over.
pub fn full_corpus() -> Vec<Named> {
    let mut all = gnp_corpus();
    all.extend(small_gnp_corpus());
    all.extend(named_families(16));
    all
}
