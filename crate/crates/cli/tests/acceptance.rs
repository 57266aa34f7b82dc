//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero only
//! when a correctness criterion fails; the wall-clock part of criterion 1
//! and the scaling check of criterion 10 are reported but never fatal.
//!
//! Set `NEGSSSP_FULL_SCALING=1` to run criterion 10 at n = 2^12, 2^15, 2^17
//! instead of the default 2^6, 2^9, 2^12.

mod oracle;

use std::collections::HashSet;
use std::path::Path;
use std::process::Command;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use negsssp::context::ExecutionContext;
use negsssp::io::{bench, generate, BenchConfig, BenchFamily, GeneratorMode, GeneratorSpec};
use negsssp::ldd::{low_diam_decomposition, LddParams};
use negsssp::rng::Rng;
use negsssp::scaledown::{scale_down, ScaleDownInput};
use negsssp::solver::find_thresh;
use negsssp::sssp::{elim_neg, sp_with_few_neg_edges, StepBudget};
use negsssp::{build_graph, solve, Edge, Error, Graph, NegativeCycle, PriceFunction, SolveConfig, SsspOutcome, Weight};
use oracle::{bellman_ford, eta, floyd, has_negative_cycle, hidden_potential_graph, plus, random_graph, threshold_scan, with_dummy};

#[derive(Default)]
struct Report {
    fatal: Vec<u32>,
}

impl Report {
    fn line(&mut self, id: u32, pass: bool, blocking: bool, text: String) {
        let tag = if pass { "PASS" } else { "FAIL" };
        let note = if blocking || pass { "" } else { " (non-blocking)" };
        println!("criterion {id:>2} {tag}{note}: {text}");
        if !pass && blocking {
            self.fatal.push(id);
        }
    }
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `f(i)` for `i in 0..count` on all cores and collects the errors.
fn par_check(count: u64, f: impl Fn(u64) -> Result<(), String> + Sync) -> Vec<String> {
    let next = AtomicU64::new(0);
    let errors = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads() {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                if let Err(e) = f(i) {
                    errors.lock().unwrap().push(e);
                }
            });
        }
    });
    let mut errors = errors.into_inner().unwrap();
    errors.sort();
    errors
}

fn first(errors: &[String]) -> String {
    errors.first().map_or(String::new(), |e| format!("; first: {e}"))
}

/// Independent check that `c` is a closed walk in `g` of negative weight.
fn cycle_is_negative(g: &Graph, c: &NegativeCycle) -> bool {
    let k = c.edges.len();
    k > 0
        && (0..k).all(|i| g.edge(c.edges[i]).dst == g.edge(c.edges[(i + 1) % k]).src)
        && c.edges.iter().map(|&e| g.edge(e).weight).sum::<Weight>() < 0
}

fn reduced_costs_at_least(g: &Graph, phi: &PriceFunction, floor: Weight) -> bool {
    g.edges().iter().all(|e| e.weight + phi.get(e.src) - phi.get(e.dst) >= floor)
}

fn criterion_1(r: &mut Report) {
    let start = Instant::now();
    let errors = par_check(1000, |seed| {
        let mut rng = Rng::new(seed.wrapping_mul(0x9e37_79b9) ^ 1);
        let n = 1 + rng.below(60) as usize;
        let m = (rng.below(240.min(4 * n as u64) + 1) as usize).max(1);
        let mode = GeneratorMode::ALL[(seed % 3) as usize];
        let g = generate(&GeneratorSpec::new(n, m, -8, 15, mode, seed)).map_err(|e| format!("seed {seed}: {e}"))?;
        let s = rng.below(n as u64) as usize;
        let res = solve(&g, s, &SolveConfig::with_seed(seed)).map_err(|e| format!("seed {seed}: {e}"))?;
        match (&res.outcome, has_negative_cycle(&g)) {
            (SsspOutcome::Cycle(c), true) if cycle_is_negative(&g, c) => Ok(()),
            (SsspOutcome::Tree(t), false) if Some(&t.dist) == bellman_ford(&g, s).as_ref() => Ok(()),
            _ => Err(format!("seed {seed}: solver and oracle disagree")),
        }
    });
    let secs = start.elapsed().as_secs_f64();
    let correct = errors.is_empty();
    let fast = secs < 120.0;
    let text = format!(
        "oracle equivalence {}/1000{}; wall time {secs:.1} s on {} thread(s) (limit 120 s{})",
        1000 - errors.len(),
        first(&errors),
        threads(),
        if fast { "" } else { ", timing is hardware-dependent" },
    );
    if correct {
        r.line(1, fast, false, text);
    } else {
        r.line(1, false, true, text);
    }
}

/// Graph without the edges in `removed`.
fn without(g: &Graph, removed: &[usize]) -> Graph {
    let gone: HashSet<usize> = removed.iter().copied().collect();
    let edges = (0..g.m()).filter(|e| !gone.contains(e)).map(|e| *g.edge(e)).collect();
    Graph::new(g.n(), edges).unwrap()
}

fn criterion_2(r: &mut Report) {
    let errors = par_check(200, |i| {
        let mut rng = Rng::new(2000 + i);
        let n = 1 + rng.below(80) as usize;
        let m = rng.below(4 * n as u64 + 1) as usize;
        let g = random_graph(&mut rng, n, m, 0, 10);
        let d = floyd(&g).unwrap();
        let mut bad = Vec::new();
        for diam in [1, 5, 20, 200] {
            let res = low_diam_decomposition(&g, &LddParams::new(diam, n), &mut Rng::new(i)).unwrap();
            let reach = floyd(&without(&g, &res.removed)).unwrap();
            let violated = (0..n).any(|u| {
                (0..n).any(|v| reach[u][v].is_some() && reach[v][u].is_some() && d[u][v].unwrap() > diam)
            });
            if violated {
                bad.push(diam);
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(format!("graph {i}: D in {bad:?}"))
        }
    });
    r.line(2, errors.is_empty(), true, format!("LDD weak diameter, {} violating graphs of 200 x 4 D{}", errors.len(), first(&errors)));
}

fn criterion_3(r: &mut Report) {
    let errors = par_check(300, |i| {
        let mut rng = Rng::new(3000 + i);
        let b = 1 + rng.below(8) as Weight;
        let n = 2 + rng.below(49) as usize;
        let m = rng.below(4 * n as u64 + 1) as usize;
        let g = hidden_potential_graph(&mut rng, n, m, 2 * b, 2 * b).map_weights(|e| e.weight.max(-2 * b));
        let mut ctx = ExecutionContext::new(i, n);
        match scale_down(&ScaleDownInput { graph: &g, delta: n as u64, b }, &mut ctx) {
            Ok(phi) if reduced_costs_at_least(&g, &phi, -b) => Ok(()),
            Ok(_) => Err(format!("instance {i}: edge below -B")),
            Err(e) => Err(format!("instance {i}: {e}")),
        }
    });
    r.line(3, errors.is_empty(), true, format!("ScaleDown w_phi >= -B on {}/300{}", 300 - errors.len(), first(&errors)));
}

fn criterion_4(r: &mut Report) {
    let errors = par_check(300, |i| {
        let mut rng = Rng::new(4000 + i);
        let n = 1 + rng.below(50) as usize;
        let m = rng.below(4 * n as u64 + 1) as usize;
        let (h, s) = with_dummy(&hidden_potential_graph(&mut rng, n, m, 12, 6));
        match elim_neg(&h, s, &mut StepBudget::unlimited()) {
            Ok(phi) if reduced_costs_at_least(&h, &phi, 0) => Ok(()),
            Ok(_) => Err(format!("instance {i}: negative reduced cost")),
            Err(e) => Err(format!("instance {i}: {e}")),
        }
    });
    let exhausted = (0..10u64)
        .filter(|&i| {
            let g = generate(&GeneratorSpec::new(10 + 4 * i as usize, 40, -8, 15, GeneratorMode::PlantedCycle, 4500 + i))
                .unwrap();
            let (h, s) = with_dummy(&g);
            matches!(elim_neg(&h, s, &mut StepBudget::unlimited()), Err(Error::BudgetExhausted(_)))
        })
        .count();
    r.line(
        4,
        errors.is_empty() && exhausted == 10,
        true,
        format!("ElimNeg non-negative {}/300{}; BudgetExhausted on cycles {exhausted}/10", 300 - errors.len(), first(&errors)),
    );
}

fn criterion_5(r: &mut Report) {
    let mut ratios = Vec::new();
    let mut eta_ok = true;
    for n in [64usize, 256, 1024] {
        for t in [0, n / 4, n / 2, n] {
            // One negative edge followed by exactly t vertices.
            let edges: Vec<_> = (0..n).map(|i| (i, i + 1, if i + t == n { -1 } else { 2 })).collect();
            let g = build_graph(n + 1, &edges).unwrap();
            let sum_eta: usize = eta(&g, 0).iter().map(|x| x.unwrap()).sum();
            eta_ok &= sum_eta == t;
            let (_, stats) = negsssp::sssp::elim_neg_with_stats(&g, 0, &mut StepBudget::unlimited()).unwrap();
            ratios.push(stats.queue_ops() as f64 / (n + sum_eta) as f64);
        }
    }
    let (lo, hi) = ratios.iter().fold((f64::MAX, 0f64), |(a, b), &x| (a.min(x), b.max(x)));
    let c = (lo + hi) / 2.0;
    r.line(
        5,
        eta_ok && hi <= 3.0 * lo,
        true,
        format!("ElimNeg ops/(n + sum eta) in [{lo:.3}, {hi:.3}], c = {c:.3}, spread +-{:.0}%", 100.0 * (hi - c) / c),
    );
}

fn criterion_6(r: &mut Report) {
    let agree = AtomicU64::new(0);
    let errors = par_check(300, |i| {
        let mut rng = Rng::new(6000 + i);
        let n = 1 + rng.below(12) as usize;
        let m = rng.below(3 * n as u64 + 1) as usize;
        let g = random_graph(&mut rng, n, m, -10, 10);
        let mut ctx = ExecutionContext::new(i, n);
        let b = find_thresh(&g, 0, &mut ctx).map_err(|e| format!("seed {i}: {e}"))?;
        if b != threshold_scan(&g) {
            return Ok(());
        }
        agree.fetch_add(1, Ordering::Relaxed);
        if b > 0 && (has_negative_cycle(&plus(&g, b)) || !has_negative_cycle(&plus(&g, b - 1))) {
            return Err(format!("seed {i}: threshold postcondition"));
        }
        Ok(())
    });
    let agree = agree.into_inner();
    r.line(
        6,
        errors.is_empty() && agree >= 297,
        true,
        format!("FindThresh equals brute force on {agree}/300 (need 297){}", first(&errors)),
    );
}

fn criterion_7(r: &mut Report) {
    let restarts = Mutex::new(Vec::new());
    let errors = par_check(200, |i| {
        let mut rng = Rng::new(7000 + i);
        let n = 2 + rng.below(59) as usize;
        let m = n + rng.below(3 * n as u64 + 1) as usize;
        let g = generate(&GeneratorSpec::new(n, m, -8, 15, GeneratorMode::PlantedCycle, 7000 + i)).unwrap();
        let res = solve(&g, 0, &SolveConfig::with_seed(i)).map_err(|e| format!("instance {i}: {e}"))?;
        restarts.lock().unwrap().push(res.diagnostics.restarts);
        match res.outcome {
            SsspOutcome::Cycle(c) if cycle_is_negative(&g, &c) => Ok(()),
            _ => Err(format!("instance {i}: no negative cycle returned")),
        }
    });
    let mut restarts = restarts.into_inner().unwrap();
    restarts.sort();
    let median = restarts.get(restarts.len() / 2).copied().unwrap_or(0);
    r.line(
        7,
        errors.is_empty() && median <= 3,
        true,
        format!("negative cycles {}/200{}; median restarts {median} (limit 3)", 200 - errors.len(), first(&errors)),
    );
}

fn criterion_8(r: &mut Report) {
    let errors = par_check(500, |i| {
        let mut rng = Rng::new(8000 + i);
        let n = 1 + rng.below(20) as usize;
        let m = rng.below(3 * n as u64 + 1) as usize;
        let (h, s) = with_dummy(&hidden_potential_graph(&mut rng, n, m, 8, 4));
        let k = rng.below(5) as usize;
        let est = sp_with_few_neg_edges(&h, s, k).map_err(|e| format!("instance {i}: {e}"))?;
        let next = sp_with_few_neg_edges(&h, s, k + 1).map_err(|e| format!("instance {i}: {e}"))?;
        let d = bellman_ford(&h, s).unwrap();
        let e = eta(&h, s);
        let ok = (0..h.n()).all(|v| {
            let (dv, ev) = (d[v].unwrap(), est[v].unwrap());
            dv <= ev && ev <= 0 && (e[v].unwrap() > k || ev == dv) && next[v].unwrap() <= ev
        });
        if ok {
            Ok(())
        } else {
            Err(format!("instance {i} (k = {k})"))
        }
    });
    r.line(8, errors.is_empty(), true, format!("SPWithFewNegEdges exact within eta <= k on {}/500{}", 500 - errors.len(), first(&errors)));
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_negsssp")).args(args).output().expect("spawn negsssp");
    (out.status.code(), out.stdout)
}

/// Runs the command twice and returns its output if both runs agree.
fn twice(args: &[&str], diffs: &mut Vec<String>) -> (Option<i32>, Vec<u8>) {
    let a = run_cli(args);
    let b = run_cli(args);
    if a != b {
        diffs.push(args.join(" "));
    }
    a
}

fn criterion_9(r: &mut Report, dir: &Path) {
    let mut diffs = Vec::new();
    let mut failures = Vec::new();
    let mut runs = 0;
    let path = |name: &str| dir.join(name).to_str().unwrap().to_string();
    for seed in 0..12u64 {
        let n = (1 + 5 * seed).to_string();
        let m = (4 + 20 * seed).to_string();
        let mode = GeneratorMode::ALL[(seed % 3) as usize].name();
        let s = seed.to_string();
        let graph = path(&format!("g{seed}.dimacs"));
        let nonneg = path(&format!("nn{seed}.dimacs"));
        let result = path(&format!("r{seed}.txt"));

        let (_, text) = twice(&["gen", "--n", &n, "--m", &m, "--mode", mode, "--seed", &s], &mut diffs);
        std::fs::write(&graph, text).unwrap();
        let (_, text) = twice(&["gen", "--n", &n, "--m", &m, "--lo", "0", "--hi", "9", "--seed", &s], &mut diffs);
        std::fs::write(&nonneg, text).unwrap();

        let (code, text) = twice(&["solve", "--input", &graph, "--seed", &s], &mut diffs);
        if !matches!(code, Some(0 | 1)) {
            failures.push(format!("solve on {graph} exited {code:?}"));
        }
        std::fs::write(&result, text).unwrap();
        let (code, _) = twice(&["verify", "--input", &graph, "--result", &result], &mut diffs);
        if code != Some(0) {
            failures.push(format!("verify on {graph} exited {code:?}"));
        }
        let (code, _) = twice(&["ldd", "--input", &nonneg, "--diameter", "8", "--seed", &s], &mut diffs);
        if code != Some(0) {
            failures.push(format!("ldd on {nonneg} exited {code:?}"));
        }
        runs += 5;
    }
    twice(&["bench", "--sizes", "16,64", "--mode", "hidden-potential,planted-cycle", "--seed", "3"], &mut diffs);
    runs += 1;
    let pass = diffs.is_empty() && failures.is_empty();
    let detail = diffs.first().or(failures.first()).map_or(String::new(), |d| format!("; first: {d}"));
    r.line(
        9,
        pass,
        true,
        format!("CLI determinism over {runs} command pairs, {} differing, {} failed{detail}", diffs.len(), failures.len()),
    );
}

fn criterion_10(r: &mut Report) {
    let full = std::env::var("NEGSSSP_FULL_SCALING").is_ok_and(|v| v == "1");
    let sizes: [usize; 3] = if full { [1 << 12, 1 << 15, 1 << 17] } else { [1 << 6, 1 << 9, 1 << 12] };
    let families = sizes
        .iter()
        .map(|&n| BenchFamily {
            label: format!("hp-{n}"),
            spec: GeneratorSpec::new(n, 4 * n, -100, 100, GeneratorMode::HiddenPotential, 10),
        })
        .collect();
    let mut cfg = BenchConfig::new(families);
    cfg.parallel = threads();
    let rows = bench(&cfg).unwrap();
    let growth = |f: &dyn Fn(usize) -> f64| [f(1) / f(0), f(2) / f(1)];
    let solver = growth(&|i| rows[i].solver_steps as f64);
    let bf = growth(&|i| rows[i].bf_relaxations.unwrap_or(0) as f64);
    let agrees = rows.iter().all(|row| row.agrees == Some(true));
    let solver_ok = solver.iter().all(|&x| x <= 30.0);
    let bf_ok = bf.iter().all(|&x| x >= 40.0);
    r.line(
        10,
        solver_ok && bf_ok,
        !agrees,
        format!(
            "n = {sizes:?}: solver steps x{:.1}, x{:.1} per 8x (gate 30); Bellman-Ford x{:.1}, x{:.1} (expected >= 40){}",
            solver[0],
            solver[1],
            bf[0],
            bf[1],
            if agrees { "" } else { "; solver and Bellman-Ford disagree" },
        ),
    );
}

fn criterion_11(r: &mut Report) {
    let edges: Vec<_> = (0..64).map(|i| Edge::new(i, (i + 1) % 64, 1)).collect();
    let g = Graph::new(64, edges).unwrap();
    let means: Vec<f64> = [64, 256, 1024]
        .into_iter()
        .map(|d| {
            let total: usize = (0..300)
                .map(|seed| low_diam_decomposition(&g, &LddParams::new(d, 64), &mut Rng::new(seed)).unwrap().removed.len())
                .sum();
            total as f64 / 300.0 / 64.0
        })
        .collect();
    let pass = means.windows(2).all(|w| w[1] <= w[0] * 1.1 + 1e-12);
    r.line(11, pass, true, format!("LDD mean |E_rem|/m for D = 64, 256, 1024: {means:.4?}"));
}

fn main() {
    let dir = std::env::temp_dir().join(format!("negsssp-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut r = Report::default();
    criterion_1(&mut r);
    criterion_2(&mut r);
    criterion_3(&mut r);
    criterion_4(&mut r);
    criterion_5(&mut r);
    criterion_6(&mut r);
    criterion_7(&mut r);
    criterion_8(&mut r);
    criterion_9(&mut r, &dir);
    criterion_10(&mut r);
    criterion_11(&mut r);
    let _ = std::fs::remove_dir_all(&dir);
    if !r.fatal.is_empty() {
        eprintln!("blocking criteria failed: {:?}", r.fatal);
        std::process::exit(1);
    }
}
