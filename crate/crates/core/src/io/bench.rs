//! Solver-versus-Bellman-Ford benchmark over generated families.

use std::fmt::Write as _;
use std::time::Instant;

use super::generate::{generate, GeneratorSpec};
use crate::context::Constants;
use crate::error::Result;
use crate::graph::add_dummy_source;
use crate::solver::{solve, SolveConfig, SsspOutcome};
use crate::sssp::bellman_ford_counted;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchFamily {
    pub label: String,
    pub spec: GeneratorSpec,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub families: Vec<BenchFamily>,
    /// Solver seed; instance seeds live in each family's spec.
    pub seed: u64,
    pub constants: Constants,
    /// Also run Bellman-Ford from a dummy source.
    pub oracle: bool,
    /// Record wall-clock times. Off by default so reports are byte-stable.
    pub timing: bool,
    /// Families run concurrently on this many threads.
    pub parallel: usize,
}

impl BenchConfig {
    pub fn new(families: Vec<BenchFamily>) -> Self {
        BenchConfig { families, seed: 0, constants: Constants::default(), oracle: true, timing: false, parallel: 1 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub outcome: &'static str,
    pub solver_steps: u64,
    pub mc_attempts: u64,
    pub restarts: u32,
    pub ldd_calls: u64,
    pub scale_down_calls: u64,
    /// `None` when the oracle is off.
    pub bf_relaxations: Option<u64>,
    /// Oracle agrees on tree-versus-cycle.
    pub agrees: Option<bool>,
    pub solve_ms: Option<f64>,
    pub bf_ms: Option<f64>,
}

fn run_family(fam: &BenchFamily, cfg: &BenchConfig) -> Result<BenchRow> {
    let g = generate(&fam.spec)?;
    let solve_cfg = SolveConfig { seed: cfg.seed, constants: cfg.constants };
    let start = Instant::now();
    let res = if g.n() == 0 { None } else { Some(solve(&g, 0, &solve_cfg)?) };
    let solve_ms = start.elapsed().as_secs_f64() * 1e3;
    let outcome = match res.as_ref().map(|r| &r.outcome) {
        Some(SsspOutcome::Cycle(_)) => "cycle",
        _ => "tree",
    };
    let diag = res.map(|r| r.diagnostics).unwrap_or_default();
    let (bf_relaxations, agrees, bf_ms) = if cfg.oracle {
        let (h, s) = add_dummy_source(&g);
        let mut relax = 0;
        let start = Instant::now();
        let bf = bellman_ford_counted(&h, s, &mut relax)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        (Some(relax), Some(bf.has_cycle() == (outcome == "cycle")), Some(ms))
    } else {
        (None, None, None)
    };
    Ok(BenchRow {
        label: fam.label.clone(),
        n: g.n(),
        m: g.m(),
        outcome,
        solver_steps: diag.steps_used,
        mc_attempts: diag.monte_carlo_attempts,
        restarts: diag.restarts,
        ldd_calls: diag.ldd_calls,
        scale_down_calls: diag.scale_down_calls,
        bf_relaxations,
        agrees,
        solve_ms: cfg.timing.then_some(solve_ms),
        bf_ms: bf_ms.filter(|_| cfg.timing),
    })
}

/// One row per family, in family order.
pub fn bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let threads = cfg.parallel.max(1).min(cfg.families.len().max(1));
    if threads == 1 {
        return cfg.families.iter().map(|f| run_family(f, cfg)).collect();
    }
    let mut slots: Vec<Option<Result<BenchRow>>> = vec![None; cfg.families.len()];
    std::thread::scope(|scope| {
        for (t, chunk) in slots.chunks_mut(cfg.families.len().div_ceil(threads)).enumerate() {
            let base = t * cfg.families.len().div_ceil(threads);
            scope.spawn(move || {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(run_family(&cfg.families[base + i], cfg));
                }
            });
        }
    });
    slots.into_iter().map(|s| s.expect("every family ran")).collect()
}

/// Tab-separated report with a header line.
pub fn format_report(rows: &[BenchRow], timing: bool) -> String {
    let mut out = String::from(
        "family\tn\tm\toutcome\tsolver_steps\tmc_attempts\trestarts\tldd_calls\tscale_down_calls\tbf_relaxations\tagrees",
    );
    if timing {
        out.push_str("\tsolve_ms\tbf_ms");
    }
    out.push('\n');
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    for r in rows {
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.label,
            r.n,
            r.m,
            r.outcome,
            r.solver_steps,
            r.mc_attempts,
            r.restarts,
            r.ldd_calls,
            r.scale_down_calls,
            opt(r.bf_relaxations.map(|x| x.to_string())),
            opt(r.agrees.map(|x| x.to_string())),
        );
        if timing {
            let _ = write!(out, "\t{}\t{}", opt(r.solve_ms.map(|x| format!("{x:.3}"))), opt(r.bf_ms.map(|x| format!("{x:.3}"))));
        }
        out.push('\n');
    }
    out
}
