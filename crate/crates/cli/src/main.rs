use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use negsssp::context::Constants;
use negsssp::io::{
    bench, format_report, generate, lightest_cycle_edges, parse_dimacs, parse_result, verify_tree, write_dimacs,
    write_result, BenchConfig, BenchFamily, GeneratorMode, GeneratorSpec, ParsedResult,
};
use negsssp::ldd::{low_diam_decomposition, LddParams};
use negsssp::rng::Rng;
use negsssp::{solve, Graph, SolveConfig, SsspOutcome, Weight};

/// Shortest paths with negative integer weights.
#[derive(Parser)]
#[command(name = "negsssp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve from a source; exit 0 for a tree, 1 for a negative cycle.
    Solve(SolveArgs),
    /// Low-diameter decomposition of a non-negative graph.
    Ldd(LddArgs),
    /// Generate a random instance in DIMACS format.
    Gen(GenArgs),
    /// Check a solver result against its graph.
    Verify(VerifyArgs),
    /// Compare the solver with Bellman-Ford on generated families.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArg {
    /// DIMACS file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArg,
    /// 1-based source; defaults to the file's `s` line, then to 1.
    #[arg(long)]
    source: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-attempt step budget factor.
    #[arg(long)]
    budget_factor: Option<u64>,
    /// Monte-Carlo attempts per `ceil(log2 n)`.
    #[arg(long)]
    attempts: Option<u64>,
    #[arg(long)]
    max_restarts: Option<u32>,
}

#[derive(Args)]
struct LddArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long)]
    diameter: Weight,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = -8, allow_negative_numbers = true)]
    lo: Weight,
    #[arg(long, default_value_t = 15, allow_negative_numbers = true)]
    hi: Weight,
    /// raw-random, hidden-potential or planted-cycle.
    #[arg(long, default_value = "raw-random")]
    mode: GeneratorMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArg,
    /// Output of `solve`.
    #[arg(long)]
    result: PathBuf,
    /// Expected 1-based source of a tree.
    #[arg(long)]
    source: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_values_t = [256usize, 1024, 4096])]
    sizes: Vec<usize>,
    /// Edges per vertex.
    #[arg(long, default_value_t = 4)]
    m_factor: usize,
    #[arg(long, default_value_t = -100, allow_negative_numbers = true)]
    lo: Weight,
    #[arg(long, default_value_t = 100, allow_negative_numbers = true)]
    hi: Weight,
    #[arg(long, value_delimiter = ',', default_value = "hidden-potential")]
    mode: Vec<GeneratorMode>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add wall-clock columns; the report is then no longer reproducible.
    #[arg(long)]
    timing: bool,
    /// Skip the Bellman-Ford comparison.
    #[arg(long)]
    no_oracle: bool,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &PathBuf) -> Result<(Graph, Option<usize>)> {
    let inst = parse_dimacs(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok((inst.graph, inst.source))
}

fn zero_based(v: usize, n: usize) -> Result<usize> {
    if v == 0 || v > n {
        bail!("vertex {v} out of range 1..={n}");
    }
    Ok(v - 1)
}

fn emit(text: &str) -> Result<()> {
    io::stdout().lock().write_all(text.as_bytes()).context("writing stdout")
}

fn run_solve(args: &SolveArgs) -> Result<ExitCode> {
    let (g, declared) = load_graph(&args.input.input)?;
    if g.n() == 0 {
        bail!("graph has no vertices");
    }
    let s = match args.source {
        Some(v) => zero_based(v, g.n())?,
        None => declared.unwrap_or(0),
    };
    let mut constants = Constants::default();
    if let Some(k) = args.budget_factor {
        constants.budget_factor = k;
    }
    if let Some(c) = args.attempts {
        constants.mc_attempts_factor = c;
    }
    if let Some(r) = args.max_restarts {
        constants.max_restarts = r;
    }
    let res = solve(&g, s, &SolveConfig { seed: args.seed, constants })?;
    emit(&write_result(&res))?;
    Ok(match res.outcome {
        SsspOutcome::Tree(_) => ExitCode::SUCCESS,
        SsspOutcome::Cycle(_) => ExitCode::from(1),
    })
}

fn run_ldd(args: &LddArgs) -> Result<ExitCode> {
    let (g, _) = load_graph(&args.input.input)?;
    let params = LddParams::new(args.diameter, g.n());
    let res = low_diam_decomposition(&g, &params, &mut Rng::new(args.seed))?;
    let mut out = String::new();
    for e in &res.removed {
        out.push_str(&format!("{}\n", e + 1));
    }
    let st = &res.stats;
    out.push_str(&format!("c removed {} of {}\n", res.removed.len(), g.m()));
    out.push_str(&format!("c boundary_edges {}\n", st.boundary_edges));
    out.push_str(&format!("c premature_terminations {}\n", st.premature_terminations));
    out.push_str(&format!("c calls {}\n", st.calls));
    out.push_str(&format!("c max_depth {}\n", st.max_depth));
    out.push_str(&format!("c max_participation {}\n", st.max_participation));
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_gen(args: &GenArgs) -> Result<ExitCode> {
    let g = generate(&GeneratorSpec::new(args.n, args.m, args.lo, args.hi, args.mode, args.seed))?;
    emit(&write_dimacs(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let (g, _) = load_graph(&args.input.input)?;
    let text = fs::read_to_string(&args.result).with_context(|| format!("reading {}", args.result.display()))?;
    let verdict = match parse_result(&text, g.n())? {
        ParsedResult::Tree(t) => match args.source.map(|v| zero_based(v, g.n())).transpose()? {
            Some(s) if s != t.source => Err(format!("tree is rooted at {}, expected {}", t.source + 1, s + 1)),
            _ => verify_tree(&g, &t).map(|()| "ok tree".to_string()).map_err(|v| v.to_string()),
        },
        ParsedResult::Cycle { vertices, weight } => match lightest_cycle_edges(&g, &vertices) {
            None => Err("cycle uses a missing edge".to_string()),
            Some(edges) => {
                let sum = g.path_weight(&edges)?;
                if sum >= 0 {
                    Err(format!("cycle has weight {sum}"))
                } else if sum > weight {
                    Err(format!("cycle weighs at least {sum}, claimed {weight}"))
                } else {
                    Ok(format!("ok cycle weight {sum}"))
                }
            }
        },
    };
    match verdict {
        Ok(msg) => {
            emit(&format!("{msg}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(msg) => {
            emit(&format!("violation: {msg}\n"))?;
            Ok(ExitCode::from(1))
        }
    }
}

fn run_bench(args: &BenchArgs) -> Result<ExitCode> {
    let mut families = Vec::new();
    for &mode in &args.mode {
        for &n in &args.sizes {
            let spec = GeneratorSpec::new(n, n * args.m_factor, args.lo, args.hi, mode, args.seed);
            families.push(BenchFamily { label: format!("{mode}-{n}"), spec });
        }
    }
    let mut cfg = BenchConfig::new(families);
    cfg.seed = args.seed;
    cfg.timing = args.timing;
    cfg.oracle = !args.no_oracle;
    cfg.parallel = args.parallel;
    let rows = bench(&cfg)?;
    emit(&format_report(&rows, args.timing))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Ldd(a) => run_ldd(a),
        Command::Gen(a) => run_gen(a),
        Command::Verify(a) => run_verify(a),
        Command::Bench(a) => run_bench(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
