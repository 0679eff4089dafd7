use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gqlab_core::adversary::{
    adversary_bound, cycle_relation_params, gadget_relation_params, parity_relation,
};
use gqlab_core::graph::{read_graph, write_graph, Graph};
use gqlab_core::grover::{BoostPolicy, GroverConfig};
use gqlab_core::harness::{
    emit_csv, emit_report, fit_exponent, generate_instance, ground_truth, run_algorithm,
    run_suite, run_sweep, Algorithm, Family, Suite, SweepConfig, XField,
};
use gqlab_core::instances::{
    gen_origin_gadget, gen_parity_graph, parse_bits, GadgetSpec, ParitySpec,
};
use gqlab_core::GraphView;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser, Debug)]
#[command(name = "gqlab", version, about = "Query-count experiments for quantum graph connectivity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated instance in the graph text format
    Gen(GenArgs),
    /// Run one algorithm on a graph file
    Run(RunArgs),
    /// Run a sweep described by a key = value config file
    Bench(BenchArgs),
    /// Print adversary parameter tables
    Adversary(AdversaryArgs),
    /// Run invariant suites
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    /// Vertex count, or levels p for the gadget and parity families
    #[arg(long, required_unless_present = "x")]
    n: Option<usize>,
    /// Out-degree for list families, set-cell count for gnm
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    /// Explicit bit string for the parity and gadget families (overrides n)
    #[arg(long)]
    x: Option<String>,
    /// Output path; stdout when absent
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct GroverArgs {
    #[arg(long)]
    boost: Option<BoostPolicy>,
    #[arg(long)]
    bbht_lambda: Option<f64>,
    #[arg(long)]
    bbht_cutoff: Option<f64>,
    #[arg(long)]
    dh_budget: Option<f64>,
}

impl GroverArgs {
    fn apply(&self, mut cfg: GroverConfig) -> GroverConfig {
        if let Some(b) = self.boost {
            cfg.boost = b;
        }
        if let Some(v) = self.bbht_lambda {
            cfg.bbht_lambda = v;
        }
        if let Some(v) = self.bbht_cutoff {
            cfg.bbht_cutoff_factor = v;
        }
        if let Some(v) = self.dh_budget {
            cfg.dh_budget_factor = v;
        }
        cfg
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    grover: GroverArgs,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's output path
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Fit median queries against this column
    #[arg(long)]
    fit: Option<XField>,
    /// Write the fit as JSON (needs --fit)
    #[arg(long, requires = "fit")]
    report: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum RelationKind {
    Parity,
    Cycle,
    Gadget,
}

#[derive(Args, Debug)]
struct AdversaryArgs {
    #[arg(long, value_enum)]
    relation: RelationKind,
    /// Sizes for parity and cycle, e.g. `9-30` or `9,12,15`
    #[arg(long)]
    n: Option<String>,
    /// Levels for gadget
    #[arg(long)]
    p: Option<String>,
    /// Out-degrees for gadget
    #[arg(long)]
    k: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long, default_value = "all")]
    suite: String,
}

fn parse_sizes(spec: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    bail!("empty range {part:?}");
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().with_context(|| format!("bad size {part:?}"))?),
        }
    }
    Ok(out)
}

fn gen(args: GenArgs) -> Result<()> {
    let g: Graph = match (&args.x, args.family) {
        (Some(bits), Family::Parity) => gen_parity_graph(&ParitySpec { x: parse_bits(bits)? })?.into(),
        (Some(bits), Family::OriginGadget | Family::OriginGadgetPositive) => {
            gen_origin_gadget(&GadgetSpec::random(parse_bits(bits)?, args.k, args.seed))?.into()
        }
        (Some(_), f) => bail!("--x only applies to parity and gadget families, not {f}"),
        (None, f) => generate_instance(f, args.n.unwrap_or(0), args.k, args.edge_prob, args.seed)?,
    };
    let text = write_graph(&g);
    match args.out {
        Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<()> {
    let g = read_graph(&args.graph)?;
    let cfg = args.grover.apply(GroverConfig { rng_seed: args.seed, ..GroverConfig::default() });
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (answer, queries) = run_algorithm(args.algo, &g, &cfg, &mut rng)?;
    println!(
        "algorithm={} n={} answer={answer} queries={queries} truth={}",
        args.algo,
        g.vertex_count(),
        ground_truth(&g)
    );
    Ok(())
}

fn bench(args: BenchArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let cfg = SweepConfig::parse(&text)?;
    let out = args
        .out
        .or_else(|| cfg.output.clone())
        .context("no output path: set `output` in the config or pass --out")?;
    let records = run_sweep(&cfg)?;
    emit_csv(&records, &out)?;

    let mut points: BTreeMap<(usize, usize), Vec<&_>> = BTreeMap::new();
    for r in &records {
        points.entry((r.n, r.k)).or_default().push(r);
    }
    println!("{:>8} {:>6} {:>7} {:>14} {:>9}", "n", "k", "trials", "median_queries", "correct");
    for ((n, k), rs) in &points {
        let mut q: Vec<u64> = rs.iter().map(|r| r.queries).collect();
        q.sort_unstable();
        let median = if q.len() % 2 == 1 {
            q[q.len() / 2] as f64
        } else {
            (q[q.len() / 2 - 1] + q[q.len() / 2]) as f64 / 2.0
        };
        let correct = rs.iter().filter(|r| r.correct).count() as f64 / rs.len() as f64;
        println!("{n:>8} {k:>6} {:>7} {median:>14.1} {correct:>9.3}", rs.len());
    }
    if let Some(x) = args.fit {
        let fit = fit_exponent(&records, x)?;
        println!(
            "fit: slope={:.4} intercept={:.4} residual={:.4} points={}",
            fit.slope, fit.intercept, fit.residual, fit.n_points
        );
        if let Some(path) = &args.report {
            emit_report(&fit, path)?;
        }
    }
    eprintln!("wrote {} records to {}", records.len(), out.display());
    Ok(())
}

fn adversary(args: AdversaryArgs) -> Result<()> {
    let row = |label: String, p: &gqlab_core::adversary::AdversaryParams| {
        println!("{label} {:>8} {:>8} {:>8} {:>12.6}", p.m, p.m_prime, p.l_max, p.bound)
    };
    match args.relation {
        RelationKind::Parity | RelationKind::Cycle => {
            let default = if matches!(args.relation, RelationKind::Parity) { "2-10" } else { "9-30" };
            let ns = parse_sizes(args.n.as_deref().unwrap_or(default))?;
            println!("{:>4} {:>8} {:>8} {:>8} {:>12}", "n", "m", "m'", "l_max", "bound");
            for n in ns {
                let p = match args.relation {
                    RelationKind::Parity => adversary_bound(&parity_relation(n)?)?,
                    _ => cycle_relation_params(n)?.params,
                };
                row(format!("{n:>4}"), &p);
            }
        }
        RelationKind::Gadget => {
            let ps = parse_sizes(args.p.as_deref().unwrap_or("2-6"))?;
            let ks = parse_sizes(args.k.as_deref().unwrap_or("2-5"))?;
            println!("{:>3} {:>3} {:>8} {:>8} {:>8} {:>12}", "p", "k", "m", "m'", "l_max", "bound");
            for &p in &ps {
                for &k in &ks {
                    row(format!("{p:>3} {k:>3}"), &gadget_relation_params(p, k)?.params);
                }
            }
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let mut ok = true;
    for suite in suites {
        let rep = run_suite(suite)?;
        let status = if rep.passed() { "ok" } else { "FAILED" };
        println!(
            "{}: {status} ({} checks, {} skipped, {} failures)",
            suite.name(),
            rep.checks,
            rep.skipped,
            rep.failures.len()
        );
        for f in rep.failures.iter().take(10) {
            println!("  {f}");
        }
        ok &= rep.passed();
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a).map(|_| true),
        Command::Run(a) => run(a).map(|_| true),
        Command::Bench(a) => bench(a).map(|_| true),
        Command::Adversary(a) => adversary(a).map(|_| true),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
