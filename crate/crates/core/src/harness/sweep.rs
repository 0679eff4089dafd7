use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{HarnessError, TrialRecord};
use crate::graph::{
    classical_connected, classical_strongly_connected, strongly_connected_adj, Graph, GraphView,
};
use crate::grover::{BoostPolicy, GroverConfig};
use crate::instances::{
    gen_cycle_instance, gen_origin_gadget, gen_parity_graph, gen_random_gnm, gen_random_list,
    gen_random_matrix, parity, CycleSpec, GadgetSpec, ParitySpec,
};
use crate::ledger::QueryLedger;
use crate::qconn::{
    q_connected, q_connected_learning, q_strongly_connected_list, q_strongly_connected_matrix,
    QconnError,
};

macro_rules! named_enum {
    ($name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $text),* }
            }
        }

        impl std::str::FromStr for $name {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)*
                    other => Err(HarnessError::Invalid(format!(
                        concat!("unknown ", stringify!($name), " {:?}"), other
                    ))),
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

named_enum!(Algorithm {
    ClassicalConnected => "classical_connected",
    ClassicalStronglyConnected => "classical_strongly_connected",
    QConnected => "q_connected",
    QConnectedLearning => "q_connected_learning",
    QStronglyConnectedMatrix => "q_strongly_connected_matrix",
    QStronglyConnectedList => "q_strongly_connected_list",
});

named_enum!(Family {
    OneCycle => "one-cycle",
    TwoCycle => "two-cycle",
    Gnp => "gnp",
    GnpDirected => "gnp-directed",
    Gnm => "gnm",
    RandomList => "random-list",
    OriginGadget => "origin-gadget",
    OriginGadgetPositive => "origin-gadget-positive",
    Parity => "parity",
});

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Undirected,
    Directed,
    List,
}

impl Family {
    fn shape(self) -> Shape {
        match self {
            Family::OneCycle | Family::TwoCycle | Family::Gnp | Family::Gnm => Shape::Undirected,
            Family::GnpDirected => Shape::Directed,
            _ => Shape::List,
        }
    }
}

impl Algorithm {
    fn accepts(self, shape: Shape) -> bool {
        match self {
            Algorithm::ClassicalConnected | Algorithm::QConnected | Algorithm::QConnectedLearning => {
                shape == Shape::Undirected
            }
            Algorithm::QStronglyConnectedMatrix => shape != Shape::List,
            Algorithm::QStronglyConnectedList => shape == Shape::List,
            Algorithm::ClassicalStronglyConnected => true,
        }
    }
}

/// A sweep over `(n, k, trial)`.
///
/// The family reads `n` as the vertex count except for the gadget and
/// parity families, where it is the number of levels `p`. `k` is the
/// out-degree for list families and the set-cell count `m` for `gnm`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub algorithm: Algorithm,
    pub family: Family,
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub edge_prob: f64,
    pub grover: GroverConfig,
    pub timing: bool,
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(algorithm: Algorithm, family: Family, n: Vec<usize>) -> Self {
        Self {
            algorithm,
            family,
            n,
            k: vec![0],
            trials: 1,
            seed: 0,
            edge_prob: 0.5,
            grover: GroverConfig::default(),
            timing: false,
            output: None,
        }
    }

    /// Flat `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut algorithm = None;
        let mut family = None;
        let mut cfg = SweepConfig::new(Algorithm::QConnected, Family::OneCycle, Vec::new());
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| HarnessError::Config { line: i + 1, msg };
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            let num = |v: &str| v.parse::<u64>().map_err(|_| err(format!("{key}: bad integer {v:?}")));
            let float = |v: &str| v.parse::<f64>().map_err(|_| err(format!("{key}: bad number {v:?}")));
            let list = |v: &str| -> Result<Vec<usize>, HarnessError> {
                v.split(',').map(|s| num(s.trim()).map(|x| x as usize)).collect()
            };
            let relabel = |e: HarnessError| err(e.to_string());
            match key {
                "algorithm" => algorithm = Some(value.parse().map_err(relabel)?),
                "family" => family = Some(value.parse().map_err(relabel)?),
                "n" => cfg.n = list(value)?,
                "k" => cfg.k = list(value)?,
                "trials" => cfg.trials = num(value)? as usize,
                "seed" => cfg.seed = num(value)?,
                "edge_prob" => cfg.edge_prob = float(value)?,
                "timing" => {
                    cfg.timing = value.parse().map_err(|_| err(format!("timing: bad bool {value:?}")))?
                }
                "output" => cfg.output = Some(PathBuf::from(value)),
                "bbht_lambda" => cfg.grover.bbht_lambda = float(value)?,
                "bbht_cutoff" => cfg.grover.bbht_cutoff_factor = float(value)?,
                "dh_budget" => cfg.grover.dh_budget_factor = float(value)?,
                "boost" => {
                    cfg.grover.boost =
                        value.parse::<BoostPolicy>().map_err(|e| err(e.to_string()))?
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let missing = |what: &str| HarnessError::Config { line: 0, msg: format!("missing {what}") };
        cfg.algorithm = algorithm.ok_or_else(|| missing("algorithm"))?;
        cfg.family = family.ok_or_else(|| missing("family"))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n.is_empty() {
            return Err(HarnessError::Invalid("n-list must be nonempty".into()));
        }
        if self.k.is_empty() {
            return Err(HarnessError::Invalid("k-list must be nonempty".into()));
        }
        if self.trials == 0 {
            return Err(HarnessError::Invalid("trials must be at least 1".into()));
        }
        if !self.algorithm.accepts(self.family.shape()) {
            return Err(HarnessError::Invalid(format!(
                "{} cannot run on {} instances",
                self.algorithm, self.family
            )));
        }
        self.grover.validate()?;
        Ok(())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed from the sweep seed and the point coordinates.
pub fn derive_seed(base: u64, n: usize, k: usize, trial: usize) -> u64 {
    [n as u64, k as u64, trial as u64]
        .into_iter()
        .fold(splitmix64(base), |h, v| splitmix64(h ^ v))
}

fn random_bits(p: usize, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..p).map(|_| rng.gen()).collect()
}

/// Instance of `family` at size parameters `(n, k)`.
pub fn generate_instance(
    family: Family,
    n: usize,
    k: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<Graph, HarnessError> {
    let g: Graph = match family {
        Family::OneCycle => gen_cycle_instance(&CycleSpec::one(n, seed))?.into(),
        Family::TwoCycle => gen_cycle_instance(&CycleSpec::two_random(n, seed)?)?.into(),
        Family::Gnp => gen_random_matrix(n, edge_prob, false, seed)?.into(),
        Family::GnpDirected => gen_random_matrix(n, edge_prob, true, seed)?.into(),
        Family::Gnm => gen_random_gnm(n, k, seed)?.into(),
        Family::RandomList => gen_random_list(n, k, seed)?.into(),
        Family::OriginGadget | Family::OriginGadgetPositive => {
            let mut x = random_bits(n, seed);
            if !x.is_empty() && (family == Family::OriginGadgetPositive || n == 1) && !parity(&x) {
                x[0] = !x[0];
            }
            gen_origin_gadget(&GadgetSpec::random(x, k, splitmix64(seed)))?.into()
        }
        Family::Parity => {
            let mut x = random_bits(n, seed);
            if n == 1 {
                x[0] = true;
            }
            gen_parity_graph(&ParitySpec { x })?.into()
        }
    };
    Ok(g)
}

/// Uncounted reference answer: connectivity for undirected matrices,
/// strong connectivity otherwise (the two agree on symmetric matrices).
pub fn ground_truth(g: &Graph) -> bool {
    strongly_connected_adj(&g.adjacency())
}

fn mismatch(algo: Algorithm, g: &Graph) -> HarnessError {
    let kind = if g.is_directed() { "directed " } else { "" };
    HarnessError::Invalid(format!("{algo} cannot run on a {kind}{} graph", g.model()))
}

/// `(answer, queries)` of one run with a fresh ledger.
///
/// A learning run that exhausts its retry cap reports "not connected" with
/// the queries it spent.
pub fn run_algorithm<R: Rng + ?Sized>(
    algo: Algorithm,
    g: &Graph,
    cfg: &GroverConfig,
    rng: &mut R,
) -> Result<(bool, u64), HarnessError> {
    let report = match (algo, g) {
        (Algorithm::ClassicalConnected, Graph::Matrix(m)) if !m.is_directed() => {
            let mut ledger = QueryLedger::new();
            let answer = classical_connected(m, &mut ledger);
            return Ok((answer, ledger.count()));
        }
        (Algorithm::ClassicalStronglyConnected, g) => {
            let mut ledger = QueryLedger::new();
            let answer = classical_strongly_connected(g, &mut ledger);
            return Ok((answer, ledger.count()));
        }
        (Algorithm::QConnected, Graph::Matrix(m)) => q_connected(m, cfg, rng),
        (Algorithm::QConnectedLearning, Graph::Matrix(m)) => {
            match q_connected_learning(m, m.cell_count(), cfg, rng) {
                Err(QconnError::RetryCapExceeded { queries, .. }) => return Ok((false, queries)),
                other => other,
            }
        }
        (Algorithm::QStronglyConnectedMatrix, Graph::Matrix(m)) => q_strongly_connected_matrix(m, cfg, rng),
        (Algorithm::QStronglyConnectedList, Graph::List(l)) => q_strongly_connected_list(l, cfg, rng),
        _ => return Err(mismatch(algo, g)),
    }
    .map_err(|e| match e {
        QconnError::NeedsUndirected(_) => mismatch(algo, g),
        e => e.into(),
    })?;
    Ok((report.answer, report.queries))
}

fn run_trial(cfg: &SweepConfig, n: usize, k: usize, trial: usize) -> Result<TrialRecord, HarnessError> {
    let seed = derive_seed(cfg.seed, n, k, trial);
    let g = generate_instance(cfg.family, n, k, cfg.edge_prob, seed)?;
    let truth = ground_truth(&g);
    let grover = GroverConfig { rng_seed: splitmix64(seed ^ 0xa160), ..cfg.grover };
    let mut rng = ChaCha8Rng::seed_from_u64(grover.rng_seed);
    let start = Instant::now();
    let (answer, queries) = run_algorithm(cfg.algorithm, &g, &grover, &mut rng)?;
    let ms = if cfg.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
    Ok(TrialRecord {
        algorithm: cfg.algorithm.to_string(),
        model: g.model().to_string(),
        family: cfg.family.to_string(),
        n: g.vertex_count(),
        k: if matches!(g, Graph::List(_)) { g.k() } else { k },
        trial,
        seed,
        queries,
        answer,
        truth,
        correct: answer == truth,
        ms,
    })
}

/// Every trial of the sweep, ordered by `(n, k, trial)` of the config.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<TrialRecord>, HarnessError> {
    cfg.validate()?;
    let mut points = Vec::with_capacity(cfg.n.len() * cfg.k.len() * cfg.trials);
    for &n in &cfg.n {
        for &k in &cfg.k {
            points.extend((0..cfg.trials).map(|t| (n, k, t)));
        }
    }
    let mut out: Vec<((usize, usize, usize), TrialRecord)> = points
        .into_par_iter()
        .map(|p| run_trial(cfg, p.0, p.1, p.2).map(|r| (p, r)))
        .collect::<Result<_, _>>()?;
    out.sort_by_key(|(p, _)| *p);
    Ok(out.into_iter().map(|(_, r)| r).collect())
}
