use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand::Rng;

use super::{derive_seed, HarnessError};
use crate::graph::{classical_dfs, strongly_connected_adj, GraphView};
use crate::grover::{statevector_success_prob, success_prob_known_t};
use crate::instances::{
    bits_of, count_cycles, gen_origin_gadget, gen_parity_graph, gen_random_list, parity, GadgetSpec,
    ParitySpec,
};
use crate::qconn::{exact_backward_edges, reduction_lemma_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    GroverCrosscheck,
    LemmaCorpus,
    Generators,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::GroverCrosscheck, Suite::LemmaCorpus, Suite::Generators];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroverCrosscheck => "grover-crosscheck",
            Suite::LemmaCorpus => "lemma-corpus",
            Suite::Generators => "generators",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| HarnessError::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    /// Lemma cases whose tree misses part of the reachable set.
    pub skipped: usize,
    pub failures: Vec<String>,
    /// Largest deviation seen by numeric suites.
    pub max_error: f64,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self { suite, checks: 0, skipped: 0, failures: Vec::new(), max_error: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(suite: Suite) -> Result<SuiteReport, HarnessError> {
    let mut rep = SuiteReport::new(suite);
    match suite {
        Suite::GroverCrosscheck => grover_crosscheck(&mut rep)?,
        Suite::LemmaCorpus => lemma_corpus(&mut rep)?,
        Suite::Generators => generators(&mut rep)?,
    }
    Ok(rep)
}

/// Closed form against explicit statevector evolution, `N <= 64`,
/// every `t`, `j <= 20`.
fn grover_crosscheck(rep: &mut SuiteReport) -> Result<(), HarnessError> {
    for n in 2..=64usize {
        for t in 1..=n {
            let marked: Vec<usize> = (0..t).collect();
            for j in 0..=20u64 {
                let a = success_prob_known_t(n, t, j)?;
                let s = statevector_success_prob(n, &marked, j)?;
                let err = (a - s).abs();
                rep.max_error = rep.max_error.max(err);
                rep.checks += 1;
                if err > 1e-9 {
                    rep.failures.push(format!("N={n} t={t} j={j}: analytic {a} statevector {s}"));
                }
            }
        }
    }
    Ok(())
}

fn lemma_case<G: GraphView>(g: &G, label: impl FnOnce() -> String, rep: &mut SuiteReport) {
    let tree = classical_dfs(g, 0);
    let back = exact_backward_edges(g, &tree);
    match reduction_lemma_check(g, &tree, &back) {
        None => rep.skipped += 1,
        Some(true) => rep.checks += 1,
        Some(false) => {
            rep.checks += 1;
            rep.failures.push(label());
        }
    }
}

/// 1000 random out-degree-k graphs plus every origin gadget with
/// `p <= 6`, `k <= 4`.
fn lemma_corpus(rep: &mut SuiteReport) -> Result<(), HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a);
    for i in 0..1000usize {
        let k = 2 + i % 3;
        let n = rng.gen_range(k + 1..=40);
        let seed = derive_seed(0x1e44a, n, k, i);
        let g = gen_random_list(n, k, seed)?;
        lemma_case(&g, || format!("random list n={n} k={k} seed={seed}"), rep);
    }
    gadget_sweep(6, 4, |x, k, g| lemma_case(g, || format!("gadget x={x:?} k={k}"), rep))
}

fn gadget_sweep(
    max_p: usize,
    max_k: usize,
    mut visit: impl FnMut(&[bool], usize, &crate::graph::ListGraph),
) -> Result<(), HarnessError> {
    for p in 1..=max_p {
        for k in 2..=max_k {
            for code in 0..1u64 << p {
                let x = bits_of(code, p);
                if p == 1 && !x[0] {
                    continue;
                }
                let seed = derive_seed(0x9ad9e7, p, k, code as usize);
                let g = gen_origin_gadget(&GadgetSpec::random(x.clone(), k, seed))?;
                visit(&x, k, &g);
            }
        }
    }
    Ok(())
}

/// Parity graphs for every `x` with `p <= 12`; origin gadgets for every
/// `x` with `p <= 8`, `k` in 2..=4.
fn generators(rep: &mut SuiteReport) -> Result<(), HarnessError> {
    for p in 1..=12 {
        for code in 0..1u64 << p {
            let x = bits_of(code, p);
            if p == 1 && !x[0] {
                continue;
            }
            let g = gen_parity_graph(&ParitySpec { x: x.clone() })?;
            let cycles = count_cycles(&g)?;
            rep.checks += 1;
            if cycles != 2 - usize::from(parity(&x)) {
                rep.failures.push(format!("parity x={x:?}: {cycles} cycles"));
            }
        }
    }
    gadget_sweep(8, 4, |x, k, g| {
        rep.checks += 1;
        let sc = strongly_connected_adj(&g.adjacency());
        if sc != parity(x) {
            rep.failures.push(format!("gadget x={x:?} k={k}: strongly connected = {sc}"));
        }
        if (0..g.n()).any(|u| g.out_neighbors(u).len() != k) {
            rep.failures.push(format!("gadget x={x:?} k={k}: out-degree not {k}"));
        }
    })
}
