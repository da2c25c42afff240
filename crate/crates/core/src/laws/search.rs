use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::eval::{evaluate_on_pair, evaluate_on_space};
use super::registry::find_claim;
use super::{ClaimKind, EvalOptions, Status, Verdict};
use crate::enumerate::topologies;
use crate::error::{Error, Result};
use crate::gamma::{enumerate_operations, OperationDomain};
use crate::gamma_space::GammaSpace;
use crate::semistar::SemistarContext;
use crate::space::Topology;

const CHUNK: usize = 256;

#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub min_n: usize,
    pub max_n: usize,
    /// Operations tried per topology, builtins first.
    pub op_budget: usize,
    pub domain: OperationDomain,
    pub options: EvalOptions,
    /// Stop at the first refutation in canonical order.
    pub stop_at_first: bool,
    /// Cap on instances visited.
    pub max_instances: Option<usize>,
    /// Refuting verdicts kept in the outcome.
    pub keep: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min_n: 1,
            max_n: 4,
            op_budget: 64,
            domain: OperationDomain::Opens,
            options: EvalOptions::default(),
            stop_at_first: true,
            max_instances: None,
            keep: 16,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub claim: String,
    pub config: SearchConfig,
    /// Instances the enumeration plans to visit (before any early stop).
    pub planned: usize,
    pub visited: usize,
    pub confirmed: usize,
    pub refuted: usize,
    pub vacuous: usize,
    pub refutations: Vec<Verdict>,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.refuted > 0
    }

    /// `REFUTED` or `EXHAUSTED(n)` with `n` instances visited.
    pub fn status_line(&self) -> String {
        if self.found() {
            format!("REFUTED after {} instances", self.visited)
        } else {
            format!("EXHAUSTED({})", self.visited)
        }
    }
}

/// Topologies on `min_n..=max_n` points paired with the operation indices
/// tried on each, in canonical order.
fn plan(config: &SearchConfig) -> Result<Vec<(Arc<Topology>, u128)>> {
    let mut out = Vec::new();
    for n in config.min_n.max(1)..=config.max_n {
        for t in topologies(n)? {
            let t = Arc::new(t);
            let k = enumerate_operations(&t, config.domain, config.op_budget).budgeted_len();
            out.extend((0..k).map(|i| (Arc::clone(&t), i)));
        }
    }
    Ok(out)
}

fn build_space(t: &Arc<Topology>, index: u128, domain: OperationDomain) -> GammaSpace {
    let op = enumerate_operations(t, domain, usize::MAX)
        .operation_at(index)
        .expect("index within the stream");
    GammaSpace::new(Arc::clone(t), op).expect("enumerated operations are valid")
}

fn label(space: &GammaSpace) -> String {
    format!("n={} {}", space.size(), space.describe())
}

struct Tally {
    visited: usize,
    confirmed: usize,
    refuted: usize,
    vacuous: usize,
    refutations: Vec<Verdict>,
}

impl Tally {
    /// Record one chunk; returns true when the search should stop.
    fn absorb(&mut self, verdicts: Vec<Verdict>, config: &SearchConfig) -> bool {
        for v in verdicts {
            self.visited += 1;
            match v.status {
                Status::Confirmed => self.confirmed += 1,
                Status::Vacuous => self.vacuous += 1,
                Status::Refuted => {
                    self.refuted += 1;
                    if self.refutations.len() < config.keep {
                        self.refutations.push(v);
                    }
                    if config.stop_at_first {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Look for instances refuting claim `id` over enumerated spaces.
///
/// Space claims visit every (topology, operation) in the plan; map claims
/// visit every ordered pair of planned spaces and sweep the maps of each.
/// Results are identical for any thread count.
pub fn search_counterexample(id: &str, config: &SearchConfig) -> Result<SearchOutcome> {
    let claim = find_claim(id)?;
    let spaces = plan(config)?;
    let mut tally = Tally {
        visited: 0,
        confirmed: 0,
        refuted: 0,
        vacuous: 0,
        refutations: Vec::new(),
    };
    let cap = config.max_instances.unwrap_or(usize::MAX);
    let opts = &config.options;
    let planned;
    match &claim.kind {
        ClaimKind::Space(_) => {
            planned = spaces.len().min(cap);
            for start in (0..planned).step_by(CHUNK) {
                let end = (start + CHUNK).min(planned);
                let chunk: Vec<Verdict> = spaces[start..end]
                    .par_iter()
                    .map(|(t, k)| {
                        let s = build_space(t, *k, config.domain);
                        let l = label(&s);
                        let ctx = SemistarContext::new(s, opts.closure);
                        evaluate_on_space(claim, &ctx, opts, &l)
                    })
                    .collect::<Result<_>>()?;
                if tally.absorb(chunk, config) {
                    break;
                }
            }
        }
        ClaimKind::Map(_) => {
            let ctxs: Vec<(Arc<SemistarContext>, String)> = spaces
                .par_iter()
                .map(|(t, k)| {
                    let s = build_space(t, *k, config.domain);
                    let l = label(&s);
                    (Arc::new(SemistarContext::new(s, opts.closure)), l)
                })
                .collect();
            let s = ctxs.len();
            planned = s.saturating_mul(s).min(cap);
            for start in (0..planned).step_by(CHUNK) {
                let end = (start + CHUNK).min(planned);
                let chunk: Vec<Verdict> = (start..end)
                    .into_par_iter()
                    .map(|i| {
                        let (d, dl) = &ctxs[i / s];
                        let (c, cl) = &ctxs[i % s];
                        evaluate_on_pair(claim, d, c, None, opts, &format!("X:{dl} Y:{cl}"))
                    })
                    .collect::<Result<_>>()?;
                if tally.absorb(chunk, config) {
                    break;
                }
            }
        }
        ClaimKind::Example(..) => {
            return Err(Error::ShapeMismatch {
                claim: claim.id.to_string(),
                reason: "worked examples are checked on their fixture, not searched".into(),
            })
        }
    }
    Ok(SearchOutcome {
        claim: claim.id.to_string(),
        config: config.clone(),
        planned,
        visited: tally.visited,
        confirmed: tally.confirmed,
        refuted: tally.refuted,
        vacuous: tally.vacuous,
        refutations: tally.refutations,
    })
}
