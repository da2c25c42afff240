use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::eval::{evaluate_on_pair, evaluate_on_space};
use super::registry::list_claims;
use super::search::{search_counterexample, SearchConfig};
use super::{Claim, ClaimKind, EvalOptions, Hypothesis, Instance, Shape, Status, Verdict};
use crate::error::Result;
use crate::fixtures::Fixture;
use crate::gamma::{OperationDomain, SemiRegularVariant};
use crate::gamma_space::ClosureVariant;
use crate::semistar::SemistarContext;

#[derive(Clone, Debug, Serialize)]
pub struct AuditOptions {
    /// Largest universe in the enumerated sweep of space claims.
    pub sweep_max_n: usize,
    /// Largest universe in the enumerated sweep of map claims.
    pub sweep_max_n_maps: usize,
    pub sweep_domain: OperationDomain,
    pub sweep_budget: usize,
    pub map_samples: usize,
    pub seed: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            sweep_max_n: 3,
            sweep_max_n_maps: 2,
            sweep_domain: OperationDomain::Builtins,
            sweep_budget: 3,
            map_samples: 64,
            seed: 0x5eed,
        }
    }
}

/// One fixture verdict.
#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub domain: Fixture,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codomain: Option<Fixture>,
    pub verdict: Verdict,
}

impl AuditEntry {
    /// The instance this entry was evaluated on, rebuilt from the fixtures.
    pub fn instance(&self) -> Instance {
        match self.codomain {
            None => Instance::space(self.domain.space()),
            Some(c) => Instance::pair(self.domain.space(), c.space()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub label: &'static str,
    pub statement: &'static str,
    pub shape: Shape,
    pub hypotheses: Vec<Hypothesis>,
    pub confirmed: usize,
    pub refuted: usize,
    pub vacuous: usize,
}

/// Outcome of a claim over the enumerated small spaces under one variant.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub claim: &'static str,
    pub closure: ClosureVariant,
    pub semi_regular: SemiRegularVariant,
    pub visited: usize,
    pub confirmed: usize,
    pub refuted: usize,
    pub vacuous: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_refutation: Option<Verdict>,
}

/// A worked-example value that does not match what is computed.
#[derive(Clone, Debug, Serialize)]
pub struct Erratum {
    pub claim: &'static str,
    pub label: &'static str,
    pub statement: &'static str,
    pub reported: String,
    pub computed: String,
    /// `closure/semi-regular` variants under which the mismatch shows.
    pub variants: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub options: AuditOptions,
    pub claims: Vec<ClaimSummary>,
    pub entries: Vec<AuditEntry>,
    pub sweeps: Vec<SweepSummary>,
    pub errata: Vec<Erratum>,
}

fn variants() -> Vec<(ClosureVariant, SemiRegularVariant)> {
    ClosureVariant::BOTH
        .into_iter()
        .flat_map(|c| SemiRegularVariant::BOTH.into_iter().map(move |s| (c, s)))
        .collect()
}

struct Task {
    claim: &'static Claim,
    domain: Fixture,
    codomain: Option<Fixture>,
    closure: ClosureVariant,
    semi_regular: SemiRegularVariant,
}

fn tasks() -> Vec<Task> {
    let mut out = Vec::new();
    for claim in list_claims() {
        for (closure, semi_regular) in variants() {
            let mut push = |domain, codomain| {
                out.push(Task {
                    claim,
                    domain,
                    codomain,
                    closure,
                    semi_regular,
                })
            };
            match claim.kind {
                ClaimKind::Example(f, _) => push(f, None),
                ClaimKind::Space(_) => Fixture::ALL.into_iter().for_each(|f| push(f, None)),
                ClaimKind::Map(_) => {
                    for d in Fixture::ALL {
                        for c in Fixture::ALL {
                            push(d, Some(c));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Run every registered claim on the fixture catalogue under all four
/// variant combinations, sweep the theorem claims over small enumerated
/// spaces, and collect errata from the worked examples. Deterministic.
pub fn audit_paper(options: &AuditOptions) -> Result<AuditReport> {
    let mut ctxs: BTreeMap<(Fixture, ClosureVariant), Arc<SemistarContext>> = BTreeMap::new();
    for f in Fixture::ALL {
        let space = Arc::new(f.space());
        for c in ClosureVariant::BOTH {
            ctxs.insert((f, c), Arc::new(SemistarContext::new(Arc::clone(&space), c)));
        }
    }
    let entries: Vec<AuditEntry> = tasks()
        .par_iter()
        .map(|t| {
            let opts = EvalOptions {
                closure: t.closure,
                semi_regular: t.semi_regular,
                dropped: Vec::new(),
                map_samples: options.map_samples,
                seed: options.seed,
            };
            let dom = &ctxs[&(t.domain, t.closure)];
            let verdict = match t.codomain {
                None => evaluate_on_space(t.claim, dom, &opts, t.domain.name())?,
                Some(c) => {
                    let cod = &ctxs[&(c, t.closure)];
                    let label = format!("{}->{}", t.domain, c);
                    evaluate_on_pair(t.claim, dom, cod, None, &opts, &label)?
                }
            };
            Ok(AuditEntry {
                domain: t.domain,
                codomain: t.codomain,
                verdict,
            })
        })
        .collect::<Result<_>>()?;

    let claims = list_claims()
        .iter()
        .map(|c| {
            let count = |s: Status| {
                entries
                    .iter()
                    .filter(|e| e.verdict.claim == c.id && e.verdict.status == s)
                    .count()
            };
            ClaimSummary {
                id: c.id,
                label: c.anchor.label,
                statement: c.anchor.statement,
                shape: c.shape(),
                hypotheses: c.hypotheses.to_vec(),
                confirmed: count(Status::Confirmed),
                refuted: count(Status::Refuted),
                vacuous: count(Status::Vacuous),
            }
        })
        .collect();

    let mut sweeps = Vec::new();
    for claim in list_claims() {
        let max_n = match claim.kind {
            ClaimKind::Space(_) => options.sweep_max_n,
            ClaimKind::Map(_) => options.sweep_max_n_maps,
            ClaimKind::Example(..) => continue,
        };
        for (closure, semi_regular) in variants() {
            let config = SearchConfig {
                min_n: 1,
                max_n,
                op_budget: options.sweep_budget,
                domain: options.sweep_domain,
                options: EvalOptions {
                    closure,
                    semi_regular,
                    dropped: Vec::new(),
                    map_samples: options.map_samples,
                    seed: options.seed,
                },
                stop_at_first: false,
                max_instances: None,
                keep: 1,
            };
            let out = search_counterexample(claim.id, &config)?;
            sweeps.push(SweepSummary {
                claim: claim.id,
                closure,
                semi_regular,
                visited: out.visited,
                confirmed: out.confirmed,
                refuted: out.refuted,
                vacuous: out.vacuous,
                first_refutation: out.refutations.into_iter().next(),
            });
        }
    }

    let mut errata: Vec<Erratum> = Vec::new();
    for e in &entries {
        let v = &e.verdict;
        let (Status::Refuted, Some(obs)) = (v.status, &v.observation) else {
            continue;
        };
        let variant = format!("{}/{}", v.variant.closure.name(), v.variant.semi_regular.name());
        if let Some(known) = errata
            .iter_mut()
            .find(|x| x.claim == v.claim && x.computed == obs.computed)
        {
            known.variants.push(variant);
            continue;
        }
        let claim = list_claims()
            .iter()
            .find(|c| c.id == v.claim)
            .expect("registered claim");
        errata.push(Erratum {
            claim: claim.id,
            label: claim.anchor.label,
            statement: claim.anchor.statement,
            reported: obs.reported.clone(),
            computed: obs.computed.clone(),
            variants: vec![variant],
        });
    }

    Ok(AuditReport {
        options: options.clone(),
        claims,
        entries,
        sweeps,
        errata,
    })
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn refutations(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries
            .iter()
            .filter(|e| e.verdict.status == Status::Refuted)
    }

    /// Plain-text summary derived from the same data as the JSON.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "claims: {}", self.claims.len());
        let _ = writeln!(out, "fixture verdicts: {}", self.entries.len());
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<10} {:>9} {:>7} {:>7}  hypotheses", "claim", "confirmed", "refuted", "vacuous");
        for c in &self.claims {
            let hyps: Vec<&str> = c.hypotheses.iter().map(|h| h.name()).collect();
            let _ = writeln!(
                out,
                "{:<10} {:>9} {:>7} {:>7}  {}",
                c.id,
                c.confirmed,
                c.refuted,
                c.vacuous,
                if hyps.is_empty() { "-".to_string() } else { hyps.join(",") }
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "refutations on fixtures:");
        for e in self.refutations().filter(|e| e.verdict.observation.is_none()) {
            let _ = writeln!(out, "  {}", e.verdict.summary());
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "enumerated sweep (n <= {} for spaces, n <= {} for maps):",
            self.options.sweep_max_n, self.options.sweep_max_n_maps
        );
        for s in self.sweeps.iter().filter(|s| s.refuted > 0) {
            let _ = writeln!(
                out,
                "  {} [{}/{}] refuted on {} of {} (vacuous {})",
                s.claim,
                s.closure.name(),
                s.semi_regular.name(),
                s.refuted,
                s.visited,
                s.vacuous
            );
            if let Some(v) = &s.first_refutation {
                let _ = writeln!(out, "    first: {}", v.summary());
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "errata in worked examples:");
        for e in &self.errata {
            let _ = writeln!(
                out,
                "  {} ({}): {}\n    reported {}\n    computed {}\n    under {}",
                e.claim,
                e.label,
                e.statement,
                e.reported,
                e.computed,
                e.variants.join(", ")
            );
        }
        out
    }
}
