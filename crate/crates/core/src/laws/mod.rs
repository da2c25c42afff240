//! Executable claims, their evaluation on finite instances, counterexample
//! search, and the batch audit over the fixture catalogue.
//!
//! A [`Claim`] is a predicate with up to two universally quantified subset
//! slots plus a list of [`Hypothesis`] toggles. Evaluating it on an
//! [`Instance`] sweeps every slot value in canonical order. The first
//! failing binding becomes the witness of a `REFUTED` verdict, and an
//! instance that does not meet an enabled hypothesis yields `VACUOUS`.

mod audit;
mod eval;
mod registry;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::fixtures::Fixture;
use crate::gamma::SemiRegularVariant;
use crate::gamma_space::{ClosureVariant, GammaSpace};
use crate::maps::PointMap;
use crate::mask::SubsetMask;

pub use audit::{audit_paper, AuditEntry, AuditOptions, AuditReport, Erratum, SweepSummary};
pub use eval::{evaluate, evaluate_claim, reproduces};
pub use registry::{claims_matching, find_claim, list_claims};
pub use search::{search_counterexample, SearchConfig, SearchOutcome};

/// A named precondition a claim may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// `γ` is regular (on both sides of a map).
    Regular,
    /// `γ` is semi-regular in the reading chosen by [`EvalOptions::semi_regular`].
    SemiRegular,
    /// `γ` is an open operation (on both sides of a map).
    Open,
    /// `γ` is monotone (on both sides of a map).
    Monotone,
    /// The map is a bijection.
    Bijective,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 5] = [
        Hypothesis::Regular,
        Hypothesis::SemiRegular,
        Hypothesis::Open,
        Hypothesis::Monotone,
        Hypothesis::Bijective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Regular => "regular",
            Hypothesis::SemiRegular => "semi-regular",
            Hypothesis::Open => "open",
            Hypothesis::Monotone => "monotone",
            Hypothesis::Bijective => "bijective",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|h| h.name() == s)
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a claim is evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "fixture")]
pub enum Shape {
    Space,
    Map,
    Example(Fixture),
}

/// Where a claim comes from: a label and the statement in symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub label: &'static str,
    pub statement: &'static str,
}

/// Which universe a quantified slot ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Domain,
    Codomain,
}

/// Values bound to a claim's slots; unused slots stay empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub a: SubsetMask,
    pub b: SubsetMask,
}

/// `None` when the statement holds, otherwise a short explanation.
pub type Check = Option<String>;

pub(crate) type SpaceCheck = fn(&crate::semistar::SemistarContext, Binding) -> Check;
pub(crate) type MapCheck = fn(&crate::maps::MapInstance, Binding) -> Check;
pub(crate) type ExampleCheck = fn(&ExampleEnv<'_>) -> Observation;

pub(crate) enum ClaimKind {
    Space(SpaceCheck),
    Map(MapCheck),
    Example(Fixture, ExampleCheck),
}

pub struct Claim {
    pub id: &'static str,
    pub anchor: Anchor,
    pub hypotheses: &'static [Hypothesis],
    pub slots: &'static [(&'static str, Side)],
    pub(crate) kind: ClaimKind,
}

impl Claim {
    pub fn shape(&self) -> Shape {
        match self.kind {
            ClaimKind::Space(_) => Shape::Space,
            ClaimKind::Map(_) => Shape::Map,
            ClaimKind::Example(f, _) => Shape::Example(f),
        }
    }

    pub fn has_hypothesis(&self, h: Hypothesis) -> bool {
        self.hypotheses.contains(&h)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("hypotheses", &self.hypotheses)
            .field("shape", &self.shape())
            .finish()
    }
}

/// Reported value versus computed value for a worked-example claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub holds: bool,
    pub reported: String,
    pub computed: String,
}

pub(crate) struct ExampleEnv<'a> {
    pub ctx: &'a crate::semistar::SemistarContext,
    pub semi_regular: SemiRegularVariant,
}

/// A space, or a pair of spaces with an optional fixed map between them
/// (all maps are swept when it is absent).
#[derive(Clone, Debug)]
pub enum Instance {
    Space(Arc<GammaSpace>),
    Map {
        domain: Arc<GammaSpace>,
        codomain: Arc<GammaSpace>,
        map: Option<PointMap>,
    },
}

impl Instance {
    pub fn space(space: impl Into<Arc<GammaSpace>>) -> Self {
        Instance::Space(space.into())
    }

    /// All maps from `space` to itself.
    pub fn self_maps(space: impl Into<Arc<GammaSpace>>) -> Self {
        let s = space.into();
        Instance::Map {
            domain: Arc::clone(&s),
            codomain: s,
            map: None,
        }
    }

    pub fn pair(domain: impl Into<Arc<GammaSpace>>, codomain: impl Into<Arc<GammaSpace>>) -> Self {
        Instance::Map {
            domain: domain.into(),
            codomain: codomain.into(),
            map: None,
        }
    }

    pub fn with_map(
        domain: impl Into<Arc<GammaSpace>>,
        codomain: impl Into<Arc<GammaSpace>>,
        map: PointMap,
    ) -> Self {
        Instance::Map {
            domain: domain.into(),
            codomain: codomain.into(),
            map: Some(map),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Instance::Space(s) => s.describe(),
            Instance::Map {
                domain,
                codomain,
                map,
            } => {
                let m = map
                    .as_ref()
                    .map(|m| format!(" f={}", m.describe()))
                    .unwrap_or_default();
                format!("X:{} Y:{}{m}", domain.describe(), codomain.describe())
            }
        }
    }
}

/// Knobs for one evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub closure: ClosureVariant,
    pub semi_regular: SemiRegularVariant,
    /// Hypotheses treated as met without checking.
    pub dropped: Vec<Hypothesis>,
    /// Maps drawn per pair when either side has more than three points.
    pub map_samples: usize,
    pub seed: u64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            closure: ClosureVariant::Pointwise,
            semi_regular: SemiRegularVariant::Cap,
            dropped: Vec::new(),
            map_samples: 64,
            seed: 0x5eed,
        }
    }
}

impl EvalOptions {
    pub fn with_closure(mut self, closure: ClosureVariant) -> Self {
        self.closure = closure;
        self
    }

    pub fn with_semi_regular(mut self, variant: SemiRegularVariant) -> Self {
        self.semi_regular = variant;
        self
    }

    pub fn dropping(mut self, h: Hypothesis) -> Self {
        if !self.dropped.contains(&h) {
            self.dropped.push(h);
            self.dropped.sort();
        }
        self
    }

    pub fn is_dropped(&self, h: Hypothesis) -> bool {
        self.dropped.contains(&h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Refuted,
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantRecord {
    pub closure: ClosureVariant,
    pub semi_regular: SemiRegularVariant,
    pub dropped: Vec<Hypothesis>,
}

impl VariantRecord {
    pub(crate) fn of(options: &EvalOptions) -> Self {
        VariantRecord {
            closure: options.closure,
            semi_regular: options.semi_regular,
            dropped: options.dropped.clone(),
        }
    }
}

/// How the maps of a pair instance were covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum MapCoverage {
    Fixed,
    Exhaustive { maps: usize },
    Sampled { maps: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Slot name to rendered set.
    pub bindings: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub(crate) raw: Binding,
    #[serde(skip)]
    pub(crate) raw_map: Option<PointMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub instance: String,
    pub status: Status,
    pub variant: VariantRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unmet: Vec<Hypothesis>,
    /// Bindings (times maps) the predicate was evaluated on.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maps: Option<MapCoverage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observation: Option<Observation>,
}

impl Verdict {
    /// One-line human rendering.
    pub fn summary(&self) -> String {
        let mut line = format!(
            "{} {} [{} closure, {} semi-regular",
            self.claim,
            self.status,
            self.variant.closure.name(),
            self.variant.semi_regular.name()
        );
        if !self.variant.dropped.is_empty() {
            let d: Vec<&str> = self.variant.dropped.iter().map(|h| h.name()).collect();
            line.push_str(&format!(", dropped {}", d.join(",")));
        }
        line.push_str(&format!("] on {}", self.instance));
        if let Some(w) = &self.witness {
            line.push_str(" witness:");
            for (k, v) in &w.bindings {
                line.push_str(&format!(" {k}={v}"));
            }
            if let Some(m) = &w.map {
                line.push_str(&format!(" f={m}"));
            }
            if let Some(n) = &w.note {
                line.push_str(&format!(" ({n})"));
            }
        }
        if !self.unmet.is_empty() {
            let u: Vec<&str> = self.unmet.iter().map(|h| h.name()).collect();
            line.push_str(&format!(" unmet: {}", u.join(",")));
        }
        line
    }
}
