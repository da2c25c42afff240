//! Operations `γ` on a finite topology and their classification.
//!
//! An operation is stored as a total table `A ↦ A^γ` over the power set.
//! Only expansivity on open sets (`V ⊆ V^γ`) is required; the table is
//! total because semi-regularity and the semi-open-operation property apply
//! `γ` to semi-open sets that need not be open.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma_space::gamma_open_family_of;
use crate::mask::{SubsetFamily, SubsetMask, Universe};
use crate::space::Topology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuiltinKind {
    /// `A ↦ A`
    Identity,
    /// `A ↦ cl(A)`
    Closure,
    /// `A ↦ int(cl(A))`
    InteriorClosure,
}

impl BuiltinKind {
    pub const ALL: [BuiltinKind; 3] = [
        BuiltinKind::Identity,
        BuiltinKind::Closure,
        BuiltinKind::InteriorClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKind::Identity => "identity",
            BuiltinKind::Closure => "closure",
            BuiltinKind::InteriorClosure => "interior-closure",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for BuiltinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How [`gamma_from_table`] completes subsets the caller did not list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FillPolicy {
    #[default]
    Identity,
    Closure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "name")]
pub enum Origin {
    Builtin(BuiltinKind),
    Table(String),
}

/// Domains on which `A ⊆ A^γ` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expansiveness {
    pub opens: bool,
    pub semi_opens: bool,
    pub all: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaOperation {
    origin: Origin,
    table: Vec<SubsetMask>,
    expansive_on: Expansiveness,
}

impl GammaOperation {
    /// Wraps a total table, rejecting it if some open `V` has `V ⊄ V^γ`.
    pub fn from_table_unnamed(topology: &Topology, table: Vec<SubsetMask>) -> Result<Self> {
        Self::with_origin(topology, table, Origin::Table("table".into()))
    }

    fn with_origin(topology: &Topology, table: Vec<SubsetMask>, origin: Origin) -> Result<Self> {
        let u = topology.universe();
        if table.len() != u.power_set_len() {
            return Err(Error::TableSize {
                got: table.len(),
                expected: u.power_set_len(),
            });
        }
        for &image in &table {
            u.check(image)?;
        }
        if let Some(v) = topology
            .opens()
            .iter()
            .find(|v| !v.is_subset_of(table[v.index()]))
        {
            return Err(Error::NotExpansiveOnOpens(v));
        }
        let expansive = |a: SubsetMask| a.is_subset_of(table[a.index()]);
        let expansive_on = Expansiveness {
            opens: true,
            semi_opens: topology.semi_open_family().iter().all(expansive),
            all: u.subsets().all(expansive),
        };
        Ok(GammaOperation {
            origin,
            table,
            expansive_on,
        })
    }

    /// Gives a table operation a display name.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        if let Origin::Table(_) = self.origin {
            self.origin = Origin::Table(name.into());
        }
        self
    }

    /// `A^γ`. Panics if `a` lies outside the universe the table was built for.
    pub fn apply(&self, a: SubsetMask) -> SubsetMask {
        self.table[a.index()]
    }

    pub fn table(&self) -> &[SubsetMask] {
        &self.table
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn builtin_kind(&self) -> Option<BuiltinKind> {
        match self.origin {
            Origin::Builtin(k) => Some(k),
            Origin::Table(_) => None,
        }
    }

    pub fn expansive_on(&self) -> Expansiveness {
        self.expansive_on
    }

    pub fn name(&self) -> &str {
        match &self.origin {
            Origin::Builtin(k) => k.name(),
            Origin::Table(name) => name,
        }
    }

    /// Name plus, for tables, the entries that differ from the identity.
    pub fn describe(&self, universe: &Universe) -> String {
        match &self.origin {
            Origin::Builtin(k) => k.name().to_string(),
            Origin::Table(name) => {
                let moved: Vec<String> = universe
                    .subsets()
                    .filter(|a| self.apply(*a) != *a)
                    .map(|a| format!("{}->{}", universe.render(a), universe.render(self.apply(a))))
                    .collect();
                format!("{name}[{}]", moved.join(" "))
            }
        }
    }
}

pub fn gamma_builtin(kind: BuiltinKind, topology: &Topology) -> GammaOperation {
    let table = topology
        .universe()
        .subsets()
        .map(|a| match kind {
            BuiltinKind::Identity => a,
            BuiltinKind::Closure => topology.cl(a),
            BuiltinKind::InteriorClosure => topology.int(topology.cl(a)),
        })
        .collect();
    GammaOperation::with_origin(topology, table, Origin::Builtin(kind))
        .expect("builtin operations are expansive on opens")
}

/// Builds an operation from explicit entries, completing the rest with `fill`.
pub fn gamma_from_table(
    topology: &Topology,
    entries: impl IntoIterator<Item = (SubsetMask, SubsetMask)>,
    fill: FillPolicy,
) -> Result<GammaOperation> {
    let u = topology.universe();
    let mut table: Vec<SubsetMask> = u
        .subsets()
        .map(|a| match fill {
            FillPolicy::Identity => a,
            FillPolicy::Closure => topology.cl(a),
        })
        .collect();
    for (key, image) in entries {
        u.check(key)?;
        table[key.index()] = u.check(image)?;
    }
    GammaOperation::with_origin(topology, table, Origin::Table("table".into()))
}

/// Builds an operation from a rule evaluated on every subset.
pub fn gamma_from_fn(
    topology: &Topology,
    name: &str,
    rule: impl Fn(SubsetMask) -> SubsetMask,
) -> Result<GammaOperation> {
    let table = topology.universe().subsets().map(rule).collect();
    GammaOperation::with_origin(topology, table, Origin::Table(name.to_string()))
}

/// Which operation classes an operation belongs to on a given topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OperationClass {
    pub regular: bool,
    pub open_op: bool,
    pub monotone: bool,
    pub semi_regular_cap: bool,
    pub semi_regular_cup: bool,
    pub semi_open_op: bool,
}

pub fn classify_operation(topology: &Topology, gamma: &GammaOperation) -> OperationClass {
    let tau_gamma = gamma_open_family_of(topology, gamma);
    OperationClass {
        regular: regular_witness(topology, gamma).is_none(),
        open_op: open_op_witness(topology, gamma, &tau_gamma).is_none(),
        monotone: monotone_witness(topology.universe(), gamma).is_none(),
        semi_regular_cap: semi_regular_witness(topology, gamma, SemiRegularVariant::Cap).is_none(),
        semi_regular_cup: semi_regular_witness(topology, gamma, SemiRegularVariant::Cup).is_none(),
        semi_open_op: semi_open_op_witness(topology, gamma).is_none(),
    }
}

/// Reading of the semi-regularity condition.
///
/// `Cap` asks for `W^γ ⊆ U^γ ∩ V^γ`, the form the intersection argument
/// for semi-interiors relies on. `Cup` asks for `W^γ ⊆ U^γ ∪ V^γ`, which is
/// met by `W = U` for every operation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemiRegularVariant {
    #[default]
    Cap,
    Cup,
}

impl SemiRegularVariant {
    pub const BOTH: [SemiRegularVariant; 2] = [SemiRegularVariant::Cap, SemiRegularVariant::Cup];

    pub fn name(self) -> &'static str {
        match self {
            SemiRegularVariant::Cap => "cap",
            SemiRegularVariant::Cup => "cup",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cap" => Some(SemiRegularVariant::Cap),
            "cup" => Some(SemiRegularVariant::Cup),
            _ => None,
        }
    }
}

/// A point and two neighbourhoods for which a "there exists W" clause fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassWitness {
    pub point: usize,
    pub u: SubsetMask,
    pub v: SubsetMask,
}

fn pairwise_witness(
    n: usize,
    neighbourhoods: &SubsetFamily,
    gamma: &GammaOperation,
    bound: impl Fn(SubsetMask, SubsetMask) -> SubsetMask,
) -> Option<ClassWitness> {
    for x in 0..n {
        let around: Vec<SubsetMask> = neighbourhoods.iter().filter(|u| u.contains(x)).collect();
        for (i, &u) in around.iter().enumerate() {
            for &v in &around[i..] {
                let target = bound(gamma.apply(u), gamma.apply(v));
                if !around.iter().any(|w| gamma.apply(*w).is_subset_of(target)) {
                    return Some(ClassWitness { point: x, u, v });
                }
            }
        }
    }
    None
}

/// First `(x, U, V)` over open neighbourhoods with no open `W ∋ x`,
/// `W^γ ⊆ U^γ ∩ V^γ`.
pub fn regular_witness(topology: &Topology, gamma: &GammaOperation) -> Option<ClassWitness> {
    pairwise_witness(topology.size(), topology.opens(), gamma, |a, b| a & b)
}

pub fn semi_regular_witness(
    topology: &Topology,
    gamma: &GammaOperation,
    variant: SemiRegularVariant,
) -> Option<ClassWitness> {
    match variant {
        SemiRegularVariant::Cap => {
            pairwise_witness(topology.size(), topology.semi_open_family(), gamma, |a, b| a & b)
        }
        SemiRegularVariant::Cup => {
            pairwise_witness(topology.size(), topology.semi_open_family(), gamma, |a, b| a | b)
        }
    }
}

/// First `(x, U)` with `U` open, `x ∈ U`, and no γ-open `B` with `x ∈ B ⊆ U^γ`.
pub fn open_op_witness(
    topology: &Topology,
    gamma: &GammaOperation,
    gamma_opens: &SubsetFamily,
) -> Option<(usize, SubsetMask)> {
    (0..topology.size()).find_map(|x| {
        topology
            .opens_containing(x)
            .find(|u| {
                let image = gamma.apply(*u);
                !gamma_opens
                    .iter()
                    .any(|b| b.contains(x) && b.is_subset_of(image))
            })
            .map(|u| (x, u))
    })
}

/// First `(x, U)` with `U` semi-open, `x ∈ U`, and no semi-open `S ∋ x`
/// inside `U^γ`.
pub fn semi_open_op_witness(topology: &Topology, gamma: &GammaOperation) -> Option<(usize, SubsetMask)> {
    let so = topology.semi_open_family();
    (0..topology.size()).find_map(|x| {
        so.iter()
            .filter(|u| u.contains(x))
            .find(|u| {
                let image = gamma.apply(*u);
                !so.iter().any(|s| s.contains(x) && s.is_subset_of(image))
            })
            .map(|u| (x, u))
    })
}

/// First `A ⊆ B` with `A^γ ⊄ B^γ`. Checking covering pairs suffices.
pub fn monotone_witness(universe: &Universe, gamma: &GammaOperation) -> Option<(SubsetMask, SubsetMask)> {
    let n = universe.size();
    universe.subsets().find_map(|a| {
        (0..n)
            .filter(|p| !a.contains(*p))
            .map(|p| a.with(p))
            .find(|b| !gamma.apply(a).is_subset_of(gamma.apply(*b)))
            .map(|b| (a, b))
    })
}

/// Keys over which [`enumerate_operations`] varies explicit tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperationDomain {
    /// Only the three builtin operations.
    Builtins,
    /// Builtins, then tables varying the image of every open set.
    #[default]
    Opens,
    /// Builtins, then tables varying the image of every open or semi-open set.
    SemiOpens,
}

impl OperationDomain {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "builtins" => Some(OperationDomain::Builtins),
            "opens" => Some(OperationDomain::Opens),
            "semi-opens" => Some(OperationDomain::SemiOpens),
            _ => None,
        }
    }
}

/// Deterministic, index-addressable stream of operations on one topology.
///
/// Index `0..3` are the builtins. Index `3 + k` is the explicit table whose
/// choice vector is `k` written in mixed radix over the keys (first key most
/// significant); choice `j` for key `K` is the `j`-th superset of `K` in
/// canonical order, with identity fill off the keys.
#[derive(Clone, Debug)]
pub struct OperationStream<'t> {
    topology: &'t Topology,
    keys: Vec<(SubsetMask, Vec<SubsetMask>)>,
    total: u128,
    next: u128,
    end: u128,
}

pub fn enumerate_operations(
    topology: &Topology,
    domain: OperationDomain,
    budget: usize,
) -> OperationStream<'_> {
    let n = topology.size();
    let keys: Vec<SubsetMask> = match domain {
        OperationDomain::Builtins => Vec::new(),
        OperationDomain::Opens => topology.opens().iter().collect(),
        OperationDomain::SemiOpens => topology
            .opens()
            .iter()
            .chain(topology.semi_open_family().iter())
            .collect::<SubsetFamily>()
            .iter()
            .collect(),
    };
    let keys: Vec<(SubsetMask, Vec<SubsetMask>)> = keys
        .into_iter()
        .map(|k| (k, k.supersets(n).collect()))
        .collect();
    let tables = if domain == OperationDomain::Builtins {
        0
    } else {
        keys.iter()
            .fold(1u128, |acc, (_, s)| acc.saturating_mul(s.len() as u128))
    };
    let total = 3u128.saturating_add(tables);
    OperationStream {
        topology,
        keys,
        total,
        next: 0,
        end: total.min(budget as u128),
    }
}

impl OperationStream<'_> {
    /// Operations available before the budget cut.
    pub fn total(&self) -> u128 {
        self.total
    }

    /// Operations this stream will yield in total.
    pub fn budgeted_len(&self) -> u128 {
        self.end
    }

    pub fn operation_at(&self, index: u128) -> Option<GammaOperation> {
        if index >= self.total {
            return None;
        }
        if index < 3 {
            return Some(gamma_builtin(BuiltinKind::ALL[index as usize], self.topology));
        }
        let mut rest = index - 3;
        let mut table: Vec<SubsetMask> = self.topology.universe().subsets().collect();
        for (key, choices) in self.keys.iter().rev() {
            let radix = choices.len() as u128;
            table[key.index()] = choices[(rest % radix) as usize];
            rest /= radix;
        }
        let op = GammaOperation::with_origin(
            self.topology,
            table,
            Origin::Table(format!("table#{}", index - 3)),
        )
        .expect("supersets keep the table expansive");
        Some(op)
    }
}

impl Iterator for OperationStream<'_> {
    type Item = GammaOperation;

    fn next(&mut self) -> Option<GammaOperation> {
        if self.next >= self.end {
            return None;
        }
        let op = self.operation_at(self.next);
        self.next += 1;
        op
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn builtin_tables() {
        let t2 = fixtures::tau2();
        let g = gamma_builtin(BuiltinKind::Closure, &t2);
        let a = t2.universe().parse_set("{a}").unwrap();
        assert_eq!(g.apply(a), t2.full());
        let t3 = fixtures::tau3();
        let g = gamma_builtin(BuiltinKind::InteriorClosure, &t3);
        let ab = t3.universe().parse_set("{a,b}").unwrap();
        assert_eq!(g.apply(ab), t3.universe().parse_set("{a}").unwrap());
        assert!(!g.expansive_on().all);
        assert!(!g.expansive_on().semi_opens);
        let id = gamma_builtin(BuiltinKind::Identity, &fixtures::tau1());
        assert!(id.expansive_on().all);
    }

    #[test]
    fn table_rejects_shrinking_open() {
        let t1 = fixtures::tau1();
        let a = t1.universe().parse_set("{a}").unwrap();
        let err = gamma_from_table(&t1, [(t1.full(), a)], FillPolicy::Identity).unwrap_err();
        assert_eq!(err, Error::NotExpansiveOnOpens(t1.full()));
        let err = gamma_from_table(&t1, [(SubsetMask::from_bits(8), a)], FillPolicy::Identity)
            .unwrap_err();
        assert!(matches!(err, Error::MaskOutOfRange { .. }));
    }

    #[test]
    fn fill_policy_closure() {
        let t1 = fixtures::tau1();
        let g = gamma_from_table(&t1, [], FillPolicy::Closure).unwrap();
        assert_eq!(g.table(), gamma_builtin(BuiltinKind::Closure, &t1).table());
    }

    #[test]
    fn classification_examples() {
        let t3 = fixtures::tau3();
        let ic = gamma_builtin(BuiltinKind::InteriorClosure, &t3);
        let class = classify_operation(&t3, &ic);
        assert!(!class.semi_regular_cap);
        let w = semi_regular_witness(&t3, &ic, SemiRegularVariant::Cap).unwrap();
        let u = t3.universe();
        assert_eq!(w.point, 1);
        assert_eq!(w.u, u.parse_set("{a,b}").unwrap());
        assert_eq!(w.v, u.parse_set("{b,c}").unwrap());

        let t1 = fixtures::tau1();
        let id = classify_operation(&t1, &gamma_builtin(BuiltinKind::Identity, &t1));
        assert!(id.regular && id.open_op && id.monotone);

        let t2 = fixtures::tau2();
        let cl = classify_operation(&t2, &gamma_builtin(BuiltinKind::Closure, &t2));
        assert!(cl.semi_open_op);
    }

    #[test]
    fn cup_variant_is_always_met() {
        for t in crate::enumerate::topologies(3).unwrap() {
            for g in enumerate_operations(&t, OperationDomain::SemiOpens, 40) {
                assert!(semi_regular_witness(&t, &g, SemiRegularVariant::Cup).is_none());
            }
        }
    }

    #[test]
    fn operation_stream_counts() {
        let ind = Topology::indiscrete(Universe::standard(3).unwrap());
        let ops: Vec<_> = enumerate_operations(&ind, OperationDomain::Opens, usize::MAX).collect();
        assert_eq!(ops.len(), 3 + 8);
        assert_eq!(ops[3].table(), gamma_builtin(BuiltinKind::Identity, &ind).table());

        let t1 = fixtures::tau1();
        assert_eq!(enumerate_operations(&t1, OperationDomain::Opens, 3).count(), 3);
        let s = enumerate_operations(&t1, OperationDomain::Opens, usize::MAX);
        assert_eq!(s.total(), 3 + 8 * 4 * 4 * 2 * 2);
        assert_eq!(enumerate_operations(&t1, OperationDomain::Builtins, 100).count(), 3);
    }

    #[test]
    fn enumerated_tables_are_valid() {
        let t1 = fixtures::tau1();
        for g in enumerate_operations(&t1, OperationDomain::Opens, usize::MAX) {
            let entries = t1.universe().subsets().map(|a| (a, g.apply(a)));
            assert!(gamma_from_table(&t1, entries, FillPolicy::Identity).is_ok());
        }
    }
}
