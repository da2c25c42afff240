//! A topology paired with an operation, and the γ-interior / γ-closure
//! operators on it.
//!
//! Two closures coexist. [`GammaSpace::cl_gamma`] is the pointwise one: `x`
//! is a γ-closure point of `A` when every open `U ∋ x` has `U^γ ∩ A ≠ ∅`.
//! [`GammaSpace::cl_gamma_lattice`] is the smallest γ-closed superset. The
//! pointwise closure is always contained in the lattice one, and the two
//! differ whenever the pointwise closure fails to be idempotent.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{classify_operation, GammaOperation, OperationClass};
use crate::mask::{SubsetFamily, SubsetMask, Universe};
use crate::space::Topology;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureVariant {
    /// `{ x : U^γ ∩ A ≠ ∅ for every open U ∋ x }`
    #[default]
    Pointwise,
    /// Smallest γ-closed superset.
    Lattice,
}

impl ClosureVariant {
    pub const BOTH: [ClosureVariant; 2] = [ClosureVariant::Pointwise, ClosureVariant::Lattice];

    pub fn name(self) -> &'static str {
        match self {
            ClosureVariant::Pointwise => "pointwise",
            ClosureVariant::Lattice => "lattice",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pointwise" => Some(ClosureVariant::Pointwise),
            "lattice" => Some(ClosureVariant::Lattice),
            _ => None,
        }
    }
}

/// How γ-closedness is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaClosedTest {
    /// `X − A` is γ-open.
    Complement,
    /// `cl_γ(A) ⊆ A` with the pointwise closure.
    Pointwise,
}

#[derive(Debug)]
pub struct GammaSpace {
    topology: Arc<Topology>,
    gamma: GammaOperation,
    tau_gamma: OnceLock<SubsetFamily>,
    class: OnceLock<OperationClass>,
}

impl Clone for GammaSpace {
    fn clone(&self) -> Self {
        GammaSpace {
            topology: Arc::clone(&self.topology),
            gamma: self.gamma.clone(),
            tau_gamma: self.tau_gamma.clone(),
            class: self.class.clone(),
        }
    }
}

impl GammaSpace {
    /// Pairs `gamma` with `topology`, checking that the table covers the
    /// power set and is expansive on every open set.
    pub fn new(topology: impl Into<Arc<Topology>>, gamma: GammaOperation) -> Result<Self> {
        let topology = topology.into();
        let expected = topology.universe().power_set_len();
        if gamma.table().len() != expected {
            return Err(Error::TableSize {
                got: gamma.table().len(),
                expected,
            });
        }
        if let Some(v) = topology
            .opens()
            .iter()
            .find(|v| !v.is_subset_of(gamma.apply(*v)))
        {
            return Err(Error::NotExpansiveOnOpens(v));
        }
        Ok(GammaSpace {
            topology,
            gamma,
            tau_gamma: OnceLock::new(),
            class: OnceLock::new(),
        })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn topology_arc(&self) -> &Arc<Topology> {
        &self.topology
    }

    pub fn gamma(&self) -> &GammaOperation {
        &self.gamma
    }

    pub fn universe(&self) -> &Universe {
        self.topology.universe()
    }

    pub fn size(&self) -> usize {
        self.topology.size()
    }

    pub fn full(&self) -> SubsetMask {
        self.topology.full()
    }

    pub fn classification(&self) -> OperationClass {
        *self
            .class
            .get_or_init(|| classify_operation(&self.topology, &self.gamma))
    }

    pub fn describe(&self) -> String {
        format!(
            "τ={} γ={}",
            self.topology.describe(),
            self.gamma.describe(self.universe())
        )
    }

    /// `{ x ∈ A : some open N ∋ x has N^γ ⊆ A }`.
    pub fn int_gamma(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.int_g(self.universe().check(a)?))
    }

    /// `τ_γ`, the fixed points of [`GammaSpace::int_gamma`].
    pub fn gamma_open_family(&self) -> &SubsetFamily {
        self.tau_gamma
            .get_or_init(|| gamma_open_family_of(&self.topology, &self.gamma))
    }

    pub fn is_gamma_open(&self, a: SubsetMask) -> bool {
        self.gamma_open_family().contains(a)
    }

    /// Pointwise γ-closure.
    pub fn cl_gamma(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.cl_g(self.universe().check(a)?))
    }

    /// Smallest γ-closed superset.
    pub fn cl_gamma_lattice(&self, a: SubsetMask) -> Result<SubsetMask> {
        let a = self.universe().check(a)?;
        Ok(lattice_closure(self.gamma_open_family(), self.size(), a))
    }

    /// Largest γ-open subset.
    pub fn int_gamma_lattice(&self, a: SubsetMask) -> Result<SubsetMask> {
        let a = self.universe().check(a)?;
        Ok(lattice_interior(self.gamma_open_family(), a))
    }

    pub fn closure_with(&self, variant: ClosureVariant, a: SubsetMask) -> Result<SubsetMask> {
        match variant {
            ClosureVariant::Pointwise => self.cl_gamma(a),
            ClosureVariant::Lattice => self.cl_gamma_lattice(a),
        }
    }

    pub fn interior_with(&self, variant: ClosureVariant, a: SubsetMask) -> Result<SubsetMask> {
        match variant {
            ClosureVariant::Pointwise => self.int_gamma(a),
            ClosureVariant::Lattice => self.int_gamma_lattice(a),
        }
    }

    pub fn is_gamma_closed(&self, a: SubsetMask, test: GammaClosedTest) -> Result<bool> {
        let a = self.universe().check(a)?;
        Ok(match test {
            GammaClosedTest::Complement => self.is_gamma_open(self.universe().complement(a)),
            GammaClosedTest::Pointwise => self.cl_g(a).is_subset_of(a),
        })
    }

    /// `cl_γ(A) ∩ cl_γ(X − A)` with the chosen closure.
    pub fn bd_gamma(&self, a: SubsetMask, variant: ClosureVariant) -> Result<SubsetMask> {
        let a = self.universe().check(a)?;
        let c = self.universe().complement(a);
        Ok(self.closure_with(variant, a)? & self.closure_with(variant, c)?)
    }

    pub(crate) fn int_g(&self, a: SubsetMask) -> SubsetMask {
        pointwise_interior(&self.topology, &self.gamma, a)
    }

    pub(crate) fn cl_g(&self, a: SubsetMask) -> SubsetMask {
        (0..self.size())
            .filter(|&x| {
                self.topology
                    .opens_containing(x)
                    .all(|u| !self.gamma.apply(u).is_disjoint(a))
            })
            .fold(SubsetMask::EMPTY, |acc, x| acc.with(x))
    }
}

fn pointwise_interior(topology: &Topology, gamma: &GammaOperation, a: SubsetMask) -> SubsetMask {
    a.points()
        .filter(|&x| {
            topology
                .opens_containing(x)
                .any(|n| gamma.apply(n).is_subset_of(a))
        })
        .fold(SubsetMask::EMPTY, |acc, x| acc.with(x))
}

pub(crate) fn gamma_open_family_of(topology: &Topology, gamma: &GammaOperation) -> SubsetFamily {
    topology
        .universe()
        .subsets()
        .filter(|a| pointwise_interior(topology, gamma, *a) == *a)
        .collect()
}

/// Smallest superset of `a` whose complement lies in `opens`. `opens` must
/// be closed under union and contain the empty set.
pub fn lattice_closure(opens: &SubsetFamily, n: usize, a: SubsetMask) -> SubsetMask {
    opens
        .iter()
        .filter(|o| o.is_disjoint(a))
        .fold(SubsetMask::EMPTY, |acc, o| acc | o)
        .complement(n)
}

/// Union of the members of `opens` inside `a`.
pub fn lattice_interior(opens: &SubsetFamily, a: SubsetMask) -> SubsetMask {
    opens
        .iter()
        .filter(|o| o.is_subset_of(a))
        .fold(SubsetMask::EMPTY, |acc, o| acc | o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Fixture};

    fn set(s: &GammaSpace, t: &str) -> SubsetMask {
        s.universe().parse_set(t).unwrap()
    }

    #[test]
    fn identity_degenerates_to_classical() {
        let s = Fixture::Fid.space();
        let t = s.topology();
        for a in s.universe().subsets() {
            assert_eq!(s.int_gamma(a).unwrap(), t.interior(a).unwrap());
            assert_eq!(s.cl_gamma(a).unwrap(), t.closure(a).unwrap());
            assert_eq!(s.int_gamma_lattice(a).unwrap(), t.interior(a).unwrap());
        }
        assert_eq!(s.gamma_open_family(), t.opens());
        assert_eq!(s.cl_gamma_lattice(set(&s, "{a}")).unwrap(), set(&s, "{a,c}"));
        assert!(s.is_gamma_closed(set(&s, "{c}"), GammaClosedTest::Complement).unwrap());
        assert_eq!(s.bd_gamma(set(&s, "{a}"), ClosureVariant::Pointwise).unwrap(), set(&s, "{c}"));
    }

    #[test]
    fn f5_operators() {
        let s = Fixture::F5.space();
        assert_eq!(s.int_gamma(set(&s, "{a,b}")).unwrap(), set(&s, "{a}"));
        assert_eq!(s.gamma_open_family(), fixtures::tau3().opens());
        assert_eq!(s.cl_gamma(set(&s, "{a}")).unwrap(), set(&s, "{a,b}"));
        assert_eq!(s.cl_gamma(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        assert_eq!(s.cl_gamma_lattice(set(&s, "{c}")).unwrap(), set(&s, "{b,c}"));
        assert_eq!(s.int_gamma_lattice(set(&s, "{a,b}")).unwrap(), set(&s, "{a}"));
        assert_eq!(s.int_gamma_lattice(set(&s, "{b}")).unwrap(), SubsetMask::EMPTY);
        assert!(s.is_gamma_closed(set(&s, "{b,c}"), GammaClosedTest::Complement).unwrap());
        assert!(!s.is_gamma_closed(set(&s, "{a}"), GammaClosedTest::Pointwise).unwrap());
        assert_eq!(s.bd_gamma(set(&s, "{a}"), ClosureVariant::Pointwise).unwrap(), set(&s, "{b}"));
        assert_eq!(s.bd_gamma(s.full(), ClosureVariant::Pointwise).unwrap(), SubsetMask::EMPTY);
        assert!(s.int_gamma(SubsetMask::from_bits(8)).is_err());
    }

    #[test]
    fn f1_int_of_empty_and_oracle_tau_gamma() {
        let s = Fixture::F1.space();
        assert_eq!(s.int_gamma(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        // γ2 fixes every open set of τ1 ({b} is closed, so cl{b} = {b})
        assert_eq!(s.gamma_open_family(), fixtures::tau1().opens());
    }

    #[test]
    fn lattice_closure_with_reported_family() {
        let s = Fixture::F1.space();
        let reported: SubsetFamily = ["{}", "{a}", "{a,c}", "{a,b,c}"]
            .iter()
            .map(|t| set(&s, t))
            .collect();
        assert_eq!(lattice_closure(&reported, 3, set(&s, "{a}")), s.full());
    }

    #[test]
    fn rejects_foreign_operation() {
        let t1 = fixtures::tau1();
        let t3 = fixtures::tau3();
        let ic = crate::gamma::gamma_builtin(crate::gamma::BuiltinKind::InteriorClosure, &t3);
        // int(cl({b})) in τ3 is ∅, which shrinks the τ1-open {b}
        assert!(matches!(
            GammaSpace::new(t1, ic),
            Err(Error::NotExpansiveOnOpens(_))
        ));
    }
}
