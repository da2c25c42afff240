//! γ*-semi-open sets and the operators built from them.
//!
//! `A` is γ*-semi-open when some γ-open `O` has `O ⊆ A ⊆ cl_γ(O)`. The
//! family `SO_γ*` is collected by sweeping `O` over `τ_γ` and adding the
//! whole interval `[O, cl_γ(O)]`. A [`SemistarContext`] fixes one closure
//! variant and tabulates every operator over the power set on construction.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma_space::{lattice_closure, lattice_interior, ClosureVariant, GammaSpace};
use crate::mask::{SubsetFamily, SubsetMask, Universe};

#[derive(Clone, Debug)]
pub struct SemistarContext {
    space: Arc<GammaSpace>,
    variant: ClosureVariant,
    gamma_opens: SubsetFamily,
    assumed: bool,
    cl: Vec<SubsetMask>,
    int: Vec<SubsetMask>,
    so: SubsetFamily,
    sc: SubsetFamily,
    scl: Vec<SubsetMask>,
    sint: Vec<SubsetMask>,
    sint_pw: Vec<SubsetMask>,
}

/// The three closedness tests compared by the semi-closed characterizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemiClosedTests {
    /// Some γ-closed `F` has `int_γ(F) ⊆ A ⊆ F`.
    pub sandwich: bool,
    /// `int_γ(cl_γ(A)) ⊆ A`.
    pub interior_of_closure: bool,
    /// `A` is γ*-semi-closed.
    pub member: bool,
}

impl SemistarContext {
    pub fn new(space: impl Into<Arc<GammaSpace>>, variant: ClosureVariant) -> Self {
        let space = space.into();
        let gamma_opens = space.gamma_open_family().clone();
        Self::build(space, variant, gamma_opens, false)
    }

    /// A context that takes `gamma_opens` as `τ_γ` instead of computing it.
    ///
    /// Used to check what follows from a reported family. The family must
    /// contain `∅` and `X` and be closed under union.
    pub fn with_assumed_gamma_opens(
        space: impl Into<Arc<GammaSpace>>,
        variant: ClosureVariant,
        gamma_opens: SubsetFamily,
    ) -> Result<Self> {
        let space = space.into();
        let u = space.universe();
        for m in gamma_opens.iter() {
            u.check(m)?;
        }
        if !gamma_opens.contains(SubsetMask::EMPTY) || !gamma_opens.contains(u.full()) {
            return Err(Error::MissingEmptyOrFull);
        }
        for a in gamma_opens.iter() {
            for b in gamma_opens.iter() {
                if !gamma_opens.contains(a | b) {
                    return Err(Error::NotClosedUnderUnion(a, b));
                }
            }
        }
        Ok(Self::build(space, variant, gamma_opens, true))
    }

    fn build(
        space: Arc<GammaSpace>,
        variant: ClosureVariant,
        gamma_opens: SubsetFamily,
        assumed: bool,
    ) -> Self {
        let u = space.universe().clone();
        let n = u.size();
        let (cl, int): (Vec<SubsetMask>, Vec<SubsetMask>) = match variant {
            ClosureVariant::Pointwise => u
                .subsets()
                .map(|a| (space.cl_g(a), space.int_g(a)))
                .unzip(),
            ClosureVariant::Lattice => u
                .subsets()
                .map(|a| {
                    (
                        lattice_closure(&gamma_opens, n, a),
                        lattice_interior(&gamma_opens, a),
                    )
                })
                .unzip(),
        };
        let mut so = SubsetFamily::new();
        for o in gamma_opens.iter() {
            let top = cl[o.index()];
            debug_assert!(o.is_subset_of(top));
            let free = top - o;
            for extra in SubsetMask::EMPTY.supersets(n).filter(|s| s.is_subset_of(free)) {
                so.insert(o | extra);
            }
        }
        let sc = so.complements(n);
        let scl = u
            .subsets()
            .map(|a| {
                sc.iter()
                    .filter(|c| a.is_subset_of(*c))
                    .fold(u.full(), |acc, c| acc & c)
            })
            .collect();
        let sint = u.subsets().map(|a| lattice_interior(&so, a)).collect();
        let semi_opens = space.topology().semi_open_family();
        let gamma = space.gamma();
        let sint_pw = u
            .subsets()
            .map(|a| {
                a.points()
                    .filter(|&x| {
                        semi_opens
                            .iter()
                            .any(|s| s.contains(x) && gamma.apply(s).is_subset_of(a))
                    })
                    .fold(SubsetMask::EMPTY, |acc, x| acc.with(x))
            })
            .collect();
        SemistarContext {
            space,
            variant,
            gamma_opens,
            assumed,
            cl,
            int,
            so,
            sc,
            scl,
            sint,
            sint_pw,
        }
    }

    pub fn space(&self) -> &GammaSpace {
        &self.space
    }

    pub fn space_arc(&self) -> &Arc<GammaSpace> {
        &self.space
    }

    pub fn variant(&self) -> ClosureVariant {
        self.variant
    }

    pub fn universe(&self) -> &Universe {
        self.space.universe()
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }

    pub fn full(&self) -> SubsetMask {
        self.space.full()
    }

    /// Whether `τ_γ` was supplied rather than computed.
    pub fn is_assumed(&self) -> bool {
        self.assumed
    }

    /// The `τ_γ` this context works with.
    pub fn gamma_opens(&self) -> &SubsetFamily {
        &self.gamma_opens
    }

    /// `SO_γ*(X)`.
    pub fn so_family(&self) -> &SubsetFamily {
        &self.so
    }

    /// `SC_γ*(X)`, the complements of `SO_γ*(X)`.
    pub fn sc_family(&self) -> &SubsetFamily {
        &self.sc
    }

    pub fn is_gs_open(&self, a: SubsetMask) -> Result<bool> {
        Ok(self.so.contains(self.check(a)?))
    }

    pub fn is_gs_closed(&self, a: SubsetMask) -> Result<bool> {
        Ok(self.sc.contains(self.check(a)?))
    }

    /// Intersection of the γ*-semi-closed supersets of `a`.
    pub fn s_closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.scl(self.check(a)?))
    }

    /// Union of the γ*-semi-open subsets of `a`.
    pub fn s_interior(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.sint(self.check(a)?))
    }

    /// `{ x ∈ A : some semi-open U ∋ x has U^γ ⊆ A }`, with `U` ranging
    /// over the classical semi-open sets.
    pub fn s_interior_pointwise(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.sint_pw(self.check(a)?))
    }

    pub fn s_boundary(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.sbd(self.check(a)?))
    }

    pub fn s_exterior(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.sext(self.check(a)?))
    }

    pub fn is_semi_regular_set(&self, a: SubsetMask) -> Result<bool> {
        let a = self.check(a)?;
        Ok(self.so.contains(a) && self.sc.contains(a))
    }

    pub fn semi_regular_family(&self) -> SubsetFamily {
        self.so.iter().filter(|a| self.sc.contains(*a)).collect()
    }

    /// `A = int_γ(cl_γ(A))` with this context's closure and interior.
    pub fn is_pre_open(&self, a: SubsetMask) -> Result<bool> {
        let a = self.check(a)?;
        Ok(self.intv(self.clv(a)) == a)
    }

    /// The weaker reading `A ⊆ int_γ(cl_γ(A))`.
    pub fn is_pre_open_subset(&self, a: SubsetMask) -> Result<bool> {
        let a = self.check(a)?;
        Ok(a.is_subset_of(self.intv(self.clv(a))))
    }

    pub fn pre_open_family(&self) -> SubsetFamily {
        self.universe()
            .subsets()
            .filter(|a| self.intv(self.clv(*a)) == *a)
            .collect()
    }

    pub fn gs_closed_characterizations(&self, a: SubsetMask) -> Result<SemiClosedTests> {
        let a = self.check(a)?;
        Ok(self.semi_closed_tests(a))
    }

    /// γ-closure under this context's variant.
    pub fn closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.clv(self.check(a)?))
    }

    /// γ-interior under this context's variant.
    pub fn interior(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.intv(self.check(a)?))
    }

    /// γ-boundary under this context's variant.
    pub fn boundary(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.bdv(self.check(a)?))
    }

    fn check(&self, a: SubsetMask) -> Result<SubsetMask> {
        self.universe().check(a)
    }

    pub(crate) fn semi_closed_tests(&self, a: SubsetMask) -> SemiClosedTests {
        let n = self.size();
        let sandwich = self.gamma_opens.iter().any(|o| {
            let f = o.complement(n);
            self.intv(f).is_subset_of(a) && a.is_subset_of(f)
        });
        SemiClosedTests {
            sandwich,
            interior_of_closure: self.intv(self.clv(a)).is_subset_of(a),
            member: self.sc.contains(a),
        }
    }

    pub(crate) fn compl(&self, a: SubsetMask) -> SubsetMask {
        a.complement(self.size())
    }

    pub(crate) fn is_so(&self, a: SubsetMask) -> bool {
        self.so.contains(a)
    }

    pub(crate) fn is_sc(&self, a: SubsetMask) -> bool {
        self.sc.contains(a)
    }

    pub(crate) fn is_gopen(&self, a: SubsetMask) -> bool {
        self.gamma_opens.contains(a)
    }

    pub(crate) fn clv(&self, a: SubsetMask) -> SubsetMask {
        self.cl[a.index()]
    }

    pub(crate) fn intv(&self, a: SubsetMask) -> SubsetMask {
        self.int[a.index()]
    }

    pub(crate) fn bdv(&self, a: SubsetMask) -> SubsetMask {
        self.clv(a) & self.clv(self.compl(a))
    }

    pub(crate) fn scl(&self, a: SubsetMask) -> SubsetMask {
        self.scl[a.index()]
    }

    pub(crate) fn sint(&self, a: SubsetMask) -> SubsetMask {
        self.sint[a.index()]
    }

    pub(crate) fn sint_pw(&self, a: SubsetMask) -> SubsetMask {
        self.sint_pw[a.index()]
    }

    pub(crate) fn sbd(&self, a: SubsetMask) -> SubsetMask {
        self.scl(a) & self.scl(self.compl(a))
    }

    pub(crate) fn sext(&self, a: SubsetMask) -> SubsetMask {
        self.sint(self.compl(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    fn ctx(f: Fixture, v: ClosureVariant) -> SemistarContext {
        SemistarContext::new(f.space(), v)
    }

    fn fam(c: &SemistarContext, sets: &[&str]) -> SubsetFamily {
        sets.iter().map(|s| c.universe().parse_set(s).unwrap()).collect()
    }

    fn set(c: &SemistarContext, s: &str) -> SubsetMask {
        c.universe().parse_set(s).unwrap()
    }

    #[test]
    fn so_family_f5() {
        for v in ClosureVariant::BOTH {
            let c = ctx(Fixture::F5, v);
            let expect = fam(&c, &["{}", "{a}", "{c}", "{a,b}", "{b,c}", "{a,c}", "{a,b,c}"]);
            assert_eq!(c.so_family(), &expect, "{v:?}");
        }
    }

    #[test]
    fn so_family_from_reported_tau_gamma() {
        let space = Fixture::F1.space();
        let reported = ["{}", "{a}", "{a,c}", "{a,b,c}"]
            .iter()
            .map(|s| space.universe().parse_set(s).unwrap())
            .collect();
        let c = SemistarContext::with_assumed_gamma_opens(space, ClosureVariant::Lattice, reported)
            .unwrap();
        assert!(c.is_assumed());
        let expect = fam(&c, &["{}", "{a}", "{a,b}", "{a,c}", "{a,b,c}"]);
        assert_eq!(c.so_family(), &expect);
    }

    #[test]
    fn assumed_family_must_be_union_closed() {
        let space = Fixture::F1.space();
        let u = space.universe().clone();
        let bad = ["{}", "{a}", "{b}", "{a,b,c}"]
            .iter()
            .map(|s| u.parse_set(s).unwrap())
            .collect();
        assert!(matches!(
            SemistarContext::with_assumed_gamma_opens(space, ClosureVariant::Lattice, bad),
            Err(Error::NotClosedUnderUnion(_, _))
        ));
    }

    #[test]
    fn identity_gives_classical_semi_open() {
        for v in ClosureVariant::BOTH {
            let c = ctx(Fixture::Fid, v);
            let t = c.space().topology();
            assert_eq!(c.so_family(), t.semi_open_family());
            for a in c.universe().subsets() {
                assert_eq!(c.s_closure(a).unwrap(), t.semi_closure(a).unwrap());
            }
            assert!(!c.is_pre_open(set(&c, "{a}")).unwrap());
            assert!(c.is_pre_open(SubsetMask::EMPTY).unwrap());
            assert!(c.is_pre_open(c.full()).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        let c = ctx(Fixture::F3, ClosureVariant::Pointwise);
        assert!(!c.is_gs_open(set(&c, "{a}")).unwrap());
        assert!(c.is_gs_open(c.full()).unwrap() && c.is_gs_closed(c.full()).unwrap());
    }

    #[test]
    fn f5_operators() {
        let c = ctx(Fixture::F5, ClosureVariant::Pointwise);
        assert_eq!(c.s_closure(set(&c, "{b}")).unwrap(), set(&c, "{b}"));
        assert_eq!(c.s_closure(c.full()).unwrap(), c.full());
        assert_eq!(c.s_interior(set(&c, "{a,b}")).unwrap(), set(&c, "{a,b}"));
        assert_eq!(c.s_interior(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        assert_eq!(c.s_interior(set(&c, "{b}")).unwrap(), SubsetMask::EMPTY);
        assert_eq!(c.s_interior_pointwise(set(&c, "{a}")).unwrap(), set(&c, "{a}"));
        assert_eq!(c.s_interior_pointwise(set(&c, "{b}")).unwrap(), SubsetMask::EMPTY);
        assert_eq!(c.s_boundary(c.full()).unwrap(), SubsetMask::EMPTY);
        // {a} and {b,c} are both γ*-semi-open, so {a} is γ*-semi-regular
        assert_eq!(c.s_boundary(set(&c, "{a}")).unwrap(), SubsetMask::EMPTY);
        assert!(c.is_semi_regular_set(set(&c, "{a}")).unwrap());
        assert_eq!(c.s_boundary(set(&c, "{a,c}")).unwrap(), set(&c, "{b}"));
        assert_eq!(c.s_exterior(SubsetMask::EMPTY).unwrap(), c.full());
        assert_eq!(c.s_exterior(set(&c, "{a,b}")).unwrap(), set(&c, "{c}"));
        assert_eq!(c.s_exterior(c.full()).unwrap(), SubsetMask::EMPTY);
        assert!(c.is_semi_regular_set(SubsetMask::EMPTY).unwrap());
        assert!(!c.is_semi_regular_set(set(&c, "{a,c}")).unwrap());
    }

    #[test]
    fn semi_closed_tests_examples() {
        let c = ctx(Fixture::Fid, ClosureVariant::Pointwise);
        let t = c.gs_closed_characterizations(set(&c, "{c}")).unwrap();
        assert!(t.sandwich && t.interior_of_closure && t.member);
        let t = c.gs_closed_characterizations(c.full()).unwrap();
        assert!(t.sandwich && t.interior_of_closure && t.member);
        // int_γ(cl_γ{a}) = int_γ{a,b} = {a} on F5
        let c = ctx(Fixture::F5, ClosureVariant::Pointwise);
        let t = c.gs_closed_characterizations(set(&c, "{a}")).unwrap();
        assert!(t.interior_of_closure);
        assert_eq!(t.member, c.is_gs_closed(set(&c, "{a}")).unwrap());
    }

    #[test]
    fn out_of_range() {
        let c = ctx(Fixture::F5, ClosureVariant::Pointwise);
        assert!(c.s_closure(SubsetMask::from_bits(0x80)).is_err());
    }
}
