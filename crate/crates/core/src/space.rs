//! Finite topological spaces and the classical operators on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::{SubsetFamily, SubsetMask, Universe};

/// A validated open-set family over a [`Universe`].
///
/// Interior, closure, and the classical semi-open family are tabulated over
/// the whole power set at construction, so every query afterwards is a table
/// lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Topology {
    universe: Universe,
    opens: SubsetFamily,
    #[serde(skip)]
    interior: Vec<SubsetMask>,
    #[serde(skip)]
    closure: Vec<SubsetMask>,
    #[serde(skip)]
    semi_open: SubsetFamily,
    #[serde(skip)]
    semi_closure: Vec<SubsetMask>,
}

/// Validates `opens` and builds the topology.
pub fn make_topology(universe: Universe, opens: impl IntoIterator<Item = SubsetMask>) -> Result<Topology> {
    Topology::new(universe, opens)
}

impl Topology {
    pub fn new(universe: Universe, opens: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let opens: SubsetFamily = opens
            .into_iter()
            .map(|m| universe.check(m))
            .collect::<Result<_>>()?;
        if !opens.contains(SubsetMask::EMPTY) || !opens.contains(universe.full()) {
            return Err(Error::MissingEmptyOrFull);
        }
        for (i, u) in opens.iter().enumerate() {
            for v in opens.iter().skip(i + 1) {
                if !opens.contains(u | v) {
                    return Err(Error::NotClosedUnderUnion(u, v));
                }
            }
        }
        for (i, u) in opens.iter().enumerate() {
            for v in opens.iter().skip(i + 1) {
                if !opens.contains(u & v) {
                    return Err(Error::NotClosedUnderIntersection(u, v));
                }
            }
        }
        Ok(Self::build(universe, opens))
    }

    /// Builds from a family already known to be a topology.
    pub(crate) fn from_valid_family(universe: Universe, opens: SubsetFamily) -> Self {
        debug_assert!(opens.contains(SubsetMask::EMPTY) && opens.contains(universe.full()));
        Self::build(universe, opens)
    }

    fn build(universe: Universe, opens: SubsetFamily) -> Self {
        let n = universe.size();
        let interior: Vec<SubsetMask> = universe
            .subsets()
            .map(|a| {
                opens
                    .iter()
                    .filter(|o| o.is_subset_of(a))
                    .fold(SubsetMask::EMPTY, |acc, o| acc | o)
            })
            .collect();
        let closure: Vec<SubsetMask> = universe
            .subsets()
            .map(|a| interior[a.complement(n).index()].complement(n))
            .collect();
        let semi_open: SubsetFamily = universe
            .subsets()
            .filter(|a| a.is_subset_of(closure[interior[a.index()].index()]))
            .collect();
        let semi_closed = semi_open.complements(n);
        let semi_closure = universe
            .subsets()
            .map(|a| {
                semi_closed
                    .iter()
                    .filter(|c| a.is_subset_of(*c))
                    .fold(universe.full(), |acc, c| acc & c)
            })
            .collect();
        Topology {
            universe,
            opens,
            interior,
            closure,
            semi_open,
            semi_closure,
        }
    }

    pub fn indiscrete(universe: Universe) -> Self {
        let full = universe.full();
        Self::from_valid_family(universe, [SubsetMask::EMPTY, full].into_iter().collect())
    }

    pub fn discrete(universe: Universe) -> Self {
        let all = universe.subsets().collect();
        Self::from_valid_family(universe, all)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn full(&self) -> SubsetMask {
        self.universe.full()
    }

    pub fn opens(&self) -> &SubsetFamily {
        &self.opens
    }

    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.opens.contains(self.universe.complement(a))
    }

    /// Open sets containing `point`, ascending.
    pub fn opens_containing(&self, point: usize) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens.iter().filter(move |o| o.contains(point))
    }

    /// Smallest open set containing `point`.
    pub fn minimal_neighbourhood(&self, point: usize) -> SubsetMask {
        self.opens_containing(point)
            .fold(self.full(), |acc, o| acc & o)
    }

    pub fn closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.cl(self.universe.check(a)?))
    }

    pub fn interior(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.int(self.universe.check(a)?))
    }

    /// `cl(A) ∩ cl(X − A)`.
    pub fn boundary(&self, a: SubsetMask) -> Result<SubsetMask> {
        let a = self.universe.check(a)?;
        Ok(self.cl(a) & self.cl(self.universe.complement(a)))
    }

    /// Levine semi-open sets: `A ⊆ cl(int(A))`.
    pub fn semi_open_family(&self) -> &SubsetFamily {
        &self.semi_open
    }

    pub fn is_semi_open(&self, a: SubsetMask) -> bool {
        self.semi_open.contains(a)
    }

    pub fn is_semi_closed(&self, a: SubsetMask) -> bool {
        self.semi_open.contains(self.universe.complement(a))
    }

    /// Intersection of the classical semi-closed supersets of `a`.
    pub fn semi_closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.scl(self.universe.check(a)?))
    }

    /// Classical semi-boundary `scl(A) ∩ scl(X − A)`.
    pub fn semi_boundary(&self, a: SubsetMask) -> Result<SubsetMask> {
        let a = self.universe.check(a)?;
        Ok(self.scl(a) & self.scl(self.universe.complement(a)))
    }

    pub(crate) fn cl(&self, a: SubsetMask) -> SubsetMask {
        self.closure[a.index()]
    }

    pub(crate) fn int(&self, a: SubsetMask) -> SubsetMask {
        self.interior[a.index()]
    }

    pub(crate) fn scl(&self, a: SubsetMask) -> SubsetMask {
        self.semi_closure[a.index()]
    }

    /// One-line rendering of the open family.
    pub fn describe(&self) -> String {
        self.universe.render_family(&self.opens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::standard(3).unwrap()
    }

    fn fam(u: &Universe, sets: &[&[&str]]) -> Vec<SubsetMask> {
        sets.iter().map(|s| u.mask_of(s.iter()).unwrap()).collect()
    }

    fn tau1() -> Topology {
        let u = u3();
        let opens = fam(&u, &[&[], &["a"], &["b"], &["a", "b"], &["a", "c"], &["a", "b", "c"]]);
        make_topology(u, opens).unwrap()
    }

    fn tau2() -> Topology {
        let u = u3();
        let opens = fam(&u, &[&[], &["a"], &["a", "b"], &["a", "b", "c"]]);
        make_topology(u, opens).unwrap()
    }

    fn tau3() -> Topology {
        let u = u3();
        let opens = fam(&u, &[&[], &["a"], &["c"], &["a", "c"], &["a", "b", "c"]]);
        make_topology(u, opens).unwrap()
    }

    fn set(t: &Topology, s: &str) -> SubsetMask {
        t.universe().parse_set(s).unwrap()
    }

    #[test]
    fn validation_errors() {
        let u = u3();
        let bad = fam(&u, &[&[], &["a"], &["b"], &["a", "b", "c"]]);
        let a = u.parse_set("{a}").unwrap();
        let b = u.parse_set("{b}").unwrap();
        assert_eq!(
            make_topology(u.clone(), bad),
            Err(Error::NotClosedUnderUnion(a, b))
        );
        let no_full = fam(&u, &[&[], &["a"]]);
        assert_eq!(make_topology(u.clone(), no_full), Err(Error::MissingEmptyOrFull));
        let out = vec![SubsetMask::EMPTY, SubsetMask::from_bits(0b1000), u.full()];
        assert!(matches!(
            make_topology(u.clone(), out),
            Err(Error::MaskOutOfRange { .. })
        ));
        let no_meet = fam(&u, &[&[], &["a", "b"], &["b", "c"], &["a", "b", "c"]]);
        assert!(matches!(
            make_topology(u.clone(), no_meet),
            Err(Error::NotClosedUnderIntersection(_, _))
        ));
        let indiscrete = fam(&u, &[&[], &["a", "b", "c"]]);
        assert_eq!(make_topology(u, indiscrete).unwrap().opens().len(), 2);
    }

    #[test]
    fn closure_interior_examples() {
        let t1 = tau1();
        assert_eq!(t1.closure(set(&t1, "{a}")).unwrap(), set(&t1, "{a,c}"));
        assert_eq!(t1.closure(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        assert_eq!(t1.interior(t1.full()).unwrap(), t1.full());
        assert_eq!(t1.interior(set(&t1, "{c}")).unwrap(), SubsetMask::EMPTY);
        let t2 = tau2();
        assert_eq!(t2.closure(set(&t2, "{a}")).unwrap(), t2.full());
        let t3 = tau3();
        assert_eq!(t3.interior(set(&t3, "{a,b}")).unwrap(), set(&t3, "{a}"));
        assert!(t3.closure(SubsetMask::from_bits(0x10)).is_err());
    }

    #[test]
    fn boundary_examples() {
        let t1 = tau1();
        assert_eq!(t1.boundary(set(&t1, "{a}")).unwrap(), set(&t1, "{c}"));
        assert_eq!(t1.boundary(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        assert_eq!(t1.boundary(t1.full()).unwrap(), SubsetMask::EMPTY);
    }

    #[test]
    fn semi_open_examples() {
        let t2 = tau2();
        let expect: SubsetFamily = ["{}", "{a}", "{a,b}", "{a,c}", "{a,b,c}"]
            .iter()
            .map(|s| set(&t2, s))
            .collect();
        assert_eq!(t2.semi_open_family(), &expect);
        let t1 = tau1();
        assert_eq!(t1.semi_open_family(), t1.opens());
        let ind = Topology::indiscrete(u3());
        assert_eq!(ind.semi_open_family(), ind.opens());
    }

    #[test]
    fn semi_closure_examples() {
        let t1 = tau1();
        assert_eq!(t1.semi_closure(set(&t1, "{c}")).unwrap(), set(&t1, "{c}"));
        assert_eq!(t1.semi_closure(t1.full()).unwrap(), t1.full());
        // {a,c} is semi-open in τ2, so {b} is already semi-closed
        let t2 = tau2();
        assert!(t2.is_semi_open(set(&t2, "{a,c}")));
        assert_eq!(t2.semi_closure(set(&t2, "{b}")).unwrap(), set(&t2, "{b}"));
        assert_eq!(t2.semi_closure(set(&t2, "{c}")).unwrap(), set(&t2, "{c}"));
    }

    #[test]
    fn minimal_neighbourhoods() {
        let t3 = tau3();
        assert_eq!(t3.minimal_neighbourhood(0), set(&t3, "{a}"));
        assert_eq!(t3.minimal_neighbourhood(1), t3.full());
    }
}
