//! Point maps between two spaces with operations, and the
//! γ-semi-continuity / γ-semi-openness predicates.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::{SubsetMask, Universe};
use crate::semistar::SemistarContext;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PointMap {
    #[serde(skip)]
    source: Universe,
    #[serde(skip)]
    target: Universe,
    assignment: Vec<usize>,
    bijective: bool,
}

impl PointMap {
    pub fn new(source: Universe, target: Universe, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.size() {
            return Err(Error::UniverseMismatch(format!(
                "map assigns {} points, source has {}",
                assignment.len(),
                source.size()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.size()) {
            return Err(Error::UniverseMismatch(format!(
                "image point {bad} outside a target of {} points",
                target.size()
            )));
        }
        let hit = assignment
            .iter()
            .fold(SubsetMask::EMPTY, |m, &y| m.with(y));
        let bijective = source.size() == target.size() && hit == target.full();
        Ok(PointMap {
            source,
            target,
            assignment,
            bijective,
        })
    }

    pub fn identity(universe: Universe) -> Self {
        let assignment = (0..universe.size()).collect();
        Self::new(universe.clone(), universe, assignment).expect("identity map")
    }

    pub fn constant(source: Universe, target: Universe, point: usize) -> Result<Self> {
        let assignment = vec![point; source.size()];
        Self::new(source, target, assignment)
    }

    pub fn source(&self) -> &Universe {
        &self.source
    }

    pub fn target(&self) -> &Universe {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, point: usize) -> usize {
        self.assignment[point]
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    /// `f(A)`.
    pub fn image(&self, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.img(self.source.check(a)?))
    }

    /// `f⁻¹(B)`.
    pub fn preimage(&self, b: SubsetMask) -> Result<SubsetMask> {
        Ok(self.pre(self.target.check(b)?))
    }

    pub(crate) fn img(&self, a: SubsetMask) -> SubsetMask {
        a.points()
            .fold(SubsetMask::EMPTY, |m, p| m.with(self.assignment[p]))
    }

    pub(crate) fn pre(&self, b: SubsetMask) -> SubsetMask {
        (0..self.source.size())
            .filter(|&p| b.contains(self.assignment[p]))
            .fold(SubsetMask::EMPTY, |m, p| m.with(p))
    }

    /// `a↦b, b↦b, ...` rendering.
    pub fn describe(&self) -> String {
        self.assignment
            .iter()
            .enumerate()
            .map(|(p, &y)| format!("{}->{}", self.source.label(p), self.target.label(y)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Number of maps `source → target`, saturating.
pub fn map_count(source: &Universe, target: &Universe) -> u128 {
    (target.size() as u128)
        .checked_pow(source.size() as u32)
        .unwrap_or(u128::MAX)
}

/// Every map `source → target`, lexicographic on `(f(x₀), f(x₁), ...)`.
pub fn all_maps(source: Universe, target: Universe) -> impl Iterator<Item = PointMap> {
    let n = source.size();
    let m = target.size();
    let total = map_count(&source, &target);
    (0..total).map(move |mut k| {
        let mut assignment = vec![0; n];
        for slot in assignment.iter_mut().rev() {
            *slot = (k % m as u128) as usize;
            k /= m as u128;
        }
        PointMap::new(source.clone(), target.clone(), assignment).expect("in range")
    })
}

/// `count` maps drawn uniformly with a fixed seed; repeats are possible.
pub fn sampled_maps(source: Universe, target: Universe, count: usize, seed: u64) -> Vec<PointMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let assignment = (0..source.size())
                .map(|_| rng.gen_range(0..target.size()))
                .collect();
            PointMap::new(source.clone(), target.clone(), assignment).expect("in range")
        })
        .collect()
}

/// Outcome of a map predicate: the first offending set when it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Judgement {
    pub holds: bool,
    pub witness: Option<SubsetMask>,
}

impl Judgement {
    fn from_witness(witness: Option<SubsetMask>) -> Self {
        Judgement {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// A map together with the contexts on both of its sides.
#[derive(Clone, Debug)]
pub struct MapInstance {
    domain: Arc<SemistarContext>,
    codomain: Arc<SemistarContext>,
    map: PointMap,
}

impl MapInstance {
    pub fn new(
        domain: Arc<SemistarContext>,
        codomain: Arc<SemistarContext>,
        map: PointMap,
    ) -> Result<Self> {
        if map.source() != domain.universe() {
            return Err(Error::UniverseMismatch("map source differs from the domain".into()));
        }
        if map.target() != codomain.universe() {
            return Err(Error::UniverseMismatch(
                "map target differs from the codomain".into(),
            ));
        }
        Ok(MapInstance {
            domain,
            codomain,
            map,
        })
    }

    pub fn domain(&self) -> &SemistarContext {
        &self.domain
    }

    pub fn codomain(&self) -> &SemistarContext {
        &self.codomain
    }

    pub fn map(&self) -> &PointMap {
        &self.map
    }

    /// `f⁻¹(B) ∈ SO_γ*(X)` for every `B ∈ τ_γ(Y)`.
    pub fn is_gamma_semi_continuous(&self) -> Judgement {
        Judgement::from_witness(
            self.codomain
                .gamma_opens()
                .iter()
                .find(|b| !self.domain.is_so(self.map.pre(*b))),
        )
    }

    /// `f(U) ∈ SO_γ*(Y)` for every `U ∈ τ_γ(X)`.
    pub fn is_gamma_semi_open_map(&self) -> Judgement {
        Judgement::from_witness(
            self.domain
                .gamma_opens()
                .iter()
                .find(|u| !self.codomain.is_so(self.map.img(*u))),
        )
    }

    /// First `(x, B)` with `B ∈ τ_γ(Y)`, `f(x) ∈ B`, and no `A ∈ SO_γ*(X)`
    /// with `x ∈ A` and `f(A) ⊆ B`.
    pub fn pointwise_continuity_violation(&self) -> Option<(usize, SubsetMask)> {
        let so = self.domain.so_family();
        (0..self.domain.size()).find_map(|x| {
            self.codomain
                .gamma_opens()
                .iter()
                .filter(|b| b.contains(self.map.apply(x)))
                .find(|b| {
                    !so.iter()
                        .any(|a| a.contains(x) && self.map.img(a).is_subset_of(*b))
                })
                .map(|b| (x, b))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::gamma_space::ClosureVariant;

    fn u3() -> Universe {
        Universe::standard(3).unwrap()
    }

    fn ctx(f: Fixture) -> Arc<SemistarContext> {
        Arc::new(SemistarContext::new(f.space(), ClosureVariant::Pointwise))
    }

    #[test]
    fn image_preimage_examples() {
        let u = u3();
        let id = PointMap::identity(u.clone());
        let ab = u.parse_set("{a,b}").unwrap();
        assert_eq!(id.image(ab).unwrap(), ab);
        let k = PointMap::constant(u.clone(), u.clone(), 0).unwrap();
        assert_eq!(k.image(u.full()).unwrap(), u.parse_set("{a}").unwrap());
        let f = PointMap::new(u.clone(), u.clone(), vec![1, 1, 2]).unwrap();
        assert_eq!(f.preimage(u.parse_set("{b}").unwrap()).unwrap(), ab);
        assert!(!f.is_bijective());
        assert!(id.is_bijective());
        assert!(f.image(SubsetMask::from_bits(8)).is_err());
    }

    #[test]
    fn map_enumeration() {
        let maps: Vec<_> = all_maps(u3(), u3()).collect();
        assert_eq!(maps.len(), 27);
        assert_eq!(maps[0].assignment(), &[0, 0, 0]);
        assert_eq!(maps[5].assignment(), &[0, 1, 2]);
        assert_eq!(maps.iter().filter(|m| m.is_bijective()).count(), 6);
        let s1 = sampled_maps(u3(), u3(), 10, 7);
        assert_eq!(s1, sampled_maps(u3(), u3(), 10, 7));
    }

    #[test]
    fn continuity_examples() {
        for f in Fixture::ALL {
            let c = ctx(f);
            let id = MapInstance::new(c.clone(), c.clone(), PointMap::identity(u3())).unwrap();
            assert!(id.is_gamma_semi_continuous().holds);
            assert!(id.is_gamma_semi_open_map().holds);
            for p in 0..3 {
                let k = PointMap::constant(u3(), u3(), p).unwrap();
                let inst = MapInstance::new(c.clone(), c.clone(), k).unwrap();
                assert!(inst.is_gamma_semi_continuous().holds);
                let single = SubsetMask::singleton(p);
                assert_eq!(inst.is_gamma_semi_open_map().holds, c.is_so(single));
            }
        }
        // f(a)=c, f(b)=b, f(c)=a on (τ1, id): f⁻¹{a} = {c} is not semi-open
        let c = ctx(Fixture::Fid);
        let swap = PointMap::new(u3(), u3(), vec![2, 1, 0]).unwrap();
        let inst = MapInstance::new(c.clone(), c, swap).unwrap();
        let j = inst.is_gamma_semi_continuous();
        assert!(!j.holds);
        assert_eq!(j.witness, Some(SubsetMask::from_bits(0b001)));
        assert!(inst.pointwise_continuity_violation().is_some());
    }

    #[test]
    fn mismatched_universe() {
        let c = ctx(Fixture::F1);
        let u2 = Universe::standard(2).unwrap();
        let m = PointMap::constant(u2.clone(), u3(), 0).unwrap();
        assert!(MapInstance::new(c.clone(), c, m).is_err());
    }
}
