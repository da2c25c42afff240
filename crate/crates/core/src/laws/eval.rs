use std::collections::BTreeMap;
use std::sync::Arc;

use super::registry::find_claim;
use super::{
    Binding, Check, Claim, ClaimKind, EvalOptions, ExampleEnv, Hypothesis, Instance, MapCoverage,
    Side, Status, VariantRecord, Verdict, Witness,
};
use crate::error::{Error, Result};
use crate::gamma::{OperationClass, SemiRegularVariant};
use crate::maps::{all_maps, sampled_maps, MapInstance, PointMap};
use crate::mask::Universe;
use crate::semistar::SemistarContext;

/// Largest side for which every map of a pair is checked.
const EXHAUSTIVE_MAP_POINTS: usize = 3;

pub fn evaluate_claim(id: &str, instance: &Instance, options: &EvalOptions) -> Result<Verdict> {
    evaluate(find_claim(id)?, instance, options)
}

pub fn evaluate(claim: &Claim, instance: &Instance, options: &EvalOptions) -> Result<Verdict> {
    match (&claim.kind, instance) {
        (ClaimKind::Space(_) | ClaimKind::Example(..), Instance::Space(space)) => {
            let ctx = SemistarContext::new(Arc::clone(space), options.closure);
            evaluate_on_space(claim, &ctx, options, &instance.describe())
        }
        (ClaimKind::Map(_), Instance::Map { domain, codomain, map }) => {
            let dom = Arc::new(SemistarContext::new(Arc::clone(domain), options.closure));
            let cod = Arc::new(SemistarContext::new(Arc::clone(codomain), options.closure));
            evaluate_on_pair(claim, &dom, &cod, map.as_ref(), options, &instance.describe())
        }
        (ClaimKind::Map(_), Instance::Space(_)) => Err(mismatch(claim, "needs a pair of spaces")),
        (_, Instance::Map { .. }) => Err(mismatch(claim, "needs a single space")),
    }
}

fn mismatch(claim: &Claim, reason: &str) -> Error {
    Error::ShapeMismatch {
        claim: claim.id.to_string(),
        reason: reason.to_string(),
    }
}

fn blank(claim: &Claim, options: &EvalOptions, label: &str) -> Verdict {
    Verdict {
        claim: claim.id.to_string(),
        instance: label.to_string(),
        status: Status::Confirmed,
        variant: VariantRecord::of(options),
        witness: None,
        unmet: Vec::new(),
        checked: 0,
        maps: None,
        observation: None,
    }
}

fn meets(class: &OperationClass, h: Hypothesis, variant: SemiRegularVariant) -> bool {
    match h {
        Hypothesis::Regular => class.regular,
        Hypothesis::SemiRegular => match variant {
            SemiRegularVariant::Cap => class.semi_regular_cap,
            SemiRegularVariant::Cup => class.semi_regular_cup,
        },
        Hypothesis::Open => class.open_op,
        Hypothesis::Monotone => class.monotone,
        Hypothesis::Bijective => true,
    }
}

fn unmet_on(claim: &Claim, classes: &[OperationClass], options: &EvalOptions) -> Vec<Hypothesis> {
    claim
        .hypotheses
        .iter()
        .copied()
        .filter(|&h| h != Hypothesis::Bijective && !options.is_dropped(h))
        .filter(|&h| !classes.iter().all(|c| meets(c, h, options.semi_regular)))
        .collect()
}

/// Slot values in canonical order, first slot outermost.
fn bindings<'a>(
    claim: &Claim,
    domain: &'a Universe,
    codomain: &'a Universe,
) -> Box<dyn Iterator<Item = Binding> + 'a> {
    let side = |s: Side| match s {
        Side::Domain => domain,
        Side::Codomain => codomain,
    };
    match claim.slots {
        [] => Box::new(std::iter::once(Binding::default())),
        [(_, s)] => Box::new(side(*s).subsets().map(|a| Binding { a, b: Default::default() })),
        [(_, s), (_, t), ..] => {
            let inner = side(*t);
            Box::new(
                side(*s)
                    .subsets()
                    .flat_map(move |a| inner.subsets().map(move |b| Binding { a, b })),
            )
        }
    }
}

fn witness(
    claim: &Claim,
    binding: Binding,
    note: String,
    domain: &Universe,
    codomain: &Universe,
    map: Option<&PointMap>,
) -> Witness {
    let mut rendered = BTreeMap::new();
    for (i, (name, side)) in claim.slots.iter().enumerate() {
        let u = match side {
            Side::Domain => domain,
            Side::Codomain => codomain,
        };
        let value = if i == 0 { binding.a } else { binding.b };
        rendered.insert(name.to_string(), u.render(value));
    }
    Witness {
        bindings: rendered,
        map: map.map(|m| m.describe()),
        note: Some(note),
        raw: binding,
        raw_map: map.cloned(),
    }
}

/// Sweep one predicate; returns bindings checked and the first failure.
fn sweep(
    claim: &Claim,
    domain: &Universe,
    codomain: &Universe,
    mut check: impl FnMut(Binding) -> Check,
) -> (usize, Option<(Binding, String)>) {
    let mut checked = 0;
    for b in bindings(claim, domain, codomain) {
        checked += 1;
        if let Some(note) = check(b) {
            return (checked, Some((b, note)));
        }
    }
    (checked, None)
}

pub(crate) fn evaluate_on_space(
    claim: &Claim,
    ctx: &SemistarContext,
    options: &EvalOptions,
    label: &str,
) -> Result<Verdict> {
    let mut v = blank(claim, options, label);
    match &claim.kind {
        ClaimKind::Space(check) => {
            v.unmet = unmet_on(claim, &[ctx.space().classification()], options);
            if !v.unmet.is_empty() {
                v.status = Status::Vacuous;
                return Ok(v);
            }
            let u = ctx.universe();
            let (checked, failure) = sweep(claim, u, u, |b| check(ctx, b));
            v.checked = checked;
            if let Some((b, note)) = failure {
                v.status = Status::Refuted;
                v.witness = Some(witness(claim, b, note, u, u, None));
            }
            Ok(v)
        }
        ClaimKind::Example(fixture, check) => {
            if !fixture.matches(ctx.space()) {
                return Err(mismatch(claim, &format!("is about fixture {fixture}")));
            }
            let obs = check(&ExampleEnv {
                ctx,
                semi_regular: options.semi_regular,
            });
            v.checked = 1;
            if !obs.holds {
                v.status = Status::Refuted;
                v.witness = Some(Witness {
                    bindings: BTreeMap::new(),
                    map: None,
                    note: Some(format!("reported {}, computed {}", obs.reported, obs.computed)),
                    raw: Binding::default(),
                    raw_map: None,
                });
            }
            v.observation = Some(obs);
            Ok(v)
        }
        ClaimKind::Map(_) => Err(mismatch(claim, "needs a pair of spaces")),
    }
}

pub(crate) fn evaluate_on_pair(
    claim: &Claim,
    dom: &Arc<SemistarContext>,
    cod: &Arc<SemistarContext>,
    fixed: Option<&PointMap>,
    options: &EvalOptions,
    label: &str,
) -> Result<Verdict> {
    let ClaimKind::Map(check) = &claim.kind else {
        return Err(mismatch(claim, "needs a single space"));
    };
    let mut v = blank(claim, options, label);
    let (du, cu) = (dom.universe().clone(), cod.universe().clone());
    let (maps, coverage) = match fixed {
        Some(m) => (vec![m.clone()], MapCoverage::Fixed),
        None if du.size() <= EXHAUSTIVE_MAP_POINTS && cu.size() <= EXHAUSTIVE_MAP_POINTS => {
            let maps: Vec<PointMap> = all_maps(du.clone(), cu.clone()).collect();
            let n = maps.len();
            (maps, MapCoverage::Exhaustive { maps: n })
        }
        None => {
            let maps = sampled_maps(du.clone(), cu.clone(), options.map_samples, options.seed);
            (
                maps,
                MapCoverage::Sampled {
                    maps: options.map_samples,
                    seed: options.seed,
                },
            )
        }
    };
    v.maps = Some(coverage);
    v.unmet = unmet_on(
        claim,
        &[dom.space().classification(), cod.space().classification()],
        options,
    );
    if !v.unmet.is_empty() {
        v.status = Status::Vacuous;
        return Ok(v);
    }
    let needs_bijection =
        claim.has_hypothesis(Hypothesis::Bijective) && !options.is_dropped(Hypothesis::Bijective);
    let mut applicable = 0;
    for f in maps {
        if needs_bijection && !f.is_bijective() {
            continue;
        }
        applicable += 1;
        let inst = MapInstance::new(Arc::clone(dom), Arc::clone(cod), f)?;
        let (checked, failure) = sweep(claim, &du, &cu, |b| check(&inst, b));
        v.checked += checked;
        if let Some((b, note)) = failure {
            v.status = Status::Refuted;
            v.witness = Some(witness(claim, b, note, &du, &cu, Some(inst.map())));
            return Ok(v);
        }
    }
    if applicable == 0 {
        v.status = Status::Vacuous;
        v.unmet = vec![Hypothesis::Bijective];
    }
    Ok(v)
}

/// Whether the predicate still fails at the verdict's witness when
/// re-evaluated from scratch. `false` for verdicts without a witness.
pub fn reproduces(claim: &Claim, instance: &Instance, verdict: &Verdict) -> Result<bool> {
    let Some(w) = &verdict.witness else {
        return Ok(false);
    };
    let options = EvalOptions {
        closure: verdict.variant.closure,
        semi_regular: verdict.variant.semi_regular,
        dropped: verdict.variant.dropped.clone(),
        ..EvalOptions::default()
    };
    match (&claim.kind, instance) {
        (ClaimKind::Space(check), Instance::Space(s)) => {
            let ctx = SemistarContext::new(Arc::clone(s), options.closure);
            Ok(check(&ctx, w.raw).is_some())
        }
        (ClaimKind::Example(..), Instance::Space(_)) => {
            let again = evaluate(claim, instance, &options)?;
            Ok(again.status == Status::Refuted)
        }
        (ClaimKind::Map(check), Instance::Map { domain, codomain, map }) => {
            let f = w
                .raw_map
                .clone()
                .or_else(|| map.clone())
                .ok_or_else(|| mismatch(claim, "witness carries no map"))?;
            let dom = Arc::new(SemistarContext::new(Arc::clone(domain), options.closure));
            let cod = Arc::new(SemistarContext::new(Arc::clone(codomain), options.closure));
            let inst = MapInstance::new(dom, cod, f)?;
            Ok(check(&inst, w.raw).is_some())
        }
        _ => Err(mismatch(claim, "instance shape differs from the claim")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;
    use crate::gamma_space::ClosureVariant;
    use crate::laws::Hypothesis;

    fn on(f: Fixture) -> Instance {
        Instance::space(f.space())
    }

    #[test]
    fn t3_24_on_f5() {
        let v = evaluate_claim("T3.24", &on(Fixture::F5), &EvalOptions::default()).unwrap();
        assert_eq!(v.status, Status::Vacuous);
        assert_eq!(v.unmet, vec![Hypothesis::SemiRegular]);

        let opts = EvalOptions::default().dropping(Hypothesis::SemiRegular);
        let v = evaluate_claim("T3.24", &on(Fixture::F5), &opts).unwrap();
        assert_eq!(v.status, Status::Refuted);
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.bindings["A"], "{a,b}");
        assert_eq!(w.bindings["B"], "{b,c}");
        assert!(reproduces(find_claim("T3.24").unwrap(), &on(Fixture::F5), &v).unwrap());

        // the union reading is met by every operation, so the claim is live and fails
        let opts = EvalOptions::default().with_semi_regular(SemiRegularVariant::Cup);
        let v = evaluate_claim("T3.24", &on(Fixture::F5), &opts).unwrap();
        assert_eq!(v.status, Status::Refuted);
    }

    #[test]
    fn examples() {
        let f1 = on(Fixture::F1);
        let o = EvalOptions::default();
        assert_eq!(evaluate_claim("E3.2a", &f1, &o).unwrap().status, Status::Refuted);
        assert_eq!(evaluate_claim("E3.2c", &f1, &o).unwrap().status, Status::Refuted);
        assert_eq!(evaluate_claim("E3.2e", &f1, &o).unwrap().status, Status::Confirmed);
        let v = evaluate_claim("E3.4a", &on(Fixture::F3), &o).unwrap();
        assert_eq!(v.status, Status::Confirmed);
        assert!(v.observation.unwrap().holds);
        assert_eq!(evaluate_claim("E3.23b", &on(Fixture::F4), &o).unwrap().status, Status::Refuted);
        assert_eq!(evaluate_claim("E3.25c", &on(Fixture::F5), &o).unwrap().status, Status::Confirmed);
        assert!(matches!(
            evaluate_claim("E3.25a", &f1, &o),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn shapes_are_checked() {
        let o = EvalOptions::default();
        assert!(evaluate_claim("T4.2", &on(Fixture::F1), &o).is_err());
        assert!(evaluate_claim("T3.14.1", &Instance::self_maps(Fixture::F1.space()), &o).is_err());
        assert!(evaluate_claim("nope", &on(Fixture::F1), &o).is_err());
    }

    #[test]
    fn map_claims_sweep_all_maps() {
        let o = EvalOptions::default();
        let inst = Instance::self_maps(Fixture::Fid.space());
        let v = evaluate_claim("T4.2", &inst, &o).unwrap();
        assert_eq!(v.status, Status::Confirmed);
        assert_eq!(v.maps, Some(MapCoverage::Exhaustive { maps: 27 }));
        let v = evaluate_claim("T4.13", &inst, &o).unwrap();
        assert_ne!(v.status, Status::Vacuous);
        for c in ClosureVariant::BOTH {
            let v = evaluate_claim("T4.8.3", &inst, &o.clone().with_closure(c)).unwrap();
            assert_ne!(v.status, Status::Vacuous);
        }
    }

    #[test]
    fn identity_space_confirms_unconditional_identities() {
        let o = EvalOptions::default();
        for id in ["T3.14.1", "T3.14.2", "T3.14.3", "T3.16.2", "T3.18.7", "P3.17a", "R3.11"] {
            let v = evaluate_claim(id, &on(Fixture::Fid), &o).unwrap();
            assert_eq!(v.status, Status::Confirmed, "{id}");
        }
    }
}
