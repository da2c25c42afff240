use std::sync::Arc;

use gammatop::laws::{claims_matching, reproduces};
use gammatop::{
    audit_paper, evaluate, evaluate_claim, find_claim, gamma_builtin, search_counterexample,
    topologies, AuditOptions, BuiltinKind, ClosureVariant, EvalOptions, Fixture, GammaSpace,
    Hypothesis, Instance, OperationDomain, SearchConfig, Status,
};

fn on(f: Fixture) -> Instance {
    Instance::space(f.space())
}

#[test]
fn duality_on_identity_space() {
    for c in claims_matching("T3.14").unwrap() {
        let v = evaluate(c, &on(Fixture::Fid), &EvalOptions::default()).unwrap();
        assert_eq!(v.status, Status::Confirmed, "{}", c.id);
    }
}

#[test]
fn example_3_25_parts() {
    let o = EvalOptions::default();
    let f5 = on(Fixture::F5);
    for id in ["E3.25c", "E3.25d"] {
        assert_eq!(evaluate_claim(id, &f5, &o).unwrap().status, Status::Confirmed);
    }
    let v = evaluate_claim("E3.25a", &f5, &o).unwrap();
    assert_eq!(v.status, Status::Refuted);
    let obs = v.observation.unwrap();
    assert!(obs.computed.contains("{a,c}"));
}

#[test]
fn intersection_needs_semi_regularity_on_f5() {
    let o = EvalOptions::default().dropping(Hypothesis::SemiRegular);
    let inst = on(Fixture::F5);
    let v = evaluate_claim("T3.24", &inst, &o).unwrap();
    assert_eq!(v.status, Status::Refuted);
    let w = v.witness.as_ref().unwrap();
    assert_eq!((w.bindings["A"].as_str(), w.bindings["B"].as_str()), ("{a,b}", "{b,c}"));
    assert!(reproduces(find_claim("T3.24").unwrap(), &inst, &v).unwrap());
}

#[test]
fn identity_operation_confirms_classical_laws_up_to_four_points() {
    let ids: Vec<&str> = ["T3.14", "T3.16", "T3.19"]
        .iter()
        .flat_map(|g| claims_matching(g).unwrap())
        .map(|c| c.id)
        .chain(["T3.18.1", "T3.18.2", "T3.18.3", "T3.18.6", "T3.18.7"])
        .collect();
    for n in 1..=4 {
        for t in topologies(n).unwrap() {
            let t = Arc::new(t);
            let s = Arc::new(GammaSpace::new(Arc::clone(&t), gamma_builtin(BuiltinKind::Identity, &t)).unwrap());
            for id in &ids {
                let v = evaluate_claim(id, &Instance::Space(Arc::clone(&s)), &EvalOptions::default()).unwrap();
                assert_eq!(v.status, Status::Confirmed, "{id} on {}", t.describe());
            }
        }
    }
}

#[test]
fn searches() {
    let config = SearchConfig {
        max_n: 3,
        domain: OperationDomain::Builtins,
        op_budget: 3,
        stop_at_first: false,
        ..SearchConfig::default()
    };
    for c in claims_matching("T3.14").unwrap() {
        let out = search_counterexample(c.id, &config).unwrap();
        assert!(!out.found());
        assert_eq!(out.visited, 3 * 34);
    }
    let dropped = SearchConfig {
        max_n: 3,
        options: EvalOptions::default().dropping(Hypothesis::SemiRegular),
        ..SearchConfig::default()
    };
    let a = search_counterexample("T3.24", &dropped).unwrap();
    let b = search_counterexample("T3.24", &dropped).unwrap();
    assert!(a.found());
    assert_eq!(a.visited, b.visited);
    assert_eq!(a.refutations[0].witness, b.refutations[0].witness);
}

#[test]
fn theorem_4_9_forms_differ() {
    let inst = Instance::self_maps(Fixture::F1.space());
    let o = EvalOptions::default();
    assert_eq!(evaluate_claim("T4.9p", &inst, &o).unwrap().status, Status::Confirmed);
    assert_eq!(evaluate_claim("T4.9", &inst, &o).unwrap().status, Status::Refuted);
}

#[test]
fn lattice_and_pointwise_agree_on_builtin_fixtures() {
    for f in [Fixture::F4, Fixture::F5, Fixture::Fid] {
        for id in ["T3.14.1", "P3.17a", "T3.19.1"] {
            for c in ClosureVariant::BOTH {
                let v = evaluate_claim(id, &on(f), &EvalOptions::default().with_closure(c)).unwrap();
                assert_eq!(v.status, Status::Confirmed, "{id} on {f}");
            }
        }
    }
}

#[test]
fn audit_adjudicates_tension_points() {
    let report = audit_paper(&AuditOptions::default()).unwrap();
    let errata: Vec<&str> = report.errata.iter().map(|e| e.claim).collect();
    for id in ["E3.2a", "E3.3a", "E3.23b"] {
        assert!(errata.contains(&id), "{id} missing from errata {errata:?}");
    }
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let first = &json["entries"][0]["verdict"];
    for key in ["claim", "status", "variant"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert!(report.render_text().contains("errata in worked examples"));
}
