use std::sync::OnceLock;

use super::{
    Anchor, Check, Claim, ClaimKind, ExampleCheck, ExampleEnv, Hypothesis, MapCheck, Observation,
    Side, SpaceCheck,
};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::gamma::semi_regular_witness;
use crate::gamma_space::ClosureVariant;
use crate::maps::MapInstance;
use crate::mask::{SubsetFamily, SubsetMask, Universe};
use crate::semistar::SemistarContext;

use Hypothesis::{Bijective, Open, Regular, SemiRegular};

const NONE: &[(&str, Side)] = &[];
const A: &[(&str, Side)] = &[("A", Side::Domain)];
const AB: &[(&str, Side)] = &[("A", Side::Domain), ("B", Side::Domain)];

fn anchor(label: &'static str, statement: &'static str) -> Anchor {
    Anchor { label, statement }
}

fn space(
    id: &'static str,
    anchor: Anchor,
    hypotheses: &'static [Hypothesis],
    slots: &'static [(&'static str, Side)],
    check: SpaceCheck,
) -> Claim {
    Claim {
        id,
        anchor,
        hypotheses,
        slots,
        kind: ClaimKind::Space(check),
    }
}

fn map(
    id: &'static str,
    anchor: Anchor,
    hypotheses: &'static [Hypothesis],
    slots: &'static [(&'static str, Side)],
    check: MapCheck,
) -> Claim {
    Claim {
        id,
        anchor,
        hypotheses,
        slots,
        kind: ClaimKind::Map(check),
    }
}

fn example(id: &'static str, anchor: Anchor, fixture: Fixture, check: ExampleCheck) -> Claim {
    Claim {
        id,
        anchor,
        hypotheses: &[],
        slots: NONE,
        kind: ClaimKind::Example(fixture, check),
    }
}

fn eq(u: &Universe, lhs: SubsetMask, rhs: SubsetMask) -> Check {
    (lhs != rhs).then(|| format!("left {} right {}", u.render(lhs), u.render(rhs)))
}

fn sub(u: &Universe, lhs: SubsetMask, rhs: SubsetMask) -> Check {
    (!lhs.is_subset_of(rhs)).then(|| format!("{} not within {}", u.render(lhs), u.render(rhs)))
}

fn iff(lhs: bool, rhs: bool) -> Check {
    (lhs != rhs).then(|| format!("left side {lhs}, right side {rhs}"))
}

fn iff_with(lhs: bool, rhs: Option<String>) -> Check {
    match (lhs, rhs) {
        (true, None) | (false, Some(_)) => None,
        (true, Some(why)) => Some(format!("left side true, right side fails at {why}")),
        (false, None) => Some("left side false, right side true".into()),
    }
}

fn ensure(cond: bool, note: impl FnOnce() -> String) -> Check {
    (!cond).then(note)
}

/// First subset `E` of `u` at which `fails(E)` is true, rendered.
fn first_failure(u: &Universe, slot: &str, fails: impl Fn(SubsetMask) -> bool) -> Option<String> {
    u.subsets()
        .find(|&e| fails(e))
        .map(|e| format!("{slot}={}", u.render(e)))
}

// f(int(E)) ⊆ cl(int(f(E))) for every E ⊆ X
fn open_map_condition(m: &MapInstance) -> Option<String> {
    let (x, y, f) = (m.domain(), m.codomain(), m.map());
    first_failure(x.universe(), "E", |e| {
        !f.img(x.intv(e)).is_subset_of(y.clv(y.intv(f.img(e))))
    })
}

// int(f⁻¹G) ⊆ cl(f⁻¹(int G)) for every G ⊆ Y
fn preimage_condition(m: &MapInstance) -> Option<String> {
    let (x, y, f) = (m.domain(), m.codomain(), m.map());
    first_failure(y.universe(), "G", |g| !x.intv(f.pre(g)).is_subset_of(x.clv(f.pre(y.intv(g)))))
}

// scl(A) maps into cl(f(A))
fn continuity_c2(m: &MapInstance) -> Option<String> {
    let (x, y, f) = (m.domain(), m.codomain(), m.map());
    first_failure(x.universe(), "A", |a| !f.img(x.scl(a)).is_subset_of(y.clv(f.img(a))))
}

// sbd(f⁻¹B) ⊆ f⁻¹(bd B)
fn continuity_c3(m: &MapInstance) -> Option<String> {
    let (x, y, f) = (m.domain(), m.codomain(), m.map());
    first_failure(y.universe(), "B", |b| !x.sbd(f.pre(b)).is_subset_of(f.pre(y.bdv(b))))
}

fn family(u: &Universe, sets: &[&str]) -> SubsetFamily {
    sets.iter()
        .map(|s| u.parse_set(s).expect("fixture label"))
        .collect()
}

fn family_observation(u: &Universe, reported: &[&str], computed: &SubsetFamily) -> Observation {
    let reported = family(u, reported);
    Observation {
        holds: &reported == computed,
        reported: u.render_family(&reported),
        computed: u.render_family(computed),
    }
}

fn fact(holds_if: bool, reported: &str, computed: String) -> Observation {
    Observation {
        holds: holds_if,
        reported: reported.into(),
        computed,
    }
}

fn set(env: &ExampleEnv<'_>, s: &str) -> SubsetMask {
    env.ctx.universe().parse_set(s).expect("fixture label")
}

/// Context that takes the reported `τ_γ` as given, with lattice closure.
fn assumed(env: &ExampleEnv<'_>, reported: &[&str]) -> SemistarContext {
    let fam = family(env.ctx.universe(), reported);
    SemistarContext::with_assumed_gamma_opens(
        env.ctx.space_arc().clone(),
        ClosureVariant::Lattice,
        fam,
    )
    .expect("reported family is a union-closed lattice")
}

const F1_TAU_GAMMA: &[&str] = &["{}", "{a}", "{a,c}", "{a,b,c}"];
const F1_SO: &[&str] = &["{}", "{a}", "{a,b}", "{a,c}", "{a,b,c}"];
const F2_TAU_GAMMA: &[&str] = &["{}", "{a}", "{b}", "{a,b}", "{a,b,c}"];
const F3_TAU_GAMMA: &[&str] = &["{}", "{b}", "{a,b}", "{a,c}", "{a,b,c}"];
const F4_SEMI_OPEN: &[&str] = &["{}", "{a}", "{a,b}", "{a,c}", "{a,b,c}"];
const F5_SO: &[&str] = &["{}", "{a}", "{c}", "{a,b}", "{b,c}", "{a,b,c}"];

fn build() -> Vec<Claim> {
    vec![
        // --- worked examples -------------------------------------------
        example(
            "E3.2a",
            anchor("Example 3.2", "τ_γ = {∅, X, {a}, {a,c}}"),
            Fixture::F1,
            |env| {
                let u = env.ctx.universe();
                family_observation(u, F1_TAU_GAMMA, env.ctx.space().gamma_open_family())
            },
        ),
        example(
            "E3.2b",
            anchor("Example 3.2", "{a,b} ∈ SO_γ* and {a,b} ∉ τ_γ"),
            Fixture::F1,
            |env| {
                let ab = set(env, "{a,b}");
                let (so, open) = (env.ctx.is_so(ab), env.ctx.is_gopen(ab));
                fact(so && !open, "semi-open, not γ-open", format!("semi-open {so}, γ-open {open}"))
            },
        ),
        example(
            "E3.2c",
            anchor("Example 3.2", "cl_γ({a}) = X"),
            Fixture::F1,
            |env| {
                let c = env.ctx.clv(set(env, "{a}"));
                let u = env.ctx.universe();
                fact(c == env.ctx.full(), "{a,b,c}", u.render(c))
            },
        ),
        example(
            "E3.2d",
            anchor("Example 3.2", "SO_γ* = {∅, X, {a}, {a,b}, {a,c}}"),
            Fixture::F1,
            |env| family_observation(env.ctx.universe(), F1_SO, env.ctx.so_family()),
        ),
        example(
            "E3.2e",
            anchor(
                "Example 3.2",
                "taking τ_γ = {∅, X, {a}, {a,c}} with lattice closure: cl_γ({a}) = X and SO_γ* as reported",
            ),
            Fixture::F1,
            |env| {
                let ctx = assumed(env, F1_TAU_GAMMA);
                let u = ctx.universe();
                let c = ctx.clv(u.parse_set("{a}").expect("label"));
                let so = family(u, F1_SO);
                fact(
                    c == ctx.full() && ctx.so_family() == &so,
                    "cl_γ{a} = {a,b,c}; SO as reported",
                    format!("cl_γ{{a}} = {}; SO = {}", u.render(c), u.render_family(ctx.so_family())),
                )
            },
        ),
        example(
            "E3.3a",
            anchor("Example 3.3", "τ_γ = {∅, X, {a}, {b}, {a,b}}"),
            Fixture::F2,
            |env| family_observation(env.ctx.universe(), F2_TAU_GAMMA, env.ctx.space().gamma_open_family()),
        ),
        example(
            "E3.3b",
            anchor("Example 3.3", "{b,c} ∈ SO_γ*"),
            Fixture::F2,
            |env| {
                let so = env.ctx.is_so(set(env, "{b,c}"));
                fact(so, "γ*-semi-open", format!("γ*-semi-open {so}"))
            },
        ),
        example(
            "E3.3c",
            anchor("Example 3.3", "{b,c} is not semi-open"),
            Fixture::F2,
            |env| {
                let so = env.ctx.space().topology().is_semi_open(set(env, "{b,c}"));
                fact(!so, "not semi-open", format!("semi-open {so}"))
            },
        ),
        example(
            "E3.3d",
            anchor(
                "Example 3.3",
                "taking τ_γ = {∅, X, {a}, {b}, {a,b}} with lattice closure: {b,c} ∈ SO_γ*",
            ),
            Fixture::F2,
            |env| {
                let ctx = assumed(env, F2_TAU_GAMMA);
                let so = ctx.is_so(set(env, "{b,c}"));
                fact(so, "γ*-semi-open", format!("γ*-semi-open {so}"))
            },
        ),
        example(
            "E3.4a",
            anchor("Example 3.4", "τ_γ = {∅, X, {b}, {a,b}, {a,c}}"),
            Fixture::F3,
            |env| family_observation(env.ctx.universe(), F3_TAU_GAMMA, env.ctx.space().gamma_open_family()),
        ),
        example(
            "E3.4b",
            anchor("Example 3.4", "{a} is semi-open"),
            Fixture::F3,
            |env| {
                let so = env.ctx.space().topology().is_semi_open(set(env, "{a}"));
                fact(so, "semi-open", format!("semi-open {so}"))
            },
        ),
        example(
            "E3.4c",
            anchor("Example 3.4", "{a} ∉ SO_γ*"),
            Fixture::F3,
            |env| {
                let so = env.ctx.is_so(set(env, "{a}"));
                fact(!so, "not γ*-semi-open", format!("γ*-semi-open {so}"))
            },
        ),
        example(
            "E3.23a",
            anchor("Example 3.23", "SO(X) = {∅, X, {a}, {a,b}, {a,c}}"),
            Fixture::F4,
            |env| {
                let t = env.ctx.space().topology();
                family_observation(env.ctx.universe(), F4_SEMI_OPEN, t.semi_open_family())
            },
        ),
        example(
            "E3.23b",
            anchor("Example 3.23", "γ = cl is not semi-regular"),
            Fixture::F4,
            |env| {
                let s = env.ctx.space();
                let w = semi_regular_witness(s.topology(), s.gamma(), env.semi_regular);
                fact(
                    w.is_some(),
                    "not semi-regular",
                    match w {
                        Some(w) => format!(
                            "not semi-regular at x={} U={} V={}",
                            env.ctx.universe().label(w.point),
                            env.ctx.universe().render(w.u),
                            env.ctx.universe().render(w.v)
                        ),
                        None => format!("semi-regular ({})", env.semi_regular.name()),
                    },
                )
            },
        ),
        example(
            "E3.23c",
            anchor("Example 3.23", "γ = cl is a semi-open operation"),
            Fixture::F4,
            |env| {
                let ok = env.ctx.space().classification().semi_open_op;
                fact(ok, "semi-open operation", format!("semi-open operation {ok}"))
            },
        ),
        example(
            "E3.25a",
            anchor("Example 3.25", "SO_γ* = {∅, X, {a}, {c}, {a,b}, {b,c}}"),
            Fixture::F5,
            |env| family_observation(env.ctx.universe(), F5_SO, env.ctx.so_family()),
        ),
        example(
            "E3.25b",
            anchor("Example 3.25", "γ = int∘cl is not semi-regular"),
            Fixture::F5,
            |env| {
                let s = env.ctx.space();
                let w = semi_regular_witness(s.topology(), s.gamma(), env.semi_regular);
                fact(
                    w.is_some(),
                    "not semi-regular",
                    match w {
                        Some(w) => format!(
                            "not semi-regular at x={} U={} V={}",
                            env.ctx.universe().label(w.point),
                            env.ctx.universe().render(w.u),
                            env.ctx.universe().render(w.v)
                        ),
                        None => format!("semi-regular ({})", env.semi_regular.name()),
                    },
                )
            },
        ),
        example(
            "E3.25c",
            anchor("Example 3.25", "{a,b}, {b,c} ∈ SO_γ* and {b} ∉ SO_γ*"),
            Fixture::F5,
            |env| {
                let c = env.ctx;
                let (ab, bc, b) = (
                    c.is_so(set(env, "{a,b}")),
                    c.is_so(set(env, "{b,c}")),
                    c.is_so(set(env, "{b}")),
                );
                fact(
                    ab && bc && !b,
                    "{a,b} yes, {b,c} yes, {b} no",
                    format!("{{a,b}} {ab}, {{b,c}} {bc}, {{b}} {b}"),
                )
            },
        ),
        example(
            "E3.25d",
            anchor("Example 3.25", "{a,b} ∩ {b,c} = {b}"),
            Fixture::F5,
            |env| {
                let m = set(env, "{a,b}") & set(env, "{b,c}");
                fact(m == set(env, "{b}"), "{b}", env.ctx.universe().render(m))
            },
        ),
        // --- γ-closure and γ-open sets ---------------------------------
        space(
            "D2.3",
            anchor("Definition 2.3", "A ⊆ B, B γ-closed ⇒ cl_γ(A) ⊆ B"),
            &[],
            AB,
            |c, w| {
                if w.a.is_subset_of(w.b) && c.is_gopen(c.compl(w.b)) {
                    sub(c.universe(), c.clv(w.a), w.b)
                } else {
                    None
                }
            },
        ),
        space(
            "S3.1",
            anchor("Definition 3.1", "τ_γ ⊆ SO_γ*"),
            &[],
            A,
            |c, w| ensure(!c.is_gopen(w.a) || c.is_so(w.a), || "γ-open but not γ*-semi-open".into()),
        ),
        space(
            "D3.6",
            anchor("Definition 3.6", "A ∈ SC_γ* ⇔ scl(A) = A"),
            &[],
            A,
            |c, w| iff(c.is_sc(w.a), c.scl(w.a) == w.a),
        ),
        space(
            "D3.8",
            anchor("Definition 3.8", "A γ*-semi-regular ⇒ X − A γ*-semi-regular"),
            &[],
            A,
            |c, w| {
                let reg = |s| c.is_so(s) && c.is_sc(s);
                ensure(!reg(w.a) || reg(c.compl(w.a)), || "complement not semi-regular".into())
            },
        ),
        space(
            "D3.10a",
            anchor("Definition 3.10", "sbd(A) ∈ SC_γ*"),
            &[],
            A,
            |c, w| ensure(c.is_sc(c.sbd(w.a)), || {
                format!("sbd = {} is not γ*-semi-closed", c.universe().render(c.sbd(w.a)))
            }),
        ),
        space(
            "D3.10b",
            anchor("Definition 3.10", "sbd_classical(A) ⊆ sbd(A)"),
            &[],
            A,
            |c, w| {
                let t = c.space().topology();
                let classical = t.scl(w.a) & t.scl(c.compl(w.a));
                sub(c.universe(), classical, c.sbd(w.a))
            },
        ),
        space(
            "R3.11",
            anchor("Remark 3.11", "sbd(A) = ∅ ⇔ A ∈ SO_γ* ∩ SC_γ*"),
            &[],
            A,
            |c, w| iff(c.sbd(w.a).is_empty(), c.is_so(w.a) && c.is_sc(w.a)),
        ),
        space(
            "R3.12",
            anchor("Remark 3.12", "A ⊆ B ⇒ scl(A) ⊆ scl(B) and sint(A) ⊆ sint(B)"),
            &[],
            AB,
            |c, w| {
                if !w.a.is_subset_of(w.b) {
                    return None;
                }
                sub(c.universe(), c.scl(w.a), c.scl(w.b))
                    .or_else(|| sub(c.universe(), c.sint(w.a), c.sint(w.b)))
            },
        ),
        space(
            "T3.13",
            anchor("Theorem 3.13", "γ regular ⇒ scl(A ∪ B) = scl(A) ∪ scl(B)"),
            &[Regular],
            AB,
            |c, w| eq(c.universe(), c.scl(w.a | w.b), c.scl(w.a) | c.scl(w.b)),
        ),
        space(
            "T3.14.1",
            anchor("Theorem 3.14(1)", "sint(X − A) = X − scl(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sint(c.compl(w.a)), c.compl(c.scl(w.a))),
        ),
        space(
            "T3.14.2",
            anchor("Theorem 3.14(2)", "scl(X − A) = X − sint(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.scl(c.compl(w.a)), c.compl(c.sint(w.a))),
        ),
        space(
            "T3.14.3",
            anchor("Theorem 3.14(3)", "sint(A) = X − scl(X − A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sint(w.a), c.compl(c.scl(c.compl(w.a)))),
        ),
        space(
            "T3.16.1",
            anchor("Theorem 3.16(1)", "X − sbd(A) = sint(A) ∪ sint(X − A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.compl(c.sbd(w.a)), c.sint(w.a) | c.sint(c.compl(w.a))),
        ),
        space(
            "T3.16.2",
            anchor("Theorem 3.16(2)", "scl(A) = sint(A) ∪ sbd(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.scl(w.a), c.sint(w.a) | c.sbd(w.a)),
        ),
        space(
            "T3.16.3",
            anchor("Theorem 3.16(3)", "sbd(A) = scl(A) ∩ scl(X − A) = scl(A) − sint(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sbd(w.a), c.scl(w.a) - c.sint(w.a)),
        ),
        space(
            "T3.16.eq",
            anchor("Theorem 3.16", "the three identities hold or fail together"),
            &[],
            A,
            |c, w| {
                let a = w.a;
                let p = [
                    c.compl(c.sbd(a)) == c.sint(a) | c.sint(c.compl(a)),
                    c.scl(a) == c.sint(a) | c.sbd(a),
                    c.sbd(a) == c.scl(a) - c.sint(a),
                ];
                ensure(p[0] == p[1] && p[1] == p[2], || format!("clauses {p:?}"))
            },
        ),
        space(
            "P3.17a",
            anchor("Proposition 3.17", "sbd(A) = sbd(X − A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sbd(w.a), c.sbd(c.compl(w.a))),
        ),
        space(
            "P3.17b",
            anchor("Proposition 3.17", "γ open ⇒ scl(scl(A)) = scl(A)"),
            &[Open],
            A,
            |c, w| eq(c.universe(), c.scl(c.scl(w.a)), c.scl(w.a)),
        ),
        space(
            "T3.18.1",
            anchor("Theorem 3.18(1)", "sbd(A) = scl(A) − sint(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sbd(w.a), c.scl(w.a) - c.sint(w.a)),
        ),
        space(
            "T3.18.2",
            anchor("Theorem 3.18(2)", "sbd(A) ∩ sint(A) = ∅"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sbd(w.a) & c.sint(w.a), SubsetMask::EMPTY),
        ),
        space(
            "T3.18.3",
            anchor("Theorem 3.18(3)", "scl(A) = sint(A) ∪ sbd(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.scl(w.a), c.sint(w.a) | c.sbd(w.a)),
        ),
        space(
            "T3.18.4",
            anchor("Theorem 3.18(4)", "sbd(sint(A)) ⊆ sbd(A)"),
            &[],
            A,
            |c, w| sub(c.universe(), c.sbd(c.sint(w.a)), c.sbd(w.a)),
        ),
        space(
            "T3.18.5",
            anchor("Theorem 3.18(5)", "γ open ⇒ sbd(scl(A)) ⊆ sbd(A)"),
            &[Open],
            A,
            |c, w| sub(c.universe(), c.sbd(c.scl(w.a)), c.sbd(w.a)),
        ),
        space(
            "T3.18.6",
            anchor("Theorem 3.18(6)", "X − sbd(A) = sint(A) ∪ sint(X − A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.compl(c.sbd(w.a)), c.sint(w.a) | c.sint(c.compl(w.a))),
        ),
        space(
            "T3.18.7",
            anchor("Theorem 3.18(7)", "X = sint(A) ∪ sint(X − A) ∪ sbd(A)"),
            &[],
            A,
            |c, w| {
                let cover = c.sint(w.a) | c.sint(c.compl(w.a)) | c.sbd(w.a);
                eq(c.universe(), cover, c.full())
            },
        ),
        space(
            "T3.19.1",
            anchor("Theorem 3.19(1)", "A ∈ SO_γ* ⇔ A ∩ sbd(A) = ∅"),
            &[],
            A,
            |c, w| iff(c.is_so(w.a), (w.a & c.sbd(w.a)).is_empty()),
        ),
        space(
            "T3.19.2",
            anchor("Theorem 3.19(2)", "A ∈ SC_γ* ⇔ sbd(A) ⊆ A"),
            &[],
            A,
            |c, w| iff(c.is_sc(w.a), c.sbd(w.a).is_subset_of(w.a)),
        ),
        space(
            "T3.20",
            anchor("Theorem 3.20", "γ regular, A ∈ SC_γ* ⇒ sbd(sbd(sbd(A))) = sbd(sbd(A))"),
            &[Regular],
            A,
            sbd_cube,
        ),
        space(
            "T3.20o",
            anchor("Theorem 3.20", "γ open, A ∈ SC_γ* ⇒ sbd(sbd(sbd(A))) = sbd(sbd(A))"),
            &[Open],
            A,
            sbd_cube,
        ),
        space(
            "T3.20ro",
            anchor("Theorem 3.20", "γ regular and open, A ∈ SC_γ* ⇒ sbd³(A) = sbd²(A)"),
            &[Regular, Open],
            A,
            sbd_cube,
        ),
        space(
            "T3.24",
            anchor("Theorem 3.24", "γ semi-regular, A, B ∈ SO_γ* ⇒ A ∩ B ∈ SO_γ*"),
            &[SemiRegular],
            AB,
            |c, w| {
                if !(c.is_so(w.a) && c.is_so(w.b)) {
                    return None;
                }
                let m = w.a & w.b;
                ensure(c.is_so(m), || format!("A ∩ B = {} is not γ*-semi-open", c.universe().render(m)))
            },
        ),
        space(
            "T3.26.1",
            anchor("Theorem 3.26(1)", "sint(sint(A)) = sint(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sint(c.sint(w.a)), c.sint(w.a)),
        ),
        space(
            "T3.26.2",
            anchor("Theorem 3.26(2)", "sint(A) ∪ sint(B) ⊆ sint(A ∪ B)"),
            &[],
            AB,
            |c, w| sub(c.universe(), c.sint(w.a) | c.sint(w.b), c.sint(w.a | w.b)),
        ),
        space(
            "T3.26.3",
            anchor("Theorem 3.26(3)", "γ semi-regular ⇒ sint(A ∩ B) = sint(A) ∩ sint(B)"),
            &[SemiRegular],
            AB,
            |c, w| eq(c.universe(), c.sint(w.a & w.b), c.sint(w.a) & c.sint(w.b)),
        ),
        space(
            "T3.26.1p",
            anchor("Theorem 3.26(1)", "pointwise semi-interior: sint(sint(A)) = sint(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sint_pw(c.sint_pw(w.a)), c.sint_pw(w.a)),
        ),
        space(
            "T3.26.2p",
            anchor("Theorem 3.26(2)", "pointwise semi-interior: sint(A) ∪ sint(B) ⊆ sint(A ∪ B)"),
            &[],
            AB,
            |c, w| sub(c.universe(), c.sint_pw(w.a) | c.sint_pw(w.b), c.sint_pw(w.a | w.b)),
        ),
        space(
            "T3.26.3p",
            anchor("Theorem 3.26(3)", "pointwise semi-interior: sint(A ∩ B) = sint(A) ∩ sint(B)"),
            &[SemiRegular],
            AB,
            |c, w| eq(c.universe(), c.sint_pw(w.a & w.b), c.sint_pw(w.a) & c.sint_pw(w.b)),
        ),
        space(
            "T3.27.1",
            anchor("Theorem 3.27(1)", "sext(A ∪ B) = sext(A) ∩ sext(B)"),
            &[SemiRegular],
            AB,
            |c, w| eq(c.universe(), c.sext(w.a | w.b), c.sext(w.a) & c.sext(w.b)),
        ),
        space(
            "T3.27.2",
            anchor(
                "Theorem 3.27(2)",
                "sbd(A ∪ B) = (sbd(A) ∩ scl(X − B)) ∪ (sbd(B) ∩ scl(X − A))",
            ),
            &[SemiRegular],
            AB,
            |c, w| {
                let rhs = (c.sbd(w.a) & c.scl(c.compl(w.b))) | (c.sbd(w.b) & c.scl(c.compl(w.a)));
                eq(c.universe(), c.sbd(w.a | w.b), rhs)
            },
        ),
        space(
            "T3.27.3",
            anchor("Theorem 3.27(3)", "sbd(A ∩ B) = (sbd(A) ∩ scl(B)) ∪ (sbd(B) ∩ scl(A))"),
            &[SemiRegular],
            AB,
            |c, w| {
                let rhs = (c.sbd(w.a) & c.scl(w.b)) | (c.sbd(w.b) & c.scl(w.a));
                eq(c.universe(), c.sbd(w.a & w.b), rhs)
            },
        ),
        space(
            "P3.28.1",
            anchor("Proposition 3.28(1)", "sext(X − sext(A)) = sext(A)"),
            &[],
            A,
            |c, w| eq(c.universe(), c.sext(c.compl(c.sext(w.a))), c.sext(w.a)),
        ),
        space(
            "P3.28.2",
            anchor("Proposition 3.28(2)", "sext(A) ∪ sext(B) ⊆ sext(A ∩ B)"),
            &[],
            AB,
            |c, w| sub(c.universe(), c.sext(w.a) | c.sext(w.b), c.sext(w.a & w.b)),
        ),
        space(
            "P3.29",
            anchor("Proposition 3.29", "A ∈ SC_γ* ⇔ ∃ γ-closed F with int_γ(F) ⊆ A ⊆ F"),
            &[],
            A,
            |c, w| {
                let t = c.semi_closed_tests(w.a);
                iff(t.member, t.sandwich)
            },
        ),
        space(
            "T3.30",
            anchor("Theorem 3.30", "A ∈ SC_γ* ⇔ int_γ(cl_γ(A)) ⊆ A"),
            &[],
            A,
            |c, w| {
                let t = c.semi_closed_tests(w.a);
                iff(t.member, t.interior_of_closure)
            },
        ),
        // --- lemmas used by the map section ----------------------------
        space(
            "L4.4",
            anchor("Lemma 4.4", "A ∈ SO_γ*, A ⊆ B ⇒ A ⊆ cl_γ(int_γ(B))"),
            &[],
            AB,
            |c, w| {
                if c.is_so(w.a) && w.a.is_subset_of(w.b) {
                    sub(c.universe(), w.a, c.clv(c.intv(w.b)))
                } else {
                    None
                }
            },
        ),
        space(
            "L4.4n",
            anchor("Lemma 4.4", "A ∈ SO_γ* ⇒ A ⊆ cl_γ(int_γ(A))"),
            &[],
            A,
            |c, w| {
                if c.is_so(w.a) {
                    sub(c.universe(), w.a, c.clv(c.intv(w.a)))
                } else {
                    None
                }
            },
        ),
        space(
            "L4.10",
            anchor("Lemma 4.10", "A ⊆ B, B ∈ SC_γ* ⇒ sbd(A) ⊆ B"),
            &[],
            AB,
            |c, w| {
                if w.a.is_subset_of(w.b) && c.is_sc(w.b) {
                    sub(c.universe(), c.sbd(w.a), w.b)
                } else {
                    None
                }
            },
        ),
        space(
            "P4.11",
            anchor("Proposition 4.11", "A γ-open, A ∩ B = ∅ ⇒ A ∩ cl_γ(B) = ∅"),
            &[],
            AB,
            |c, w| {
                if c.is_gopen(w.a) && w.a.is_disjoint(w.b) {
                    eq(c.universe(), w.a & c.clv(w.b), SubsetMask::EMPTY)
                } else {
                    None
                }
            },
        ),
        space(
            "L4.12",
            anchor("Lemma 4.12", "A γ-open, A ∩ B = ∅ ⇒ A ∩ bd_γ(B) = ∅"),
            &[],
            AB,
            |c, w| {
                if c.is_gopen(w.a) && w.a.is_disjoint(w.b) {
                    eq(c.universe(), w.a & c.bdv(w.b), SubsetMask::EMPTY)
                } else {
                    None
                }
            },
        ),
        // --- maps ------------------------------------------------------
        map(
            "T4.2",
            anchor(
                "Theorem 4.2",
                "γ regular ⇒ (f γ*-semi-continuous ⇔ ∀x ∀B ∈ τ_γ(Y) ∋ f(x) ∃A ∈ SO_γ*(X) ∋ x, f(A) ⊆ B)",
            ),
            &[Regular],
            NONE,
            |m, _| {
                let rhs = m.pointwise_continuity_violation().map(|(x, b)| {
                    format!("x={} B={}", m.domain().universe().label(x), m.codomain().universe().render(b))
                });
                iff_with(m.is_gamma_semi_continuous().holds, rhs)
            },
        ),
        map(
            "T4.5",
            anchor("Theorem 4.5", "f γ*-semi-open ⇔ ∀E ⊆ X: f(int_γ(E)) ⊆ cl_γ(int_γ(f(E)))"),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_open_map().holds, open_map_condition(m)),
        ),
        map(
            "T4.6",
            anchor(
                "Theorem 4.6",
                "f γ-semi-open ⇔ ∀G ⊆ Y: int_γ(f⁻¹(G)) ⊆ cl_γ(f⁻¹(int_γ(G)))",
            ),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_open_map().holds, preimage_condition(m)),
        ),
        map(
            "T4.6c",
            anchor(
                "Theorem 4.6",
                "f γ*-semi-continuous ⇔ ∀G ⊆ Y: int_γ(f⁻¹(G)) ⊆ cl_γ(f⁻¹(int_γ(G)))",
            ),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_continuous().holds, preimage_condition(m)),
        ),
        map(
            "T4.7",
            anchor(
                "Theorem 4.7",
                "γ open, f γ*-semi-continuous and γ*-semi-open, A ∈ SO_γ*(X) ⇒ f(A) ∈ SO_γ*(Y)",
            ),
            &[Open],
            A,
            |m, w| {
                let (x, y, f) = (m.domain(), m.codomain(), m.map());
                if !(x.is_so(w.a)
                    && m.is_gamma_semi_continuous().holds
                    && m.is_gamma_semi_open_map().holds)
                {
                    return None;
                }
                let image = f.img(w.a);
                ensure(y.is_so(image), || format!("f(A) = {} is not γ*-semi-open", y.universe().render(image)))
            },
        ),
        map(
            "T4.8.1",
            anchor(
                "Theorem 4.8",
                "f γ*-semi-continuous ⇔ ∀A ⊆ X: f(scl(A)) ⊆ cl_γ(f(A))",
            ),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_continuous().holds, continuity_c2(m)),
        ),
        map(
            "T4.8.2",
            anchor(
                "Theorem 4.8",
                "f γ*-semi-continuous ⇔ ∀B ⊆ Y: sbd(f⁻¹(B)) ⊆ f⁻¹(bd_γ(B))",
            ),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_continuous().holds, continuity_c3(m)),
        ),
        map(
            "T4.8.3",
            anchor(
                "Theorem 4.8",
                "(∀A: f(scl(A)) ⊆ cl_γ(f(A))) ⇔ (∀B: sbd(f⁻¹(B)) ⊆ f⁻¹(bd_γ(B)))",
            ),
            &[],
            NONE,
            |m, _| {
                let c2 = continuity_c2(m);
                let c3 = continuity_c3(m);
                (c2.is_none() != c3.is_none()).then(|| {
                    format!(
                        "second clause {}, third clause {}",
                        c2.map_or("holds".into(), |w| format!("fails at {w}")),
                        c3.map_or("holds".into(), |w| format!("fails at {w}")),
                    )
                })
            },
        ),
        map(
            "T4.9",
            anchor(
                "Theorem 4.9",
                "f γ*-semi-continuous ⇔ ∀G ⊆ Y: scl(f⁻¹(G)) ⊆ cl_γ(f⁻¹(G))",
            ),
            &[],
            NONE,
            |m, _| {
                let (x, y, f) = (m.domain(), m.codomain(), m.map());
                let rhs = first_failure(y.universe(), "G", |g| {
                    let p = f.pre(g);
                    !x.scl(p).is_subset_of(x.clv(p))
                });
                iff_with(m.is_gamma_semi_continuous().holds, rhs)
            },
        ),
        map(
            "T4.9p",
            anchor(
                "Theorem 4.9",
                "f γ*-semi-continuous ⇔ ∀G ⊆ Y: f(scl(f⁻¹(G))) ⊆ cl_γ(G)",
            ),
            &[],
            NONE,
            |m, _| {
                let (x, y, f) = (m.domain(), m.codomain(), m.map());
                let rhs = first_failure(y.universe(), "G", |g| {
                    !f.img(x.scl(f.pre(g))).is_subset_of(y.clv(g))
                });
                iff_with(m.is_gamma_semi_continuous().holds, rhs)
            },
        ),
        map(
            "T4.13",
            anchor(
                "Theorem 4.13",
                "f bijective ⇒ (f γ*-semi-open ⇔ ∀B ⊆ Y: f⁻¹(sbd(B)) ⊆ bd_γ(f⁻¹(B)))",
            ),
            &[Bijective],
            NONE,
            |m, _| {
                let (x, y, f) = (m.domain(), m.codomain(), m.map());
                let rhs = first_failure(y.universe(), "B", |b| {
                    !f.pre(y.sbd(b)).is_subset_of(x.bdv(f.pre(b)))
                });
                iff_with(m.is_gamma_semi_open_map().holds, rhs)
            },
        ),
        map(
            "T4.14",
            anchor(
                "Theorem 4.14",
                "f γ*-semi-open ⇔ ∀E ⊆ X: f(int_γ(E)) ⊆ cl_γ(int_γ(f(E)))",
            ),
            &[],
            NONE,
            |m, _| iff_with(m.is_gamma_semi_open_map().holds, open_map_condition(m)),
        ),
    ]
}

fn sbd_cube(c: &SemistarContext, w: super::Binding) -> Check {
    if !c.is_sc(w.a) {
        return None;
    }
    let twice = c.sbd(c.sbd(w.a));
    eq(c.universe(), c.sbd(twice), twice)
}

/// Every registered claim, examples first, in a fixed order.
pub fn list_claims() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    list_claims()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// The claim with this id, or else every claim in the group it names
/// (`T3.14` covers `T3.14.1` to `T3.14.3`, `E3.25` covers `E3.25a` to `E3.25d`).
pub fn claims_matching(id: &str) -> Result<Vec<&'static Claim>> {
    if let Ok(c) = find_claim(id) {
        return Ok(vec![c]);
    }
    let group: Vec<&Claim> = list_claims()
        .iter()
        .filter(|c| {
            c.id.strip_prefix(id)
                .and_then(|rest| rest.chars().next())
                .is_some_and(|ch| ch == '.' || ch.is_ascii_lowercase())
        })
        .collect();
    if group.is_empty() {
        Err(Error::UnknownClaim(id.to_string()))
    } else {
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Shape;

    #[test]
    fn ids_are_unique_and_anchored() {
        let claims = list_claims();
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), claims.len());
        assert!(claims.iter().all(|c| !c.anchor.label.is_empty() && !c.anchor.statement.is_empty()));
        assert!(claims.len() > 60);
    }

    #[test]
    fn lookup() {
        let c = find_claim("T3.24").unwrap();
        assert!(c.has_hypothesis(SemiRegular));
        assert_eq!(c.shape(), Shape::Space);
        assert_eq!(c.slots.len(), 2);
        assert!(matches!(find_claim("T9.99"), Err(Error::UnknownClaim(_))));
        let g: Vec<&str> = claims_matching("T3.14").unwrap().iter().map(|c| c.id).collect();
        assert_eq!(g, ["T3.14.1", "T3.14.2", "T3.14.3"]);
        let g: Vec<&str> = claims_matching("E3.2").unwrap().iter().map(|c| c.id).collect();
        assert_eq!(g, ["E3.2a", "E3.2b", "E3.2c", "E3.2d", "E3.2e"]);
        assert_eq!(claims_matching("T3.20").unwrap().len(), 1);
        assert!(claims_matching("T3.2").is_err());
        assert_eq!(find_claim("E3.25a").unwrap().shape(), Shape::Example(Fixture::F5));
        assert_eq!(find_claim("T4.13").unwrap().shape(), Shape::Map);
    }
}
