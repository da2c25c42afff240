//! The worked three-point examples, as ready-made spaces.
//!
//! `X = {a, b, c}` throughout.
//!
//! | name | topology | operation |
//! |------|----------|-----------|
//! | F1   | τ1 = {∅,{a},{b},{a,b},{a,c},X} | `cl(A)` if `b ∈ A`, else `A` |
//! | F2   | τ1 | `A` if `a ∈ A`, else `cl(A)` |
//! | F3   | τ1 | `A` if `b ∈ A`, else `cl(A)` |
//! | F4   | τ2 = {∅,{a},{a,b},X} | `cl(A)` |
//! | F5   | τ3 = {∅,{a},{c},{a,c},X} | `int(cl(A))` |
//! | Fid  | τ1 | `A` |

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::gamma::{gamma_builtin, gamma_from_fn, BuiltinKind, GammaOperation};
use crate::gamma_space::GammaSpace;
use crate::mask::{SubsetMask, Universe};
use crate::space::Topology;

fn u3() -> Universe {
    Universe::standard(3).expect("three points")
}

fn topology(sets: &[&str]) -> Topology {
    let u = u3();
    let opens: Vec<SubsetMask> = sets.iter().map(|s| u.parse_set(s).expect("label")).collect();
    Topology::new(u, opens).expect("fixture topology")
}

pub fn tau1() -> Topology {
    topology(&["{}", "{a}", "{b}", "{a,b}", "{a,c}", "{a,b,c}"])
}

pub fn tau2() -> Topology {
    topology(&["{}", "{a}", "{a,b}", "{a,b,c}"])
}

pub fn tau3() -> Topology {
    topology(&["{}", "{a}", "{c}", "{a,c}", "{a,b,c}"])
}

/// `A ↦ cl(A)` when `point ∈ A`, else `A` (or the reverse when `close_if_present` is false).
fn pointed_rule(t: &Topology, name: &str, point: usize, close_if_present: bool) -> GammaOperation {
    gamma_from_fn(t, name, |a| {
        if a.contains(point) == close_if_present {
            t.cl(a)
        } else {
            a
        }
    })
    .expect("fixture operation is expansive")
}

pub fn gamma2(t: &Topology) -> GammaOperation {
    pointed_rule(t, "gamma2", 1, true)
}

pub fn gamma3(t: &Topology) -> GammaOperation {
    pointed_rule(t, "gamma3", 0, false)
}

pub fn gamma4(t: &Topology) -> GammaOperation {
    pointed_rule(t, "gamma4", 1, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Fixture {
    F1,
    F2,
    F3,
    F4,
    F5,
    Fid,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::F1,
        Fixture::F2,
        Fixture::F3,
        Fixture::F4,
        Fixture::F5,
        Fixture::Fid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::F1 => "F1",
            Fixture::F2 => "F2",
            Fixture::F3 => "F3",
            Fixture::F4 => "F4",
            Fixture::F5 => "F5",
            Fixture::Fid => "Fid",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    pub fn topology(self) -> Topology {
        match self {
            Fixture::F1 | Fixture::F2 | Fixture::F3 | Fixture::Fid => tau1(),
            Fixture::F4 => tau2(),
            Fixture::F5 => tau3(),
        }
    }

    pub fn operation(self, t: &Topology) -> GammaOperation {
        match self {
            Fixture::F1 => gamma2(t),
            Fixture::F2 => gamma3(t),
            Fixture::F3 => gamma4(t),
            Fixture::F4 => gamma_builtin(BuiltinKind::Closure, t),
            Fixture::F5 => gamma_builtin(BuiltinKind::InteriorClosure, t),
            Fixture::Fid => gamma_builtin(BuiltinKind::Identity, t),
        }
    }

    pub fn space(self) -> GammaSpace {
        let t = Arc::new(self.topology());
        let g = self.operation(&t);
        GammaSpace::new(t, g).expect("fixture space")
    }

    /// Whether `space` has the same topology and operation table as this fixture.
    pub fn matches(self, space: &GammaSpace) -> bool {
        let t = self.topology();
        space.topology().opens() == t.opens()
            && space.universe() == t.universe()
            && space.gamma().table() == self.operation(&t).table()
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_on_opens() {
        let t = tau1();
        let u = t.universe().clone();
        let s = |x: &str| u.parse_set(x).unwrap();
        let g2 = gamma2(&t);
        assert_eq!(g2.apply(s("{a,b}")), t.full());
        assert_eq!(g2.apply(s("{a}")), s("{a}"));
        let g4 = gamma4(&t);
        assert_eq!(g4.apply(s("{a}")), s("{a,c}"));
        assert_eq!(g4.apply(s("{b}")), s("{b}"));
        let g3 = gamma3(&t);
        for o in t.opens().iter() {
            assert_eq!(g3.apply(o), o);
        }
    }

    #[test]
    fn fixtures_match_themselves_only() {
        // every set without `a` is τ1-closed, so γ3 is the identity table
        let same = |f: Fixture, g: Fixture| {
            f == g || matches!((f, g), (Fixture::F2, Fixture::Fid) | (Fixture::Fid, Fixture::F2))
        };
        for f in Fixture::ALL {
            let s = f.space();
            for g in Fixture::ALL {
                assert_eq!(g.matches(&s), same(f, g), "{f} vs {g}");
            }
        }
    }
}
