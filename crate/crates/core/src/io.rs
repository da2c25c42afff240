//! JSON formats for spaces, operations and maps.
//!
//! Space:
//! ```json
//! { "points": ["a","b","c"],
//!   "opens": [[], ["a"], ["a","b"], ["a","b","c"]],
//!   "operation": { "builtin": "closure" } }
//! ```
//! `operation` is optional (identity when absent). An explicit table is
//! `{ "table": { "[a]": ["a","c"], ... }, "fill": "identity" }`, where keys
//! use set-literal syntax and unlisted subsets are completed by `fill`
//! (`identity` or `closure`). A map is `{ "assign": { "a": "b", ... } }`
//! with every source point assigned.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gamma::{gamma_builtin, gamma_from_table, BuiltinKind, FillPolicy, GammaOperation};
use crate::gamma_space::GammaSpace;
use crate::maps::PointMap;
use crate::mask::{SubsetMask, Universe};
use crate::space::Topology;

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::schema("$", format!("invalid JSON: {e}")))
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::schema(path, "expected an object"))
}

fn array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn string<'v>(v: &'v Value, path: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| Error::schema(path, "expected a string"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::schema(format!("{path}.{k}"), "unknown field")),
        None => Ok(()),
    }
}

fn label_set(u: &Universe, v: &Value, path: &str) -> Result<SubsetMask> {
    let mut m = SubsetMask::EMPTY;
    for (i, item) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let label = string(item, &p)?;
        let point = u.point(label).map_err(|e| Error::schema(&p, e.to_string()))?;
        if m.contains(point) {
            return Err(Error::schema(p, format!("point `{label}` listed twice")));
        }
        m = m.with(point);
    }
    Ok(m)
}

pub fn parse_topology_value(v: &Value) -> Result<Topology> {
    let obj = object(v, "$")?;
    let points = obj
        .get("points")
        .ok_or_else(|| Error::schema("$.points", "missing"))?;
    let labels: Vec<&str> = array(points, "$.points")?
        .iter()
        .enumerate()
        .map(|(i, p)| string(p, &format!("$.points[{i}]")))
        .collect::<Result<_>>()?;
    let universe = Universe::new(labels).map_err(|e| Error::schema("$.points", e.to_string()))?;
    let opens_v = obj
        .get("opens")
        .ok_or_else(|| Error::schema("$.opens", "missing"))?;
    let opens: Vec<SubsetMask> = array(opens_v, "$.opens")?
        .iter()
        .enumerate()
        .map(|(i, s)| label_set(&universe, s, &format!("$.opens[{i}]")))
        .collect::<Result<_>>()?;
    Topology::new(universe, opens)
}

pub fn parse_operation_value(topology: &Topology, v: &Value, path: &str) -> Result<GammaOperation> {
    let obj = object(v, path)?;
    if let Some(b) = obj.get("builtin") {
        reject_unknown(obj, &["builtin"], path)?;
        let p = format!("{path}.builtin");
        let name = string(b, &p)?;
        let kind = BuiltinKind::parse(name).ok_or_else(|| {
            Error::schema(&p, format!("unknown builtin `{name}` (identity, closure, interior-closure)"))
        })?;
        return Ok(gamma_builtin(kind, topology));
    }
    reject_unknown(obj, &["table", "fill"], path)?;
    let fill = match obj.get("fill") {
        None => FillPolicy::Identity,
        Some(f) => {
            let p = format!("{path}.fill");
            match string(f, &p)? {
                "identity" => FillPolicy::Identity,
                "closure" => FillPolicy::Closure,
                other => return Err(Error::schema(p, format!("unknown fill `{other}` (identity, closure)"))),
            }
        }
    };
    let tp = format!("{path}.table");
    let table = object(
        obj.get("table")
            .ok_or_else(|| Error::schema(&tp, "missing; give `builtin` or `table`"))?,
        &tp,
    )?;
    let u = topology.universe();
    let mut entries: Vec<(SubsetMask, SubsetMask)> = Vec::new();
    for (key, image) in table {
        let p = format!("{tp}[\"{key}\"]");
        let k = u.parse_set(key).map_err(|e| Error::schema(&p, e.to_string()))?;
        if entries.iter().any(|(seen, _)| *seen == k) {
            return Err(Error::schema(p, "set listed twice"));
        }
        entries.push((k, label_set(u, image, &p)?));
    }
    gamma_from_table(topology, entries, fill)
}

pub fn parse_space_value(v: &Value) -> Result<GammaSpace> {
    let t = Arc::new(parse_topology_value(v)?);
    let obj = object(v, "$")?;
    reject_unknown(obj, &["points", "opens", "operation"], "$")?;
    let op = match obj.get("operation") {
        Some(o) => parse_operation_value(&t, o, "$.operation")?,
        None => gamma_builtin(BuiltinKind::Identity, &t),
    };
    GammaSpace::new(t, op)
}

pub fn parse_space(text: &str) -> Result<GammaSpace> {
    parse_space_value(&parse_json(text)?)
}

/// An operation file read against an existing topology.
pub fn parse_operation(topology: &Topology, text: &str) -> Result<GammaOperation> {
    parse_operation_value(topology, &parse_json(text)?, "$")
}

pub fn parse_map(source: &Universe, target: &Universe, text: &str) -> Result<PointMap> {
    let v = parse_json(text)?;
    let obj = object(&v, "$")?;
    reject_unknown(obj, &["assign"], "$")?;
    let assign = object(
        obj.get("assign")
            .ok_or_else(|| Error::schema("$.assign", "missing"))?,
        "$.assign",
    )?;
    let mut assignment = vec![None; source.size()];
    for (from, to) in assign {
        let p = format!("$.assign.{from}");
        let x = source.point(from).map_err(|e| Error::schema(&p, e.to_string()))?;
        let label = string(to, &p)?;
        let y = target.point(label).map_err(|e| Error::schema(&p, e.to_string()))?;
        assignment[x] = Some(y);
    }
    let assignment: Vec<usize> = assignment
        .into_iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| Error::schema("$.assign", format!("point `{}` is not assigned", source.label(x))))
        })
        .collect::<Result<_>>()?;
    PointMap::new(source.clone(), target.clone(), assignment)
}

fn labels(u: &Universe, m: SubsetMask) -> Value {
    json!(u.labels_of(m))
}

pub fn operation_to_json(universe: &Universe, op: &GammaOperation) -> Value {
    if let Some(kind) = op.builtin_kind() {
        return json!({ "builtin": kind.name() });
    }
    let table: Map<String, Value> = universe
        .subsets()
        .map(|a| (universe.render(a), labels(universe, op.apply(a))))
        .collect();
    json!({ "table": table, "fill": "identity" })
}

pub fn space_to_json(space: &GammaSpace) -> Value {
    let u = space.universe();
    let opens: Vec<Value> = space
        .topology()
        .opens()
        .iter()
        .map(|o| labels(u, o))
        .collect();
    json!({
        "points": u.labels(),
        "opens": opens,
        "operation": operation_to_json(u, space.gamma()),
    })
}

pub fn map_to_json(map: &PointMap) -> Value {
    let assign: Map<String, Value> = map
        .assignment()
        .iter()
        .enumerate()
        .map(|(x, &y)| (map.source().label(x).to_string(), json!(map.target().label(y))))
        .collect();
    json!({ "assign": assign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    const F5: &str = r#"{"points":["a","b","c"],
        "opens":[[],["a"],["c"],["a","c"],["a","b","c"]],
        "operation":{"builtin":"interior-closure"}}"#;

    #[test]
    fn fixture_round_trip() {
        let s = parse_space(F5).unwrap();
        assert!(Fixture::F5.matches(&s));
        for f in Fixture::ALL {
            let s = f.space();
            let text = space_to_json(&s).to_string();
            let back = parse_space(&text).unwrap();
            assert!(f.matches(&back), "{f}");
        }
    }

    #[test]
    fn tables() {
        let t = Fixture::F1.topology();
        let op = parse_operation(&t, r#"{"table":{"[b]":["b","c"]},"fill":"identity"}"#).unwrap();
        let u = t.universe();
        assert_eq!(op.apply(u.parse_set("{b}").unwrap()), u.parse_set("{b,c}").unwrap());
        assert_eq!(op.apply(u.parse_set("{a}").unwrap()), u.parse_set("{a}").unwrap());
        let shrink = parse_operation(&t, r#"{"table":{"[a]":[]}}"#);
        assert!(matches!(shrink, Err(Error::NotExpansiveOnOpens(_))));
    }

    fn schema_path(r: Result<impl std::fmt::Debug>) -> String {
        match r {
            Err(Error::Schema { path, .. }) => path,
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn schema_errors_carry_paths() {
        assert_eq!(schema_path(parse_space("nope")), "$");
        assert_eq!(schema_path(parse_space(r#"{"opens":[]}"#)), "$.points");
        assert_eq!(
            schema_path(parse_space(r#"{"points":["a"],"opens":[[],["z"]]}"#)),
            "$.opens[1][0]"
        );
        assert_eq!(
            schema_path(parse_space(r#"{"points":["a"],"opens":[[],["a"]],"operation":{"builtin":"x"}}"#)),
            "$.operation.builtin"
        );
        assert_eq!(
            schema_path(parse_space(r#"{"points":["a"],"opens":[[],["a"]],"extra":1}"#)),
            "$.extra"
        );
        let t = Fixture::F1.topology();
        assert_eq!(
            schema_path(parse_operation(&t, r#"{"table":{"[a]":["a"],"{a}":["a"]}}"#)),
            "$.table[\"{a}\"]"
        );
        let u = t.universe().clone();
        assert_eq!(schema_path(parse_map(&u, &u, r#"{"assign":{"a":"b"}}"#)), "$.assign");
        assert_eq!(schema_path(parse_map(&u, &u, r#"{"assign":{"a":"q"}}"#)), "$.assign.a");
    }

    #[test]
    fn invalid_topology_is_reported() {
        let r = parse_space(r#"{"points":["a","b"],"opens":[[],["a"],["b"],["a","b"]]}"#);
        assert!(r.is_ok());
        let r = parse_space(r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]}"#);
        assert!(matches!(r, Err(Error::NotClosedUnderUnion(..))));
    }

    #[test]
    fn map_round_trip() {
        let u = Universe::standard(3).unwrap();
        let m = parse_map(&u, &u, r#"{"assign":{"a":"c","b":"b","c":"a"}}"#).unwrap();
        assert_eq!(m.assignment(), &[2, 1, 0]);
        let back = parse_map(&u, &u, &map_to_json(&m).to_string()).unwrap();
        assert_eq!(back, m);
    }
}
