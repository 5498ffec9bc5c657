//! JSON forms of the core types, shared by the command line and the C interface.
//!
//! Schemas: a hypergraph is `{"vertices":[…],"hyperedges":[[…]…]}`, a
//! construct `{"decoration":[…],"children":[…]}` (the compact text notation
//! is accepted on input), a linear construct
//! `[{"construct":…,"coeff":{"0":k0,"1":k1,…}}…]` and a delegation
//! `{"universe":tag,"parts":[construct…],"whole":[…],"mode":"strict"|"semistrict"}`.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};

use crate::clans::{Delegation, Mode, Team, Universe};
use crate::constructs::Construct;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::qalgebra::{LinearConstruct, QPolynomial};
use crate::suites::natural_mode;

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn bigint_to_json(k: &BigInt) -> Value {
    i64::try_from(k).map(Value::from).unwrap_or_else(|_| Value::String(k.to_string()))
}

pub fn biguint_to_json(k: &BigUint) -> Value {
    u64::try_from(k).map(Value::from).unwrap_or_else(|_| Value::String(k.to_string()))
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("an integer", v)),
        Value::String(s) => s.parse().map_err(|_| bad("an integer", v)),
        _ => Err(bad("an integer", v)),
    }
}

pub fn vertex_set_to_json(x: &VertexSet) -> Value {
    Value::Array(x.iter().map(|v| Value::from(v.0)).collect())
}

pub fn vertex_set_from_json(v: &Value) -> Result<VertexSet> {
    let items = v.as_array().ok_or_else(|| bad("an array of vertex ids", v))?;
    items
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad("a vertex id", x)))
        .collect()
}

/// Parses `1..5`, `1,3,5`, `{1,3,5}` or letters `a,b,c` (read as 1, 2, 3).
pub fn parse_carrier(spec: &str) -> Result<VertexSet> {
    let s = spec.trim().trim_start_matches('{').trim_end_matches('}');
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| Error::Parse(format!("bad carrier {spec:?}")))?;
        let hi: i64 = hi.trim().parse().map_err(|_| Error::Parse(format!("bad carrier {spec:?}")))?;
        if lo > hi {
            return Err(Error::Parse(format!("empty carrier {spec:?}")));
        }
        return Ok(VertexSet::interval(lo, hi));
    }
    let ids = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.chars().collect::<Vec<_>>().as_slice() {
                [c] if c.is_ascii_lowercase() => Ok(i64::from(*c as u8 - b'a' + 1)),
                _ => t.parse::<i64>().map_err(|_| Error::Parse(format!("bad vertex {t:?} in carrier"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let x: VertexSet = ids.iter().copied().collect();
    if x.len() != ids.len() {
        return Err(Error::Parse(format!("repeated vertex in carrier {spec:?}")));
    }
    Ok(x)
}

pub fn construct_to_json(c: &Construct) -> Value {
    json!({
        "decoration": vertex_set_to_json(c.root()),
        "children": c.children().iter().map(construct_to_json).collect::<Vec<_>>(),
    })
}

/// Accepts the object form or a string in the compact notation.
pub fn construct_from_json(v: &Value) -> Result<Construct> {
    match v {
        Value::String(s) => s.parse(),
        Value::Object(m) => {
            let deco = vertex_set_from_json(m.get("decoration").ok_or_else(|| bad("a decoration", v))?)?;
            let children = match m.get("children") {
                None => Vec::new(),
                Some(Value::Array(cs)) => cs.iter().map(construct_from_json).collect::<Result<Vec<_>>>()?,
                Some(other) => return Err(bad("an array of children", other)),
            };
            if deco.is_empty() {
                return Err(Error::InvalidConstruct("empty decoration".into()));
            }
            Construct::new(deco, children)
        }
        _ => Err(bad("a construct", v)),
    }
}

pub fn hypergraph_to_json(h: &Hypergraph) -> Value {
    json!({
        "vertices": vertex_set_to_json(h.carrier()),
        "hyperedges": h.hyperedges().iter().map(vertex_set_to_json).collect::<Vec<_>>(),
    })
}

pub fn hypergraph_from_json(v: &Value) -> Result<Hypergraph> {
    let carrier = vertex_set_from_json(v.get("vertices").ok_or_else(|| bad("a hypergraph", v))?)?;
    let edges = match v.get("hyperedges") {
        None => Vec::new(),
        Some(Value::Array(es)) => es.iter().map(vertex_set_from_json).collect::<Result<Vec<_>>>()?,
        Some(other) => return Err(bad("an array of hyperedges", other)),
    };
    Hypergraph::new(carrier, edges)
}

pub fn poly_to_json(p: &QPolynomial) -> Value {
    let mut m = Map::new();
    for (e, k) in p.terms() {
        m.insert(e.to_string(), bigint_to_json(k));
    }
    Value::Object(m)
}

pub fn poly_from_json(v: &Value) -> Result<QPolynomial> {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(e, k)| {
                let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
                Ok((e, bigint_from_json(k)?))
            })
            .collect::<Result<Vec<_>>>()
            .map(QPolynomial::from_terms),
        _ => bigint_from_json(v).map(QPolynomial::from),
    }
}

pub fn linear_to_json(l: &LinearConstruct) -> Value {
    Value::Array(
        l.terms()
            .map(|(c, p)| json!({"construct": construct_to_json(c), "coeff": poly_to_json(p)}))
            .collect(),
    )
}

pub fn linear_from_json(v: &Value, carrier: &VertexSet) -> Result<LinearConstruct> {
    let items = v.as_array().ok_or_else(|| bad("an array of terms", v))?;
    let mut out = LinearConstruct::zero(carrier.clone());
    for it in items {
        let c = construct_from_json(it.get("construct").ok_or_else(|| bad("a term", it))?)?;
        let p = match it.get("coeff") {
            None => QPolynomial::one(),
            Some(k) => poly_from_json(k)?,
        };
        out.add_term(c, p)?;
    }
    Ok(out)
}

/// A universe given as a tag, or as `{"explicit":[hypergraph…]}`.
pub fn universe_from_json(v: &Value) -> Result<Universe> {
    match v {
        Value::String(s) => s.parse(),
        Value::Object(m) => {
            let list = m
                .get("explicit")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("a universe", v))?;
            Ok(Universe::Explicit(list.iter().map(hypergraph_from_json).collect::<Result<_>>()?))
        }
        _ => Err(bad("a universe", v)),
    }
}

fn tag_list(v: Option<&Value>) -> Result<Vec<Option<String>>> {
    match v {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(Value::Array(ts)) => ts
            .iter()
            .map(|t| match t {
                Value::Null => Ok(None),
                Value::String(s) => Ok(Some(s.clone())),
                other => Err(bad("a flavor tag", other)),
            })
            .collect(),
        Some(other) => Err(bad("an array of flavor tags", other)),
    }
}

/// Reads a delegation. `whole` defaults to the union of the part carriers,
/// `mode` to strict for restrictohedra and semi-strict otherwise. Optional
/// `tags` and `whole_tag` pick erosohedron flavors.
pub fn delegation_from_json(v: &Value) -> Result<Delegation> {
    let u = universe_from_json(v.get("universe").ok_or_else(|| bad("a delegation with a universe", v))?)?;
    let parts = v
        .get("parts")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("a delegation with parts", v))?
        .iter()
        .map(construct_from_json)
        .collect::<Result<Vec<_>>>()?;
    let carriers: Vec<VertexSet> = parts.iter().map(|c| c.carrier().clone()).collect();
    let whole = match v.get("whole") {
        None | Some(Value::Null) => carriers.iter().fold(VertexSet::new(), |acc, c| acc.union(c)),
        Some(w) => vertex_set_from_json(w)?,
    };
    let mode = match v.get("mode") {
        None | Some(Value::Null) => natural_mode(&u),
        Some(Value::String(s)) => s.parse::<Mode>()?,
        Some(other) => return Err(bad("a mode", other)),
    };
    let tags = tag_list(v.get("tags"))?;
    let whole_tag = match v.get("whole_tag") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(bad("a flavor tag", other)),
    };
    let team = Team::make_tagged(Arc::new(u), &carriers, &tags, &whole, whole_tag.as_deref(), mode)?;
    Delegation::new(team, parts)
}
