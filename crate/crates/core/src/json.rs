//! JSON encodings shared by the CLI and tests.
//!
//! Two shapes are used. The compact one is a map from weight strings to
//! scalars, `{"(2,0)": "1", "(1,1)": "1+v^2"}`, listed in decreasing weight
//! order. The structured one spells every piece out:
//! `{"n": 2, "terms": [{"weight": [2,0], "coeff": {"0": 1}}]}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, QuadraticValue};
use crate::plattice::PLattice;
use crate::repring::RepElement;
use crate::rootdata::Weight;
use crate::symfunc::{LaurentScalar, SymPoly};
use crate::tate::FormalHeckeElement;
use crate::trace_k::JElement;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// A scalar as a canonical string in the variable `var`.
pub fn scalar_to_json(c: &LaurentScalar, var: &str) -> Value {
    Value::String(c.display_with(var))
}

/// Accepts an integer or a string such as `"1+v^2"`.
pub fn scalar_from_json(v: &Value, var: char) -> Result<LaurentScalar> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            let k: BigInt = s.parse().map_err(|_| parse_err(format!("coefficient {s} is not an integer")))?;
            Ok(LaurentScalar::constant(k))
        }
        Value::String(s) => LaurentScalar::parse_with(s, var),
        other => Err(parse_err(format!("expected a scalar, found {other}"))),
    }
}

/// `{"exp": coeff}` with integer coefficients, exponents ascending.
pub fn scalar_structured(c: &LaurentScalar) -> Value {
    let mut m = Map::new();
    for (e, x) in c.terms() {
        m.insert(e.to_string(), bigint_value(x));
    }
    Value::Object(m)
}

pub fn scalar_from_structured(v: &Value) -> Result<LaurentScalar> {
    let obj = v.as_object().ok_or_else(|| parse_err("coefficient must be an object {exponent: integer}"))?;
    let mut terms = Vec::new();
    for (e, x) in obj {
        let e: i64 = e.parse().map_err(|_| parse_err(format!("bad exponent {e:?}")))?;
        let c = scalar_from_json(x, 'v')?
            .as_integer()
            .ok_or_else(|| parse_err(format!("coefficient of v^{e} must be an integer")))?;
        terms.push((e, c));
    }
    Ok(LaurentScalar::from_terms(terms))
}

/// Integers that fit in `i64` are JSON numbers, larger ones strings.
pub fn bigint_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(k) => json!(k),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn weight_to_json(w: &Weight) -> Value {
    json!(w.entries())
}

/// Accepts `[1,0]` or `"(1,0)"`.
pub fn weight_from_json(v: &Value) -> Result<Weight> {
    match v {
        Value::String(s) => s.parse(),
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| parse_err(format!("weight entry {x} is not an integer"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight::new),
        other => Err(parse_err(format!("expected a weight, found {other}"))),
    }
}

/// Compact form, largest weight first.
pub fn compact_map<'a>(terms: impl DoubleEndedIterator<Item = (&'a Weight, &'a LaurentScalar)>, var: &str) -> Value {
    let mut m = Map::new();
    for (w, c) in terms.rev() {
        m.insert(w.to_string(), scalar_to_json(c, var));
    }
    Value::Object(m)
}

/// Reads a compact map, checking every key has rank `n`.
pub fn compact_map_from_json(v: &Value, n: usize) -> Result<Vec<(Weight, LaurentScalar)>> {
    let obj = v.as_object().ok_or_else(|| parse_err("expected an object mapping weights to scalars"))?;
    let mut out = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let w: Weight = k.parse()?;
        if w.rank() != n {
            return Err(parse_err(format!("weight {k} has rank {}, expected {n}", w.rank())));
        }
        out.push((w, scalar_from_json(c, 'v')?));
    }
    Ok(out)
}

fn structured_terms<'a>(
    n: usize,
    terms: impl DoubleEndedIterator<Item = (&'a Weight, &'a LaurentScalar)>,
    list_key: &str,
    weight_key: &str,
) -> Value {
    let list: Vec<Value> = terms
        .rev()
        .map(|(w, c)| {
            let mut m = Map::new();
            m.insert(weight_key.into(), weight_to_json(w));
            m.insert("coeff".into(), scalar_structured(c));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("n".into(), json!(n));
    m.insert(list_key.into(), Value::Array(list));
    Value::Object(m)
}

fn parse_structured(v: &Value, list_key: &str, weight_key: &str) -> Result<(usize, Vec<(Weight, LaurentScalar)>)> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("structured input needs a nonnegative integer \"n\""))? as usize;
    let list = v
        .get(list_key)
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(format!("structured input needs an array \"{list_key}\"")))?;
    let mut out = Vec::with_capacity(list.len());
    for item in list {
        let w = weight_from_json(item.get(weight_key).ok_or_else(|| parse_err(format!("term lacks \"{weight_key}\"")))?)?;
        let c = item.get("coeff").ok_or_else(|| parse_err("term lacks \"coeff\""))?;
        let c = if c.is_object() { scalar_from_structured(c)? } else { scalar_from_json(c, 'v')? };
        if w.rank() != n {
            return Err(parse_err(format!("weight {w} has rank {}, expected {n}", w.rank())));
        }
        out.push((w, c));
    }
    Ok((n, out))
}

pub fn sympoly_to_json(f: &SymPoly, structured: bool) -> Value {
    if structured {
        structured_terms(f.rank(), f.terms(), "terms", "weight")
    } else {
        compact_map(f.terms(), "v")
    }
}

/// Reads either shape; the compact one needs the rank from elsewhere.
pub fn sympoly_from_json(v: &Value, n: Option<usize>) -> Result<SymPoly> {
    if v.get("terms").is_some() {
        let (n, terms) = parse_structured(v, "terms", "weight")?;
        return SymPoly::from_terms(n, terms);
    }
    let n = n.ok_or_else(|| parse_err("compact input needs the rank"))?;
    SymPoly::from_terms(n, compact_map_from_json(v, n)?)
}

pub fn rep_to_json(r: &RepElement, structured: bool) -> Value {
    if structured {
        structured_terms(r.rank(), r.terms(), "multiplicities", "weight")
    } else {
        compact_map(r.terms(), "v")
    }
}

pub fn rep_from_json(v: &Value, n: Option<usize>) -> Result<RepElement> {
    if v.get("multiplicities").is_some() {
        let (n, terms) = parse_structured(v, "multiplicities", "weight")?;
        return RepElement::from_terms(n, terms);
    }
    let n = n.ok_or_else(|| parse_err("compact input needs the rank"))?;
    RepElement::from_terms(n, compact_map_from_json(v, n)?)
}

pub fn hecke_to_json(h: &HeckeElement, structured: bool) -> Value {
    if structured {
        structured_terms(h.rank(), h.terms(), "terms", "coweight")
    } else {
        compact_map(h.terms(), "v")
    }
}

pub fn hecke_from_json(v: &Value, n: Option<usize>) -> Result<HeckeElement> {
    if v.get("terms").is_some() {
        let (n, terms) = parse_structured(v, "terms", "coweight")?;
        return HeckeElement::from_terms(n, terms);
    }
    let n = n.ok_or_else(|| parse_err("compact input needs the rank"))?;
    HeckeElement::from_terms(n, compact_map_from_json(v, n)?)
}

pub fn jelement_to_json(j: &JElement, structured: bool) -> Value {
    let value = sympoly_to_json(j.value(), structured);
    match j.as_sympoly() {
        Some(_) => value,
        None => json!({"value": value, "denominator": bigint_value(j.denominator())}),
    }
}

/// `{"T_{p,0}": "1-p-2p^2", ...}` or `{"terms": [{"j": 0, "coeff": {...}}]}`.
pub fn formal_hecke_to_json(h: &FormalHeckeElement, structured: bool) -> Value {
    if structured {
        let list: Vec<Value> = h.terms().map(|(j, c)| json!({"j": j, "coeff": scalar_structured(c)})).collect();
        return json!({"variable": "p", "terms": list});
    }
    let mut m = Map::new();
    for (j, c) in h.terms() {
        m.insert(format!("T_{{p,{j}}}"), scalar_to_json(c, "p"));
    }
    Value::Object(m)
}

pub fn quadratic_to_json(q: &QuadraticValue) -> Value {
    match q.as_integer() {
        Some(k) => bigint_value(&k),
        None => Value::String(q.to_string()),
    }
}

pub fn quadratic_map_to_json(m: &BTreeMap<Weight, QuadraticValue>) -> Value {
    let mut out = Map::new();
    for (w, q) in m.iter().rev() {
        out.insert(w.to_string(), quadratic_to_json(q));
    }
    Value::Object(out)
}

pub fn lattice_to_json(l: &PLattice) -> Value {
    serde_json::to_value(l).expect("lattices serialize")
}

pub fn lattice_from_json(v: &Value) -> Result<PLattice> {
    serde_json::from_value(v.clone()).map_err(|e| parse_err(e.to_string()))
}
