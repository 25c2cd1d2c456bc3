//! Canonical JSON for ideals and decompositions.
//!
//! Writers are hand-rolled so the byte layout is fixed: compact separators,
//! fields in schema order, lists in their canonical sort order. Readers go
//! through serde_json with arbitrary-precision numbers, so exponents of any
//! size round-trip exactly.
//!
//! ```text
//! ideal          {"n": int, "gens": [[int, ...], ...]}           gens lex-sorted
//! decomposition  {"target": "ideal"|"quotient", "n": int,
//!                 "spaces": [{"base": [...], "free": [...]}, ...],
//!                 "sdepth": int}                                  (base, free) lex
//! ```
//!
//! `free` lists variables 1-based, matching the x1, ..., xn naming; `base`
//! is the exponent vector. Ring variable names and a non-identity order are
//! presentation details and are not part of the JSON forms.

use crate::decomp::{StanleyDecomposition, StanleySpace, Target};
use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::PolyRing;
use num_bigint::BigUint;
use serde_json::Value;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// JSON string escaping for the few non-numeric fields we emit.
pub(crate) fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn write_exponent(out: &mut String, e: &Exponent) {
    out.push('[');
    for (i, c) in e.coords().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{c}");
    }
    out.push(']');
}

/// An exponent vector as a JSON array.
pub(crate) fn exponent_to_json(e: &Exponent) -> String {
    let mut out = String::new();
    write_exponent(&mut out, e);
    out
}

/// Canonical ideal JSON; generators are already lexicographically sorted by
/// the antichain invariant.
pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"n\":{},\"gens\":[", ideal.ring().n());
    for (i, g) in ideal.gens().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_exponent(&mut out, g);
    }
    out.push_str("]}");
    out
}

/// Canonical decomposition JSON; spaces are already sorted by
/// (base lex, free lex) by construction.
pub fn decomposition_to_json(d: &StanleyDecomposition) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"target\":\"{}\",\"n\":{},\"spaces\":[",
        d.target().as_str(),
        d.ring().n()
    );
    for (i, s) in d.spaces().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str("{\"base\":");
        write_exponent(&mut out, s.base());
        out.push_str(",\"free\":[");
        for (k, &j) in s.free().iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", j + 1);
        }
        out.push_str("]}");
    }
    let _ = write!(out, "],\"sdepth\":{}}}", d.sdepth());
    out
}

fn json_error(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn parse_value(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| json_error(e.to_string()))
}

fn as_object<'v>(
    v: &'v Value,
    what: &str,
) -> Result<&'v serde_json::Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| json_error(format!("{what} must be a JSON object")))
}

fn field<'v>(
    obj: &'v serde_json::Map<String, Value>,
    name: &str,
    allowed: &[&str],
) -> Result<&'v Value, Error> {
    if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(json_error(format!("unknown field \"{extra}\"")));
    }
    obj.get(name)
        .ok_or_else(|| json_error(format!("missing field \"{name}\"")))
}

/// A JSON number as an exact non-negative integer.
fn as_biguint(v: &Value, what: &str) -> Result<BigUint, Error> {
    let Value::Number(num) = v else {
        return Err(json_error(format!("{what} must be a number")));
    };
    let literal = num.to_string();
    literal
        .parse::<BigUint>()
        .map_err(|_| json_error(format!("{what} must be a non-negative integer, got {literal}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, Error> {
    let b = as_biguint(v, what)?;
    usize::try_from(&b).map_err(|_| json_error(format!("{what} out of range: {b}")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| json_error(format!("{what} must be an array")))
}

fn as_exponent(v: &Value, n: usize, what: &str) -> Result<Exponent, Error> {
    let arr = as_array(v, what)?;
    if arr.len() != n {
        return Err(json_error(format!(
            "{what} has {} coordinates, expected {n}",
            arr.len()
        )));
    }
    let coords = arr
        .iter()
        .map(|c| as_biguint(c, what))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Exponent::new(coords))
}

/// Parse canonical ideal JSON onto a fresh ring with default names/order.
pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal, Error> {
    let value = parse_value(text)?;
    let obj = as_object(&value, "ideal")?;
    let n = as_usize(field(obj, "n", &["n", "gens"])?, "\"n\"")?;
    let ring = PolyRing::new(n)?;
    let gens = as_array(field(obj, "gens", &["n", "gens"])?, "\"gens\"")?
        .iter()
        .map(|g| as_exponent(g, n, "generator"))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::new(ring, gens)
}

/// Parse decomposition JSON and attach it to `ideal` (whose ring supplies n
/// and the variable names). The stored sdepth must match the space list.
pub fn decomposition_from_json(
    text: &str,
    ideal: &MonomialIdeal,
) -> Result<StanleyDecomposition, Error> {
    let value = parse_value(text)?;
    let obj = as_object(&value, "decomposition")?;
    let allowed = &["target", "n", "spaces", "sdepth"][..];
    let target = match field(obj, "target", allowed)? {
        Value::String(s) if s == "ideal" => Target::Ideal,
        Value::String(s) if s == "quotient" => Target::Quotient,
        other => {
            return Err(json_error(format!(
                "\"target\" must be \"ideal\" or \"quotient\", got {other}"
            )))
        }
    };
    let n = as_usize(field(obj, "n", allowed)?, "\"n\"")?;
    if n != ideal.ring().n() {
        return Err(json_error(format!(
            "decomposition is over {n} variables, the ideal over {}",
            ideal.ring().n()
        )));
    }
    let mut spaces = Vec::new();
    for s in as_array(field(obj, "spaces", allowed)?, "\"spaces\"")? {
        let sobj = as_object(s, "space")?;
        let space_allowed = &["base", "free"][..];
        let base = as_exponent(field(sobj, "base", space_allowed)?, n, "\"base\"")?;
        let mut free = BTreeSet::new();
        for v in as_array(field(sobj, "free", space_allowed)?, "\"free\"")? {
            let var = as_usize(v, "free variable")?;
            if var == 0 || var > n {
                return Err(Error::VariableOutOfRange { var, n });
            }
            if !free.insert(var - 1) {
                return Err(json_error(format!("free variable x{var} repeated")));
            }
        }
        spaces.push(StanleySpace::new(base, free));
    }
    let sdepth = as_usize(field(obj, "sdepth", allowed)?, "\"sdepth\"")?;
    let d = StanleyDecomposition::new(target, ideal.clone(), spaces)?;
    if d.sdepth() != sdepth {
        return Err(json_error(format!(
            "stored sdepth {sdepth} does not match the space list (actual {})",
            d.sdepth()
        )));
    }
    Ok(d)
}
