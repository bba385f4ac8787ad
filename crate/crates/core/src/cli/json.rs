//! JSON encoding of ring elements, polynomials and series.
//!
//! p-adic coefficients inside arrays are JSON numbers; a standalone p-adic
//! scalar (a resultant, an evaluation) is a decimal string. A `k[x]/(x^N)`
//! element is an array of its `N` base coefficients, low degree first: `F_p`
//! coefficients as numbers, rationals as numbers when integral and `"a/b"`
//! strings otherwise. Parsing accepts any of these spellings, plus bare
//! numbers for constants of the series family. Objects are emitted through
//! `serde_json::Map`, whose keys are sorted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{BaseField, LocalRing, RingElem, RingKind};
use crate::series::TruncatedSeries;

fn parse_err(path: &str, what: &str) -> Error {
    Error::Parse(format!("at {path}: {what}"))
}

fn parse_bigint(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| parse_err(path, "expected an integer")),
        Value::String(s) => s.trim().parse().map_err(|_| parse_err(path, "expected a decimal integer")),
        _ => Err(parse_err(path, "expected an integer")),
    }
}

fn parse_rational(v: &Value, path: &str) -> Result<BigRational> {
    if let Value::String(s) = v {
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| parse_err(path, "bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| parse_err(path, "bad denominator"))?;
            if d == BigInt::from(0) {
                return Err(parse_err(path, "zero denominator"));
            }
            return Ok(BigRational::new(n, d));
        }
    }
    Ok(BigRational::from_integer(parse_bigint(v, path)?))
}

/// A ring element from its JSON spelling.
pub fn parse_elem(v: &Value, ring: &LocalRing, path: &str) -> Result<RingElem> {
    match ring.kind() {
        RingKind::PAdic { .. } => Ok(ring.from_bigint(&parse_bigint(v, path)?)),
        RingKind::TruncatedSeries { base } => {
            let items = match v {
                Value::Array(items) => items.clone(),
                Value::Number(_) | Value::String(_) => vec![v.clone()],
                _ => return Err(parse_err(path, "expected a coefficient array")),
            };
            if items.len() > ring.nilpotence() as usize {
                return Err(parse_err(path, "more coefficients than N"));
            }
            let at = |i: usize| format!("{path}[{i}]");
            match base {
                BaseField::PrimeField(p) => {
                    let modulus = BigInt::from(p);
                    let coeffs = items
                        .iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let r = num_integer::Integer::mod_floor(&parse_bigint(c, &at(i))?, &modulus);
                            Ok(r.to_u64().expect("residue below p"))
                        })
                        .collect::<Result<_>>()?;
                    ring.from_fp_coeffs(coeffs)
                }
                BaseField::Rationals => {
                    let coeffs = items.iter().enumerate().map(|(i, c)| parse_rational(c, &at(i))).collect::<Result<_>>()?;
                    ring.from_rational_coeffs(coeffs)
                }
            }
        }
    }
}

fn rational_value(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(i) = q.numer().to_i64() {
            return json!(i);
        }
        return json!(q.numer().to_string());
    }
    json!(format!("{}/{}", q.numer(), q.denom()))
}

/// An element as it appears inside a coefficient array.
pub fn elem_value(x: &RingElem) -> Value {
    if let Some(v) = x.as_residue() {
        json!(v)
    } else if let Some(c) = x.fp_coeffs() {
        json!(c)
    } else {
        Value::Array(x.rational_coeffs().expect("one of three representations").iter().map(rational_value).collect())
    }
}

/// A standalone element: p-adic residues become decimal strings.
pub fn scalar_value(x: &RingElem) -> Value {
    match x.as_residue() {
        Some(v) => json!(v.to_string()),
        None => elem_value(x),
    }
}

pub fn poly_value(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(elem_value).collect())
}

pub fn series_value(s: &TruncatedSeries) -> Value {
    let mut m = Map::new();
    m.insert("coeffs".into(), Value::Array(s.coeffs().iter().map(elem_value).collect()));
    m.insert("t_prec".into(), json!(s.t_prec()));
    Value::Object(m)
}

/// A series operand: either a bare coefficient array (a polynomial, taken at
/// `default_prec`) or an object `{"coeffs": [...], "t_prec": M, "ring": ...}`
/// whose optional `ring` must match. Missing trailing coefficients are zero.
pub fn parse_series(v: &Value, ring: &LocalRing, default_prec: usize, path: &str) -> Result<TruncatedSeries> {
    let (items, t_prec) = match v {
        Value::Array(items) => (items, default_prec),
        Value::Object(obj) => {
            for key in obj.keys() {
                if !matches!(key.as_str(), "coeffs" | "t_prec" | "ring") {
                    return Err(parse_err(path, &format!("unknown key '{key}'")));
                }
            }
            if let Some(r) = obj.get("ring") {
                let spec: LocalRing =
                    r.as_str().ok_or_else(|| parse_err(&format!("{path}.ring"), "expected a string"))?.parse()?;
                Error::check_same_ring(ring, &spec)?;
            }
            let items = match obj.get("coeffs") {
                Some(Value::Array(items)) => items,
                _ => return Err(parse_err(&format!("{path}.coeffs"), "expected an array")),
            };
            let t_prec = match obj.get("t_prec") {
                Some(m) => m
                    .as_u64()
                    .filter(|m| *m >= 1)
                    .ok_or_else(|| parse_err(&format!("{path}.t_prec"), "expected a positive integer"))?
                    as usize,
                None => default_prec,
            };
            (items, t_prec)
        }
        _ => return Err(parse_err(path, "expected a series object or coefficient array")),
    };
    if items.len() > t_prec {
        return Err(parse_err(path, &format!("{} coefficients exceed t_prec {t_prec}", items.len())));
    }
    let coeffs = items
        .iter()
        .enumerate()
        .map(|(i, c)| parse_elem(c, ring, &format!("{path}.coeffs[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::new(*ring, coeffs, t_prec)
}

/// Parses operand text as JSON, reporting the line and column of syntax errors.
pub fn parse_text(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp125() -> LocalRing {
        LocalRing::p_adic(5, 3).unwrap()
    }

    #[test]
    fn series_object_with_implied_zeros() {
        let r = zp125();
        let s = parse_series(&json!({"coeffs": [5, 0, 1], "t_prec": 5}), &r, 1, "f").unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(r, &[5, 0, 1], 5).unwrap());
        let s = parse_series(&json!({"coeffs": [5, 0, 1], "t_prec": 3}), &r, 1, "f").unwrap();
        assert_eq!(s.t_prec(), 3);
    }

    #[test]
    fn bad_series_json_is_rejected_with_a_path() {
        let r = zp125();
        let e = parse_series(&json!({"coeffs": "x"}), &r, 3, "f").unwrap_err();
        assert_eq!(e.exit_code(), 5);
        assert!(e.to_string().contains("f.coeffs"));
        assert!(parse_series(&json!({"coeffs": [1, 2, 3], "t_prec": 2}), &r, 3, "f").is_err());
        assert!(parse_series(&json!({"coeffs": [1], "ring": "p-adic:p=5,N=2"}), &r, 3, "f").is_err());
        assert!(parse_series(&json!({"coeffs": [true]}), &r, 3, "f").unwrap_err().to_string().contains("f.coeffs[0]"));
        assert!(parse_text("[1, 2", "--f").unwrap_err().to_string().contains("column"));
    }

    #[test]
    fn element_spellings() {
        let r = zp125();
        assert_eq!(parse_elem(&json!(-1), &r, "a").unwrap(), r.from_int(124));
        assert_eq!(parse_elem(&json!("130"), &r, "a").unwrap(), r.from_int(5));
        assert_eq!(scalar_value(&r.from_int(5)), json!("5"));
        assert_eq!(elem_value(&r.from_int(5)), json!(5));

        let q = LocalRing::truncated_series(BaseField::Rationals, 3).unwrap();
        let x = parse_elem(&json!([1, "-1/2"]), &q, "a").unwrap();
        assert_eq!(elem_value(&x), json!([1, "-1/2", 0]));
        assert_eq!(parse_elem(&json!(3), &q, "a").unwrap(), q.from_int(3));
        assert!(parse_elem(&json!([1, 2, 3, 4]), &q, "a").is_err());
        assert!(parse_elem(&json!(["1/0"]), &q, "a").is_err());

        let f7 = LocalRing::truncated_series(BaseField::PrimeField(7), 2).unwrap();
        assert_eq!(elem_value(&parse_elem(&json!([-1, 9]), &f7, "a").unwrap()), json!([6, 2]));
    }

    #[test]
    fn emit_is_key_sorted() {
        let r = zp125();
        let s = TruncatedSeries::from_ints(r, &[1, 5], 3).unwrap();
        assert_eq!(series_value(&s).to_string(), r#"{"coeffs":[1,5,0],"t_prec":3}"#);
    }
}
