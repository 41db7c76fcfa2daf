//! JSON encoding of bicomplexes:
//! `{"spaces": {"p,q": dim}, "del": {"p,q": [[scalar, ...], ...]}, "delbar": {...}, "labels": {...}}`.
//!
//! Matrices are lists of rows (one row per basis vector of the target).
//! Scalars are strings in the linalg text grammar; plain JSON integers are
//! also accepted on input. Output is canonical: sorted keys, reduced scalars,
//! zero maps omitted.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use super::{Bicomplex, Bidegree};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Line and column (1-based) of the first occurrence of `needle` in `text`.
pub(crate) fn locate(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(pos) => {
            let before = &text[..pos];
            let line = before.matches('\n').count() + 1;
            let col = pos - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, col)
        }
        None => (0, 0),
    }
}

pub(crate) fn parse_error(text: &str, needle: &str, message: String) -> Error {
    let (line, column) = locate(text, needle);
    Error::Parse { line, column, message }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

fn scalar_from_value(text: &str, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(s).map_err(|_| parse_error(text, &format!("\"{s}\""), format!("invalid scalar `{s}`"))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::int(n.as_i64().unwrap())),
        other => Err(parse_error(text, &other.to_string(), format!("expected a scalar string, found {other}"))),
    }
}

fn bidegree_key(text: &str, k: &str) -> Result<Bidegree> {
    Bidegree::parse(k).map_err(|_| parse_error(text, &format!("\"{k}\""), format!("invalid bidegree key `{k}`")))
}

fn object<'a>(text: &str, v: &'a Value, name: &str) -> Result<Option<&'a Map<String, Value>>> {
    match v.get(name) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Object(m)) => Ok(Some(m)),
        Some(_) => Err(parse_error(text, &format!("\"{name}\""), format!("`{name}` must be an object"))),
    }
}

fn parse_maps(text: &str, v: &Value, name: &str, spaces: &BTreeMap<Bidegree, usize>, dp: i64, dq: i64) -> Result<BTreeMap<Bidegree, Matrix<Scalar>>> {
    let mut out = BTreeMap::new();
    let Some(m) = object(text, v, name)? else { return Ok(out) };
    for (k, rows) in m {
        let pq = bidegree_key(text, k)?;
        let here = format!("\"{k}\"");
        let rows = rows.as_array().ok_or_else(|| parse_error(text, &here, format!("{name}[{k}] must be a list of rows")))?;
        let target = spaces.get(&pq.offset(dp, dq)).copied().unwrap_or(0);
        let source = spaces.get(&pq).copied().unwrap_or(0);
        let mut entries = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_array().ok_or_else(|| parse_error(text, &here, format!("{name}[{k}] rows must be lists")))?;
            entries.push(r.iter().map(|x| scalar_from_value(text, x)).collect::<Result<Vec<_>>>()?);
        }
        let cols = entries.first().map_or(source, Vec::len);
        if entries.len() != target || entries.iter().any(|r| r.len() != cols) || (target > 0 && cols != source) {
            return Err(Error::ShapeMismatch(
                pq,
                format!("{name} matrix must be {target}x{source} (rows = target dimension)"),
            ));
        }
        if target > 0 && source > 0 {
            out.insert(pq, Matrix::from_rows(target, source, entries));
        }
    }
    Ok(out)
}

/// Parse and validate a bicomplex from JSON text.
pub fn from_json_str(text: &str) -> Result<Bicomplex> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    if !v.is_object() {
        return Err(Error::Parse { line: 1, column: 1, message: "top level must be an object".into() });
    }
    let mut spaces = BTreeMap::new();
    if let Some(m) = object(text, &v, "spaces")? {
        for (k, d) in m {
            let pq = bidegree_key(text, k)?;
            let d = d
                .as_u64()
                .ok_or_else(|| parse_error(text, &format!("\"{k}\""), format!("dimension at {k} must be a natural number")))?;
            spaces.insert(pq, d as usize);
        }
    }
    let del = parse_maps(text, &v, "del", &spaces, 1, 0)?;
    let delbar = parse_maps(text, &v, "delbar", &spaces, 0, 1)?;
    let labels = match object(text, &v, "labels")? {
        None => None,
        Some(m) => {
            let mut l = BTreeMap::new();
            for (k, names) in m {
                let pq = bidegree_key(text, k)?;
                let names = names
                    .as_array()
                    .and_then(|a| a.iter().map(|x| x.as_str().map(str::to_string)).collect::<Option<Vec<_>>>())
                    .ok_or_else(|| parse_error(text, &format!("\"{k}\""), format!("labels at {k} must be a list of strings")))?;
                l.insert(pq, names);
            }
            Some(l)
        }
    };
    Bicomplex::new(spaces, del, delbar, labels)
}

fn matrix_value(m: &Matrix<Scalar>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

/// Canonical JSON value of a bicomplex.
pub fn to_json(a: &Bicomplex) -> Value {
    let mut top = Map::new();
    let spaces: Map<String, Value> = a.spaces().iter().map(|(pq, d)| (pq.to_string(), Value::from(*d))).collect();
    top.insert("spaces".into(), Value::Object(spaces));
    let maps = |m: &BTreeMap<Bidegree, Matrix<Scalar>>| -> Value {
        Value::Object(m.iter().map(|(pq, x)| (pq.to_string(), matrix_value(x))).collect())
    };
    top.insert("del".into(), maps(a.del_maps()));
    top.insert("delbar".into(), maps(a.delbar_maps()));
    if let Some(l) = a.labels() {
        let labels: Map<String, Value> = l
            .iter()
            .map(|(pq, v)| (pq.to_string(), Value::Array(v.iter().map(|s| Value::String(s.clone())).collect())))
            .collect();
        top.insert("labels".into(), Value::Object(labels));
    }
    Value::Object(top)
}

/// Canonical JSON text (sorted keys, compact).
pub fn to_json_string(a: &Bicomplex) -> String {
    serde_json::to_string(&to_json(a)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::{bd, make_square};

    #[test]
    fn round_trip_square() {
        let sq = make_square(bd(0, 0));
        let text = to_json_string(&sq);
        let back = from_json_str(&text).unwrap();
        assert_eq!(back, sq);
        assert_eq!(to_json_string(&back), text);
    }

    #[test]
    fn errors_carry_positions() {
        let text = "{\"spaces\": {\"0,0\": 1, \"1,0\": 1},\n \"del\": {\"0,0\": [[\"1/0\"]]}}";
        match from_json_str(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(from_json_str("{\"spaces\": [}"), Err(Error::Parse { .. })));
        let bad_shape = "{\"spaces\": {\"0,0\": 1, \"1,0\": 1}, \"del\": {\"0,0\": [[1, 2]]}}";
        assert!(matches!(from_json_str(bad_shape), Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn accepts_integer_entries() {
        let text = "{\"spaces\": {\"0,0\": 1, \"1,0\": 1}, \"del\": {\"0,0\": [[2]]}}";
        let a = from_json_str(text).unwrap();
        assert_eq!(a.del(bd(0, 0)).get(0, 0), &Scalar::int(2));
    }
}
