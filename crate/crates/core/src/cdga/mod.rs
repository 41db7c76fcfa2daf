//! Finite presentations of free cdgas over ℚ, their cohomology rings,
//! j-minimal models and the invariants `r_j^k`, `d_j^k`.

mod algebra;
mod minimal;
mod obstruction;
mod poly;

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

pub use algebra::{derive, CdgaCohomology, FreeAlgebra, DEFAULT_PIECE_CAP};
pub use minimal::{j_minimal_model, r_jk, rank_profile, verify_model, MinimalModel, ModelCaps};
pub use obstruction::{compatibility, d_jk, generated_dims, obstruction, CompatibilityReport, ObstructionReport, ObstructionRow, Verdict};
pub use poly::{parse_poly, Mono, Poly};

use crate::error::{Error, Result};
use crate::scalar::Q;

/// A free cdga `(Λ V, d)` with a formal dimension `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaPresentation {
    /// Formal dimension `2n`.
    pub dim: usize,
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
    /// `d` of each generator.
    pub d: Vec<Poly>,
}

impl CdgaPresentation {
    /// Build from generator names and degrees and `d` as text; generators
    /// missing from `d` are closed.
    pub fn new(dim: usize, generators: Vec<(String, usize)>, d: &[(&str, &str)]) -> Result<Self> {
        let (names, degrees): (Vec<String>, Vec<usize>) = generators.into_iter().unzip();
        let mut dgen = vec![Poly::zero(); names.len()];
        for &(g, text) in d {
            let i = names.iter().position(|n| n == g).ok_or_else(|| Error::InvalidInput(format!("d of unknown generator `{g}`")))?;
            dgen[i] = parse_poly(text, &names, &degrees)?;
        }
        let p = CdgaPresentation { dim, names, degrees, d: dgen };
        p.validate()?;
        Ok(p)
    }

    /// Check names, degrees, homogeneity of `d` and `d² = 0` on generators.
    pub fn validate(&self) -> Result<()> {
        if self.names.len() != self.degrees.len() || self.names.len() != self.d.len() {
            return Err(Error::InvalidInput("generator lists have different lengths".into()));
        }
        for (i, n) in self.names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') && n.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidInput(format!("invalid generator name `{n}`")));
            }
            if self.names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate generator `{n}`")));
            }
            if self.degrees[i] == 0 {
                return Err(Error::InvalidInput(format!("generator `{n}` has degree 0")));
            }
        }
        for (i, dx) in self.d.iter().enumerate() {
            if dx.is_zero() {
                continue;
            }
            if dx.degree(&self.degrees) != Some(self.degrees[i] + 1) {
                return Err(Error::InvalidInput(format!(
                    "d({}) = {} is not homogeneous of degree {}",
                    self.names[i],
                    dx.format(&self.names),
                    self.degrees[i] + 1
                )));
            }
            let dd = derive(dx, &self.d, &self.degrees);
            if !dd.is_zero() {
                return Err(Error::InvalidInput(format!("d²({}) = {} ≠ 0", self.names[i], dd.format(&self.names))));
            }
        }
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    /// Free with decomposable differential.
    pub fn is_minimal(&self) -> bool {
        self.d.iter().all(Poly::is_decomposable)
    }

    pub fn max_generator_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// The algebra truncated above `top`.
    pub fn algebra(&self, top: usize) -> Result<FreeAlgebra> {
        FreeAlgebra::new(self.names.clone(), self.degrees.clone(), top, DEFAULT_PIECE_CAP)
    }

    /// Cohomology in degrees `0..=max_deg`.
    pub fn cohomology(&self, max_deg: usize) -> Result<CdgaCohomology> {
        CdgaCohomology::new(&self.algebra(max_deg + 1)?, &self.d, max_deg)
    }

    /// Canonical JSON: generators in order, `d` keyed by name for non-closed generators.
    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self.names.iter().zip(&self.degrees).map(|(n, d)| json!({"name": n, "degree": d})).collect();
        let mut d = Map::new();
        for (n, p) in self.names.iter().zip(&self.d) {
            if !p.is_zero() {
                d.insert(n.clone(), Value::String(p.format(&self.names)));
            }
        }
        json!({"dim": self.dim, "generators": gens, "d": d})
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(src: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(src)
            .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
        let bad = |m: &str| Error::InvalidInput(format!("cdga JSON: {m}"));
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing integer `dim`"))? as usize;
        let gens = v.get("generators").and_then(Value::as_array).ok_or_else(|| bad("missing array `generators`"))?;
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for g in gens {
            names.push(g.get("name").and_then(Value::as_str).ok_or_else(|| bad("generator without `name`"))?.to_string());
            degrees.push(g.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("generator without integer `degree`"))? as usize);
        }
        let mut dgen = vec![Poly::zero(); names.len()];
        if let Some(d) = v.get("d") {
            let d = d.as_object().ok_or_else(|| bad("`d` must be an object"))?;
            for (g, text) in d {
                let i = names.iter().position(|n| n == g).ok_or_else(|| bad(&format!("d of unknown generator `{g}`")))?;
                let text = text.as_str().ok_or_else(|| bad(&format!("d({g}) must be a string")))?;
                dgen[i] = parse_poly(text, &names, &degrees).map_err(|e| relocate(e, g, locate_value(src, g)))?;
            }
        }
        let p = CdgaPresentation { dim, names, degrees, d: dgen };
        p.validate()?;
        Ok(p)
    }
}

/// Line and column (1-based) of the first character of the string value
/// stored under `key` inside the `"d"` object of `text`.
fn locate_value(text: &str, key: &str) -> Option<(usize, usize)> {
    let d_at = text.find("\"d\"")?;
    let needle = format!("\"{key}\"");
    let mut from = d_at + 3;
    while let Some(off) = text[from..].find(&needle) {
        let after = from + off + needle.len();
        let rest = text[after..].trim_start();
        if let Some(r) = rest.strip_prefix(':') {
            let r2 = r.trim_start();
            if r2.starts_with('"') {
                let at = text.len() - r2.len() + 1;
                let line = text[..at].matches('\n').count() + 1;
                let column = text[..at].rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
                return Some((line, column));
            }
        }
        from = after;
    }
    None
}

/// Shift a polynomial parse error to its position in the JSON source.
fn relocate(e: Error, g: &str, at: Option<(usize, usize)>) -> Error {
    match e {
        Error::Parse { line, column, message } => {
            let (line, column) = at.map_or((line, column), |(l, c)| (l, c + column - 1));
            Error::Parse { line, column, message: format!("in d({g}): {message}") }
        }
        other => other,
    }
}

fn names_e(n: usize) -> Vec<(String, usize)> {
    (1..=n).map(|i| (format!("e{i}"), 1)).collect()
}

/// Preset presentations, by name: `filiform<2n>` (or `filiform(2n)`),
/// `iwasawa`, `nil_m1`, `ex_k2_M`, `ex_k2_M_variant`, `t2xs4`, `cp3` and
/// `stretched<s>` for odd `s`.
pub fn preset(name: &str) -> Result<CdgaPresentation> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let arg = |prefix: &str| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        rest.parse().ok()
    };
    if let Some(m) = arg("filiform") {
        if m < 4 || m % 2 == 1 {
            return Err(unknown());
        }
        let d: Vec<(String, String)> = (3..=m).map(|k| (format!("e{k}"), format!("e1*e{}", k - 1))).collect();
        let d: Vec<(&str, &str)> = d.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        return CdgaPresentation::new(m, names_e(m), &d);
    }
    if let Some(s) = arg("stretched") {
        if s % 2 == 0 {
            return Err(unknown());
        }
        let gens = vec![("e1".into(), s), ("e2".into(), s), ("e3".into(), 2 * s - 1), ("e4".into(), 3 * s - 2)];
        return CdgaPresentation::new(7 * s - 3, gens, &[("e3", "e1*e2"), ("e4", "e1*e3")]);
    }
    match name {
        "iwasawa" => CdgaPresentation::new(6, names_e(6), &[("e5", "e1*e3 - e2*e4"), ("e6", "e2*e3 + e1*e4")]),
        "nil_m1" => CdgaPresentation::new(
            6,
            names_e(6),
            &[("e3", "e1*e2"), ("e4", "e1*e3"), ("e5", "e2*e3"), ("e6", "e1*e4 + e2*e5")],
        ),
        "ex_k2_M" => CdgaPresentation::new(
            6,
            names_e(6),
            &[("e3", "e1*e2"), ("e4", "e2*e3"), ("e5", "e2*e4"), ("e6", "e1*e5 + e3*e4")],
        ),
        "ex_k2_M_variant" => CdgaPresentation::new(
            6,
            names_e(6),
            &[("e3", "e1*e2"), ("e4", "e2*e3"), ("e5", "e2*e4 - e1*e3"), ("e6", "e1*e5 + e3*e4")],
        ),
        "t2xs4" => CdgaPresentation::new(
            6,
            vec![("a".into(), 1), ("b".into(), 1), ("x".into(), 4), ("y".into(), 7)],
            &[("y", "x^2")],
        ),
        "cp3" => CdgaPresentation::new(6, vec![("x".into(), 2), ("y".into(), 7)], &[("y", "x^4")]),
        _ => Err(unknown()),
    }
}

/// Names accepted by [`preset`], with example parameters.
pub const PRESET_NAMES: &[&str] =
    &["filiform4", "filiform6", "filiform8", "filiform10", "iwasawa", "nil_m1", "ex_k2_M", "ex_k2_M_variant", "t2xs4", "cp3", "stretched3"];

/// Dimensions and nonzero structure constants of the cohomology ring up to `max_deg`.
pub fn cohomology_ring(p: &CdgaPresentation, max_deg: usize) -> Result<Value> {
    let alg = p.algebra(max_deg + 1)?;
    let h = CdgaCohomology::new(&alg, &p.d, max_deg)?;
    let reps: Vec<Vec<String>> = (0..=max_deg)
        .map(|k| h.groups[k].reps().iter().map(|v| alg.poly(v, k).format(&p.names)).collect())
        .collect();
    let mut products = Vec::new();
    for a in 1..=max_deg {
        for b in a..=max_deg - a {
            for (i, x) in h.groups[a].reps().iter().enumerate() {
                for (j, y) in h.groups[b].reps().iter().enumerate() {
                    if a == b && j < i {
                        continue;
                    }
                    let c = h.groups[a + b].coords(&alg.mul_vec(x, a, y, b));
                    if c.iter().any(|q| *q != Q::from_integer(0.into())) {
                        let c: Vec<String> = c.iter().map(crate::scalar::format_rational).collect();
                        products.push(json!({"left": [a, i], "right": [b, j], "product": c}));
                    }
                }
            }
        }
    }
    let betti: BTreeMap<String, usize> = (0..=max_deg).map(|k| (k.to_string(), h.betti(k))).collect();
    Ok(json!({"betti": betti, "representatives": reps, "products": products}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        for name in PRESET_NAMES {
            let p = preset(name).unwrap();
            p.validate().unwrap();
            let back = CdgaPresentation::from_json_str(&p.to_json_string()).unwrap();
            assert_eq!(back, p, "{name}");
            assert_eq!(back.to_json_string(), p.to_json_string());
        }
        assert!(matches!(preset("filiform5"), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("torus"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn preset_equations() {
        let f = preset("filiform(6)").unwrap();
        assert_eq!(f.generator_count(), 6);
        assert_eq!(f.d[2].format(&f.names), "e1*e2");
        let iw = preset("iwasawa").unwrap();
        assert_eq!(iw.d[4], parse_poly("e1*e3 - e2*e4", &iw.names, &iw.degrees).unwrap());
        let m = preset("ex_k2_M").unwrap();
        assert_eq!(m.d[4].format(&m.names), "e2*e4");
        assert_eq!(m.d[5], parse_poly("e1*e5 + e3*e4", &m.names, &m.degrees).unwrap());
    }

    #[test]
    fn cohomology_examples() {
        let f = preset("filiform6").unwrap();
        let h = f.cohomology(6).unwrap();
        assert_eq!(h.betti(1), 2);
        assert_eq!(h.betti(6), 1);
        let circle = CdgaPresentation::new(1, vec![("x".into(), 1)], &[]).unwrap();
        assert_eq!(circle.cohomology(1).unwrap().bettis(), vec![1, 1]);
        let iw = preset("iwasawa").unwrap();
        let ring = cohomology_ring(&iw, 2).unwrap();
        assert!(!ring["products"].as_array().unwrap().is_empty());
        assert_eq!(cohomology_ring(&f, 2).unwrap()["products"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn invalid_presentations() {
        let g = || vec![("a".to_string(), 1), ("b".to_string(), 1), ("c".to_string(), 1)];
        assert!(CdgaPresentation::new(3, g(), &[("c", "a")]).is_err());
        assert!(CdgaPresentation::new(3, vec![("a".into(), 1), ("a".into(), 1)], &[]).is_err());
        // d²c = d(ae) = −abc when de = bc
        let g4 = vec![("a".to_string(), 1), ("b".to_string(), 1), ("c".to_string(), 1), ("e".to_string(), 1)];
        assert!(CdgaPresentation::new(4, g4, &[("c", "a*e"), ("e", "b*c")]).is_err());
        let err = CdgaPresentation::from_json_str("{\"dim\": 2, \"generators\": [{\"name\": \"a\", \"degree\": 1}], \"d\": {\"a\": \"q\"}}")
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 68, .. }), "{err:?}");
        let multi = "{\n  \"dim\": 2,\n  \"generators\": [{\"name\": \"a\", \"degree\": 1}],\n  \"d\": {\"a\": \"a + b\"}\n}";
        assert!(matches!(CdgaPresentation::from_json_str(multi), Err(Error::Parse { line: 4, column: 19, .. })));
        assert!(matches!(CdgaPresentation::from_json_str("{\"dim\": 2,"), Err(Error::Parse { line: 1, .. })));
    }
}
