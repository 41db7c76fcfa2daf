//! Zigzag multiplicities of a bicomplex, E₁-isomorphism and realization of
//! multiplicity tables.
//!
//! Multiplicities are read off from ranks: squares from `∂̄∂`, odd zigzags
//! from the refined Betti numbers and even zigzags from the differentials
//! of the two spectral sequences.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::bicomplex::{add_shape, Arrow, Bicomplex, Bidegree, Builder, MultiplicityTable, Orientation, Role, ShapeKind, Total, ZigzagShape};
use crate::error::{Error, Result};
use crate::functors::{degree_filtrations, differential_ranks, DegreeFiltration, Sequence};
use crate::linalg::rank;

/// Odd zigzag (or dot) carrying the refined Betti number `b_k^{p,q}`.
pub fn odd_shape_for(k: i64, pq: Bidegree) -> ZigzagShape {
    let d = pq.total() - k;
    let m = d.unsigned_abs() as usize;
    match d.signum() {
        0 => ZigzagShape::dot(pq),
        // outgoing: targets run from (p−d, q) to (p, q−d)
        1 => ZigzagShape::zigzag(pq.offset(-d, -1), 2 * m + 1, Arrow::Vertical).expect("length ≥ 3"),
        // incoming: sources run from (p, k−p) to (p+|d|, q)
        _ => ZigzagShape::zigzag(Bidegree::new(pq.p, k - pq.p), 2 * m + 1, Arrow::Horizontal).expect("length ≥ 3"),
    }
}

/// Even zigzag of length `2r` detected by a rank of `d_r` leaving `pq`.
pub fn even_shape_for(which: Sequence, pq: Bidegree, r: usize) -> ZigzagShape {
    let ri = r as i64;
    match which {
        // top-left source at pq
        Sequence::Column => ZigzagShape::zigzag(pq, 2 * r, Arrow::Horizontal),
        // bottom-right source at pq, top-left target at (p−r+1, q+r)
        Sequence::Row => ZigzagShape::zigzag(pq.offset(1 - ri, ri - 1), 2 * r, Arrow::Vertical),
    }
    .expect("length ≥ 2")
}

/// Squares anchored at each bidegree, with the `∂∂̄` cross-check.
fn square_counts(a: &Bicomplex) -> Result<BTreeMap<Bidegree, usize>> {
    let mut out = BTreeMap::new();
    for pq in a.support() {
        let one = rank(&a.delbar(pq.offset(1, 0)).mul(&a.del(pq)));
        let other = rank(&a.del(pq.offset(0, 1)).mul(&a.delbar(pq)));
        if one != other {
            return Err(Error::Inconsistent(format!("rank ∂̄∂ = {one} but rank ∂∂̄ = {other} at ({pq})")));
        }
        if one > 0 {
            out.insert(pq, one);
        }
    }
    Ok(out)
}

/// The multiplicity table of `a`.
pub fn multiplicities(a: &Bicomplex) -> Result<MultiplicityTable> {
    let t = a.total();
    multiplicities_in(a, &t)
}

/// The multiplicity table of `a`, reusing its total complex.
pub fn multiplicities_in(a: &Bicomplex, t: &Total) -> Result<MultiplicityTable> {
    multiplicities_with(a, t, &degree_filtrations(t))
}

/// The multiplicity table of `a` from its total complex and the Hodge
/// filtrations of every degree.
pub fn multiplicities_with(a: &Bicomplex, t: &Total, filts: &[DegreeFiltration]) -> Result<MultiplicityTable> {
    let mut table = MultiplicityTable::new();
    for (pq, m) in square_counts(a)? {
        table.add(ZigzagShape::square(pq), m);
    }
    for df in filts {
        for (pq, m) in df.refined() {
            table.add(odd_shape_for(df.k, pq), m);
        }
    }
    for which in [Sequence::Column, Sequence::Row] {
        for ((pq, r), m) in differential_ranks(a, t, which) {
            table.add(even_shape_for(which, pq, r), m);
        }
    }
    audit(a, &table)?;
    Ok(table)
}

/// Check that the table accounts for every dimension of `a`.
pub fn audit(a: &Bicomplex, table: &MultiplicityTable) -> Result<()> {
    let dims = table.local_dims();
    if &dims != a.spaces() {
        return Err(Error::Inconsistent(format!(
            "dimension audit failed: table covers {dims:?}, complex has {:?}",
            a.spaces()
        )));
    }
    Ok(())
}

/// Whether `a` and `b` have the same zigzag multiplicities.
pub fn e1_isomorphic(a: &Bicomplex, b: &Bicomplex) -> Result<bool> {
    Ok(multiplicities(a)?.zigzags_only() == multiplicities(b)?.zigzags_only())
}

/// The direct sum of the indecomposables listed in the table.
pub fn realize(t: &MultiplicityTable) -> Result<Bicomplex> {
    let mut b = Builder::new();
    for (s, m) in t.iter() {
        s.validate()?;
        for _ in 0..*m {
            add_shape(&mut b, s);
        }
    }
    b.build()
}

/// The arrows of an indecomposable as `(source, target, horizontal)`.
fn arrows(s: &ZigzagShape) -> Vec<(Bidegree, Bidegree, bool)> {
    match s.kind {
        ShapeKind::Dot => vec![],
        ShapeKind::Square => {
            let a = s.anchor;
            vec![
                (a, a.offset(1, 0), true),
                (a, a.offset(0, 1), false),
                (a.offset(0, 1), a.offset(1, 1), true),
                (a.offset(1, 0), a.offset(1, 1), false),
            ]
        }
        ShapeKind::Zigzag => {
            let es = s.entries();
            es.windows(2)
                .map(|w| match w[0].role {
                    Role::Source => (w[0].pq, w[1].pq, true),
                    _ => (w[1].pq, w[0].pq, false),
                })
                .collect()
        }
    }
}

/// Bidegrees where the shape contributes to `H_∂̄` (`horizontal = false`:
/// entries without vertical arrows) or to `H_∂` (entries without
/// horizontal arrows).
pub fn shape_cohomology_support(s: &ZigzagShape, horizontal: bool) -> Vec<Bidegree> {
    let arr = arrows(s);
    s.entries()
        .iter()
        .map(|e| e.pq)
        .filter(|pq| !arr.iter().any(|(x, y, h)| *h == horizontal && (x == pq || y == pq)))
        .collect()
}

/// Total degree of the de Rham class of a dot or odd zigzag, if any.
pub fn shape_betti_degree(s: &ZigzagShape) -> Option<i64> {
    match s.kind {
        ShapeKind::Dot => Some(s.degree()),
        ShapeKind::Zigzag if s.length % 2 == 1 => match s.orientation() {
            Some(Orientation::Out) => Some(s.degree() + 1),
            _ => Some(s.degree()),
        },
        _ => None,
    }
}

/// Betti numbers predicted from a table.
pub fn predicted_betti(t: &MultiplicityTable) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for (s, m) in t.iter() {
        if let Some(k) = shape_betti_degree(s) {
            *out.entry(k).or_insert(0) += m;
        }
    }
    out
}

/// `H_∂̄` (`horizontal = false`) or `H_∂` (`horizontal = true`) dimensions
/// predicted from a table.
pub fn predicted_dolbeault(t: &MultiplicityTable, horizontal: bool) -> BTreeMap<Bidegree, usize> {
    let mut out = BTreeMap::new();
    for (s, m) in t.iter() {
        for pq in shape_cohomology_support(s, horizontal) {
            *out.entry(pq).or_insert(0) += m;
        }
    }
    out
}

fn shape_json(s: &ZigzagShape) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), serde_json::to_value(s.kind).expect("serializable"));
    o.insert("anchor".into(), Value::from(s.anchor.to_string()));
    o.insert("length".into(), Value::from(s.length));
    if let Some(a) = s.first_arrow {
        o.insert("first_arrow".into(), serde_json::to_value(a).expect("serializable"));
    }
    if let Some(or) = s.orientation() {
        o.insert("orientation".into(), serde_json::to_value(or).expect("serializable"));
    }
    o.insert("entries".into(), Value::Array(s.entries().iter().map(|e| Value::from(e.pq.to_string())).collect()));
    Value::Object(o)
}

/// JSON array of `{shape, multiplicity}` in canonical order.
pub fn table_to_json(t: &MultiplicityTable) -> Value {
    Value::Array(
        t.iter()
            .map(|(s, m)| {
                let mut o = Map::new();
                o.insert("shape".into(), shape_json(s));
                o.insert("multiplicity".into(), Value::from(*m));
                Value::Object(o)
            })
            .collect(),
    )
}

/// Parse the output of [`table_to_json`] (derived fields are ignored).
pub fn table_from_json(v: &Value) -> Result<MultiplicityTable> {
    let bad = |m: &str| Error::InvalidInput(format!("multiplicity table: {m}"));
    let arr = v.as_array().ok_or_else(|| bad("expected an array"))?;
    let mut t = MultiplicityTable::new();
    for item in arr {
        let shape = item.get("shape").ok_or_else(|| bad("missing `shape`"))?;
        let m = item.get("multiplicity").and_then(Value::as_u64).ok_or_else(|| bad("missing `multiplicity`"))?;
        let kind: ShapeKind =
            serde_json::from_value(shape.get("kind").cloned().unwrap_or(Value::Null)).map_err(|_| bad("invalid `kind`"))?;
        let anchor = Bidegree::parse(shape.get("anchor").and_then(Value::as_str).ok_or_else(|| bad("missing `anchor`"))?)?;
        let s = match kind {
            ShapeKind::Dot => ZigzagShape::dot(anchor),
            ShapeKind::Square => ZigzagShape::square(anchor),
            ShapeKind::Zigzag => {
                let len = shape.get("length").and_then(Value::as_u64).ok_or_else(|| bad("missing `length`"))? as usize;
                let arrow: Option<Arrow> = shape.get("first_arrow").and_then(|x| serde_json::from_value(x.clone()).ok());
                let orientation: Option<Orientation> = shape.get("orientation").and_then(|x| serde_json::from_value(x.clone()).ok());
                match (arrow, orientation) {
                    (Some(a), Some(o)) => ZigzagShape::zigzag_oriented(anchor, len, a, o)?,
                    (Some(a), None) => ZigzagShape::zigzag(anchor, len, a)?,
                    (None, Some(o)) => ZigzagShape::zigzag_from_orientation(anchor, len, o)?,
                    (None, None) => return Err(bad("zigzag needs `first_arrow` or `orientation`")),
                }
            }
        };
        t.add(s, m as usize);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::{bd, direct_sum_all, make_dot, make_square, make_zigzag, scramble};

    fn zz(p: i64, q: i64, len: usize, arrow: Arrow) -> ZigzagShape {
        ZigzagShape::zigzag(bd(p, q), len, arrow).unwrap()
    }

    #[test]
    fn scrambled_sum_is_recovered() {
        let l = zz(0, 0, 3, Arrow::Vertical);
        let a = direct_sum_all(&[&make_square(bd(0, 0)), &make_dot(bd(0, 0)), &make_zigzag(&l).unwrap()]);
        let t = multiplicities(&scramble(&a, 11)).unwrap();
        let expect = MultiplicityTable::from_entries([(ZigzagShape::square(bd(0, 0)), 1), (ZigzagShape::dot(bd(0, 0)), 1), (l, 1)]);
        assert_eq!(t, expect);
    }

    #[test]
    fn empty_complex_has_empty_table() {
        assert!(multiplicities(&Bicomplex::empty()).unwrap().is_empty());
    }

    #[test]
    fn every_small_shape_round_trips() {
        for len in 1..=9 {
            for arrow in [Arrow::Horizontal, Arrow::Vertical] {
                let s = if len == 1 { ZigzagShape::dot(bd(1, 2)) } else { zz(1, 2, len, arrow) };
                let t = MultiplicityTable::from_entries([(s, 2)]);
                assert_eq!(multiplicities(&realize(&t).unwrap()).unwrap(), t, "{s}");
            }
        }
    }

    #[test]
    fn e1_isomorphism_ignores_squares() {
        let a = make_zigzag(&zz(0, 0, 4, Arrow::Horizontal)).unwrap();
        let with_square = crate::bicomplex::direct_sum(&a, &make_square(bd(3, 3)));
        let with_dot = crate::bicomplex::direct_sum(&a, &make_dot(bd(0, 0)));
        assert!(e1_isomorphic(&a, &scramble(&a, 3)).unwrap());
        assert!(e1_isomorphic(&a, &with_square).unwrap());
        assert!(!e1_isomorphic(&a, &with_dot).unwrap());
    }

    #[test]
    fn predicted_numbers_of_shapes() {
        // outgoing L: class in degree 2, H_∂̄ at the targets' non-vertical ends
        let l = zz(1, 0, 3, Arrow::Vertical);
        assert_eq!(shape_betti_degree(&l), Some(2));
        assert_eq!(shape_cohomology_support(&l, false), vec![bd(2, 0)]);
        assert_eq!(shape_cohomology_support(&l, true), vec![bd(1, 1)]);
        assert!(shape_cohomology_support(&ZigzagShape::square(bd(0, 0)), false).is_empty());
    }

    #[test]
    fn table_json_round_trip() {
        let t = MultiplicityTable::from_entries([(ZigzagShape::square(bd(0, 0)), 2), (zz(0, 1, 5, Arrow::Horizontal), 1)]);
        assert_eq!(table_from_json(&table_to_json(&t)).unwrap(), t);
    }
}
