//! Indecomposable bicomplexes: dots, squares and zigzags, their canonical
//! codes and multiplicity tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Bicomplex, Bidegree, Builder};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Dot,
    Square,
    Zigzag,
}

/// Direction of the first arrow met when walking a zigzag from its anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrow {
    Horizontal,
    Vertical,
}

/// Incoming/outgoing type of a zigzag of length ≥ 2.
///
/// Odd zigzags are `Out` when both ends are targets (the L shape) and `In`
/// when both ends are sources (the reverse L). Even zigzags are `Out` when
/// the top-left entry is a source and `In` when it is a target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Out,
    In,
}

/// Whether an entry of an indecomposable emits or receives arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Source,
    Target,
    /// Dot entries and the two middle corners of a square.
    Other,
}

/// One entry of an indecomposable, with its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub pq: Bidegree,
    pub role: Role,
}

/// Canonical code of an indecomposable bicomplex.
///
/// For zigzags of length ≥ 2 the anchor is the source of minimal `p` (all
/// sources sit in the lower of the two total degrees). With a horizontal
/// first arrow the anchor is the top-left entry; with a vertical first arrow
/// the top-left entry is the target directly above the anchor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZigzagShape {
    pub kind: ShapeKind,
    pub anchor: Bidegree,
    pub length: usize,
    pub first_arrow: Option<Arrow>,
}

impl ZigzagShape {
    pub fn dot(anchor: Bidegree) -> Self {
        ZigzagShape { kind: ShapeKind::Dot, anchor, length: 1, first_arrow: None }
    }

    pub fn square(anchor: Bidegree) -> Self {
        ZigzagShape { kind: ShapeKind::Square, anchor, length: 4, first_arrow: None }
    }

    /// A zigzag of the given length ≥ 2.
    pub fn zigzag(anchor: Bidegree, length: usize, first_arrow: Arrow) -> Result<Self> {
        if length < 2 {
            return Err(Error::InvalidShape(format!("zigzag length {length} < 2 (use a dot)")));
        }
        Ok(ZigzagShape { kind: ShapeKind::Zigzag, anchor, length, first_arrow: Some(first_arrow) })
    }

    /// A zigzag given with an explicit orientation, which must agree with
    /// the one implied by the first arrow and the parity of the length.
    pub fn zigzag_oriented(anchor: Bidegree, length: usize, first_arrow: Arrow, orientation: Orientation) -> Result<Self> {
        let s = Self::zigzag(anchor, length, first_arrow)?;
        if s.orientation() != Some(orientation) {
            return Err(Error::InvalidShape(format!(
                "a length-{length} zigzag with {first_arrow:?} first arrow is {:?}, not {orientation:?}",
                s.orientation().unwrap()
            )));
        }
        Ok(s)
    }

    /// A zigzag described by its orientation, with the first arrow derived.
    pub fn zigzag_from_orientation(anchor: Bidegree, length: usize, orientation: Orientation) -> Result<Self> {
        let horizontal = match (length % 2 == 1, orientation) {
            (true, Orientation::In) | (false, Orientation::Out) => Arrow::Horizontal,
            _ => Arrow::Vertical,
        };
        Self::zigzag(anchor, length, horizontal)
    }

    /// Check the structural invariants of the code.
    pub fn validate(&self) -> Result<()> {
        match self.kind {
            ShapeKind::Dot if self.length == 1 && self.first_arrow.is_none() => Ok(()),
            ShapeKind::Square if self.length == 4 && self.first_arrow.is_none() => Ok(()),
            ShapeKind::Zigzag if self.length >= 2 && self.first_arrow.is_some() => Ok(()),
            _ => Err(Error::InvalidShape(format!("{self:?}"))),
        }
    }

    pub fn is_dot(&self) -> bool {
        self.kind == ShapeKind::Dot
    }

    pub fn is_square(&self) -> bool {
        self.kind == ShapeKind::Square
    }

    /// Dots and zigzags (everything except squares).
    pub fn is_zigzag_like(&self) -> bool {
        self.kind != ShapeKind::Square
    }

    pub fn orientation(&self) -> Option<Orientation> {
        let arrow = self.first_arrow?;
        let odd = self.length % 2 == 1;
        Some(match (odd, arrow) {
            (true, Arrow::Horizontal) | (false, Arrow::Vertical) => Orientation::In,
            _ => Orientation::Out,
        })
    }

    /// Lower total degree occupied.
    pub fn degree(&self) -> i64 {
        self.anchor.total()
    }

    /// Entries in order from the top-left to the bottom-right.
    pub fn entries(&self) -> Vec<Entry> {
        let a = self.anchor;
        match self.kind {
            ShapeKind::Dot => vec![Entry { pq: a, role: Role::Other }],
            ShapeKind::Square => vec![
                Entry { pq: a.offset(0, 1), role: Role::Other },
                Entry { pq: a, role: Role::Source },
                Entry { pq: a.offset(1, 1), role: Role::Target },
                Entry { pq: a.offset(1, 0), role: Role::Other },
            ],
            ShapeKind::Zigzag => {
                let (mut pq, mut role) = match self.first_arrow {
                    Some(Arrow::Horizontal) => (a, Role::Source),
                    _ => (a.offset(0, 1), Role::Target),
                };
                let mut out = Vec::with_capacity(self.length);
                for _ in 0..self.length {
                    out.push(Entry { pq, role });
                    (pq, role) = match role {
                        Role::Source => (pq.offset(1, 0), Role::Target),
                        _ => (pq.offset(0, -1), Role::Source),
                    };
                }
                out
            }
        }
    }

    /// Dimension of the indecomposable at `pq` (0 or 1).
    pub fn local_dim(&self, pq: Bidegree) -> usize {
        self.entries().iter().filter(|e| e.pq == pq).count()
    }

    /// Translate by `(dp, dq)`.
    pub fn translate(&self, dp: i64, dq: i64) -> Self {
        ZigzagShape { anchor: self.anchor.offset(dp, dq), ..*self }
    }

    /// The shape obtained by reflecting `(p,q) ↦ (n−p, n−q)` (the dual).
    pub fn reflect(&self, n: i64) -> Self {
        match self.kind {
            ShapeKind::Dot => Self::dot(Bidegree::new(n - self.anchor.p, n - self.anchor.q)),
            ShapeKind::Square => Self::square(Bidegree::new(n - self.anchor.p - 1, n - self.anchor.q - 1)),
            ShapeKind::Zigzag => {
                // Reflection swaps sources and targets and reverses the walk.
                let es = self.entries();
                let reflected: Vec<Bidegree> = es.iter().map(|e| Bidegree::new(n - e.pq.p, n - e.pq.q)).collect();
                let new_sources: Vec<Bidegree> = es
                    .iter()
                    .zip(&reflected)
                    .filter(|(e, _)| e.role == Role::Target)
                    .map(|(_, r)| *r)
                    .collect();
                let anchor = *new_sources.iter().min_by_key(|b| b.p).expect("zigzag has a target");
                // The reflected top-left entry is the image of the old bottom-right one.
                let last = es.last().unwrap();
                let first_arrow = if last.role == Role::Target { Arrow::Horizontal } else { Arrow::Vertical };
                Self::zigzag(anchor, self.length, first_arrow).expect("valid length")
            }
        }
    }

    /// The shape obtained by swapping `(p,q) ↦ (q,p)` (complex conjugation).
    pub fn conjugate(&self) -> Self {
        let swap = |b: Bidegree| Bidegree::new(b.q, b.p);
        match self.kind {
            ShapeKind::Dot => Self::dot(swap(self.anchor)),
            ShapeKind::Square => Self::square(swap(self.anchor)),
            ShapeKind::Zigzag => {
                let es = self.entries();
                let anchor = es.iter().filter(|e| e.role == Role::Source).map(|e| swap(e.pq)).min_by_key(|b| b.p).unwrap();
                // The swapped top-left entry is the image of the old bottom-right one.
                let first_arrow = if es.last().unwrap().role == Role::Source { Arrow::Horizontal } else { Arrow::Vertical };
                Self::zigzag(anchor, self.length, first_arrow).expect("valid length")
            }
        }
    }

    /// Short human-readable name.
    pub fn describe(&self) -> String {
        match self.kind {
            ShapeKind::Dot => format!("dot@({})", self.anchor),
            ShapeKind::Square => format!("square@({})", self.anchor),
            ShapeKind::Zigzag => {
                let o = match self.orientation() {
                    Some(Orientation::Out) => "out",
                    _ => "in",
                };
                let a = match self.first_arrow {
                    Some(Arrow::Horizontal) => "h",
                    _ => "v",
                };
                format!("zigzag{}-{o}@({}){a}", self.length, self.anchor)
            }
        }
    }
}

impl fmt::Debug for ZigzagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Display for ZigzagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Add one copy of the indecomposable `s` to a builder.
pub(crate) fn add_shape(b: &mut Builder, s: &ZigzagShape) {
    let one = Scalar::int(1);
    match s.kind {
        ShapeKind::Dot => {
            b.add_basis(s.anchor, None);
        }
        ShapeKind::Square => {
            let a = s.anchor;
            let (left, top, right) = (a.offset(0, 1), a.offset(1, 1), a.offset(1, 0));
            let i0 = b.add_basis(a, None);
            let il = b.add_basis(left, None);
            let ir = b.add_basis(right, None);
            let it = b.add_basis(top, None);
            b.add_del(a, i0, ir, one.clone());
            b.add_delbar(a, i0, il, one.clone());
            b.add_delbar(right, ir, it, one.clone());
            b.add_del(left, il, it, Scalar::int(-1));
        }
        ShapeKind::Zigzag => {
            let es = s.entries();
            let idx: Vec<usize> = es.iter().map(|e| b.add_basis(e.pq, None)).collect();
            for w in 0..es.len() - 1 {
                let (x, y) = (es[w], es[w + 1]);
                match x.role {
                    // source → target to its right
                    Role::Source => b.add_del(x.pq, idx[w], idx[w + 1], one.clone()),
                    // target above the next source
                    _ => b.add_delbar(y.pq, idx[w + 1], idx[w], one.clone()),
                }
            }
        }
    }
}

pub fn make_dot(pq: Bidegree) -> Bicomplex {
    make_zigzag(&ZigzagShape::dot(pq)).expect("dot is valid")
}

pub fn make_square(pq: Bidegree) -> Bicomplex {
    make_zigzag(&ZigzagShape::square(pq)).expect("square is valid")
}

/// The indecomposable with the given code (dots and squares included).
pub fn make_zigzag(s: &ZigzagShape) -> Result<Bicomplex> {
    s.validate()?;
    let mut b = Builder::new();
    add_shape(&mut b, s);
    b.build()
}

/// Multiplicities of indecomposables.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MultiplicityTable {
    entries: BTreeMap<ZigzagShape, usize>,
}

impl MultiplicityTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(it: impl IntoIterator<Item = (ZigzagShape, usize)>) -> Self {
        let mut t = Self::new();
        for (s, m) in it {
            t.add(s, m);
        }
        t
    }

    pub fn add(&mut self, s: ZigzagShape, m: usize) {
        if m > 0 {
            *self.entries.entry(s).or_insert(0) += m;
        }
    }

    pub fn get(&self, s: &ZigzagShape) -> usize {
        self.entries.get(s).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<ZigzagShape, usize> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ZigzagShape, &usize)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of indecomposable summands.
    pub fn count(&self) -> usize {
        self.entries.values().sum()
    }

    /// Pointwise sum.
    pub fn merge(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for (s, m) in &other.entries {
            t.add(*s, *m);
        }
        t
    }

    /// The table without squares.
    pub fn zigzags_only(&self) -> Self {
        Self::from_entries(self.entries.iter().filter(|(s, _)| !s.is_square()).map(|(s, m)| (*s, *m)))
    }

    pub fn translate(&self, dp: i64, dq: i64) -> Self {
        Self::from_entries(self.entries.iter().map(|(s, m)| (s.translate(dp, dq), *m)))
    }

    pub fn reflect(&self, n: i64) -> Self {
        Self::from_entries(self.entries.iter().map(|(s, m)| (s.reflect(n), *m)))
    }

    pub fn conjugate(&self) -> Self {
        Self::from_entries(self.entries.iter().map(|(s, m)| (s.conjugate(), *m)))
    }

    /// Dimension of the realized complex at every bidegree.
    pub fn local_dims(&self) -> BTreeMap<Bidegree, usize> {
        let mut dims = BTreeMap::new();
        for (s, m) in &self.entries {
            for e in s.entries() {
                *dims.entry(e.pq).or_insert(0) += m;
            }
        }
        dims
    }

    /// Longest zigzag (dots count as length 1); 0 if there are none.
    pub fn max_zigzag_length(&self) -> usize {
        self.entries.keys().filter(|s| !s.is_square()).map(|s| s.length).max().unwrap_or(0)
    }

    pub fn has_even_zigzags(&self) -> bool {
        self.entries.keys().any(|s| s.kind == ShapeKind::Zigzag && s.length % 2 == 0)
    }

    /// Longest odd zigzag length, 0 if none.
    pub fn max_odd_length(&self) -> usize {
        self.entries.keys().filter(|s| !s.is_square() && s.length % 2 == 1).map(|s| s.length).max().unwrap_or(0)
    }
}

impl fmt::Debug for MultiplicityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(s, m)| (s.describe(), m))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::bd;

    #[test]
    fn reverse_l_shape() {
        let s = ZigzagShape::zigzag_oriented(bd(0, 1), 3, Arrow::Horizontal, Orientation::In).unwrap();
        let pos: Vec<Bidegree> = s.entries().iter().map(|e| e.pq).collect();
        assert_eq!(pos, vec![bd(0, 1), bd(1, 1), bd(1, 0)]);
        let a = make_zigzag(&s).unwrap();
        assert_eq!(a.total_dim(), 3);
        assert!(!a.del(bd(0, 1)).is_zero());
        assert!(!a.delbar(bd(1, 0)).is_zero());
    }

    #[test]
    fn orientation_mismatch_is_invalid() {
        assert!(ZigzagShape::zigzag_oriented(bd(0, 1), 3, Arrow::Horizontal, Orientation::Out).is_err());
        assert!(ZigzagShape::zigzag(bd(0, 0), 1, Arrow::Horizontal).is_err());
    }

    #[test]
    fn zigzag_occupies_two_degrees() {
        for len in 2..=9 {
            for arrow in [Arrow::Horizontal, Arrow::Vertical] {
                let s = ZigzagShape::zigzag(bd(2, 3), len, arrow).unwrap();
                let es = s.entries();
                assert_eq!(es.len(), len);
                for e in &es {
                    let k = e.pq.total();
                    match e.role {
                        Role::Source => assert_eq!(k, 5),
                        Role::Target => assert_eq!(k, 6),
                        Role::Other => panic!("zigzag entries are sources or targets"),
                    }
                }
                let min_source = es.iter().filter(|e| e.role == Role::Source).min_by_key(|e| e.pq.p).unwrap();
                assert_eq!(min_source.pq, s.anchor);
                assert!(make_zigzag(&s).is_ok());
            }
        }
    }

    #[test]
    fn square_and_dot() {
        let sq = make_square(bd(0, 0));
        assert_eq!(sq.total_dim(), 4);
        let comp = sq.delbar(bd(1, 0)).mul(&sq.del(bd(0, 0)));
        assert_eq!(crate::linalg::rank(&comp), 1);
        let d = make_dot(bd(2, 2));
        assert_eq!(d.dim(bd(2, 2)), 1);
        assert!(d.del_maps().is_empty() && d.delbar_maps().is_empty());
    }

    #[test]
    fn reflection_is_involution() {
        for len in 1..=7 {
            let shapes: Vec<ZigzagShape> = if len == 1 {
                vec![ZigzagShape::dot(bd(1, 0))]
            } else {
                vec![
                    ZigzagShape::zigzag(bd(1, 0), len, Arrow::Horizontal).unwrap(),
                    ZigzagShape::zigzag(bd(1, 0), len, Arrow::Vertical).unwrap(),
                ]
            };
            for s in shapes {
                assert_eq!(s.reflect(4).reflect(4), s);
                if let Some(o) = s.orientation() {
                    if len % 2 == 1 {
                        assert_ne!(s.reflect(4).orientation(), Some(o));
                    }
                }
            }
        }
        let sq = ZigzagShape::square(bd(0, 0));
        assert_eq!(sq.reflect(1), sq);
    }

    #[test]
    fn conjugation_swaps_positions() {
        for len in 1..=8 {
            let shapes: Vec<ZigzagShape> = if len == 1 {
                vec![ZigzagShape::dot(bd(1, 0)), ZigzagShape::square(bd(2, 0))]
            } else {
                vec![
                    ZigzagShape::zigzag(bd(1, 0), len, Arrow::Horizontal).unwrap(),
                    ZigzagShape::zigzag(bd(1, 0), len, Arrow::Vertical).unwrap(),
                ]
            };
            for s in shapes {
                let c = s.conjugate();
                assert_eq!(c.conjugate(), s);
                if len % 2 == 1 {
                    assert_eq!(c.orientation(), s.orientation());
                } else {
                    assert_ne!(c.orientation(), s.orientation());
                }
                let mut a: Vec<Bidegree> = s.entries().iter().map(|e| bd(e.pq.q, e.pq.p)).collect();
                let mut b: Vec<Bidegree> = c.entries().iter().map(|e| e.pq).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}
