//! Bounded bicomplexes over ℚ(i): data type, validation and the derived
//! total-degree operators `d = ∂ + ∂̄`, `d^c = i(∂̄ − ∂)` and `𝕀 = i^{p−q}`.

mod builder;
pub mod json;
mod ops;
mod shape;
mod total;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Identity, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub use builder::Builder;
pub use ops::{direct_sum, direct_sum_all, dual, scramble, shift, tensor};
pub use shape::{make_dot, make_square, make_zigzag, Arrow, Entry, MultiplicityTable, Orientation, Role, ShapeKind, ZigzagShape};
pub use total::{Basic, Block, Total};
pub(crate) use shape::add_shape;

/// A bidegree `(p, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }

    /// Total degree `p + q`.
    pub const fn total(self) -> i64 {
        self.p + self.q
    }

    pub const fn offset(self, dp: i64, dq: i64) -> Self {
        Bidegree { p: self.p + dp, q: self.q + dq }
    }

    /// Parse `"p,q"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, column: 1, message: format!("invalid bidegree `{s}`, expected \"p,q\"") };
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Bidegree { p: a.trim().parse().map_err(|_| bad())?, q: b.trim().parse().map_err(|_| bad())? })
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl fmt::Debug for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Shorthand for `Bidegree::new`.
pub const fn bd(p: i64, q: i64) -> Bidegree {
    Bidegree::new(p, q)
}

/// A bounded bicomplex. Construction always validates shapes and the three
/// identities `∂² = 0`, `∂̄² = 0`, `∂∂̄ + ∂̄∂ = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicomplex {
    spaces: BTreeMap<Bidegree, usize>,
    del: BTreeMap<Bidegree, Matrix<Scalar>>,
    delbar: BTreeMap<Bidegree, Matrix<Scalar>>,
    labels: Option<BTreeMap<Bidegree, Vec<String>>>,
}

impl Bicomplex {
    /// The zero complex.
    pub fn empty() -> Self {
        Bicomplex { spaces: BTreeMap::new(), del: BTreeMap::new(), delbar: BTreeMap::new(), labels: None }
    }

    /// Assemble and validate. `del[pq]` is the matrix of `∂: A^{p,q} → A^{p+1,q}`
    /// (rows indexed by the target basis); `delbar[pq]` that of `∂̄: A^{p,q} → A^{p,q+1}`.
    /// Missing matrices are zero maps.
    pub fn new(
        spaces: BTreeMap<Bidegree, usize>,
        del: BTreeMap<Bidegree, Matrix<Scalar>>,
        delbar: BTreeMap<Bidegree, Matrix<Scalar>>,
        labels: Option<BTreeMap<Bidegree, Vec<String>>>,
    ) -> Result<Self> {
        let spaces: BTreeMap<Bidegree, usize> = spaces.into_iter().filter(|&(_, d)| d > 0).collect();
        let dim = |pq: &Bidegree| spaces.get(pq).copied().unwrap_or(0);
        let check = |maps: &BTreeMap<Bidegree, Matrix<Scalar>>, dp: i64, dq: i64, name: &str| -> Result<()> {
            for (pq, m) in maps {
                let (r, c) = (dim(&pq.offset(dp, dq)), dim(pq));
                if m.rows() != r || m.cols() != c {
                    return Err(Error::ShapeMismatch(
                        *pq,
                        format!("{name} has shape {}x{}, expected {r}x{c}", m.rows(), m.cols()),
                    ));
                }
            }
            Ok(())
        };
        check(&del, 1, 0, "∂")?;
        check(&delbar, 0, 1, "∂̄")?;
        if let Some(l) = &labels {
            for (pq, names) in l {
                if names.len() != dim(pq) {
                    return Err(Error::ShapeMismatch(*pq, format!("{} labels for a {}-dimensional space", names.len(), dim(pq))));
                }
            }
        }
        let del = del.into_iter().filter(|(_, m)| m.rows() > 0 && m.cols() > 0 && !m.is_zero()).collect();
        let delbar = delbar.into_iter().filter(|(_, m)| m.rows() > 0 && m.cols() > 0 && !m.is_zero()).collect();
        let labels = labels.map(|l| l.into_iter().filter(|(_, v)| !v.is_empty()).collect());
        let a = Bicomplex { spaces, del, delbar, labels };
        a.validate()?;
        Ok(a)
    }

    /// Check all three bicomplex identities at every bidegree.
    pub fn validate(&self) -> Result<()> {
        for &pq in self.spaces.keys() {
            let d0 = self.del(pq);
            let b0 = self.delbar(pq);
            if !self.del(pq.offset(1, 0)).mul(&d0).is_zero() {
                return Err(Error::NotABicomplex(pq, Identity::DelSquared));
            }
            if !self.delbar(pq.offset(0, 1)).mul(&b0).is_zero() {
                return Err(Error::NotABicomplex(pq, Identity::DelbarSquared));
            }
            let anti = self.del(pq.offset(0, 1)).mul(&b0).add(&self.delbar(pq.offset(1, 0)).mul(&d0));
            if !anti.is_zero() {
                return Err(Error::NotABicomplex(pq, Identity::Anticommute));
            }
        }
        Ok(())
    }

    pub fn dim(&self, pq: Bidegree) -> usize {
        self.spaces.get(&pq).copied().unwrap_or(0)
    }

    /// Total dimension.
    pub fn total_dim(&self) -> usize {
        self.spaces.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// Nonzero spaces in bidegree order.
    pub fn spaces(&self) -> &BTreeMap<Bidegree, usize> {
        &self.spaces
    }

    /// Bidegrees with nonzero spaces.
    pub fn support(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.spaces.keys().copied()
    }

    /// Matrix of `∂` out of `pq` (zero if not stored).
    pub fn del(&self, pq: Bidegree) -> Matrix<Scalar> {
        self.del.get(&pq).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(pq.offset(1, 0)), self.dim(pq)))
    }

    /// Matrix of `∂̄` out of `pq` (zero if not stored).
    pub fn delbar(&self, pq: Bidegree) -> Matrix<Scalar> {
        self.delbar.get(&pq).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(pq.offset(0, 1)), self.dim(pq)))
    }

    /// Stored nonzero `∂` matrices.
    pub fn del_maps(&self) -> &BTreeMap<Bidegree, Matrix<Scalar>> {
        &self.del
    }

    /// Stored nonzero `∂̄` matrices.
    pub fn delbar_maps(&self) -> &BTreeMap<Bidegree, Matrix<Scalar>> {
        &self.delbar
    }

    pub fn labels(&self) -> Option<&BTreeMap<Bidegree, Vec<String>>> {
        self.labels.as_ref()
    }

    /// Labels of the basis at `pq`, or generated names when absent.
    pub fn labels_at(&self, pq: Bidegree) -> Vec<String> {
        match self.labels.as_ref().and_then(|l| l.get(&pq)) {
            Some(v) => v.clone(),
            None => (0..self.dim(pq)).map(|i| format!("e[{pq}]{i}")).collect(),
        }
    }

    /// Replace the labels (lengths must match dimensions).
    pub fn with_labels(self, labels: Option<BTreeMap<Bidegree, Vec<String>>>) -> Result<Self> {
        Bicomplex::new(self.spaces, self.del, self.delbar, labels)
    }

    /// Range of total degrees with nonzero spaces, or `None` for the zero complex.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.spaces.keys().map(|pq| pq.total());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), k| (lo.min(k), hi.max(k))))
    }

    /// Range of `p` values in the support.
    pub fn p_range(&self) -> Option<(i64, i64)> {
        let mut it = self.spaces.keys().map(|pq| pq.p);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), k| (lo.min(k), hi.max(k))))
    }

    /// Range of `q` values in the support.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let mut it = self.spaces.keys().map(|pq| pq.q);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), k| (lo.min(k), hi.max(k))))
    }

    /// The total complex with its derived operators.
    pub fn total(&self) -> Total {
        Total::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidegree_text() {
        assert_eq!(Bidegree::parse("-1,3").unwrap(), bd(-1, 3));
        assert_eq!(bd(2, -5).to_string(), "2,-5");
        assert!(Bidegree::parse("1;2").is_err());
    }

    #[test]
    fn del_squared_detected() {
        let mut spaces = BTreeMap::new();
        spaces.insert(bd(0, 0), 2);
        spaces.insert(bd(1, 0), 2);
        spaces.insert(bd(2, 0), 1);
        let mut del = BTreeMap::new();
        del.insert(bd(0, 0), Matrix::identity(2));
        del.insert(bd(1, 0), Matrix::from_rows(1, 2, vec![vec![Scalar::int(1), Scalar::int(0)]]));
        let err = Bicomplex::new(spaces, del, BTreeMap::new(), None).unwrap_err();
        assert_eq!(err, Error::NotABicomplex(bd(0, 0), Identity::DelSquared));
    }

    #[test]
    fn shape_mismatch_detected() {
        let mut spaces = BTreeMap::new();
        spaces.insert(bd(0, 0), 1);
        spaces.insert(bd(1, 0), 1);
        let mut del = BTreeMap::new();
        del.insert(bd(0, 0), Matrix::<Scalar>::identity(2));
        assert!(matches!(Bicomplex::new(spaces, del, BTreeMap::new(), None), Err(Error::ShapeMismatch(..))));
    }
}
