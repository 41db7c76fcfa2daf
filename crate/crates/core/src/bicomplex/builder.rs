use std::collections::BTreeMap;

use super::{Bicomplex, Bidegree};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Incremental construction of a bicomplex from basis vectors and sparse
/// arrow coefficients. Coefficients added twice to the same slot accumulate.
#[derive(Default)]
pub struct Builder {
    dims: BTreeMap<Bidegree, usize>,
    del: Vec<(Bidegree, usize, usize, Scalar)>,
    delbar: Vec<(Bidegree, usize, usize, Scalar)>,
    labels: BTreeMap<Bidegree, Vec<Option<String>>>,
    labeled: bool,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append a basis vector at `pq`; returns its index within `A^{p,q}`.
    pub fn add_basis(&mut self, pq: Bidegree, label: Option<String>) -> usize {
        let d = self.dims.entry(pq).or_insert(0);
        let idx = *d;
        *d += 1;
        self.labeled |= label.is_some();
        self.labels.entry(pq).or_default().push(label);
        idx
    }

    /// Append `n` unlabeled basis vectors at `pq`; returns the first index.
    pub fn add_block(&mut self, pq: Bidegree, n: usize) -> usize {
        let first = self.dims.get(&pq).copied().unwrap_or(0);
        for _ in 0..n {
            self.add_basis(pq, None);
        }
        first
    }

    /// Add `x` to the coefficient of `∂ e_from` on basis vector `to` of `A^{p+1,q}`.
    pub fn add_del(&mut self, src: Bidegree, from: usize, to: usize, x: Scalar) {
        if !x.is_zero() {
            self.del.push((src, from, to, x));
        }
    }

    /// Add `x` to the coefficient of `∂̄ e_from` on basis vector `to` of `A^{p,q+1}`.
    pub fn add_delbar(&mut self, src: Bidegree, from: usize, to: usize, x: Scalar) {
        if !x.is_zero() {
            self.delbar.push((src, from, to, x));
        }
    }

    pub fn build(self) -> Result<Bicomplex> {
        let dim = |pq: Bidegree| self.dims.get(&pq).copied().unwrap_or(0);
        let assemble = |entries: &[(Bidegree, usize, usize, Scalar)], dp: i64, dq: i64| {
            let mut maps: BTreeMap<Bidegree, Matrix<Scalar>> = BTreeMap::new();
            for (src, from, to, x) in entries {
                let m = maps.entry(*src).or_insert_with(|| Matrix::zeros(dim(src.offset(dp, dq)), dim(*src)));
                let cur = m.get(*to, *from).add(x);
                m.set(*to, *from, cur);
            }
            maps
        };
        let del = assemble(&self.del, 1, 0);
        let delbar = assemble(&self.delbar, 0, 1);
        let labels = self.labeled.then(|| {
            self.labels
                .iter()
                .map(|(pq, names)| {
                    let filled = names
                        .iter()
                        .enumerate()
                        .map(|(i, n)| n.clone().unwrap_or_else(|| format!("e[{pq}]{i}")))
                        .collect();
                    (*pq, filled)
                })
                .collect()
        });
        Bicomplex::new(self.dims.clone(), del, delbar, labels)
    }
}
