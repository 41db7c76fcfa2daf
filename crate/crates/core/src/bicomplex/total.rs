use std::borrow::Cow;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Bicomplex, Bidegree};
use crate::linalg::{image_basis, kernel_basis, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// A bidegree summand inside a total-degree space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub pq: Bidegree,
    pub offset: usize,
    pub dim: usize,
}

/// Basic subspaces of `A^k` that most functors are assembled from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basic {
    KerD,
    ImD,
    KerDc,
    ImDc,
    KerDdc,
    ImDdc,
}

const BASIC_COUNT: usize = 6;

/// The total complex of a bicomplex: `A^k = ⊕_{p+q=k} A^{p,q}` with the
/// summands ordered by increasing `p`, together with the matrices of
/// `∂, ∂̄, d, d^c: A^k → A^{k+1}` and cached kernels/images.
pub struct Total {
    range: Option<(i64, i64)>,
    blocks: BTreeMap<i64, Vec<Block>>,
    dims: BTreeMap<i64, usize>,
    del: BTreeMap<i64, Matrix<Scalar>>,
    delbar: BTreeMap<i64, Matrix<Scalar>>,
    d: BTreeMap<i64, Matrix<Scalar>>,
    dc: BTreeMap<i64, Matrix<Scalar>>,
    cache: BTreeMap<i64, [OnceLock<Subspace<Scalar>>; BASIC_COUNT]>,
}

impl Total {
    pub fn new(a: &Bicomplex) -> Self {
        let range = a.degree_range();
        let mut blocks: BTreeMap<i64, Vec<Block>> = BTreeMap::new();
        let mut dims = BTreeMap::new();
        for (&pq, &dim) in a.spaces() {
            blocks.entry(pq.total()).or_default().push(Block { pq, offset: 0, dim });
        }
        for (k, bs) in blocks.iter_mut() {
            bs.sort_by_key(|b| b.pq.p);
            let mut off = 0;
            for b in bs.iter_mut() {
                b.offset = off;
                off += b.dim;
            }
            dims.insert(*k, off);
        }
        let mut t = Total {
            range,
            blocks,
            dims,
            del: BTreeMap::new(),
            delbar: BTreeMap::new(),
            d: BTreeMap::new(),
            dc: BTreeMap::new(),
            cache: BTreeMap::new(),
        };
        if let Some((lo, hi)) = range {
            for k in lo - 1..=hi {
                let mut del = Matrix::zeros(t.dim(k + 1), t.dim(k));
                let mut delbar = Matrix::zeros(t.dim(k + 1), t.dim(k));
                for b in t.blocks(k) {
                    if let Some(tb) = t.block_at(k + 1, b.pq.offset(1, 0)) {
                        place(&mut del, &a.del(b.pq), tb.offset, b.offset);
                    }
                    if let Some(tb) = t.block_at(k + 1, b.pq.offset(0, 1)) {
                        place(&mut delbar, &a.delbar(b.pq), tb.offset, b.offset);
                    }
                }
                let d = del.add(&delbar);
                let dc = delbar.sub(&del).scale(&Scalar::i());
                t.del.insert(k, del);
                t.delbar.insert(k, delbar);
                t.d.insert(k, d);
                t.dc.insert(k, dc);
            }
            for k in lo - 2..=hi + 2 {
                t.cache.insert(k, Default::default());
            }
        }
        t
    }

    /// Total degrees carrying nonzero spaces.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        match self.range {
            Some((lo, hi)) => lo..=hi,
            #[allow(clippy::reversed_empty_ranges)]
            None => 1..=0,
        }
    }

    pub fn range(&self) -> Option<(i64, i64)> {
        self.range
    }

    pub fn dim(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn blocks(&self, k: i64) -> &[Block] {
        self.blocks.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn block_at(&self, k: i64, pq: Bidegree) -> Option<Block> {
        self.blocks(k).iter().copied().find(|b| b.pq == pq)
    }

    /// `p` of each basis vector of `A^k`.
    pub fn p_levels(&self, k: i64) -> Vec<i64> {
        self.blocks(k).iter().flat_map(|b| std::iter::repeat_n(b.pq.p, b.dim)).collect()
    }

    /// `q` of each basis vector of `A^k`.
    pub fn q_levels(&self, k: i64) -> Vec<i64> {
        self.blocks(k).iter().flat_map(|b| std::iter::repeat_n(b.pq.q, b.dim)).collect()
    }

    fn get<'a>(&self, map: &'a BTreeMap<i64, Matrix<Scalar>>, k: i64) -> Cow<'a, Matrix<Scalar>> {
        match map.get(&k) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(Matrix::zeros(self.dim(k + 1), self.dim(k))),
        }
    }

    /// `∂: A^k → A^{k+1}`.
    pub fn del(&self, k: i64) -> Cow<'_, Matrix<Scalar>> {
        self.get(&self.del, k)
    }

    /// `∂̄: A^k → A^{k+1}`.
    pub fn delbar(&self, k: i64) -> Cow<'_, Matrix<Scalar>> {
        self.get(&self.delbar, k)
    }

    /// `d = ∂ + ∂̄: A^k → A^{k+1}`.
    pub fn d(&self, k: i64) -> Cow<'_, Matrix<Scalar>> {
        self.get(&self.d, k)
    }

    /// `d^c = i(∂̄ − ∂): A^k → A^{k+1}`.
    pub fn dc(&self, k: i64) -> Cow<'_, Matrix<Scalar>> {
        self.get(&self.dc, k)
    }

    /// `d d^c: A^k → A^{k+2}`.
    pub fn ddc(&self, k: i64) -> Matrix<Scalar> {
        self.d(k + 1).mul(&self.dc(k))
    }

    /// Apply `𝕀 = i^{p−q}` to a vector of `A^k`.
    pub fn apply_i(&self, k: i64, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for b in self.blocks(k) {
            let f = Scalar::i_pow(b.pq.p - b.pq.q);
            for x in &mut out[b.offset..b.offset + b.dim] {
                *x = x.mul(&f);
            }
        }
        out
    }

    /// Cached basic subspace of `A^k`.
    pub fn basic(&self, which: Basic, k: i64) -> Subspace<Scalar> {
        let compute = || match which {
            Basic::KerD => kernel_basis(&self.d(k)),
            Basic::ImD => image_basis(&self.d(k - 1)),
            Basic::KerDc => kernel_basis(&self.dc(k)),
            Basic::ImDc => image_basis(&self.dc(k - 1)),
            Basic::KerDdc => kernel_basis(&self.ddc(k)),
            Basic::ImDdc => image_basis(&self.ddc(k - 2)),
        };
        match self.cache.get(&k) {
            Some(slots) => slots[which as usize].get_or_init(compute).clone(),
            None => compute(),
        }
    }

    /// The coordinate subspace `F^p A^k` (components of holomorphic degree ≥ p).
    pub fn column_filtration(&self, k: i64, p: i64) -> Subspace<Scalar> {
        let lv = self.p_levels(k);
        Subspace::coordinate(lv.len(), (0..lv.len()).filter(|&i| lv[i] >= p))
    }

    /// The coordinate subspace `F̄^q A^k`.
    pub fn row_filtration(&self, k: i64, q: i64) -> Subspace<Scalar> {
        let lv = self.q_levels(k);
        Subspace::coordinate(lv.len(), (0..lv.len()).filter(|&i| lv[i] >= q))
    }
}

fn place(dst: &mut Matrix<Scalar>, src: &Matrix<Scalar>, row0: usize, col0: usize) {
    for i in 0..src.rows() {
        for j in 0..src.cols() {
            let x = src.get(i, j);
            if !x.is_zero() {
                dst.set(row0 + i, col0 + j, x.clone());
            }
        }
    }
}
