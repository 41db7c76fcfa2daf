//! Dense exact linear algebra over any [`Field`].
//!
//! Forward elimination is fraction-free (Bareiss): on integral input every
//! intermediate entry stays integral, which keeps rational arithmetic cheap.
//! A final pass normalizes pivots to produce the reduced row echelon form,
//! which is the canonical representative used by [`Subspace`].

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Build from a list of rows; every row must have length `cols`.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<F>>) -> Self {
        assert_eq!(entries.len(), rows, "row count");
        let mut data = Vec::with_capacity(rows * cols);
        for r in entries {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r);
        }
        Matrix { rows, cols, data }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_cols(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// Columns selected by index, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let entries = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(idx.len(), self.cols, entries)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts");
        let entries = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Self::from_rows(self.rows, self.cols + other.cols, entries)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let ech = rref_rows(self.hstack(&Self::identity(n)).to_rows(), 2 * n);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let entries = ech.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Self::from_rows(n, n, entries))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form: the nonzero rows and their pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

/// Fraction-free forward elimination in place. Returns pivot columns; rows
/// `0..pivots.len()` are the nonzero echelon rows (not normalized).
fn bareiss_forward<F: Field>(a: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // Prefer a unit-like pivot (±1) to limit growth; otherwise any nonzero.
        let mut best = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            let x = &row[c];
            if x.is_zero() {
                continue;
            }
            if x.is_one() || x.neg().is_one() {
                best = Some(i);
                break;
            }
            if best.is_none() {
                best = Some(i);
            }
        }
        let Some(i) = best else { continue };
        a.swap(r, i);
        let piv = a[r][c].clone();
        let same_scale = piv == prev;
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                if !same_scale {
                    for x in row[c + 1..].iter_mut() {
                        if !x.is_zero() {
                            *x = x.mul(&piv).div(&prev);
                        }
                    }
                }
                continue;
            }
            row[c] = F::zero();
            for j in c + 1..cols {
                let x = &row[j];
                let y = &prow[j];
                let mut v = if x.is_zero() { F::zero() } else { x.mul(&piv) };
                if !y.is_zero() {
                    v = v.sub(&f.mul(y));
                }
                if (!same_scale || !prev.is_one()) && !v.is_zero() {
                    v = v.div(&prev);
                }
                row[j] = v;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form of the given rows (each of length `cols`).
pub fn rref_rows<F: Field>(mut a: Vec<Vec<F>>, cols: usize) -> Echelon<F> {
    let pivots = bareiss_forward(&mut a, cols);
    a.truncate(pivots.len());
    // Normalize pivots to one and clear above each pivot.
    for (k, &c) in pivots.iter().enumerate().rev() {
        let inv = a[k][c].inv();
        if !inv.is_one() {
            for x in a[k][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let (above, below) = a.split_at_mut(k);
        let prow = &below[0];
        for row in above.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&prow[j]));
                }
            }
        }
    }
    Echelon { rows: a, pivots }
}

/// Reduced row echelon form of a matrix.
pub fn rref<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    rref_rows(m.to_rows(), m.cols())
}

/// Exact rank.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    // Eliminate along the shorter side.
    if m.rows() <= m.cols() {
        bareiss_forward(&mut m.to_rows(), m.cols()).len()
    } else {
        let t = m.transpose();
        bareiss_forward(&mut t.to_rows(), t.cols()).len()
    }
}

/// Kernel of `m` as a canonical subspace of `F^{cols}`.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let n = m.cols();
    let ech = rref(m);
    let vectors = kernel_from_echelon(&ech, n);
    Subspace::from_spanning(n, vectors)
}

fn kernel_from_echelon<F: Field>(ech: &Echelon<F>, n: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; n];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (row, &c) in ech.rows.iter().zip(&ech.pivots) {
            if !row[free].is_zero() {
                v[c] = row[free].neg();
            }
        }
        out.push(v);
    }
    out
}

/// Column space of `m` as a canonical subspace of `F^{rows}`.
pub fn image_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let cols: Vec<Vec<F>> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::from_spanning(m.rows(), cols)
}

/// A particular solution of `m x = b`, if one exists.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length");
    let n = m.cols();
    let rows = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let ech = rref_rows(rows, n + 1);
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &c) in ech.rows.iter().zip(&ech.pivots) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// Indices of a maximal linearly independent subset of `vectors`, chosen
/// greedily in order.
pub fn greedy_independent<F: Field>(vectors: &[Vec<F>], n: usize) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        reduce_against(&mut w, &basis);
        if let Some(c) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[c].inv();
            for x in w.iter_mut() {
                *x = x.mul(&inv);
            }
            // Keep the basis fully reduced on pivot columns.
            for (_, b) in basis.iter_mut() {
                let f = b[c].clone();
                if !f.is_zero() {
                    for j in 0..n {
                        if !w[j].is_zero() {
                            b[j] = b[j].sub(&f.mul(&w[j]));
                        }
                    }
                }
            }
            basis.push((c, w));
            chosen.push(idx);
        }
    }
    chosen
}

fn reduce_against<F: Field>(w: &mut [F], basis: &[(usize, Vec<F>)]) {
    for (c, b) in basis {
        let f = w[*c].clone();
        if f.is_zero() {
            continue;
        }
        for (x, y) in w.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = x.sub(&f.mul(y));
            }
        }
    }
}

/// A linear subspace of `F^n`, stored as its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![F::zero(); ambient];
                    v[i] = F::one();
                    v
                })
                .collect(),
        )
    }

    /// Span of the coordinate vectors `e_i` for `i` in `idx`.
    pub fn coordinate(ambient: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = idx.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![F::zero(); ambient];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { ambient, basis, pivots: idx }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length");
        }
        let vectors: Vec<Vec<F>> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let ech = rref_rows(vectors, ambient);
        Subspace { ambient, basis: ech.rows, pivots: ech.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after reduction against the echelon basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (b, &c) in self.basis.iter().zip(&self.pivots) {
            let f = w[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(self.reduce(v).iter().all(F::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.dim() > other.dim() {
            return Ok(false);
        }
        Ok(self.basis.iter().all(|v| other.reduce(v).iter().all(F::is_zero)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::from_spanning(self.ambient, vs))
    }

    /// Intersection via the Zassenhaus stacked system
    /// `[[U, U], [V, 0]]`: rows whose left half vanishes span `U ∩ V`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        let n = self.ambient;
        if n != other.ambient {
            return Err(Error::AmbientMismatch(n, other.ambient));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        if self.dim() == n {
            return Ok(other.clone());
        }
        if other.dim() == n {
            return Ok(self.clone());
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(F::zero(), n));
            rows.push(r);
        }
        let ech = rref_rows(rows, 2 * n);
        let vs = ech
            .rows
            .into_iter()
            .zip(ech.pivots)
            .filter(|(_, c)| *c >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Self::from_spanning(n, vs))
    }

    /// `dim(other / self)`, requiring `self ⊆ other`.
    pub fn quotient_dim(&self, other: &Self) -> Result<usize> {
        if !self.is_subspace_of(other)? {
            return Err(Error::NotASubspace);
        }
        Ok(other.dim() - self.dim())
    }

    /// Vectors `a` with `a·w = 0` for all `w` in the subspace (bilinear pairing).
    pub fn annihilator(&self) -> Self {
        let m = Matrix::from_rows(self.dim(), self.ambient, self.basis.clone());
        kernel_basis(&m)
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient, "map source dimension");
        Self::from_spanning(m.rows(), self.basis.iter().map(|v| m.apply(v)).collect())
    }

    /// Preimage `{x : m x ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.rows(), self.ambient, "map target dimension");
        let ann = self.annihilator();
        if ann.is_zero() {
            return Self::full(m.cols());
        }
        let a = Matrix::from_rows(ann.dim(), self.ambient, ann.basis.clone());
        kernel_basis(&a.mul(m))
    }

    /// The basis as the columns of an `ambient × dim` matrix.
    pub fn as_columns(&self) -> Matrix<F> {
        Matrix::from_cols(self.ambient, &self.basis)
    }
}

/// Coordinates on a subquotient `N / D` with `D ⊆ N ⊆ F^n`.
///
/// A complement of `D` in `N` is fixed by greedy selection from the echelon
/// basis of `N`; [`Quotient::coords`] expresses any vector of `N` in that
/// complement, modulo `D`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    ambient: usize,
    den_dim: usize,
    reps: Vec<Vec<F>>,
    // For the stacked basis B = [D; reps], `solver[i][k]` is the coefficient
    // of `v[pivot_k]` in the i-th coordinate of v with respect to B.
    pivots: Vec<usize>,
    solver: Vec<Vec<F>>,
}

impl<F: Field> Quotient<F> {
    pub fn new(num: &Subspace<F>, den: &Subspace<F>) -> Result<Self> {
        if !den.is_subspace_of(num)? {
            return Err(Error::NotASubspace);
        }
        let n = num.ambient();
        let mut stacked: Vec<Vec<F>> = den.basis().to_vec();
        stacked.extend(num.basis().iter().cloned());
        let chosen = greedy_independent(&stacked, n);
        let den_dim = den.dim();
        debug_assert!(chosen[..den_dim].iter().enumerate().all(|(i, &c)| i == c));
        let reps: Vec<Vec<F>> = chosen[den_dim..].iter().map(|&i| stacked[i].clone()).collect();
        let mut basis = den.basis().to_vec();
        basis.extend(reps.iter().cloned());
        let r = basis.len();
        // Row-reduce [B | I] to get T with T B = R (reduced echelon).
        let aug: Vec<Vec<F>> = basis
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..r).map(|j| if i == j { F::one() } else { F::zero() }));
                row
            })
            .collect();
        let ech = rref_rows(aug, n + r);
        debug_assert_eq!(ech.pivots.len(), r);
        let pivots = ech.pivots.clone();
        // x_i = Σ_k T[k][i] v[pivot_k]; keep only the rep coordinates.
        let solver = (den_dim..r).map(|i| ech.rows.iter().map(|row| row[n + i].clone()).collect()).collect();
        Ok(Quotient { ambient: n, den_dim, reps, pivots, solver })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn den_dim(&self) -> usize {
        self.den_dim
    }

    /// Representatives of a basis of `N / D`.
    pub fn reps(&self) -> &[Vec<F>] {
        &self.reps
    }

    /// Coordinates of the class of `v ∈ N` in the representative basis.
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.solver
            .iter()
            .map(|coef| {
                let mut acc = F::zero();
                for (c, &p) in coef.iter().zip(&self.pivots) {
                    if !c.is_zero() && !v[p].is_zero() {
                        acc = acc.add(&c.mul(&v[p]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix (dim × vectors.len()) of coordinates of the given vectors.
    pub fn coords_matrix(&self, vectors: &[Vec<F>]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = vectors.iter().map(|v| self.coords(v)).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    /// The image of a subspace `S ⊆ N` in coordinates of `N / D`.
    pub fn image_of(&self, s: &Subspace<F>) -> Subspace<F> {
        Subspace::from_spanning(self.dim(), s.basis().iter().map(|v| self.coords(v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn s(x: &str) -> Scalar {
        Scalar::parse(x).unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<Scalar> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_rows(r, c, rows.iter().map(|row| row.iter().map(|x| s(x)).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Scalar>::identity(2)), 2);
        assert_eq!(rank(&Matrix::<Scalar>::zeros(3, 5)), 0);
        assert_eq!(rank(&m(&[&["1", "i"], &["i", "-1"]])), 1);
    }

    #[test]
    fn kernel_and_image_examples() {
        let id = Matrix::<Scalar>::identity(3);
        assert_eq!(kernel_basis(&id).dim(), 0);
        assert_eq!(image_basis(&id).dim(), 3);
        let z = Matrix::<Scalar>::zeros(2, 3);
        assert_eq!(kernel_basis(&z), Subspace::full(3));
        assert_eq!(image_basis(&z).dim(), 0);
        let k = kernel_basis(&m(&[&["1", "1"]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[s("1"), s("-1")]).unwrap());
    }

    #[test]
    fn subspace_examples() {
        let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>();
        let u = Subspace::from_spanning(3, vec![e(&[1, 0, 0]), e(&[0, 1, 0])]);
        let v = Subspace::from_spanning(3, vec![e(&[0, 1, 0]), e(&[0, 0, 1])]);
        assert_eq!(u.intersect(&v).unwrap().dim(), 1);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.quotient_dim(&u).unwrap(), 0);
        let l1 = Subspace::from_spanning(2, vec![e(&[1, 0])]);
        let l2 = Subspace::from_spanning(2, vec![e(&[1, 1])]);
        assert_eq!(l1.intersect(&l2).unwrap().dim(), 0);
        assert_eq!(l1.sum(&l2).unwrap().dim(), 2);
        assert_eq!(u.quotient_dim(&v), Err(Error::NotASubspace));
        assert_eq!(u.sum(&Subspace::zero(2)), Err(Error::AmbientMismatch(3, 2)));
    }

    #[test]
    fn quotient_coordinates() {
        let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>();
        let num = Subspace::from_spanning(3, vec![e(&[1, 0, 0]), e(&[0, 1, 1])]);
        let den = Subspace::from_spanning(3, vec![e(&[1, 1, 1])]);
        let q = Quotient::new(&num, &den).unwrap();
        assert_eq!(q.dim(), 1);
        // (1,0,0) and (0,-1,-1) are the same class mod (1,1,1).
        assert_eq!(q.coords(&e(&[1, 0, 0])), q.coords(&e(&[0, -1, -1])));
        assert!(q.coords(&e(&[2, 2, 2])).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&["1", "i"], &["2", "1"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&["1", "i"], &["i", "-1"]]).inverse().is_none());
        let x = solve(&a, &[s("1"), s("0")]).unwrap();
        assert_eq!(a.apply(&x), vec![s("1"), s("0")]);
        assert!(solve(&m(&[&["1", "1"], &["1", "1"]]), &[s("1"), s("0")]).is_none());
    }
}
