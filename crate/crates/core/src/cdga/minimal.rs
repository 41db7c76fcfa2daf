//! Bounded j-minimal models `ψ: ℳ^j → A` and the ranks `r_j^k`.

use num_traits::Zero;

use super::algebra::{CdgaCohomology, FreeAlgebra};
use super::poly::Poly;
use super::CdgaPresentation;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, solve, Matrix, Subspace};
use crate::scalar::Q;

/// Limits on the tower construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelCaps {
    /// Highest degree in which the model and the target are computed.
    pub degree_cap: usize,
    /// Maximum number of kernel-killing rounds in any one degree.
    pub stage_cap: usize,
}

impl ModelCaps {
    pub fn for_presentation(p: &CdgaPresentation) -> Self {
        ModelCaps { degree_cap: p.dim, stage_cap: 32 }
    }
}

/// A j-minimal model with its map to the presented algebra.
#[derive(Clone, Debug)]
pub struct MinimalModel {
    pub j: usize,
    pub model: CdgaPresentation,
    /// `ψ` on the model's generators, as polynomials in the target's generators.
    pub images: Vec<Poly>,
    pub stabilized: bool,
    /// Whether the target was recognised as its own j-minimal model.
    pub shortcut: bool,
    /// Generators added by the tower (zero for the shortcut).
    pub added: usize,
}

struct Tower<'a> {
    target: &'a CdgaPresentation,
    a: FreeAlgebra,
    ha: CdgaCohomology,
    top: usize,
    names: Vec<String>,
    degrees: Vec<usize>,
    d: Vec<Poly>,
    images: Vec<Poly>,
}

impl<'a> Tower<'a> {
    fn new(target: &'a CdgaPresentation, caps: ModelCaps) -> Result<Self> {
        let top = caps.degree_cap + 1;
        let a = target.algebra(top)?;
        let ha = CdgaCohomology::new(&a, &target.d, caps.degree_cap)?;
        Ok(Tower { target, a, ha, top, names: vec![], degrees: vec![], d: vec![], images: vec![] })
    }

    fn model_algebra(&self) -> Result<FreeAlgebra> {
        FreeAlgebra::new(self.names.clone(), self.degrees.clone(), self.top, super::DEFAULT_PIECE_CAP)
    }

    /// `H^k(ψ)` as a matrix from `H^k(ℳ)` coordinates to `H^k(A)` coordinates,
    /// with the cohomology of the model in degree `k`.
    fn induced(&self, m: &FreeAlgebra, k: usize) -> Result<(CdgaCohomology, Matrix<Q>)> {
        let hm = CdgaCohomology::new(m, &self.d, k)?;
        let psi = m.map_matrix(&self.a, &self.images, k);
        let imgs: Vec<Vec<Q>> = hm.groups[k].reps().iter().map(|v| psi.apply(v)).collect();
        let mat = self.ha.groups[k].coords_matrix(&imgs);
        Ok((hm, mat))
    }

    fn push(&mut self, degree: usize, d: Poly, image: Poly) {
        let i = self.names.len();
        self.names.push(format!("v{degree}_{i}"));
        self.degrees.push(degree);
        self.d.push(d);
        self.images.push(image);
    }

    /// Make `H^i(ψ)` onto by adjoining closed generators.
    fn surject(&mut self, i: usize) -> Result<usize> {
        let m = self.model_algebra()?;
        let (_, mat) = self.induced(&m, i)?;
        let h = self.ha.groups[i].clone();
        let mut image = Subspace::from_spanning(h.dim(), (0..mat.cols()).map(|c| mat.column(c)).collect());
        let mut added = 0;
        for t in 0..h.dim() {
            let e: Vec<Q> = (0..h.dim()).map(|s| if s == t { Q::from_integer(1.into()) } else { Q::zero() }).collect();
            if !image.contains(&e).expect("same ambient") {
                image = image.sum(&Subspace::from_spanning(h.dim(), vec![e])).expect("same ambient");
                let rep = self.a.poly(&h.reps()[t], i);
                self.push(i, Poly::zero(), rep);
                added += 1;
            }
        }
        Ok(added)
    }

    /// Kill the kernel of `H^{i+1}(ψ)` with generators of degree `i`; one round.
    fn kill(&mut self, i: usize) -> Result<usize> {
        let m = self.model_algebra()?;
        let (hm, mat) = self.induced(&m, i + 1)?;
        let ker = kernel_basis(&mat);
        if ker.is_zero() {
            return Ok(0);
        }
        let reps = hm.groups[i + 1].reps();
        let psi = m.map_matrix(&self.a, &self.images, i + 1);
        let da = self.a.derivation_matrix(&self.target.d, i);
        let mut added = 0;
        for c in ker.basis() {
            let mut z = vec![Q::zero(); m.dim(i + 1)];
            for (coef, r) in c.iter().zip(reps) {
                for (zi, ri) in z.iter_mut().zip(r) {
                    *zi += coef * ri;
                }
            }
            let a = solve(&da, &psi.apply(&z))
                .ok_or_else(|| Error::Inconsistent("class in the kernel of H(ψ) has a non-exact image".into()))?;
            let (dz, img) = (m.poly(&z, i + 1), self.a.poly(&a, i));
            self.push(i, dz, img);
            added += 1;
        }
        Ok(added)
    }
}

/// The j-minimal model of `p`, built degree by degree up to `j` with the
/// given caps; returns `p` itself when it is minimal and generated in
/// degrees `≤ j`.
pub fn j_minimal_model(p: &CdgaPresentation, j: usize, caps: ModelCaps) -> Result<MinimalModel> {
    if p.is_minimal() && p.max_generator_degree() <= j {
        let images = (0..p.generator_count()).map(Poly::gen).collect();
        return Ok(MinimalModel { j, model: p.clone(), images, stabilized: true, shortcut: true, added: 0 });
    }
    build_tower(p, j, caps)
}

/// The tower construction without the shortcut.
pub(crate) fn build_tower(p: &CdgaPresentation, j: usize, caps: ModelCaps) -> Result<MinimalModel> {
    if caps.degree_cap < j + 1 {
        return Err(Error::InvalidInput(format!("degree cap {} is below j + 1 = {}", caps.degree_cap, j + 1)));
    }
    let mut t = Tower::new(p, caps)?;
    let mut added = 0;
    for i in 1..=j {
        added += t.surject(i)?;
        let mut rounds = 0;
        loop {
            let n = t.kill(i)?;
            if n == 0 {
                break;
            }
            added += n;
            rounds += 1;
            if rounds >= caps.stage_cap {
                return Err(Error::NotStabilized(format!(
                    "degree {i}: still killing classes after {rounds} rounds ({} generators so far)",
                    t.names.len()
                )));
            }
        }
    }
    let model = CdgaPresentation { dim: p.dim, names: t.names, degrees: t.degrees, d: t.d };
    model.validate().map_err(|e| Error::Inconsistent(format!("constructed model is not a cdga: {e}")))?;
    Ok(MinimalModel { j, model, images: t.images, stabilized: true, shortcut: false, added })
}

/// Whether the model map is an isomorphism on `H^{≤ j}` and injective on `H^{j+1}`.
pub fn verify_model(p: &CdgaPresentation, mm: &MinimalModel) -> Result<bool> {
    let top = mm.j + 2;
    let a = p.algebra(top)?;
    let m = mm.model.algebra(top)?;
    let ha = CdgaCohomology::new(&a, &p.d, mm.j + 1)?;
    let hm = CdgaCohomology::new(&m, &mm.model.d, mm.j + 1)?;
    for k in 0..=mm.j + 1 {
        let psi = m.map_matrix(&a, &mm.images, k);
        let imgs: Vec<Vec<Q>> = hm.groups[k].reps().iter().map(|v| psi.apply(v)).collect();
        let r = rank(&ha.groups[k].coords_matrix(&imgs));
        let ok = if k <= mm.j { r == hm.betti(k) && r == ha.betti(k) } else { r == hm.betti(k) };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r_j^k` for every `k` in `0..=2n`.
pub fn rank_profile(p: &CdgaPresentation, mm: &MinimalModel) -> Result<Vec<usize>> {
    let top = p.dim + 1;
    let a = p.algebra(top)?;
    let m = mm.model.algebra(top)?;
    let ha = CdgaCohomology::new(&a, &p.d, p.dim)?;
    let hm = CdgaCohomology::new(&m, &mm.model.d, p.dim)?;
    Ok((0..=p.dim)
        .map(|k| {
            let psi = m.map_matrix(&a, &mm.images, k);
            let imgs: Vec<Vec<Q>> = hm.groups[k].reps().iter().map(|v| psi.apply(v)).collect();
            rank(&ha.groups[k].coords_matrix(&imgs))
        })
        .collect())
}

/// `r_j^k(p)`.
pub fn r_jk(p: &CdgaPresentation, j: usize, k: usize) -> Result<usize> {
    let mm = j_minimal_model(p, j, ModelCaps::for_presentation(p))?;
    Ok(rank_profile(p, &mm)?.get(k).copied().unwrap_or(0))
}
