//! Free graded-commutative algebras truncated above a degree, derivations,
//! algebra maps and cohomology.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::poly::{Mono, Poly};
use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_basis, Matrix, Quotient};
use crate::par::map_degrees;
use crate::scalar::Q;

/// Largest graded piece accepted before reporting `InfiniteDimensional`.
pub const DEFAULT_PIECE_CAP: usize = 20_000;

/// `d` applied to a polynomial, given `d` on generators (no truncation).
pub fn derive(p: &Poly, dgen: &[Poly], degrees: &[usize]) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        out = out.add(&derive_mono(m, dgen, degrees).scale(c));
    }
    out
}

fn derive_mono(m: &Mono, dgen: &[Poly], degrees: &[usize]) -> Poly {
    let exps = m.exponents();
    let mut out = Poly::zero();
    let mut prefix_degree = 0usize;
    for (i, &a) in exps.iter().enumerate() {
        if a > 0 && !dgen[i].is_zero() {
            let mut pre = exps[..i].to_vec();
            pre.push(a - 1);
            let prefix = Poly::mono(Mono::from_exponents(pre));
            let mut suf = vec![0; i + 1];
            suf.extend_from_slice(&exps[i + 1..]);
            let suffix = Poly::mono(Mono::from_exponents(suf));
            // d(x^a) = a x^{a−1} dx for even x; the sign comes from passing d over the prefix.
            let mut c = Q::from_integer((a as i64).into());
            if prefix_degree % 2 == 1 {
                c = -c;
            }
            let term = prefix.mul(&dgen[i], degrees).mul(&suffix, degrees).scale(&c);
            out = out.add(&term);
        }
        prefix_degree += a as usize * degrees[i];
    }
    out
}

/// The free graded-commutative algebra on the given generators, with every
/// piece above `top` set to zero.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
    pub top: usize,
    basis: Vec<Vec<Mono>>,
    index: Vec<HashMap<Mono, usize>>,
}

impl FreeAlgebra {
    pub fn new(names: Vec<String>, degrees: Vec<usize>, top: usize, piece_cap: usize) -> Result<Self> {
        let mut basis: Vec<Vec<Mono>> = vec![Vec::new(); top + 1];
        let mut exps = vec![0u32; degrees.len()];
        fn walk(
            i: usize,
            deg: usize,
            degrees: &[usize],
            top: usize,
            cap: usize,
            exps: &mut Vec<u32>,
            out: &mut Vec<Vec<Mono>>,
        ) -> Result<()> {
            if i == degrees.len() {
                out[deg].push(Mono::from_exponents(exps.clone()));
                if out[deg].len() > cap {
                    return Err(Error::InfiniteDimensional { degree: deg, dim: out[deg].len(), cap });
                }
                return Ok(());
            }
            let max_e = if degrees[i] % 2 == 1 { 1 } else { u32::MAX };
            let mut e = 0u32;
            while e <= max_e && deg + e as usize * degrees[i] <= top {
                exps[i] = e;
                walk(i + 1, deg + e as usize * degrees[i], degrees, top, cap, exps, out)?;
                e += 1;
            }
            exps[i] = 0;
            Ok(())
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidInput("generators must have positive degree".into()));
        }
        walk(0, 0, &degrees, top, piece_cap, &mut exps, &mut basis)?;
        for b in &mut basis {
            b.sort();
        }
        let index = basis.iter().map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()).collect();
        Ok(FreeAlgebra { names, degrees, top, basis, index })
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn basis(&self, k: usize) -> &[Mono] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    /// Coordinates of the degree-`k` part of `p`.
    pub fn vector(&self, p: &Poly, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim(k)];
        if k <= self.top {
            for (m, c) in p.terms() {
                if let Some(&i) = self.index[k].get(m) {
                    v[i] += c;
                }
            }
        }
        v
    }

    pub fn poly(&self, v: &[Q], k: usize) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in self.basis(k).iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn mul_vec(&self, a: &[Q], ka: usize, b: &[Q], kb: usize) -> Vec<Q> {
        let p = self.poly(a, ka).mul(&self.poly(b, kb), &self.degrees);
        self.vector(&p, ka + kb)
    }

    /// Matrix of the derivation with the given values on generators, `A^k → A^{k+1}`.
    pub fn derivation_matrix(&self, dgen: &[Poly], k: usize) -> Matrix<Q> {
        let cols: Vec<Vec<Q>> =
            self.basis(k).iter().map(|m| self.vector(&derive_mono(m, dgen, &self.degrees), k + 1)).collect();
        Matrix::from_cols(self.dim(k + 1), &cols)
    }

    /// Image of a monomial under the algebra map sending generator `i` to `images[i]`.
    pub fn map_mono(&self, m: &Mono, images: &[Poly], target_degrees: &[usize]) -> Poly {
        let mut out = Poly::constant(Q::one());
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = out.mul(&images[i], target_degrees);
            }
        }
        out
    }

    /// Matrix of an algebra map `self^k → target^k`.
    pub fn map_matrix(&self, target: &FreeAlgebra, images: &[Poly], k: usize) -> Matrix<Q> {
        let cols: Vec<Vec<Q>> =
            self.basis(k).iter().map(|m| target.vector(&self.map_mono(m, images, &target.degrees), k)).collect();
        Matrix::from_cols(target.dim(k), &cols)
    }
}

/// Cohomology of a truncated free cdga in degrees `0..=max_deg`.
#[derive(Clone, Debug)]
pub struct CdgaCohomology {
    pub groups: Vec<Quotient<Q>>,
}

impl CdgaCohomology {
    /// Requires `alg.top ≥ max_deg + 1` so that cocycles are computed exactly.
    pub fn new(alg: &FreeAlgebra, dgen: &[Poly], max_deg: usize) -> Result<Self> {
        if alg.top < max_deg + 1 {
            return Err(Error::InvalidInput(format!("cohomology to degree {max_deg} needs the algebra up to {}", max_deg + 1)));
        }
        let groups = map_degrees(0..=max_deg as i64, |k| {
            let k = k as usize;
            let z = kernel_basis(&alg.derivation_matrix(dgen, k));
            let b = if k == 0 {
                crate::linalg::Subspace::zero(alg.dim(0))
            } else {
                image_basis(&alg.derivation_matrix(dgen, k - 1))
            };
            Quotient::new(&z, &b)
        });
        let groups = groups.into_iter().collect::<Result<Vec<_>>>().map_err(|_| Error::Inconsistent("d² ≠ 0".into()))?;
        Ok(CdgaCohomology { groups })
    }

    pub fn betti(&self, k: usize) -> usize {
        self.groups.get(k).map_or(0, Quotient::dim)
    }

    pub fn bettis(&self) -> Vec<usize> {
        self.groups.iter().map(Quotient::dim).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.groups.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_and_sphere() -> FreeAlgebra {
        FreeAlgebra::new(vec!["x".into(), "y".into()], vec![1, 2], 7, DEFAULT_PIECE_CAP).unwrap()
    }

    #[test]
    fn dims() {
        let a = circle_and_sphere();
        assert_eq!((0..=7).map(|k| a.dim(k)).collect::<Vec<_>>(), vec![1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(matches!(
            FreeAlgebra::new(vec!["a".into(), "b".into()], vec![2, 2], 40, 5),
            Err(Error::InfiniteDimensional { .. })
        ));
    }

    #[test]
    fn even_sphere() {
        // Λ(x₂, y₃) with dy = x²: the 2-sphere.
        let a = FreeAlgebra::new(vec!["x".into(), "y".into()], vec![2, 3], 9, DEFAULT_PIECE_CAP).unwrap();
        let x = Poly::gen(0);
        let dgen = vec![Poly::zero(), x.mul(&x, &a.degrees)];
        let h = CdgaCohomology::new(&a, &dgen, 8).unwrap();
        assert_eq!(h.bettis(), vec![1, 0, 1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn leibniz_sign() {
        // Λ(a, b, c) in degree 1 with dc = ab: d(bc) = −b·ab = 0, d(ac) = −a·ab = 0, d(c) = ab.
        let deg = vec![1, 1, 1];
        let dgen = vec![Poly::zero(), Poly::zero(), Poly::gen(0).mul(&Poly::gen(1), &deg)];
        let ca = Poly::gen(2).mul(&Poly::gen(0), &deg);
        assert!(derive(&ca, &dgen, &deg).is_zero());
        let x = Poly::gen(2);
        assert_eq!(derive(&x, &dgen, &deg), dgen[2]);
    }
}
