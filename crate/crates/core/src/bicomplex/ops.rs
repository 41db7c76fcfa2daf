//! Algebraic constructions on bicomplexes.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Bicomplex, Bidegree, Builder};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Direct sum `A ⊕ B`; bases are concatenated (A first) at every bidegree.
pub fn direct_sum(a: &Bicomplex, b: &Bicomplex) -> Bicomplex {
    direct_sum_all(&[a, b])
}

/// Direct sum of any number of bicomplexes.
pub fn direct_sum_all(parts: &[&Bicomplex]) -> Bicomplex {
    let mut spaces: BTreeMap<Bidegree, usize> = BTreeMap::new();
    for a in parts {
        for (&pq, &d) in a.spaces() {
            *spaces.entry(pq).or_insert(0) += d;
        }
    }
    // Offsets of each part inside every bidegree.
    let mut offsets: Vec<BTreeMap<Bidegree, usize>> = Vec::with_capacity(parts.len());
    let mut running: BTreeMap<Bidegree, usize> = BTreeMap::new();
    for a in parts {
        let mut off = BTreeMap::new();
        for (&pq, &d) in a.spaces() {
            let r = running.entry(pq).or_insert(0);
            off.insert(pq, *r);
            *r += d;
        }
        offsets.push(off);
    }
    let dim = |pq: Bidegree| spaces.get(&pq).copied().unwrap_or(0);
    let mut del: BTreeMap<Bidegree, Matrix<Scalar>> = BTreeMap::new();
    let mut delbar: BTreeMap<Bidegree, Matrix<Scalar>> = BTreeMap::new();
    for (part, off) in parts.iter().zip(&offsets) {
        for (maps, out, dp, dq) in [(part.del_maps(), &mut del, 1, 0), (part.delbar_maps(), &mut delbar, 0, 1)] {
            for (&pq, m) in maps {
                let tgt = pq.offset(dp, dq);
                let big = out.entry(pq).or_insert_with(|| Matrix::zeros(dim(tgt), dim(pq)));
                let (r0, c0) = (off[&tgt], off[&pq]);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let x = m.get(i, j);
                        if !x.is_zero() {
                            big.set(r0 + i, c0 + j, x.clone());
                        }
                    }
                }
            }
        }
    }
    let labels = if parts.iter().any(|a| a.labels().is_some()) {
        let mut l: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
        for a in parts {
            for &pq in a.spaces().keys() {
                l.entry(pq).or_default().extend(a.labels_at(pq));
            }
        }
        Some(l)
    } else {
        None
    };
    Bicomplex::new(spaces, del, delbar, labels).expect("direct sum of bicomplexes is a bicomplex")
}

/// Translate by `(i, i)`.
pub fn shift(a: &Bicomplex, i: i64) -> Bicomplex {
    let mv = |m: &BTreeMap<Bidegree, Matrix<Scalar>>| m.iter().map(|(pq, x)| (pq.offset(i, i), x.clone())).collect();
    let spaces = a.spaces().iter().map(|(pq, d)| (pq.offset(i, i), *d)).collect();
    let labels = a.labels().map(|l| l.iter().map(|(pq, v)| (pq.offset(i, i), v.clone())).collect());
    Bicomplex::new(spaces, mv(a.del_maps()), mv(a.delbar_maps()), labels).expect("shift of a bicomplex is a bicomplex")
}

/// Tensor product with the Koszul sign rule
/// `∂(a⊗b) = ∂a⊗b + (−1)^{|a|} a⊗∂b` (and likewise for `∂̄`).
pub fn tensor(a: &Bicomplex, b: &Bicomplex) -> Bicomplex {
    let mut builder = Builder::new();
    // index of (pa, i, pb, j) inside its total bidegree
    let mut index: BTreeMap<(Bidegree, usize, Bidegree, usize), usize> = BTreeMap::new();
    for (&pa, &da) in a.spaces() {
        for (&pb, &db) in b.spaces() {
            let pq = Bidegree::new(pa.p + pb.p, pa.q + pb.q);
            for i in 0..da {
                for j in 0..db {
                    let k = builder.add_basis(pq, None);
                    index.insert((pa, i, pb, j), k);
                }
            }
        }
    }
    for (&pa, &da) in a.spaces() {
        let sign_a = Scalar::sign(pa.total());
        for (&pb, &db) in b.spaces() {
            let pq = Bidegree::new(pa.p + pb.p, pa.q + pb.q);
            for (which, dp, dq) in [(0, 1, 0), (1, 0, 1)] {
                let ma = if which == 0 { a.del(pa) } else { a.delbar(pa) };
                let mb = if which == 0 { b.del(pb) } else { b.delbar(pb) };
                let ta = pa.offset(dp, dq);
                let tb = pb.offset(dp, dq);
                for i in 0..da {
                    for j in 0..db {
                        let src = index[&(pa, i, pb, j)];
                        for r in 0..ma.rows() {
                            let x = ma.get(r, i);
                            if !x.is_zero() {
                                let tgt = index[&(ta, r, pb, j)];
                                push(&mut builder, which, pq, src, tgt, x.clone());
                            }
                        }
                        for r in 0..mb.rows() {
                            let x = mb.get(r, j);
                            if !x.is_zero() {
                                let tgt = index[&(pa, i, tb, r)];
                                push(&mut builder, which, pq, src, tgt, x.mul(&sign_a));
                            }
                        }
                    }
                }
            }
        }
    }
    builder.build().expect("tensor product of bicomplexes is a bicomplex")
}

fn push(b: &mut Builder, which: u8, pq: Bidegree, src: usize, tgt: usize, x: Scalar) {
    if which == 0 {
        b.add_del(pq, src, tgt, x);
    } else {
        b.add_delbar(pq, src, tgt, x);
    }
}

/// The formal dual `(DA)^{p,q} = (A^{n−p,n−q})^∨` with differential
/// `φ ↦ (−1)^{|φ|−1} φ∘d`, split into its `∂` and `∂̄` components.
pub fn dual(a: &Bicomplex, n: i64) -> Bicomplex {
    let refl = |pq: Bidegree| Bidegree::new(n - pq.p, n - pq.q);
    let spaces: BTreeMap<Bidegree, usize> = a.spaces().iter().map(|(pq, d)| (refl(*pq), *d)).collect();
    let mut del = BTreeMap::new();
    let mut delbar = BTreeMap::new();
    for &pq in spaces.keys() {
        let sign = Scalar::sign(pq.total() - 1);
        // ∂_D on (p,q) is the transpose of ∂_A: A^{n−p−1,n−q} → A^{n−p,n−q}.
        let src_del = refl(pq).offset(-1, 0);
        if a.dim(src_del) > 0 {
            del.insert(pq, a.del(src_del).transpose().scale(&sign));
        }
        let src_delbar = refl(pq).offset(0, -1);
        if a.dim(src_delbar) > 0 {
            delbar.insert(pq, a.delbar(src_delbar).transpose().scale(&sign));
        }
    }
    let labels = a
        .labels()
        .map(|l| l.iter().map(|(pq, v)| (refl(*pq), v.iter().map(|s| format!("{s}^∨")).collect())).collect());
    Bicomplex::new(spaces, del, delbar, labels).expect("dual of a bicomplex is a bicomplex")
}

/// Random unimodular change of basis of size `n` and its inverse, built from
/// elementary row operations with small Gaussian-integer coefficients.
fn random_gl(n: usize, rng: &mut ChaCha8Rng) -> (Matrix<Scalar>, Matrix<Scalar>) {
    let mut g = Matrix::<Scalar>::identity(n);
    let mut ginv = Matrix::<Scalar>::identity(n);
    if n < 2 {
        return (g, ginv);
    }
    let coeffs = [Scalar::int(1), Scalar::int(-1), Scalar::int(2), Scalar::int(-2), Scalar::i(), Scalar::i().neg()];
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = &coeffs[rng.gen_range(0..coeffs.len())];
        // g ← (I + c e_ij) g : row_i += c row_j
        for col in 0..n {
            let y = g.get(j, col).clone();
            if !y.is_zero() {
                let v = g.get(i, col).add(&c.mul(&y));
                g.set(i, col, v);
            }
        }
        // ginv ← ginv (I − c e_ij) : col_j −= c col_i
        for row in 0..n {
            let y = ginv.get(row, i).clone();
            if !y.is_zero() {
                let v = ginv.get(row, j).sub(&c.mul(&y));
                ginv.set(row, j, v);
            }
        }
    }
    (g, ginv)
}

/// Conjugate all differentials by a seeded invertible bidegree-preserving
/// change of basis. One-dimensional spaces are left untouched.
pub fn scramble(a: &Bicomplex, seed: u64) -> Bicomplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g: BTreeMap<Bidegree, (Matrix<Scalar>, Matrix<Scalar>)> = BTreeMap::new();
    for (&pq, &d) in a.spaces() {
        g.insert(pq, random_gl(d, &mut rng));
    }
    let conj = |maps: &BTreeMap<Bidegree, Matrix<Scalar>>, dp: i64, dq: i64| {
        maps.iter()
            .map(|(pq, m)| {
                let tgt = &g[&pq.offset(dp, dq)].0;
                let src_inv = &g[pq].1;
                (*pq, tgt.mul(m).mul(src_inv))
            })
            .collect()
    };
    let del = conj(a.del_maps(), 1, 0);
    let delbar = conj(a.delbar_maps(), 0, 1);
    Bicomplex::new(a.spaces().clone(), del, delbar, None).expect("conjugate of a bicomplex is a bicomplex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::{bd, make_dot, make_square, make_zigzag, Arrow, ZigzagShape};

    #[test]
    fn random_gl_is_inverse_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..6 {
            let (g, gi) = random_gl(n, &mut rng);
            assert_eq!(g.mul(&gi), Matrix::identity(n));
        }
    }

    #[test]
    fn scramble_dot_and_determinism() {
        let d = make_dot(bd(1, 2));
        assert_eq!(scramble(&d, 99), d);
        let z = direct_sum(&make_square(bd(0, 0)), &make_zigzag(&ZigzagShape::zigzag(bd(0, 0), 3, Arrow::Vertical).unwrap()).unwrap());
        assert_eq!(scramble(&z, 5), scramble(&z, 5));
    }

    #[test]
    fn tensor_dimensions() {
        let a = make_square(bd(0, 0));
        let b = make_zigzag(&ZigzagShape::zigzag(bd(0, 0), 3, Arrow::Horizontal).unwrap()).unwrap();
        let t = tensor(&a, &b);
        assert_eq!(t.total_dim(), 12);
        for (&pq, &d) in t.spaces() {
            let mut expect = 0;
            for (&ra, &da) in a.spaces() {
                expect += da * b.dim(Bidegree::new(pq.p - ra.p, pq.q - ra.q));
            }
            assert_eq!(d, expect);
        }
    }

    #[test]
    fn shift_and_dual_validate() {
        let b = make_zigzag(&ZigzagShape::zigzag(bd(0, 0), 5, Arrow::Vertical).unwrap()).unwrap();
        let s = shift(&b, 2);
        assert_eq!(s.total_dim(), 5);
        // The double dual carries d negated, which is isomorphic to the original.
        let dd = dual(&dual(&b, 3), 3);
        assert_eq!(dd.spaces(), b.spaces());
        for (pq, m) in b.del_maps() {
            assert_eq!(dd.del(*pq), m.scale(&Scalar::int(-1)));
        }
    }
}
