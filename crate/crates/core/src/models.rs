//! Model bicomplexes: Vaisman algebras, compact surfaces, and the blow-up,
//! projective bundle and product constructions.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{bd, direct_sum_all, shift, tensor, Bicomplex, Bidegree, Builder, MultiplicityTable, Orientation, ZigzagShape};
use crate::decomposition::realize;
use crate::error::{Error, Result};
use crate::functors::{CohomologyTable, Degree, Functor};
use crate::scalar::{Field, Scalar, Q};

/// Primitive basic harmonic dimensions `P_{p,q}` (`p + q ≤ n`) of a Vaisman
/// manifold of complex dimension `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VaismanInput {
    pub n: usize,
    pub prim: BTreeMap<Bidegree, usize>,
}

impl VaismanInput {
    pub fn new(n: usize, prim: impl IntoIterator<Item = (Bidegree, usize)>) -> Result<Self> {
        let v = VaismanInput { n, prim: prim.into_iter().filter(|&(_, d)| d > 0).collect() };
        v.validate()?;
        Ok(v)
    }

    /// Parse `"p,q:dim;p,q:dim;..."`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut prim = BTreeMap::new();
        for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (pq, d) = item
                .rsplit_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("expected `p,q:dim`, found `{item}`")))?;
            let d: usize = d.trim().parse().map_err(|_| Error::InvalidInput(format!("bad dimension in `{item}`")))?;
            *prim.entry(Bidegree::parse(pq)?).or_insert(0) += d;
        }
        Self::new(n, prim)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("Vaisman models need n ≥ 1".into()));
        }
        if self.p(0, 0) == 0 {
            return Err(Error::InvalidInput("P(0,0) must be at least 1".into()));
        }
        for (&pq, &d) in &self.prim {
            if pq.p < 0 || pq.q < 0 || pq.total() > self.n as i64 {
                return Err(Error::InvalidInput(format!("P({pq}) outside 0 ≤ p, q and p + q ≤ {}", self.n)));
            }
            if self.p(pq.q, pq.p) != d {
                return Err(Error::InvalidInput(format!("P is not symmetric at ({pq})")));
            }
        }
        Ok(())
    }

    /// `P_{p,q}`, zero outside the valid range.
    pub fn p(&self, p: i64, q: i64) -> usize {
        self.prim.get(&bd(p, q)).copied().unwrap_or(0)
    }
}

/// Exponents `(a, b, c)` of `θ^{1,0}^a θ^{0,1}^b ω₀^c`.
type Mono = (u8, u8, usize);

fn mono_label(x: &str, (a, b, c): Mono) -> String {
    let mut s = x.to_string();
    if a == 1 {
        s.push_str("·θ10");
    }
    if b == 1 {
        s.push_str("·θ01");
    }
    match c {
        0 => {}
        1 => s.push_str("·ω0"),
        _ => s.push_str(&format!("·ω0^{c}")),
    }
    s
}

/// The model `⊕ P_{p,q} ⊗ Λ⟨θ^{1,0}, θ^{0,1}, ω₀⟩ / (ω₀^{n−p−q+1})` with
/// `∂θ^{0,1} = −∂̄θ^{1,0} = (i/2) ω₀` and all other generators closed.
pub fn vaisman_model(input: &VaismanInput) -> Result<Bicomplex> {
    input.validate()?;
    let half_i = Scalar::new(<Q as Zero>::zero(), Q::new(1.into(), 2.into()));
    let mut b = Builder::new();
    for (&pq, &dim) in &input.prim {
        let top = input.n - pq.total() as usize;
        for g in 0..dim {
            let x = format!("x{}{}_{g}", pq.p, pq.q);
            let mut index: BTreeMap<Mono, (Bidegree, usize)> = BTreeMap::new();
            for c in 0..=top {
                for a in 0..2u8 {
                    for bb in 0..2u8 {
                        let m = (a, bb, c);
                        let at = pq.offset(a as i64 + c as i64, bb as i64 + c as i64);
                        index.insert(m, (at, b.add_basis(at, Some(mono_label(&x, m)))));
                    }
                }
            }
            // Passing a derivation over x contributes (−1)^{p+q}.
            let sign = Scalar::sign(pq.total());
            let coef = |s: i64| sign.mul(&half_i).mul(&Scalar::int(s));
            for (&(a, bb, c), &(at, i)) in &index {
                if c == top {
                    continue;
                }
                if bb == 1 {
                    // ∂(θ01 ω^c) = (i/2) ω^{c+1};  ∂(θ10 θ01 ω^c) = −(i/2) θ10 ω^{c+1}
                    let (to, s) = if a == 0 { ((0, 0, c + 1), 1) } else { ((1, 0, c + 1), -1) };
                    b.add_del(at, i, index[&to].1, coef(s));
                }
                if a == 1 {
                    // ∂̄(θ10 ω^c) = −(i/2) ω^{c+1};  ∂̄(θ10 θ01 ω^c) = −(i/2) θ01 ω^{c+1}
                    let to = if bb == 0 { (0, 0, c + 1) } else { (0, 1, c + 1) };
                    b.add_delbar(at, i, index[&to].1, coef(-1));
                }
            }
        }
    }
    b.build()
}

/// Closed-form Bott-Chern and Aeppli numbers up to the middle degree `n + 1`.
pub fn vaisman_expected_bc(input: &VaismanInput) -> Result<(CohomologyTable, CohomologyTable)> {
    input.validate()?;
    let n = input.n as i64;
    let pp = |p: i64, q: i64| input.p(p, q);
    let mut bc = BTreeMap::new();
    let mut ae = BTreeMap::new();
    for k in 0..=n + 1 {
        for p in 0..=k {
            let q = k - p;
            let (h_bc, h_a) = if k <= n {
                (pp(p, q) + pp(p - 1, q - 1), pp(p, q) + pp(p - 1, q) + pp(p, q - 1))
            } else {
                let v = pp(p - 1, q) + pp(p, q - 1) + pp(p - 1, q - 1);
                (v, v)
            };
            bc.insert(Degree::Bi(bd(p, q)), h_bc);
            ae.insert(Degree::Bi(bd(p, q)), h_a);
        }
    }
    Ok((
        CohomologyTable { functor: Functor::BottChern, dims: bc, bases: None },
        CohomologyTable { functor: Functor::Aeppli, dims: ae, bases: None },
    ))
}

/// Multiplicity table of a compact complex surface with the given invariants.
pub fn surface_table(b1: usize, h10: usize, h20: usize, b2: usize) -> Result<MultiplicityTable> {
    let eps = b1 % 2;
    if b1 != 2 * h10 + eps {
        return Err(Error::InvalidInput(format!("b1 = {b1} is not 2·h10 + ε with h10 = {h10}")));
    }
    if b2 < 2 * h20 {
        return Err(Error::InvalidInput(format!("b2 = {b2} < 2·h20 = {}", 2 * h20)));
    }
    let mut t = MultiplicityTable::new();
    let dot = |p, q| ZigzagShape::dot(bd(p, q));
    t.add(dot(0, 0), 1);
    t.add(dot(2, 2), 1);
    for (p, q) in [(1, 0), (0, 1), (2, 1), (1, 2)] {
        t.add(dot(p, q), h10);
    }
    t.add(dot(2, 0), h20);
    t.add(dot(0, 2), h20);
    t.add(dot(1, 1), b2 - 2 * h20);
    if eps == 1 {
        t.add(ZigzagShape::zigzag_from_orientation(bd(0, 1), 3, Orientation::In)?, 1);
        t.add(ZigzagShape::zigzag_from_orientation(bd(1, 1), 3, Orientation::Out)?, 1);
    }
    Ok(t)
}

/// A bicomplex E₁-isomorphic to the model of a compact complex surface.
pub fn surface_model(b1: usize, h10: usize, h20: usize, b2: usize) -> Result<Bicomplex> {
    realize(&surface_table(b1, h10, h20, b2)?)
}

/// `A ⊕ ⊕_{i=1}^{d−1} Z[i]`: blow-up along a centre of codimension `d`.
pub fn blowup_model(a: &Bicomplex, z: &Bicomplex, d: usize) -> Result<Bicomplex> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("blow-up codimension {d} < 2")));
    }
    let shifted: Vec<Bicomplex> = (1..d as i64).map(|i| shift(z, i)).collect();
    let mut parts = vec![a];
    parts.extend(shifted.iter());
    Ok(direct_sum_all(&parts))
}

/// `⊕_{i=0}^{r−1} A[i]`: projectivization of a rank-`r` bundle.
pub fn projective_bundle_model(a: &Bicomplex, r: usize) -> Result<Bicomplex> {
    if r < 1 {
        return Err(Error::InvalidInput("bundle rank must be at least 1".into()));
    }
    let shifted: Vec<Bicomplex> = (0..r as i64).map(|i| shift(a, i)).collect();
    Ok(direct_sum_all(&shifted.iter().collect::<Vec<_>>()))
}

/// `A ⊗ B`.
pub fn product_model(a: &Bicomplex, b: &Bicomplex) -> Bicomplex {
    tensor(a, b)
}
