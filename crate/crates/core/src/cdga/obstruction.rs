//! The invariants `d_j^k`, the obstruction to j-controlled complex
//! structures and the comparison with a candidate bicomplex.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use super::algebra::CdgaCohomology;
use super::minimal::{j_minimal_model, rank_profile, ModelCaps};
use super::CdgaPresentation;
use crate::bicomplex::Bicomplex;
use crate::conditions::ell;
use crate::error::{Error, Result};
use crate::functors::betti;
use crate::linalg::{greedy_independent, rank, Matrix};
use crate::scalar::Q;

/// `dim ⟨H^{≤j}⟩ ∩ H^k` for `k = 0..=2n`.
pub fn generated_dims(p: &CdgaPresentation, j: usize) -> Result<Vec<usize>> {
    let n2 = p.dim;
    let a = p.algebra(n2 + 1)?;
    let h = CdgaCohomology::new(&a, &p.d, n2)?;
    // Cocycles spanning the generated part of each H^k.
    let mut span: Vec<Vec<Vec<Q>>> = vec![vec![vec![Q::from_integer(1.into())]]];
    let mut dims = vec![h.betti(0).min(1)];
    for k in 1..=n2 {
        let mut cands: Vec<Vec<Q>> = Vec::new();
        for i in 1..=j.min(k) {
            for x in h.groups[i].reps() {
                for y in &span[k - i] {
                    cands.push(a.mul_vec(x, i, y, k - i));
                }
            }
        }
        let coords: Vec<Vec<Q>> = cands.iter().map(|c| h.groups[k].coords(c)).collect();
        let keep = greedy_independent(&coords, h.betti(k));
        dims.push(keep.len());
        span.push(keep.into_iter().map(|i| cands[i].clone()).collect());
    }
    Ok(dims)
}

/// `d_j^k(p)`.
pub fn d_jk(p: &CdgaPresentation, j: usize, k: usize) -> Result<usize> {
    Ok(generated_dims(p, j)?.get(k).copied().unwrap_or(0))
}

/// Check `b_{2n} = 1` and that the cup pairing `H^k × H^{2n−k} → H^{2n}` is perfect.
fn check_poincare(p: &CdgaPresentation) -> Result<()> {
    let n2 = p.dim;
    let a = p.algebra(n2 + 1)?;
    let h = CdgaCohomology::new(&a, &p.d, n2)?;
    if h.betti(n2) != 1 {
        return Err(Error::NoPoincareDuality(format!("b_{n2} = {}", h.betti(n2))));
    }
    for k in 0..=n2 {
        let (x, y) = (&h.groups[k], &h.groups[n2 - k]);
        if x.dim() != y.dim() {
            return Err(Error::NoPoincareDuality(format!("b_{k} = {} but b_{} = {}", x.dim(), n2 - k, y.dim())));
        }
        let rows: Vec<Vec<Q>> = x
            .reps()
            .iter()
            .map(|u| y.reps().iter().map(|v| h.groups[n2].coords(&a.mul_vec(u, k, v, n2 - k))[0].clone()).collect())
            .collect();
        if rank(&Matrix::from_rows(x.dim(), y.dim(), rows)) != x.dim() {
            return Err(Error::NoPoincareDuality(format!("the pairing H^{k} × H^{} → H^{n2} is degenerate", n2 - k)));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `r_j^k > d_j^k` for some `k ∈ [2n−j, 2n]`: no j-controlled complex structure.
    Blocked,
    Inconclusive,
    /// `⟨H^{≤j}⟩ ∩ H^{j+1} ≠ 0`.
    HypothesisFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionRow {
    pub k: usize,
    pub r: usize,
    pub d: usize,
    pub slack: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub j: usize,
    pub dim: usize,
    pub cup_hypothesis: bool,
    /// One row for each `k ∈ (j, 2n]`.
    pub rows: Vec<ObstructionRow>,
    /// Degrees `k ∈ [2n−j, 2n]`, `k > j`, with positive slack.
    pub blocking: Vec<usize>,
    /// The largest blocking degree.
    pub witness: Option<usize>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    fn from_rows(j: usize, dim: usize, rows: Vec<ObstructionRow>) -> Self {
        let cup_hypothesis = rows.iter().find(|r| r.k == j + 1).is_none_or(|r| r.d == 0);
        let lo = dim.saturating_sub(j).max(j + 1);
        let blocking: Vec<usize> = rows.iter().filter(|r| r.k >= lo && r.slack > 0).map(|r| r.k).collect();
        let witness = blocking.last().copied();
        let verdict = match (cup_hypothesis, witness) {
            (false, _) => Verdict::HypothesisFailed,
            (true, Some(_)) => Verdict::Blocked,
            (true, None) => Verdict::Inconclusive,
        };
        ObstructionReport { j, dim, cup_hypothesis, rows, blocking, witness, verdict }
    }

    pub fn row(&self, k: usize) -> Option<&ObstructionRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn slack(&self, k: usize) -> Option<usize> {
        self.row(k).map(|r| r.slack)
    }

    /// The report of a connected sum of two manifolds of the same dimension:
    /// both invariants add in degrees below the top and take the maximum in
    /// the top degree.
    pub fn connected_sum(&self, other: &ObstructionReport) -> Result<ObstructionReport> {
        if self.j != other.j || self.dim != other.dim {
            return Err(Error::InvalidInput(format!(
                "connected sum needs equal j and dimension, got ({}, {}) and ({}, {})",
                self.j, self.dim, other.j, other.dim
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let (r, d) = if a.k == self.dim { (a.r.max(b.r), a.d.max(b.d)) } else { (a.r + b.r, a.d + b.d) };
                ObstructionRow { k: a.k, r, d, slack: r - d }
            })
            .collect();
        Ok(Self::from_rows(self.j, self.dim, rows))
    }

    /// One-line verdict, e.g. `blocked at k=6`.
    pub fn summary(&self) -> String {
        match self.verdict {
            Verdict::Blocked => format!("blocked at k={}", self.witness.expect("blocked has a witness")),
            Verdict::Inconclusive => "inconclusive".into(),
            Verdict::HypothesisFailed => format!("hypothesis failed: ⟨H^≤{}⟩ ∩ H^{} ≠ 0", self.j, self.j + 1),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["summary"] = Value::String(self.summary());
        v
    }
}

/// Evaluate the obstruction for `p` at level `j`.
pub fn obstruction(p: &CdgaPresentation, j: usize) -> Result<ObstructionReport> {
    if j == 0 {
        return Err(Error::InvalidInput("j must be at least 1".into()));
    }
    check_poincare(p)?;
    let mm = j_minimal_model(p, j, ModelCaps::for_presentation(p))?;
    let r = rank_profile(p, &mm)?;
    let d = generated_dims(p, j)?;
    let mut rows = Vec::new();
    for k in j + 1..=p.dim {
        if d[k] > r[k] {
            return Err(Error::Inconsistent(format!("d_{j}^{k} = {} exceeds r_{j}^{k} = {}", d[k], r[k])));
        }
        rows.push(ObstructionRow { k, r: r[k], d: d[k], slack: r[k] - d[k] });
    }
    Ok(ObstructionReport::from_rows(j, p.dim, rows))
}

/// The obstruction compared with the d^c-diagram numbers `ℓ_k` of a candidate bicomplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport {
    pub obstruction: ObstructionReport,
    pub ell: BTreeMap<i64, usize>,
    /// Degrees with `r_j^k − d_j^k > ℓ_k`.
    pub excluded: Vec<usize>,
    /// Whether the candidate has the Betti numbers of `p`.
    pub betti_match: bool,
}

impl CompatibilityReport {
    pub fn compatible(&self) -> bool {
        self.excluded.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["obstruction"] = self.obstruction.to_json();
        v["compatible"] = Value::Bool(self.compatible());
        v
    }
}

pub fn compatibility(p: &CdgaPresentation, j: usize, a: &Bicomplex) -> Result<CompatibilityReport> {
    let obstruction = obstruction(p, j)?;
    let ell = ell(a)?;
    let excluded =
        obstruction.rows.iter().filter(|r| r.slack > ell.get(&(r.k as i64)).copied().unwrap_or(0)).map(|r| r.k).collect();
    let hp = p.cohomology(p.dim)?;
    let b = betti(a);
    let betti_match = (0..=p.dim).all(|k| b.get(&(k as i64)).copied().unwrap_or(0) == hp.betti(k));
    Ok(CompatibilityReport { obstruction, ell, excluded, betti_match })
}

#[cfg(test)]
mod tests {
    use super::super::preset;
    use super::*;

    #[test]
    fn filiform_blocked() {
        let r = obstruction(&preset("filiform6").unwrap(), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Blocked);
        assert_eq!(r.witness, Some(6));
        assert_eq!(r.slack(6), Some(1));
        assert_eq!(r.summary(), "blocked at k=6");
        assert_eq!(d_jk(&preset("filiform6").unwrap(), 1, 6).unwrap(), 0);
    }

    #[test]
    fn iwasawa_hypothesis_fails() {
        let r = obstruction(&preset("iwasawa").unwrap(), 1).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisFailed);
        assert_eq!(r.slack(6), Some(1));
    }

    #[test]
    fn ex_k2() {
        for name in ["ex_k2_M", "ex_k2_M_variant"] {
            let p = preset(name).unwrap();
            assert_eq!(p.cohomology(2).unwrap().betti(2), 2);
            assert_eq!(d_jk(&p, 2, 4).unwrap(), 0);
            let r = obstruction(&p, 2).unwrap();
            assert!(r.cup_hypothesis);
            assert_eq!(r.row(4).unwrap().r, 2);
            assert_eq!(r.slack(4), Some(2));
        }
    }

    #[test]
    fn whole_ring_generated() {
        let p = preset("nil_m1").unwrap();
        let h = p.cohomology(6).unwrap();
        assert_eq!(generated_dims(&p, 6).unwrap(), h.bettis());
    }

    #[test]
    fn no_duality() {
        let p = CdgaPresentation::new(2, vec![("x".into(), 1), ("y".into(), 1), ("z".into(), 1)], &[]).unwrap();
        assert!(matches!(obstruction(&p, 1), Err(Error::NoPoincareDuality(_))));
    }

    #[test]
    fn connected_sum_moves_the_witness_below_the_top() {
        let parts: Vec<ObstructionReport> =
            ["ex_k2_M", "t2xs4", "cp3"].iter().map(|n| obstruction(&preset(n).unwrap(), 2).unwrap()).collect();
        let sum = parts[0].connected_sum(&parts[1].connected_sum(&parts[2]).unwrap()).unwrap();
        assert!(sum.cup_hypothesis);
        let r4 = sum.row(4).unwrap();
        assert_eq!((r4.r, r4.d, r4.slack), (3, 1, 2));
        assert_eq!(sum.slack(5), Some(2));
        let r6 = sum.row(6).unwrap();
        assert_eq!((r6.r, r6.d), (1, 1));
        assert_eq!(sum.blocking, vec![4, 5]);
        assert_eq!(sum.verdict, Verdict::Blocked);
        assert!(parts[0].connected_sum(&obstruction(&preset("filiform6").unwrap(), 1).unwrap()).is_err());
    }

    #[test]
    fn filiform_family() {
        for n2 in [4, 6, 8] {
            let r = obstruction(&preset(&format!("filiform{n2}")).unwrap(), 1).unwrap();
            assert_eq!(r.verdict, Verdict::Blocked, "{n2}");
            assert_eq!(r.witness, Some(n2));
        }
    }

    #[test]
    fn blocking_is_monotone_in_j() {
        let p = preset("filiform6").unwrap();
        let reports: Vec<ObstructionReport> = (1..=3).map(|j| obstruction(&p, j).unwrap()).collect();
        for (a, ra) in reports.iter().enumerate() {
            for rb in &reports[..a] {
                for k in &ra.blocking {
                    if rb.row(*k).is_some() && *k >= p.dim - rb.j {
                        assert!(rb.blocking.contains(k), "j={} k={k} not blocked at j={}", ra.j, rb.j);
                    }
                }
            }
        }
    }
}
