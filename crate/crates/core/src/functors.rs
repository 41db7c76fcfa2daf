//! Cohomological functors of a bicomplex, the Hodge filtrations on de Rham
//! cohomology, spectral-sequence pages, the purity defect and the (∗)
//! predicate.
//!
//! Everything here is computed from sub/quotient formulas on the complex
//! itself, never from a decomposition into indecomposables.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::bicomplex::{Basic, Bicomplex, Bidegree, Total};
use crate::error::{Error, Result};
use crate::linalg::{image_basis, kernel_basis, Quotient, Subspace};
use crate::scalar::Scalar;

type Sub = Subspace<Scalar>;

/// The cohomological functors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Functor {
    /// `Ker d / Im d`.
    #[serde(rename = "deRham")]
    DeRham,
    /// `Ker ∂̄ / Im ∂̄`, bigraded.
    #[serde(rename = "dolbeault")]
    Dolbeault,
    /// `Ker ∂ / Im ∂`, bigraded.
    #[serde(rename = "conj_dolbeault")]
    ConjDolbeault,
    /// `(Ker ∂ ∩ Ker ∂̄) / Im ∂∂̄`, bigraded.
    #[serde(rename = "bott_chern")]
    BottChern,
    /// `Ker ∂∂̄ / (Im ∂ + Im ∂̄)`, bigraded.
    #[serde(rename = "aeppli")]
    Aeppli,
    /// `(Ker d ∩ Ker d^c) / d(Ker d^c)`.
    #[serde(rename = "ker_dc")]
    KerDc,
    /// `d⁻¹(Im d^c) / (Im d + Im d^c)`.
    #[serde(rename = "coim_dc")]
    CoimDc,
    /// `d(Ker d^c) / Im dd^c`.
    #[serde(rename = "purity_upper")]
    PurityUpper,
    /// `Ker dd^c / d⁻¹(Im d^c)`.
    #[serde(rename = "purity_lower")]
    PurityLower,
}

impl Functor {
    pub const ALL: [Functor; 9] = [
        Functor::DeRham,
        Functor::Dolbeault,
        Functor::ConjDolbeault,
        Functor::BottChern,
        Functor::Aeppli,
        Functor::KerDc,
        Functor::CoimDc,
        Functor::PurityUpper,
        Functor::PurityLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Functor::DeRham => "deRham",
            Functor::Dolbeault => "dolbeault",
            Functor::ConjDolbeault => "conj_dolbeault",
            Functor::BottChern => "bott_chern",
            Functor::Aeppli => "aeppli",
            Functor::KerDc => "ker_dc",
            Functor::CoimDc => "coim_dc",
            Functor::PurityUpper => "purity_upper",
            Functor::PurityLower => "purity_lower",
        }
    }

    /// Whether the functor is graded by bidegree rather than total degree.
    pub fn is_bigraded(self) -> bool {
        matches!(self, Functor::Dolbeault | Functor::ConjDolbeault | Functor::BottChern | Functor::Aeppli)
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Functor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Functor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown functor `{s}`")))
    }
}

/// A degree of a cohomology table: total degree or bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Total(i64),
    Bi(Bidegree),
}

impl Degree {
    pub fn total(self) -> i64 {
        match self {
            Degree::Total(k) => k,
            Degree::Bi(pq) => pq.total(),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Total(k) => write!(f, "{k}"),
            Degree::Bi(pq) => write!(f, "{pq}"),
        }
    }
}

/// Dimensions (and optionally representatives) of one functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub functor: Functor,
    /// Every degree in the support of the input, zeros included.
    pub dims: BTreeMap<Degree, usize>,
    /// Representatives of a basis of each nonzero group, as vectors of the
    /// total space `A^k` (total functors) or of `A^{p,q}` (bigraded ones).
    pub bases: Option<BTreeMap<Degree, Vec<Vec<Scalar>>>>,
}

impl CohomologyTable {
    /// Dimension in a total degree (summed over bidegrees when bigraded).
    pub fn dim_total(&self, k: i64) -> usize {
        self.dims.iter().filter(|(d, _)| d.total() == k).map(|(_, n)| n).sum()
    }

    /// Dimension in a bidegree (0 for total-graded functors).
    pub fn dim_bi(&self, pq: Bidegree) -> usize {
        self.dims.get(&Degree::Bi(pq)).copied().unwrap_or(0)
    }

    /// Dimensions aggregated by total degree.
    pub fn by_total(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (d, n) in &self.dims {
            *out.entry(d.total()).or_insert(0) += n;
        }
        out
    }

    /// Sum of all dimensions.
    pub fn sum(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("functor".into(), Value::from(self.functor.name()));
        top.insert("dims".into(), Value::Object(self.dims.iter().map(|(d, n)| (d.to_string(), Value::from(*n))).collect()));
        if let Some(b) = &self.bases {
            let bases = b
                .iter()
                .map(|(d, vs)| {
                    let vs = vs.iter().map(|v| Value::Array(v.iter().map(|x| Value::from(x.to_string())).collect())).collect();
                    (d.to_string(), Value::Array(vs))
                })
                .collect();
            top.insert("bases".into(), Value::Object(bases));
        }
        Value::Object(top)
    }
}

/// `N / D` as a dimension, with representatives on request.
fn subquotient(num: &Sub, den: &Sub, with_bases: bool) -> (usize, Option<Vec<Vec<Scalar>>>) {
    debug_assert!(den.is_subspace_of(num).unwrap_or(false), "denominator must lie in numerator");
    if with_bases {
        let q = Quotient::new(num, den).expect("denominator lies in numerator");
        (q.dim(), Some(q.reps().to_vec()))
    } else {
        (num.dim() - den.dim(), None)
    }
}

/// Numerator and denominator of a total-degree functor in degree `k`.
pub fn total_subquotient(t: &Total, f: Functor, k: i64) -> (Sub, Sub) {
    let sum = |a: Sub, b: Sub| a.sum(&b).expect("same ambient");
    let cap = |a: Sub, b: Sub| a.intersect(&b).expect("same ambient");
    match f {
        Functor::DeRham => (t.basic(Basic::KerD, k), t.basic(Basic::ImD, k)),
        Functor::KerDc => {
            let num = cap(t.basic(Basic::KerD, k), t.basic(Basic::KerDc, k));
            (num, d_of_ker_dc(t, k))
        }
        Functor::CoimDc => (d_preimage_of_im_dc(t, k), sum(t.basic(Basic::ImD, k), t.basic(Basic::ImDc, k))),
        Functor::PurityUpper => (d_of_ker_dc(t, k), t.basic(Basic::ImDdc, k)),
        Functor::PurityLower => (t.basic(Basic::KerDdc, k), d_preimage_of_im_dc(t, k)),
        Functor::Dolbeault | Functor::ConjDolbeault | Functor::BottChern | Functor::Aeppli => {
            // The bigraded functors, assembled over a total degree.
            let (num, den) = match f {
                Functor::Dolbeault => (kernel_basis(&t.delbar(k)), image_basis(&t.delbar(k - 1))),
                Functor::ConjDolbeault => (kernel_basis(&t.del(k)), image_basis(&t.del(k - 1))),
                Functor::BottChern => (cap(t.basic(Basic::KerD, k), t.basic(Basic::KerDc, k)), t.basic(Basic::ImDdc, k)),
                _ => (t.basic(Basic::KerDdc, k), sum(t.basic(Basic::ImD, k), t.basic(Basic::ImDc, k))),
            };
            (num, den)
        }
    }
}

/// `d(Ker d^c ∩ A^{k−1}) ⊆ A^k`.
pub fn d_of_ker_dc(t: &Total, k: i64) -> Sub {
    t.basic(Basic::KerDc, k - 1).image_under(&t.d(k - 1))
}

/// `d⁻¹(Im d^c) ∩ A^k`.
pub fn d_preimage_of_im_dc(t: &Total, k: i64) -> Sub {
    t.basic(Basic::ImDc, k + 1).preimage_under(&t.d(k))
}

/// Compute one functor.
pub fn cohomology(a: &Bicomplex, f: Functor) -> CohomologyTable {
    cohomology_in(a, &a.total(), f, false)
}

/// Compute one functor with representatives of each group.
pub fn cohomology_with_bases(a: &Bicomplex, f: Functor) -> CohomologyTable {
    cohomology_in(a, &a.total(), f, true)
}

/// Compute one functor reusing an existing total complex of `a`.
pub fn cohomology_in(a: &Bicomplex, t: &Total, f: Functor, with_bases: bool) -> CohomologyTable {
    let mut dims = BTreeMap::new();
    let mut bases = BTreeMap::new();
    let mut record = |deg: Degree, (n, b): (usize, Option<Vec<Vec<Scalar>>>)| {
        dims.insert(deg, n);
        if let Some(b) = b.filter(|b| !b.is_empty()) {
            bases.insert(deg, b);
        }
    };
    if f.is_bigraded() {
        for pq in a.support() {
            let (num, den) = bigraded_subquotient(a, f, pq);
            record(Degree::Bi(pq), subquotient(&num, &den, with_bases));
        }
    } else {
        for k in t.degrees() {
            let (num, den) = total_subquotient(t, f, k);
            record(Degree::Total(k), subquotient(&num, &den, with_bases));
        }
    }
    CohomologyTable { functor: f, dims, bases: with_bases.then_some(bases) }
}

/// Numerator and denominator of a bigraded functor inside `A^{p,q}`.
pub fn bigraded_subquotient(a: &Bicomplex, f: Functor, pq: Bidegree) -> (Sub, Sub) {
    let (p, q) = (pq.p, pq.q);
    let del_in = || image_basis(&a.del(Bidegree::new(p - 1, q)));
    let delbar_in = || image_basis(&a.delbar(Bidegree::new(p, q - 1)));
    match f {
        Functor::Dolbeault => (kernel_basis(&a.delbar(pq)), delbar_in()),
        Functor::ConjDolbeault => (kernel_basis(&a.del(pq)), del_in()),
        Functor::BottChern => {
            let num = kernel_basis(&a.del(pq).vstack(&a.delbar(pq)));
            let ddbar = a.del(Bidegree::new(p - 1, q)).mul(&a.delbar(Bidegree::new(p - 1, q - 1)));
            (num, image_basis(&ddbar))
        }
        Functor::Aeppli => {
            let ddbar = a.del(Bidegree::new(p, q + 1)).mul(&a.delbar(pq));
            (kernel_basis(&ddbar), del_in().sum(&delbar_in()).expect("same ambient"))
        }
        _ => panic!("{f} is not bigraded"),
    }
}

/// Betti numbers `b_k` over the support.
pub fn betti(a: &Bicomplex) -> BTreeMap<i64, usize> {
    cohomology(a, Functor::DeRham).by_total()
}

// ---------------------------------------------------------------------------
// Hodge filtrations

/// The two Hodge filtrations on `H^k`, in coordinates of a fixed basis of `H^k`.
pub struct DegreeFiltration {
    pub k: i64,
    pub b: usize,
    p_lo: i64,
    p_hi: i64,
    f: BTreeMap<i64, Sub>,
    fbar: BTreeMap<i64, Sub>,
}

impl DegreeFiltration {
    /// Compute `F^p H^k` and `F̄^q H^k` for degree `k`.
    pub fn new(t: &Total, k: i64) -> Self {
        let z = t.basic(Basic::KerD, k);
        let bnd = t.basic(Basic::ImD, k);
        let quot = Quotient::new(&z, &bnd).expect("Im d ⊆ Ker d");
        let b = quot.dim();
        let blocks = t.blocks(k);
        let (p_lo, p_hi) = match (blocks.first(), blocks.last()) {
            (Some(x), Some(y)) => (x.pq.p, y.pq.p),
            _ => (0, -1),
        };
        let mut f = BTreeMap::new();
        let mut fbar = BTreeMap::new();
        if b > 0 {
            let d = t.d(k);
            let restricted_cycles = |levels: Vec<i64>, s: i64| -> Sub {
                let cols: Vec<usize> = (0..levels.len()).filter(|&i| levels[i] >= s).collect();
                let ker = kernel_basis(&d.select_cols(&cols));
                Subspace::from_spanning(levels.len(), ker.basis().iter().map(|v| embed(v, &cols, levels.len())).collect())
            };
            for p in p_lo..=p_hi {
                f.insert(p, quot.image_of(&restricted_cycles(t.p_levels(k), p)));
                fbar.insert(k - p, quot.image_of(&restricted_cycles(t.q_levels(k), k - p)));
            }
        }
        DegreeFiltration { k, b, p_lo, p_hi, f, fbar }
    }

    fn q_lo(&self) -> i64 {
        self.k - self.p_hi
    }

    fn q_hi(&self) -> i64 {
        self.k - self.p_lo
    }

    /// `F^p H^k`.
    pub fn f(&self, p: i64) -> Sub {
        lookup(&self.f, p, self.p_lo, self.p_hi, self.b)
    }

    /// `F̄^q H^k`.
    pub fn fbar(&self, q: i64) -> Sub {
        lookup(&self.fbar, q, self.q_lo(), self.q_hi(), self.b)
    }

    /// `F^p H^k ∩ F̄^q H^k`.
    pub fn cap(&self, p: i64, q: i64) -> Sub {
        self.f(p).intersect(&self.fbar(q)).expect("same ambient")
    }

    /// `F_tot^r H^k = Σ_{p+q=r} F^p ∩ F̄^q`.
    pub fn ftot(&self, r: i64) -> Sub {
        let mut acc = Subspace::zero(self.b);
        for p in self.p_lo..=self.p_hi + 1 {
            acc = acc.sum(&self.cap(p, r - p)).expect("same ambient");
        }
        acc
    }

    /// Range of `p` over which `F^p` may change.
    pub fn p_range(&self) -> (i64, i64) {
        (self.p_lo, self.p_hi)
    }

    /// Range of `r` outside which `F_tot^r` is constant.
    pub fn r_range(&self) -> (i64, i64) {
        (self.p_lo + self.q_lo(), self.p_hi + self.q_hi() + 1)
    }

    /// `dim gr^r_{F_tot} H^k` for every `r` where it is nonzero.
    pub fn graded_tot(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        if self.b == 0 {
            return out;
        }
        let (lo, hi) = self.r_range();
        let dims: Vec<usize> = (lo..=hi + 1).map(|r| self.ftot(r).dim()).collect();
        for (i, r) in (lo..=hi).enumerate() {
            let g = dims[i] - dims[i + 1];
            if g > 0 {
                out.insert(r, g);
            }
        }
        out
    }

    /// Refined Betti numbers `b_k^{p,q}` (nonzero ones only).
    pub fn refined(&self) -> BTreeMap<Bidegree, usize> {
        let mut out = BTreeMap::new();
        if self.b == 0 {
            return out;
        }
        for p in self.p_lo..=self.p_hi {
            for q in self.q_lo()..=self.q_hi() {
                let here = self.cap(p, q).dim();
                if here == 0 {
                    continue;
                }
                let below = self.cap(p + 1, q).sum(&self.cap(p, q + 1)).expect("same ambient").dim();
                if here > below {
                    out.insert(Bidegree::new(p, q), here - below);
                }
            }
        }
        out
    }
}

fn lookup(m: &BTreeMap<i64, Sub>, s: i64, lo: i64, hi: i64, b: usize) -> Sub {
    if b == 0 || s > hi {
        Subspace::zero(b)
    } else if s < lo {
        Subspace::full(b)
    } else {
        m[&s].clone()
    }
}

/// Place a vector given on the coordinates `idx` into `F^n`.
pub(crate) fn embed(v: &[Scalar], idx: &[usize], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::default(); n];
    for (x, &i) in v.iter().zip(idx) {
        out[i] = x.clone();
    }
    out
}

/// Dimensions attached to the Hodge filtrations of every `H^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiltrationTable {
    /// `(p, k) ↦ dim F^p H^k`.
    pub f: BTreeMap<(i64, i64), usize>,
    /// `(q, k) ↦ dim F̄^q H^k`.
    pub fbar: BTreeMap<(i64, i64), usize>,
    /// `(p, q, k) ↦ dim F^p H^k ∩ F̄^q H^k`.
    pub fcap_fbar: BTreeMap<(i64, i64, i64), usize>,
    /// `(r, k) ↦ dim F_tot^r H^k`.
    pub ftot: BTreeMap<(i64, i64), usize>,
    /// `(p, q, k) ↦ b_k^{p,q}`, nonzero entries only.
    pub refined: BTreeMap<(i64, i64, i64), usize>,
}

impl FiltrationTable {
    pub fn refined_at(&self, k: i64, pq: Bidegree) -> usize {
        self.refined.get(&(pq.p, pq.q, k)).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        fn two(m: &BTreeMap<(i64, i64), usize>) -> Value {
            Value::Object(m.iter().map(|((a, b), n)| (format!("{a},{b}"), Value::from(*n))).collect())
        }
        fn three(m: &BTreeMap<(i64, i64, i64), usize>) -> Value {
            Value::Object(m.iter().map(|((a, b, c), n)| (format!("{a},{b},{c}"), Value::from(*n))).collect())
        }
        let mut top = Map::new();
        top.insert("F".into(), two(&self.f));
        top.insert("Fbar".into(), two(&self.fbar));
        top.insert("FcapFbar".into(), three(&self.fcap_fbar));
        top.insert("Ftot".into(), two(&self.ftot));
        top.insert("refined".into(), three(&self.refined));
        Value::Object(top)
    }
}

/// The Hodge filtrations of every degree.
pub fn degree_filtrations(t: &Total) -> Vec<DegreeFiltration> {
    t.degrees().map(|k| DegreeFiltration::new(t, k)).collect()
}

pub fn hodge_filtration(a: &Bicomplex) -> FiltrationTable {
    let t = a.total();
    let mut out = FiltrationTable::default();
    for df in degree_filtrations(&t) {
        let k = df.k;
        for p in df.p_lo..=df.p_hi + 1 {
            out.f.insert((p, k), df.f(p).dim());
            for q in df.q_lo()..=df.q_hi() + 1 {
                out.fcap_fbar.insert((p, q, k), df.cap(p, q).dim());
            }
        }
        for q in df.q_lo()..=df.q_hi() + 1 {
            out.fbar.insert((q, k), df.fbar(q).dim());
        }
        let (lo, hi) = df.r_range();
        for r in lo..=hi {
            out.ftot.insert((r, k), df.ftot(r).dim());
        }
        for (pq, n) in df.refined() {
            out.refined.insert((pq.p, pq.q, k), n);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Purity defect and (∗)

/// Per-degree purity defects and their maximum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PurityDefect {
    pub per_degree: BTreeMap<i64, usize>,
    pub total: usize,
}

impl PurityDefect {
    pub fn at(&self, k: i64) -> usize {
        self.per_degree.get(&k).copied().unwrap_or(0)
    }
}

/// Purity defect from precomputed filtrations.
pub fn purity_defect_from(filts: &[DegreeFiltration]) -> PurityDefect {
    let mut out = PurityDefect::default();
    for df in filts {
        let g = df.graded_tot();
        let v = g.keys().map(|r| (r - df.k).unsigned_abs() as usize).max().unwrap_or(0);
        out.per_degree.insert(df.k, v);
        out.total = out.total.max(v);
    }
    out
}

pub fn purity_defect(a: &Bicomplex) -> PurityDefect {
    purity_defect_in(&a.total())
}

pub fn purity_defect_in(t: &Total) -> PurityDefect {
    purity_defect_from(&degree_filtrations(t))
}

/// Whether, in every degree, the nonzero graded pieces of `F_tot` lie in
/// two consecutive indices.
pub fn star_condition(a: &Bicomplex) -> bool {
    star_condition_in(&a.total())
}

pub fn star_condition_in(t: &Total) -> bool {
    degree_filtrations(t).iter().all(|df| {
        let g = df.graded_tot();
        match (g.keys().next(), g.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    })
}

// ---------------------------------------------------------------------------
// Spectral sequences

/// Which Frölicher-type spectral sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sequence {
    /// Filtration by `p`; `E_1 = H_∂̄`.
    Column,
    /// Filtration by `q`; `E_1 = H_∂`.
    Row,
}

impl Sequence {
    /// Target of `d_r` leaving `pq`.
    pub fn target(self, pq: Bidegree, r: usize) -> Bidegree {
        let r = r as i64;
        match self {
            Sequence::Column => pq.offset(r, 1 - r),
            Sequence::Row => pq.offset(1 - r, r),
        }
    }

    fn level(self, pq: Bidegree) -> i64 {
        match self {
            Sequence::Column => pq.p,
            Sequence::Row => pq.q,
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "column" | "col" => Ok(Sequence::Column),
            "row" => Ok(Sequence::Row),
            _ => Err(Error::InvalidInput(format!("unknown spectral sequence `{s}` (column|row)"))),
        }
    }
}

/// One page of a spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub which: Sequence,
    pub r: usize,
    /// Dimension of `E_r` at every bidegree of the support.
    pub dims: BTreeMap<Bidegree, usize>,
    /// Rank of `d_r` leaving each bidegree, nonzero entries only.
    pub d_ranks: BTreeMap<Bidegree, usize>,
}

impl SpectralPage {
    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("which".into(), serde_json::to_value(self.which).expect("serializable"));
        top.insert("r".into(), Value::from(self.r));
        let m = |x: &BTreeMap<Bidegree, usize>| Value::Object(x.iter().map(|(pq, n)| (pq.to_string(), Value::from(*n))).collect());
        top.insert("dims".into(), m(&self.dims));
        top.insert("d_ranks".into(), m(&self.d_ranks));
        Value::Object(top)
    }
}

/// The filtered total complex with cached `Z_r^s` and `B_r^s`.
pub struct Filtered<'a> {
    t: &'a Total,
    which: Sequence,
    levels: BTreeMap<i64, Vec<i64>>,
    z: RefCell<HashMap<(i64, i64, usize), Sub>>,
}

impl<'a> Filtered<'a> {
    pub fn new(t: &'a Total, which: Sequence) -> Self {
        let levels = t
            .degrees()
            .map(|k| {
                let lv = match which {
                    Sequence::Column => t.p_levels(k),
                    Sequence::Row => t.q_levels(k),
                };
                (k, lv)
            })
            .collect();
        Filtered { t, which, levels, z: RefCell::new(HashMap::new()) }
    }

    fn levels(&self, k: i64) -> &[i64] {
        self.levels.get(&k).map_or(&[], Vec::as_slice)
    }

    /// `Z_r^s = F^s A^k ∩ d⁻¹(F^{s+r} A^{k+1})`.
    pub fn z(&self, k: i64, s: i64, r: usize) -> Sub {
        if let Some(v) = self.z.borrow().get(&(k, s, r)) {
            return v.clone();
        }
        let src = self.levels(k);
        let cols: Vec<usize> = (0..src.len()).filter(|&i| src[i] >= s).collect();
        let tgt = self.levels(k + 1);
        let rows: Vec<usize> = (0..tgt.len()).filter(|&i| tgt[i] < s + r as i64).collect();
        let m = self.t.d(k).select_rows(&rows).select_cols(&cols);
        let ker = kernel_basis(&m);
        let out = Subspace::from_spanning(src.len(), ker.basis().iter().map(|v| embed(v, &cols, src.len())).collect());
        self.z.borrow_mut().insert((k, s, r), out.clone());
        out
    }

    /// `B_r^s = F^s A^k ∩ d(F^{s−r} A^{k−1})`.
    pub fn b(&self, k: i64, s: i64, r: usize) -> Sub {
        let src = self.levels(k - 1);
        let n = self.t.dim(k);
        let cols: Vec<usize> = (0..src.len()).filter(|&i| src[i] >= s - r as i64).collect();
        let tgt = self.levels(k);
        let rows: Vec<usize> = (0..tgt.len()).filter(|&i| tgt[i] < s).collect();
        let d = self.t.d(k - 1);
        let ker = kernel_basis(&d.select_rows(&rows).select_cols(&cols));
        Subspace::from_spanning(n, ker.basis().iter().map(|v| d.apply(&embed(v, &cols, src.len()))).collect())
    }

    fn plus(a: &Sub, b: &Sub) -> usize {
        a.sum(b).expect("same ambient").dim()
    }

    /// `dim E_r` at `pq` (`r ≥ 1`).
    pub fn page_dim(&self, pq: Bidegree, r: usize) -> usize {
        let (k, s) = (pq.total(), self.which.level(pq));
        let z = self.z(k, s, r).dim();
        z - Self::plus(&self.z(k, s + 1, r - 1), &self.b(k, s, r - 1))
    }

    /// Rank of `d_r` leaving `pq` (`r ≥ 1`).
    pub fn d_rank(&self, pq: Bidegree, r: usize) -> usize {
        let (k, s) = (pq.total(), self.which.level(pq));
        self.z(k, s, r).dim() - Self::plus(&self.z(k, s, r + 1), &self.z(k, s + 1, r - 1))
    }

    pub fn page(&self, a: &Bicomplex, r: usize) -> SpectralPage {
        let mut dims = BTreeMap::new();
        let mut d_ranks = BTreeMap::new();
        for pq in a.support() {
            dims.insert(pq, self.page_dim(pq, r));
            let rk = self.d_rank(pq, r);
            if rk > 0 {
                d_ranks.insert(pq, rk);
            }
        }
        SpectralPage { which: self.which, r, dims, d_ranks }
    }
}

/// Page `r ≥ 1` of the column or row spectral sequence.
pub fn spectral_page(a: &Bicomplex, which: Sequence, r: usize) -> Result<SpectralPage> {
    if r == 0 {
        return Err(Error::InvalidInput("spectral pages start at r = 1".into()));
    }
    let t = a.total();
    Ok(Filtered::new(&t, which).page(a, r))
}

/// Ranks of every nonzero differential `d_r` (`r ≥ 1`), keyed by source
/// bidegree and page. Pages are computed until the sequence degenerates.
pub fn differential_ranks(a: &Bicomplex, t: &Total, which: Sequence) -> BTreeMap<(Bidegree, usize), usize> {
    let betti_sum: usize = t.degrees().map(|k| t.basic(Basic::KerD, k).dim() - t.basic(Basic::ImD, k).dim()).sum();
    let f = Filtered::new(t, which);
    let mut out = BTreeMap::new();
    let mut page_sum: usize = a.support().map(|pq| f.page_dim(pq, 1)).sum();
    let mut r = 1;
    while page_sum > betti_sum {
        let mut killed = 0;
        for pq in a.support() {
            let rk = f.d_rank(pq, r);
            if rk > 0 {
                out.insert((pq, r), rk);
                killed += rk;
            }
        }
        assert!(page_sum >= 2 * killed, "page dimensions must decrease");
        page_sum -= 2 * killed;
        r += 1;
    }
    out
}

/// Whether a spectral sequence degenerates at `E_1`, i.e. the total
/// dimension of `H_∂̄` (column) or `H_∂` (row) equals `Σ b_k`.
pub fn e1_degenerate(a: &Bicomplex, t: &Total) -> bool {
    let betti_sum: usize = t.degrees().map(|k| t.basic(Basic::KerD, k).dim() - t.basic(Basic::ImD, k).dim()).sum();
    let h = |f| cohomology_in(a, t, f, false).sum();
    h(Functor::Dolbeault) == betti_sum && h(Functor::ConjDolbeault) == betti_sum
}
