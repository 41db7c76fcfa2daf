//! Plain-text rendering: Hodge-diamond grids and aligned tables.

use std::collections::BTreeMap;
use std::fmt::Write;

use zz_core::bicomplex::{Bidegree, MultiplicityTable};
use zz_core::functors::{CohomologyTable, Degree};

/// Grid with `q` decreasing downwards and `p` increasing to the right; zeros print as `.`.
pub fn grid(values: &BTreeMap<Bidegree, usize>) -> String {
    let nonzero: Vec<(&Bidegree, &usize)> = values.iter().filter(|(_, v)| **v > 0).collect();
    if nonzero.is_empty() {
        return "  (zero)\n".into();
    }
    let (plo, phi) = (nonzero.iter().map(|(b, _)| b.p).min().unwrap(), nonzero.iter().map(|(b, _)| b.p).max().unwrap());
    let (qlo, qhi) = (nonzero.iter().map(|(b, _)| b.q).min().unwrap(), nonzero.iter().map(|(b, _)| b.q).max().unwrap());
    let width = values.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(plo.to_string().len()).max(phi.to_string().len());
    let label = qlo.to_string().len().max(qhi.to_string().len());
    let mut out = String::new();
    for q in (qlo..=qhi).rev() {
        let _ = write!(out, "  q={q:>label$} |");
        for p in plo..=phi {
            let v = values.get(&Bidegree::new(p, q)).copied().unwrap_or(0);
            let cell = if v == 0 { ".".to_string() } else { v.to_string() };
            let _ = write!(out, " {cell:>width$}");
        }
        out.push('\n');
    }
    let _ = write!(out, "  {:>w$} +", "", w = label + 2);
    for _ in plo..=phi {
        let _ = write!(out, " {}", "-".repeat(width));
    }
    out.push('\n');
    let _ = write!(out, "  {:>w$}  ", "", w = label + 2);
    for p in plo..=phi {
        let _ = write!(out, " {p:>width$}");
    }
    let _ = writeln!(out, "  p");
    out
}

/// `k: value` lines.
pub fn by_degree(values: &BTreeMap<i64, usize>) -> String {
    let mut out = String::new();
    for (k, v) in values {
        let _ = writeln!(out, "  k={k:>2}: {v}");
    }
    if out.is_empty() {
        out.push_str("  (zero)\n");
    }
    out
}

pub fn cohomology_table(t: &CohomologyTable) -> String {
    let mut out = format!("{} (total {})\n", t.functor.name(), t.sum());
    let bi: BTreeMap<Bidegree, usize> = t
        .dims
        .iter()
        .filter_map(|(d, n)| match d {
            Degree::Bi(pq) => Some((*pq, *n)),
            Degree::Total(_) => None,
        })
        .collect();
    if t.functor.is_bigraded() {
        out.push_str(&grid(&bi));
    } else {
        let tot: BTreeMap<i64, usize> = t.dims.iter().map(|(d, n)| (d.total(), *n)).collect();
        out.push_str(&by_degree(&tot));
    }
    out
}

/// Shapes listed by total-degree band, each band followed by the local dimensions it occupies.
pub fn multiplicity_table(t: &MultiplicityTable) -> String {
    let mut bands: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    let mut dims: BTreeMap<i64, BTreeMap<Bidegree, usize>> = BTreeMap::new();
    for (s, m) in t.iter() {
        let k = s.degree();
        bands.entry(k).or_default().push(format!("  {m} × {}", s.describe()));
        for e in s.entries() {
            *dims.entry(k).or_default().entry(e.pq).or_insert(0) += m;
        }
    }
    let mut out = format!("{} indecomposables\n", t.count());
    for (k, lines) in bands {
        let _ = writeln!(out, "degree {k}:");
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out.push_str(&grid(&dims[&k]));
    }
    out
}

/// Aligned columns with a header row.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = String::new();
        for (c, w) in cells.iter().zip(&widths) {
            let pad = w - c.chars().count();
            let _ = write!(s, "  {}{c}", " ".repeat(pad));
        }
        s.push('\n');
        s
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
