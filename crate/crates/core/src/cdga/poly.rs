//! Graded-commutative monomials and polynomials over ℚ, and the text grammar
//! `c*x*y^2 - 3/2*z + ...`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Q};

/// Exponent vector indexed by generator, with trailing zeros trimmed so that
/// monomials stay valid when generators are appended.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Mono(v)
    }

    pub fn from_exponents(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Mono(v)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, degrees: &[usize]) -> usize {
        self.0.iter().zip(degrees).map(|(&a, &d)| a as usize * d).sum()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self · other` in canonical order, with the Koszul sign, or `None`
    /// when an odd generator would appear twice.
    pub fn mul(&self, other: &Mono, degrees: &[usize]) -> Option<(Mono, bool)> {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0u32; n];
        let mut sign = 0u64;
        for i in 0..n {
            let (a, b) = (self.exp(i), other.exp(i));
            if degrees[i] % 2 == 1 && a + b > 1 {
                return None;
            }
            out[i] = a + b;
            // Factors of `other` at index j move left past those of `self` at index i > j.
            if b > 0 && degrees[i] % 2 == 1 {
                let passed: u32 = (i + 1..self.0.len()).filter(|&l| degrees[l] % 2 == 1).map(|l| self.exp(l)).sum();
                sign += (b * passed) as u64;
            }
        }
        Some((Mono::from_exponents(out), sign % 2 == 1))
    }
}

/// A polynomial: monomial → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<Mono, Q>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(Mono::one(), c);
        p
    }

    pub fn mono(m: Mono) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, Q::one());
        p
    }

    pub fn gen(i: usize) -> Self {
        Poly::mono(Mono::gen(i))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.0 {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut p = Poly::zero();
        for (m, x) in &self.0 {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    pub fn mul(&self, other: &Poly, degrees: &[usize]) -> Poly {
        let mut p = Poly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                if let Some((m, neg)) = m1.mul(m2, degrees) {
                    let c = c1 * c2;
                    p.add_term(m, if neg { -c } else { c });
                }
            }
        }
        p
    }

    /// Common degree of all terms, `None` for zero or inhomogeneous input.
    pub fn degree(&self, degrees: &[usize]) -> Option<usize> {
        let mut ds = self.0.keys().map(|m| m.degree(degrees));
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    /// Whether every term is a product of at least two generators.
    pub fn is_decomposable(&self) -> bool {
        self.0.keys().all(|m| m.word_length() >= 2)
    }

    /// Highest generator index that occurs, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.keys().filter_map(|m| m.0.len().checked_sub(1)).max()
    }

    /// Canonical text, using the given generator names.
    pub fn format(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(format_rational(&a));
            }
            for (g, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[g].clone()),
                    _ => factors.push(format!("{}^{e}", names[g])),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn parse_error(column: usize, message: String) -> Error {
    Error::Parse { line: 1, column, message }
}

/// Parse a polynomial in the named generators. Columns in errors are
/// 1-based character positions in `text`.
pub fn parse_poly(text: &str, names: &[String], degrees: &[usize]) -> Result<Poly> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let is_name_start = |c: char| c.is_alphabetic() || c == '_';
    let is_name_char = |c: char| c.is_alphanumeric() || c == '_';
    let mut poly = Poly::zero();
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            if first {
                return Err(parse_error(1, "empty polynomial".into()));
            }
            break;
        }
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(parse_error(pos + 1, format!("expected `+` or `-`, found `{}`", chars[pos])));
        }
        first = false;
        let mut coef = Q::one();
        let mut mono = Poly::constant(Q::one());
        loop {
            skip_ws(&mut pos);
            let start = pos;
            if pos < chars.len() && (chars[pos].is_ascii_digit()) {
                while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                    pos += 1;
                }
                let lit: String = chars[start..pos].iter().collect();
                let q = parse_rational(&lit).map_err(|_| parse_error(start + 1, format!("invalid number `{lit}`")))?;
                coef *= q;
            } else if pos < chars.len() && is_name_start(chars[pos]) {
                while pos < chars.len() && is_name_char(chars[pos]) {
                    pos += 1;
                }
                let name: String = chars[start..pos].iter().collect();
                let g = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| parse_error(start + 1, format!("unknown generator `{name}`")))?;
                let mut power = 1u32;
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let lit: String = chars[s..pos].iter().collect();
                    power = lit.parse().map_err(|_| parse_error(s + 1, "expected an exponent after `^`".into()))?;
                    if power > 1 && degrees[g] % 2 == 1 {
                        return Err(parse_error(s + 1, format!("odd generator `{name}` squares to zero")));
                    }
                }
                for _ in 0..power {
                    mono = mono.mul(&Poly::gen(g), degrees);
                }
            } else {
                let found = chars.get(pos).map_or("end of input".to_string(), |c| format!("`{c}`"));
                return Err(parse_error(pos + 1, format!("expected a number or generator name, found {found}")));
            }
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if negative {
            coef = -coef;
        }
        poly = poly.add(&mono.scale(&coef));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn koszul_signs() {
        let deg = [1, 1, 2];
        let (m, neg) = Mono::gen(1).mul(&Mono::gen(0), &deg).unwrap();
        assert_eq!(m, Mono::from_exponents(vec![1, 1]));
        assert!(neg);
        assert!(Mono::gen(0).mul(&Mono::gen(0), &deg).is_none());
        let (_, neg) = Mono::gen(2).mul(&Mono::gen(0), &deg).unwrap();
        assert!(!neg);
        let x = Poly::gen(2);
        assert_eq!(x.mul(&x, &deg).format(&names(3)), "e3^2");
    }

    #[test]
    fn round_trip() {
        let deg = [1, 1, 1, 2];
        let n = names(4);
        let p = parse_poly("e2*e1 - 3/2*e3*e1 + 2*e4^2 + 0*e1", &n, &deg).unwrap();
        let s = p.format(&n);
        assert_eq!(s, "2*e4^2 + 3/2*e1*e3 - e1*e2");
        assert_eq!(parse_poly(&s, &n, &deg).unwrap(), p);
        assert_eq!(p.degree(&deg), None);
        assert_eq!(parse_poly("0", &n, &deg).unwrap(), Poly::zero());
        assert_eq!(parse_poly("e1*e2", &n, &deg).unwrap().degree(&deg), Some(2));
    }

    #[test]
    fn parse_errors() {
        let deg = [1, 1];
        let n = names(2);
        for (text, col) in [("e1 * x", 6), ("e1 e2", 4), ("", 1), ("e1^2", 4), ("e1 +", 5)] {
            match parse_poly(text, &n, &deg) {
                Err(Error::Parse { column, .. }) => assert_eq!(column, col, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
