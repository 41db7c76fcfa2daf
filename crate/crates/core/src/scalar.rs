//! Exact scalar fields: the rationals ℚ and the Gaussian rationals ℚ(i).
//!
//! Both implement [`Field`], which is all the linear algebra in
//! [`crate::linalg`] needs. Values are always stored in lowest terms with
//! positive denominators (this is maintained by `num_rational::BigRational`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A commutative field with exact arithmetic.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self;
}

/// Rational numbers.
pub type Q = BigRational;

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Parse a rational in the form `a` or `a/b` (optional leading sign).
pub fn parse_rational(s: &str) -> Result<Q, Error> {
    let bad = || Error::Parse {
        line: 1,
        column: 1,
        message: format!("invalid rational `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix(['-', '+']).unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(bad());
    }
    let n = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).map_err(|_| bad())?;
    let d = match den {
        Some(d) => {
            if !valid_int(d, false) {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("zero denominator in `{s}`"),
        });
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form of a rational: `a` or `a/b`.
pub fn format_rational(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Q,
    pub im: Q,
}

impl Scalar {
    pub fn new(re: Q, im: Q) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Q) -> Self {
        Scalar { re, im: Zero::zero() }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(Q::from_i64(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::real(BigRational::new(n.into(), d.into()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: Zero::zero(), im: One::one() }
    }

    /// `i^e` for any integer exponent.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Scalar::int(1),
            1 => Scalar::i(),
            2 => Scalar::int(-1),
            _ => Scalar::i().neg(),
        }
    }

    /// `(-1)^e`.
    pub fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Scalar::int(1)
        } else {
            Scalar::int(-1)
        }
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// Parse the text form `a/b`, `a/b+c/d*i`, `c/d*i`, `i`, `-i`, or an integer.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid scalar `{s}`"),
        };
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(bad());
        }
        if !s.ends_with('i') {
            return Ok(Scalar::real(parse_rational(s)?));
        }
        // Split at the sign that starts the imaginary part (not at position 0
        // and not the sign of an exponent-free denominator).
        let bytes = s.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| bytes[k] == b'+' || bytes[k] == b'-');
        let (re_part, im_part) = match split {
            Some(k) => (&s[..k], &s[k..]),
            None => ("", s),
        };
        let re = if re_part.is_empty() { Zero::zero() } else { parse_rational(re_part)? };
        let body = &im_part[..im_part.len() - 1];
        let coef = match body {
            "" | "+" => One::one(),
            "-" => -<Q as One>::one(),
            _ => {
                let c = body.strip_suffix('*').ok_or_else(bad)?;
                parse_rational(c)?
            }
        };
        Ok(Scalar { re, im: coef })
    }
}

fn format_imag(im: &Q) -> String {
    if One::is_one(im) {
        "i".to_string()
    } else if One::is_one(&-im) {
        "-i".to_string()
    } else {
        format!("{}*i", format_rational(im))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return f.write_str(&format_rational(&self.re));
        }
        if Zero::is_zero(&self.re) {
            return f.write_str(&format_imag(&self.im));
        }
        let im = format_imag(&self.im);
        if self.im.is_negative() {
            write!(f, "{}{}", format_rational(&self.re), im)
        } else {
            write!(f, "{}+{}", format_rational(&self.re), im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Scalar::parse(s)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn one() -> Self {
        Scalar::int(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        // Cheap paths for real or imaginary operands, which dominate in practice.
        if Zero::is_zero(&self.im) {
            return Scalar { re: &self.re * &o.re, im: &self.re * &o.im };
        }
        if Zero::is_zero(&o.im) {
            return Scalar { re: &self.re * &o.re, im: &self.im * &o.re };
        }
        Scalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        Scalar { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        if Zero::is_zero(&self.im) {
            return Scalar::real(self.re.recip());
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Scalar { re: &self.re / &norm, im: -&self.im / &norm }
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_i64(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Field::add(&self, &o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Field::sub(&self, &o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        Field::mul(&self, &o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-3/4", "i", "-i", "2*i", "-1/2*i", "1+i", "1/2-1/3*i", "-5+7/2*i"] {
            let x = Scalar::parse(s).unwrap();
            assert_eq!(x.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(Scalar::parse("2/4").unwrap().to_string(), "1/2");
        assert_eq!(Scalar::parse("0+1*i").unwrap(), Scalar::i());
        assert_eq!(Scalar::parse("+3").unwrap(), Scalar::int(3));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1 + i", "1/-2", "i*2", "1//2", "--1"] {
            assert!(Scalar::parse(s).is_err(), "accepted {s}");
        }
    }

    #[test]
    fn field_identities() {
        let a = Scalar::parse("1/2+3*i").unwrap();
        let b = Scalar::parse("-2/3-i").unwrap();
        assert_eq!(Field::mul(&a, &a.inv()), Scalar::one());
        assert_eq!(Field::mul(&a, &b), Field::mul(&b, &a));
        assert_eq!(Field::sub(&Field::add(&a, &b), &b), a);
        assert_eq!(Field::mul(&Scalar::i(), &Scalar::i()), Scalar::int(-1));
        assert_eq!(Scalar::i_pow(-1), Scalar::i().neg());
        assert_eq!(Scalar::i_pow(6), Scalar::int(-1));
    }
}
