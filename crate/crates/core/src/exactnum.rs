//! Exact arithmetic over Q and the Gaussian rationals Q(i).
//!
//! `GaussRat` is the coefficient field for every other module. Values are
//! immutable and always kept in canonical reduced form, so equality is
//! plain componentwise comparison and matrix pivoting is deterministic.
//!
//! Textual grammar, shared by all file formats:
//!
//! ```text
//! rat   := ["-"] digits ["/" digits]
//! gauss := rat | rat ("+"|"-") rat "i" | ["-"] rat "i"
//! ```
//!
//! Examples: `3`, `-1/2`, `1/2+1/3i`, `-1i` (for −i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from exact-number construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid number literal `{0}`")]
    Parse(String),
}

/// Arbitrary-precision rational in lowest terms with positive denominator.
///
/// Zero is canonically 0/1. Backed by [`num_rational::BigRational`], which
/// maintains exactly these invariants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigRat(BigRational);

impl BigRat {
    pub fn zero() -> Self {
        BigRat(BigRational::zero())
    }

    pub fn one() -> Self {
        BigRat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        BigRat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact ratio; fails on a zero denominator.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, NumError> {
        if denom.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigRat(BigRational::new(numer, denom)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        BigRat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigRat(self.0.abs())
    }

    pub fn invert(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigRat(self.0.recip()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        BigRat(BigRational::from_integer(n))
    }
}

impl Add for &BigRat {
    type Output = BigRat;
    fn add(self, rhs: &BigRat) -> BigRat {
        BigRat(&self.0 + &rhs.0)
    }
}

impl Sub for &BigRat {
    type Output = BigRat;
    fn sub(self, rhs: &BigRat) -> BigRat {
        BigRat(&self.0 - &rhs.0)
    }
}

impl Mul for &BigRat {
    type Output = BigRat;
    fn mul(self, rhs: &BigRat) -> BigRat {
        BigRat(&self.0 * &rhs.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BigRat {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, NumError> {
        let bad = || NumError::Parse(s.to_string());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num_s, den_s) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if num_s.is_empty() || !num_s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mut numer: BigInt = num_s.parse().map_err(|_| bad())?;
        if neg {
            numer = -numer;
        }
        let denom = match den_s {
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                d.parse().map_err(|_| bad())?
            }
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if denom == BigInt::zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigRat(BigRational::new(numer, denom)))
    }
}

/// Element of Q(i): `re + im*i` with `i^2 = -1`, both parts reduced.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRat,
    pub im: BigRat,
}

impl GaussRat {
    pub fn new(re: BigRat, im: BigRat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::new(BigRat::one(), BigRat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(BigRat::zero(), BigRat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRat::from_int(n), BigRat::zero())
    }

    pub fn from_rat(re: BigRat) -> Self {
        GaussRat::new(re, BigRat::zero())
    }

    /// Gaussian integer a + b*i.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussRat::new(BigRat::from_int(re), BigRat::from_int(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// Field norm N(a) = re^2 + im^2, a nonnegative rational.
    pub fn norm(&self) -> BigRat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse; error on zero.
    pub fn invert(&self) -> Result<Self, NumError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let inv = n.invert()?;
        Ok(GaussRat::new(&self.re * &inv, &(-&self.im) * &inv))
    }

    pub fn div(&self, rhs: &GaussRat) -> Result<Self, NumError> {
        Ok(self * &rhs.invert()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        GaussRat::new(&self.re * c, &self.im * c)
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        GaussRat::new(re, im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussRat {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, NumError> {
        let bad = || NumError::Parse(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        if let Some(body) = s.strip_suffix('i') {
            // Split on the sign separating the two parts, ignoring a leading sign.
            if let Some(pos) = body[1..].rfind(['+', '-']).map(|p| p + 1) {
                // Guard against the '-' of a plain `-3/4i`: the separator must
                // come after at least one digit of the real part.
                if body[..pos].bytes().any(|b| b.is_ascii_digit()) {
                    let re: BigRat = body[..pos].parse()?;
                    let sign = &body[pos..pos + 1];
                    let mag: BigRat = body[pos + 1..].parse().map_err(|_| bad())?;
                    let im = if sign == "-" { -&mag } else { mag };
                    return Ok(GaussRat::new(re, im));
                }
            }
            return Ok(GaussRat::new(BigRat::zero(), body.parse()?));
        }
        Ok(GaussRat::from_rat(s.parse()?))
    }
}

// Gaussian values cross file-format boundaries as grammar strings.
impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussRat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(&g("1") + &g("1i"), g("1+1i"));
        assert_eq!(&g("1i") * &g("1i"), g("-1"));
        assert_eq!(&g("1/2+1/3i") * &g("2"), g("1+2/3i"));
        assert_eq!(&g("1+1i") - &g("1+1i"), GaussRat::zero());
    }

    #[test]
    fn inversion() {
        assert_eq!(g("2").invert().unwrap(), g("1/2"));
        assert_eq!(g("1i").invert().unwrap(), g("-1i"));
        assert_eq!(g("1+1i").invert().unwrap(), g("1/2-1/2i"));
        assert_eq!(GaussRat::zero().invert(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn canonical_reduction() {
        let half = BigRat::new(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!(half, BigRat::ratio(1, 2));
        assert_eq!(half.to_string(), "1/2");
        let neg = BigRat::new(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert!(BigRat::new(BigInt::one(), BigInt::zero()).is_err());
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["3", "-1/2", "1/2+1/3i", "-1i", "2/3i", "5-7/2i", "0"] {
            let v = g(s);
            assert_eq!(v.to_string(), s, "canonical form of {s}");
            assert_eq!(g(&v.to_string()), v);
        }
        assert!("".parse::<GaussRat>().is_err());
        assert!("1/".parse::<GaussRat>().is_err());
        assert!("i".parse::<GaussRat>().is_err(), "-i must be written -1i");
        assert!("1/0".parse::<GaussRat>().is_err());
        assert!("+3".parse::<GaussRat>().is_err());
    }

    #[test]
    fn norm_multiplicative() {
        let a = g("3/2-5i");
        let b = g("-7+1/3i");
        assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
    }
}
