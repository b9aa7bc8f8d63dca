//! Gaussian rational scalars: complex numbers with arbitrary-precision
//! rational real and imaginary parts.
//!
//! Every value is kept in canonical form. The rational parts are always
//! reduced with positive denominators (guaranteed by [`num_rational::Ratio`]),
//! and zero is always `0/1 + (0/1)i`, so `==` is structural equality of
//! canonical forms and `Hash` agrees with it.
//!
//! Values render to and parse from a small literal grammar:
//! `-3`, `3/4`, `2i`, `i`, `1/2+3/4i`, `-1/2-1i`. The parser accepts
//! unreduced fractions and normalizes; `3//4` is a parse error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of Q(i), stored as canonical rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

/// Error produced when a scalar literal does not match the grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: String,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussianRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `n*i` as a purely imaginary scalar.
    pub fn imag_int(n: i64) -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True exactly for real values that are strictly positive.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers guard with `is_zero`.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm_sqr();
        GaussianRational::new(&self.re / &n, -&self.im / &n)
    }

    /// The nonnegative square root, when it exists inside the field.
    ///
    /// Returns `Some(r)` with `r >= 0` and `r*r == self` only for real,
    /// nonnegative values whose reduced numerator and denominator are both
    /// perfect squares; `None` otherwise. Staying inside Q(i) is deliberate:
    /// callers that would need an irrational root must surface that as an
    /// explicit error instead of approximating.
    pub fn rational_sqrt(&self) -> Option<Self> {
        if !self.is_real() || self.re.is_negative() {
            return None;
        }
        let num = self.re.numer();
        let den = self.re.denom();
        let num_root = num.sqrt();
        let den_root = den.sqrt();
        if &(&num_root * &num_root) == num && &(&den_root * &den_root) == den {
            Some(GaussianRational::from_rational(BigRational::new(num_root, den_root)))
        } else {
            None
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.re.is_zero() {
            write!(f, "{}", fmt_rational(&self.re))?;
            if self.im.is_zero() {
                return Ok(());
            }
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.im.is_one() {
            write!(f, "i")
        } else if (-&self.im).is_one() {
            write!(f, "-i")
        } else {
            write!(f, "{}i", fmt_rational(&self.im))
        }
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, ParseScalarError> {
    let err = |reason: &str| ParseScalarError {
        literal: whole.to_string(),
        reason: reason.to_string(),
    };
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_str).map_err(|_| err("bad numerator"))?;
    match den_str {
        None => Ok(BigRational::from_integer(numer)),
        Some(d) => {
            let denom = BigInt::from_str(d).map_err(|_| err("bad denominator"))?;
            if denom.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        let err = |reason: &str| ParseScalarError {
            literal: input.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        // A sign past position 0 separates the real part from the imaginary
        // part, unless it follows '/' (a signed denominator). Rational
        // literals contain no exponents, so this is unambiguous.
        let bytes = s.as_bytes();
        let split = s
            .char_indices()
            .rev()
            .find(|(idx, c)| {
                *idx > 0 && (*c == '+' || *c == '-') && bytes[idx - 1] != b'/'
            })
            .map(|(idx, _)| idx);
        let (re_str, im_str) = match split {
            Some(idx) => {
                let (r, i) = s.split_at(idx);
                if !i.ends_with('i') {
                    return Err(err("second component must be imaginary"));
                }
                (Some(r), Some(i))
            }
            None => {
                if s.ends_with('i') {
                    (None, Some(s))
                } else {
                    (Some(s), None)
                }
            }
        };
        let re = match re_str {
            Some(r) => parse_rational(r, input)?,
            None => BigRational::zero(),
        };
        let im = match im_str {
            Some(i) => {
                let body = &i[..i.len() - 1];
                match body {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    _ => parse_rational(body, input)?,
                }
            }
            None => BigRational::zero(),
        };
        Ok(GaussianRational::new(re, im))
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * rhs.inv()
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
