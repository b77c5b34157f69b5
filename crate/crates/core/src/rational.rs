//! Exact rational numbers: the scalar type used by every other module.
//!
//! [`Rational`] wraps an arbitrary-precision fraction kept permanently in
//! lowest terms with a positive denominator, so equality is structural and
//! every arithmetic result is exact. The display/parse format is `"p/q"`,
//! collapsing to `"n"` for integers — the same format used in all JSON
//! serialization downstream.

use alloc::string::String;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number.
///
/// Invariants (maintained by construction, inherited from the underlying
/// big-rational representation):
/// * stored in lowest terms: `gcd(|numerator|, denominator) = 1`;
/// * denominator strictly positive; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to canonical form.
    ///
    /// # Panics
    /// Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    /// Builds `num/den` from machine integers. Panics if `den` is zero.
    pub fn from_pair(num: i64, den: i64) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    /// The integer `n` as a rational.
    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Zero (`0/1`).
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// One (`1/1`).
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// The numerator (sign-carrying).
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// The denominator (always positive).
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// `self^exp` for a machine-word exponent (negative allowed for nonzero
    /// base).
    ///
    /// # Panics
    /// Panics when raising zero to a negative power.
    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            let inv = self.recip().expect("zero raised to negative power");
            Rational(inv.0.pow(exp.checked_neg().expect("exponent overflow")))
        } else {
            Rational(self.0.pow(exp))
        }
    }
}

impl fmt::Display for Rational {
    /// `"p/q"`, or just `"p"` when the value is an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure modes when parsing a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    /// Empty input, or an empty numerator/denominator part.
    Empty,
    /// A part was not a valid base-10 integer.
    InvalidInteger(String),
    /// The denominator part was zero.
    ZeroDenominator,
    /// More than one `/` separator.
    TooManySlashes,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::InvalidInteger(s) => write!(f, "invalid integer part {s:?}"),
            ParseRationalError::ZeroDenominator => write!(f, "zero denominator"),
            ParseRationalError::TooManySlashes => write!(f, "more than one '/' in rational"),
        }
    }
}

impl core::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `"p/q"` or `"n"` (optional leading sign on each part; a
    /// negative denominator is normalized into the numerator).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
            if part.is_empty() {
                return Err(ParseRationalError::Empty);
            }
            part.parse::<BigInt>()
                .map_err(|_| ParseRationalError::InvalidInteger(String::from(part)))
        };
        let mut parts = s.split('/');
        let num = parse_int(parts.next().unwrap_or(""))?;
        match parts.next() {
            None => Ok(Rational(BigRational::from_integer(num))),
            Some(den_part) => {
                if parts.next().is_some() {
                    return Err(ParseRationalError::TooManySlashes);
                }
                let den = parse_int(den_part)?;
                if den.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

// The four field operations, on values and on references. Reference forms
// exist because polynomial inner loops combine borrowed coefficients.
macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    /// # Panics
    /// Panics on division by zero.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}
