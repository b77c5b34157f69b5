//! Rational functions in `t`, kept in a unique canonical form.
//!
//! Coordinates of sections over ℚ(t) live here. Every value is stored with a
//! monic denominator and `gcd(numerator, denominator) = 1`, re-reduced after
//! each operation, so mathematically equal functions are structurally equal
//! and chained group-law formulas cannot blow up in unreduced form.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::poly::{self, Polynomial};
use crate::rational::Rational;

/// A rational function `numerator / denominator` in canonical form.
///
/// Invariants:
/// * the denominator is nonzero and monic;
/// * `gcd(numerator, denominator) = 1`;
/// * zero is `0/1`.
///
/// Canonicality makes equality structural: two equal functions always have
/// identical coefficient lists.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Errors from rational-function construction and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatFuncError {
    /// Construction with an identically zero denominator.
    ZeroDenominator,
    /// Evaluation at a pole: the (reduced) denominator vanishes there.
    PoleAt(Rational),
}

impl fmt::Display for RatFuncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatFuncError::ZeroDenominator => write!(f, "zero denominator polynomial"),
            RatFuncError::PoleAt(b) => write!(f, "pole at t = {b}"),
        }
    }
}

impl core::error::Error for RatFuncError {}

impl RationalFunction {
    /// Builds `num/den` and reduces to canonical form. Errors when `den` is
    /// the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    /// Reduces and normalizes; `den` must be nonzero.
    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = poly::gcd(&num, &den).expect("den is nonzero");
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        // Make the denominator monic by moving its leading coefficient into
        // the numerator.
        let lc_inv = den
            .leading_coeff()
            .expect("den is nonzero")
            .recip()
            .expect("leading coefficient is nonzero");
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.monic(),
        }
    }

    /// A polynomial, viewed as a rational function.
    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// A constant.
    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the function is a constant (numerator constant, denominator
    /// 1 — which in canonical form captures all constants).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if [`is_constant`](Self::is_constant).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Degrees of numerator and denominator (`None` for a zero numerator).
    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        (self.num.degree(), self.den.degree())
    }

    /// Exact evaluation at `t = b`; errors at poles. Reducedness guarantees
    /// the numerator and denominator never vanish simultaneously.
    pub fn evaluate(&self, b: &Rational) -> Result<Rational, RatFuncError> {
        let dv = self.den.evaluate(b);
        if dv.is_zero() {
            return Err(RatFuncError::PoleAt(b.clone()));
        }
        Ok(&self.num.evaluate(b) / &dv)
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    /// `self²` — frequent enough in the group law to deserve a name.
    pub fn square(&self) -> Self {
        self * self
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// # Panics
    /// Panics on division by the zero function.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RationalFunction::canonical(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn r(num: i64, den: i64) -> Rational {
        Rational::from_pair(num, den)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(num), Polynomial::from_ints(den)).unwrap()
    }

    #[test]
    fn canonical_form_reduces_and_makes_denominator_monic() {
        // (2t² − 2) / (4t + 4) = (t − 1)/2: shared factor stripped, the
        // denominator's leading coefficient folded into the numerator.
        let f = rf(&[-2, 0, 2], &[4, 4]);
        assert_eq!(f.numerator(), &Polynomial::new(vec![r(-1, 2), r(1, 2)]));
        assert_eq!(f.denominator(), &Polynomial::one());
    }

    #[test]
    fn equal_functions_are_structurally_equal() {
        assert_eq!(rf(&[1, 1], &[2]), rf(&[2, 2], &[4]));
        assert_eq!(rf(&[0], &[5]), RationalFunction::zero());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(RatFuncError::ZeroDenominator)
        );
    }

    #[test]
    fn field_arithmetic() {
        // 1/(t−1) + 1/(t+1) = 2t/(t²−1)
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, rf(&[0, 2], &[-1, 0, 1]));
        assert_eq!(&a - &b, rf(&[2], &[-1, 0, 1]));
        assert_eq!(&a * &b, rf(&[1], &[-1, 0, 1]));
        assert_eq!(&a / &b, rf(&[1, 1], &[-1, 1]));
        assert_eq!(&(-&a) + &a, RationalFunction::zero());
    }

    #[test]
    fn evaluation_and_poles() {
        let f = rf(&[0, 2], &[-1, 0, 1]); // 2t/(t²−1)
        assert_eq!(f.evaluate(&r(2, 1)), Ok(r(4, 3)));
        assert_eq!(f.evaluate(&r(0, 1)), Ok(Rational::zero()));
        assert_eq!(f.evaluate(&r(1, 1)), Err(RatFuncError::PoleAt(r(1, 1))));
    }

    #[test]
    fn recip_swaps_and_renormalizes() {
        let f = rf(&[1, 1], &[2]); // (t+1)/2
        let g = f.recip().unwrap(); // 2/(t+1)
        assert_eq!(g, rf(&[2], &[1, 1]));
        assert!(RationalFunction::zero().recip().is_none());
    }

    #[test]
    fn constant_detection() {
        assert!(rf(&[3], &[7]).is_constant());
        assert_eq!(rf(&[3], &[7]).constant_value(), Some(r(3, 7)));
        assert!(!rf(&[0, 1], &[1]).is_constant());
        assert!(RationalFunction::zero().is_constant());
    }

    #[test]
    fn display_hides_trivial_denominator() {
        assert_eq!(rf(&[1, 0, 1], &[1]).to_string(), "t^2 + 1");
        assert_eq!(rf(&[1], &[0, 1]).to_string(), "(1) / (t)");
    }
}
