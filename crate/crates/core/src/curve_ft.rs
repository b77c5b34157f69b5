//! The generic fiber: an elliptic curve over the rational function field ℚ(t).
//!
//! Sections of the elliptic surface correspond to points of this curve, so
//! the module carries the same chord-tangent group law as [`crate::curve_q`]
//! — with coordinates in ℚ(t) — plus the two analyses that only make sense
//! in a family: the j-invariant (whose non-constancy is exactly
//! non-isotriviality) and specialization of curve and section to a ℚ-fiber
//! at a parameter value.

use core::fmt;

use crate::curve_q::{CurveQ, PointQ};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::rational::Rational;

/// An elliptic curve `y² = x³ + a₄(t)x + a₆(t)` over ℚ(t), with polynomial
/// coefficients.
///
/// Invariant: the discriminant polynomial `−16(4a₄³ + 27a₆²)` is not
/// identically zero (checked at construction), so the generic fiber is a
/// genuine elliptic curve.
#[derive(Clone, PartialEq, Eq)]
pub struct CurveFT {
    a4: Polynomial,
    a6: Polynomial,
}

/// A section of the family: the zero section `O` or an affine pair of
/// rational functions satisfying the Weierstrass equation identically.
#[derive(Clone, PartialEq, Eq)]
pub enum SectionFT {
    Infinity,
    Affine {
        x: RationalFunction,
        y: RationalFunction,
    },
}

/// Errors from family construction and specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveFTError {
    /// The discriminant polynomial vanishes identically: every fiber of the
    /// would-be family is singular.
    SingularEquation,
    /// Specialization at a parameter where the discriminant vanishes: the
    /// fiber there is not an elliptic curve.
    BadFiber(Rational),
    /// Specialization at a pole of a section coordinate.
    SectionPole(Rational),
}

impl fmt::Display for CurveFTError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveFTError::SingularEquation => {
                write!(f, "singular equation: discriminant is identically zero")
            }
            CurveFTError::BadFiber(b) => write!(f, "bad fiber: discriminant vanishes at t = {b}"),
            CurveFTError::SectionPole(b) => write!(f, "section has a pole at t = {b}"),
        }
    }
}

impl core::error::Error for CurveFTError {}

impl SectionFT {
    pub fn infinity() -> Self {
        SectionFT::Infinity
    }

    pub fn affine(x: RationalFunction, y: RationalFunction) -> Self {
        SectionFT::Affine { x, y }
    }

    /// An affine section with constant coordinates.
    pub fn constant(x: Rational, y: Rational) -> Self {
        SectionFT::Affine {
            x: RationalFunction::constant(x),
            y: RationalFunction::constant(y),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, SectionFT::Infinity)
    }

    /// Coordinates, or `None` for the zero section.
    pub fn xy(&self) -> Option<(&RationalFunction, &RationalFunction)> {
        match self {
            SectionFT::Infinity => None,
            SectionFT::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for SectionFT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectionFT::Infinity => write!(f, "O"),
            SectionFT::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for SectionFT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CurveFT {
    /// Builds `y² = x³ + a₄(t)x + a₆(t)`; errors when the discriminant
    /// polynomial is identically zero.
    pub fn new(a4: Polynomial, a6: Polynomial) -> Result<Self, CurveFTError> {
        let curve = CurveFT { a4, a6 };
        if curve.discriminant_poly().is_zero() {
            return Err(CurveFTError::SingularEquation);
        }
        Ok(curve)
    }

    pub fn a4(&self) -> &Polynomial {
        &self.a4
    }

    pub fn a6(&self) -> &Polynomial {
        &self.a6
    }

    /// The discriminant polynomial `Δ(t) = −16(4a₄³ + 27a₆²)`.
    pub fn discriminant_poly(&self) -> Polynomial {
        let four_a4_cubed = self.a4.pow(3).scale(&Rational::from(4));
        let squares = &four_a4_cubed + &self.a6.pow(2).scale(&Rational::from(27));
        squares.scale(&Rational::from(-16))
    }

    /// True iff `S` is the zero section or satisfies the equation as an
    /// identity in ℚ(t) — canonical forms make this a structural check.
    pub fn on_curve(&self, s: &SectionFT) -> bool {
        match s {
            SectionFT::Infinity => true,
            SectionFT::Affine { x, y } => {
                let a4 = RationalFunction::from_poly(self.a4.clone());
                let a6 = RationalFunction::from_poly(self.a6.clone());
                let lhs = y * y;
                let rhs = &(&(&(x * x) * x) + &(&a4 * x)) + &a6;
                lhs == rhs
            }
        }
    }

    /// `−S`.
    pub fn negate(&self, s: &SectionFT) -> SectionFT {
        match s {
            SectionFT::Infinity => SectionFT::Infinity,
            SectionFT::Affine { x, y } => SectionFT::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    /// The group sum of two sections, by the same chord-tangent formulas as
    /// over ℚ — coordinates are re-canonicalized at every step, which keeps
    /// repeated additions from accumulating unreduced factors.
    pub fn add(&self, s: &SectionFT, t: &SectionFT) -> SectionFT {
        debug_assert!(self.on_curve(s) && self.on_curve(t));
        let ((x1, y1), (x2, y2)) = match (s, t) {
            (SectionFT::Infinity, _) => return t.clone(),
            (_, SectionFT::Infinity) => return s.clone(),
            (SectionFT::Affine { x: x1, y: y1 }, SectionFT::Affine { x: x2, y: y2 }) => {
                ((x1, y1), (x2, y2))
            }
        };
        if x1 == x2 && (y1 != y2 || y1.is_zero()) {
            return SectionFT::Infinity;
        }
        let slope = if x1 == x2 {
            // Tangent: λ = (3x² + a₄) / (2y).
            let three_x2 = &RationalFunction::constant(Rational::from(3)) * &x1.square();
            let num = &three_x2 + &RationalFunction::from_poly(self.a4.clone());
            let den = &RationalFunction::constant(Rational::from(2)) * y1;
            &num / &den
        } else {
            &(y2 - y1) / &(x2 - x1)
        };
        let x3 = &(&slope.square() - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        SectionFT::Affine { x: x3, y: y3 }
    }

    /// `nS` by double-and-add; `0·S = O` and `(−n)S = −(nS)`.
    pub fn scalar_mul(&self, n: i64, s: &SectionFT) -> SectionFT {
        let (mut k, base) = if n < 0 {
            (n.unsigned_abs(), self.negate(s))
        } else {
            (n as u64, s.clone())
        };
        let mut acc = SectionFT::Infinity;
        let mut doubled = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &doubled);
            }
            k >>= 1;
            if k > 0 {
                doubled = self.add(&doubled, &doubled);
            }
        }
        acc
    }

    /// The j-invariant `1728 · 4a₄³ / (4a₄³ + 27a₆²)`, in canonical form.
    /// Constant exactly when the family is isotrivial.
    pub fn j_invariant(&self) -> RationalFunction {
        let four_a4_cubed = self.a4.pow(3).scale(&Rational::from(4));
        let den = &four_a4_cubed + &self.a6.pow(2).scale(&Rational::from(27));
        let num = four_a4_cubed.scale(&Rational::from(1728));
        RationalFunction::new(num, den).expect("denominator nonzero: discriminant is nonzero")
    }

    /// True iff the j-invariant is a constant function of `t`.
    pub fn is_isotrivial(&self) -> bool {
        self.j_invariant().is_constant()
    }

    /// Specializes curve and section at `t = b`, yielding an elliptic curve
    /// over ℚ and a point on it.
    ///
    /// Errors when the fiber at `b` is singular (`Δ(b) = 0`) or when a
    /// section coordinate has a pole at `b`. The zero section specializes to
    /// the identity.
    pub fn specialize(&self, s: &SectionFT, b: &Rational) -> Result<(CurveQ, PointQ), CurveFTError> {
        if self.discriminant_poly().evaluate(b).is_zero() {
            return Err(CurveFTError::BadFiber(b.clone()));
        }
        let curve = CurveQ::new(self.a4.evaluate(b), self.a6.evaluate(b))
            .expect("fiber discriminant is nonzero at a good parameter");
        let point = match s {
            SectionFT::Infinity => PointQ::Infinity,
            SectionFT::Affine { x, y } => {
                let xb = x
                    .evaluate(b)
                    .map_err(|_| CurveFTError::SectionPole(b.clone()))?;
                let yb = y
                    .evaluate(b)
                    .map_err(|_| CurveFTError::SectionPole(b.clone()))?;
                PointQ::Affine { x: xb, y: yb }
            }
        };
        debug_assert!(curve.on_curve(&point));
        Ok((curve, point))
    }
}

impl fmt::Display for CurveFT {
    /// `y^2 = x^3 + (t^2 + 1)x + 1`, dropping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        if !self.a4.is_zero() {
            if self.a4.is_constant() {
                let c = self.a4.coeff(0);
                let sign = if c.is_negative() { " - " } else { " + " };
                let mag = c.abs();
                write!(f, "{sign}")?;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "x")?;
            } else {
                write!(f, " + ({})x", self.a4)?;
            }
        }
        if !self.a6.is_zero() {
            if self.a6.is_constant() {
                let c = self.a6.coeff(0);
                let sign = if c.is_negative() { " - " } else { " + " };
                write!(f, "{sign}{}", c.abs())?;
            } else {
                write!(f, " + ({})", self.a6)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CurveFT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
