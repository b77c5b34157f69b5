//! Short-Weierstrass elliptic curves over ℚ.
//!
//! The model is always `y² = x³ + Ax + B` with rational `A`, `B` and
//! `4A³ + 27B² ≠ 0`. On top of the chord-tangent group law this module
//! builds the two torsion tools the certificate layer needs:
//!
//! * a scaling to a minimal integral model `(x, y) ↦ (u²x, u³y)`,
//!   `(A, B) ↦ (u⁴A, u⁶B)`, so integrality-based criteria apply;
//! * the Lutz–Nagell filter — a torsion point on an integral model has
//!   integer coordinates and `y = 0` or `y² | 4A³ + 27B²` — used as a
//!   one-sided *non-torsion* certificate;
//! * a total torsion-order routine, terminating by the Mazur bound (the
//!   order of a rational torsion point is at most 12).

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// An elliptic curve `y² = x³ + Ax + B` over ℚ.
///
/// Invariant: `4A³ + 27B² ≠ 0` (checked at construction), so the cubic has
/// distinct roots and the curve is nonsingular.
#[derive(Clone, PartialEq, Eq)]
pub struct CurveQ {
    a: Rational,
    b: Rational,
}

/// A point on a [`CurveQ`]: the identity `O` (point at infinity) or an
/// affine pair satisfying the Weierstrass equation exactly.
#[derive(Clone, PartialEq, Eq)]
pub enum PointQ {
    Infinity,
    Affine { x: Rational, y: Rational },
}

/// Result of a torsion-order computation: a finite order within the Mazur
/// bound, or certified infinite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for TorsionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionOrder::Finite(k) => write!(f, "{k}"),
            TorsionOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Errors from curve construction and the integrality-based tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveError {
    /// `4A³ + 27B² = 0`: the cubic has a repeated root.
    Singular,
    /// The Lutz–Nagell filter was handed a curve with non-integer `A`, `B`.
    NonIntegralModel,
    /// The Lutz–Nagell filter was handed the identity point.
    IdentityPoint,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::Singular => write!(f, "singular curve: 4A^3 + 27B^2 = 0"),
            CurveError::NonIntegralModel => {
                write!(f, "test requires an integral model (integer A and B)")
            }
            CurveError::IdentityPoint => write!(f, "test requires an affine point"),
        }
    }
}

impl core::error::Error for CurveError {}

impl PointQ {
    pub fn infinity() -> Self {
        PointQ::Infinity
    }

    pub fn affine(x: Rational, y: Rational) -> Self {
        PointQ::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PointQ::Infinity)
    }

    /// Affine coordinates, or `None` for the identity.
    pub fn xy(&self) -> Option<(&Rational, &Rational)> {
        match self {
            PointQ::Infinity => None,
            PointQ::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointQ::Infinity => write!(f, "O"),
            PointQ::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CurveQ {
    /// Builds `y² = x³ + Ax + B`; errors when `4A³ + 27B² = 0`.
    pub fn new(a: Rational, b: Rational) -> Result<Self, CurveError> {
        let curve = CurveQ { a, b };
        if curve.discriminant_core().is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(curve)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `4A³ + 27B²` — nonzero by the curve invariant. The discriminant is
    /// −16 times this; Lutz–Nagell divides by `y²` into exactly this value.
    pub fn discriminant_core(&self) -> Rational {
        let a3 = &(&self.a * &self.a) * &self.a;
        let b2 = &self.b * &self.b;
        &(&Rational::from(4) * &a3) + &(&Rational::from(27) * &b2)
    }

    /// True iff `P` is the identity or satisfies the equation exactly.
    pub fn on_curve(&self, p: &PointQ) -> bool {
        match p {
            PointQ::Infinity => true,
            PointQ::Affine { x, y } => {
                let lhs = y * y;
                let rhs = &(&(&(x * x) * x) + &(&self.a * x)) + &self.b;
                lhs == rhs
            }
        }
    }

    /// `−P`: reflection across the x-axis.
    pub fn negate(&self, p: &PointQ) -> PointQ {
        match p {
            PointQ::Infinity => PointQ::Infinity,
            PointQ::Affine { x, y } => PointQ::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    /// The chord-tangent group sum. Total: identity, inverse, tangent, and
    /// chord cases are all handled. Inputs must lie on the curve.
    pub fn add(&self, p: &PointQ, q: &PointQ) -> PointQ {
        debug_assert!(self.on_curve(p) && self.on_curve(q));
        let ((x1, y1), (x2, y2)) = match (p, q) {
            (PointQ::Infinity, _) => return q.clone(),
            (_, PointQ::Infinity) => return p.clone(),
            (PointQ::Affine { x: x1, y: y1 }, PointQ::Affine { x: x2, y: y2 }) => {
                ((x1, y1), (x2, y2))
            }
        };
        if x1 == x2 && (y1 != y2 || y1.is_zero()) {
            // Vertical line: P + (−P) = O, including the 2-torsion tangent.
            return PointQ::Infinity;
        }
        let slope = if x1 == x2 {
            // Tangent: λ = (3x² + A) / (2y).
            let num = &(&Rational::from(3) * &(x1 * x1)) + &self.a;
            let den = &Rational::from(2) * y1;
            &num / &den
        } else {
            // Chord: λ = (y₂ − y₁) / (x₂ − x₁).
            &(y2 - y1) / &(x2 - x1)
        };
        let x3 = &(&(&slope * &slope) - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        PointQ::Affine { x: x3, y: y3 }
    }

    /// `nP` by double-and-add; `0·P = O` and `(−n)P = −(nP)`.
    pub fn scalar_mul(&self, n: i64, p: &PointQ) -> PointQ {
        let (mut k, base) = if n < 0 {
            (n.unsigned_abs(), self.negate(p))
        } else {
            (n as u64, p.clone())
        };
        let mut acc = PointQ::Infinity;
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

    /// Rescales to the minimal integral model: the least positive integer
    /// `u` with `u⁴A, u⁶B ∈ ℤ`, applying `(x, y) ↦ (u²x, u³y)`. Group
    /// structure is preserved (the map is an isomorphism). Already-integral
    /// curves come back unchanged with `u = 1`.
    pub fn to_integral_model(&self, p: &PointQ) -> (CurveQ, PointQ, Rational) {
        // Per prime q dividing a denominator, the minimal exponent is
        // v_q(u) = max(ceil(α/4), ceil(β/6)) with α = v_q(den A),
        // β = v_q(den B).
        let fa = factor_positive(self.a.denominator());
        let fb = factor_positive(self.b.denominator());
        let mut u = BigInt::one();
        let lookup = |facs: &[(BigInt, u32)], q: &BigInt| {
            facs.iter()
                .find(|(p, _)| p == q)
                .map(|(_, e)| *e)
                .unwrap_or(0)
        };
        let mut primes: Vec<BigInt> = fa.iter().map(|(q, _)| q.clone()).collect();
        for (q, _) in &fb {
            if !primes.contains(q) {
                primes.push(q.clone());
            }
        }
        for q in &primes {
            let alpha = lookup(&fa, q);
            let beta = lookup(&fb, q);
            let vu = (alpha.div_ceil(4)).max(beta.div_ceil(6));
            for _ in 0..vu {
                u *= q;
            }
        }
        let u = Rational::from(u);
        let curve = CurveQ {
            a: &u.pow(4) * &self.a,
            b: &u.pow(6) * &self.b,
        };
        let point = match p {
            PointQ::Infinity => PointQ::Infinity,
            PointQ::Affine { x, y } => PointQ::Affine {
                x: &u.pow(2) * x,
                y: &u.pow(3) * y,
            },
        };
        (curve, point, u)
    }

    /// The Lutz–Nagell filter on an integral model: returns `true` when `P`
    /// is *certified non-torsion* — its coordinates are non-integral, or
    /// `2P ≠ O` and `y(P)²` fails to divide `4A³ + 27B²`. A `false` is
    /// inconclusive on its own (the point merely passed the filter).
    ///
    /// Errors when `A` or `B` is not an integer, or when `P = O`.
    pub fn lutz_nagell_reject(&self, p: &PointQ) -> Result<bool, CurveError> {
        if !self.a.is_integer() || !self.b.is_integer() {
            return Err(CurveError::NonIntegralModel);
        }
        let (x, y) = match p {
            PointQ::Infinity => return Err(CurveError::IdentityPoint),
            PointQ::Affine { x, y } => (x, y),
        };
        if !x.is_integer() || !y.is_integer() {
            return Ok(true);
        }
        if y.is_zero() {
            // 2P = O: two-torsion always passes.
            return Ok(false);
        }
        let y2 = (y * y).numerator().clone();
        let core = self.discriminant_core().numerator().clone();
        Ok(!core.is_multiple_of(&y2))
    }

    /// The order of `P` in `E(ℚ)`: `Finite(k)` for the least `k ≤ 12` with
    /// `kP = O`, else `Infinite`. Total and terminating: the walk happens on
    /// the integral model, any Lutz–Nagell rejection of a multiple certifies
    /// infinite order, and the Mazur bound caps finite orders at 12.
    pub fn torsion_order(&self, p: &PointQ) -> TorsionOrder {
        debug_assert!(self.on_curve(p));
        if p.is_infinity() {
            return TorsionOrder::Finite(1);
        }
        let (curve, point, _) = self.to_integral_model(p);
        // At the top of iteration k the accumulator holds k·P.
        let mut multiple = point.clone();
        for k in 1..=12u32 {
            if multiple.is_infinity() {
                return TorsionOrder::Finite(k);
            }
            if curve
                .lutz_nagell_reject(&multiple)
                .expect("model is integral and multiple is affine")
            {
                return TorsionOrder::Infinite;
            }
            multiple = curve.add(&multiple, &point);
        }
        // No multiple up to 12·P closed the cycle, so the order exceeds
        // every order a rational torsion point can have.
        TorsionOrder::Infinite
    }
}

impl fmt::Display for CurveQ {
    /// `y^2 = x^3 + Ax + B` with zero terms dropped: `y^2 = x^3 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        for (value, symbol) in [(&self.a, Some("x")), (&self.b, None)] {
            if value.is_zero() {
                continue;
            }
            let sign = if value.is_negative() { " - " } else { " + " };
            let mag = value.abs();
            write!(f, "{sign}")?;
            match symbol {
                Some(sym) => {
                    if !mag.is_one() {
                        if mag.is_integer() {
                            write!(f, "{mag}")?;
                        } else {
                            write!(f, "({mag})")?;
                        }
                    }
                    write!(f, "{sym}")?;
                }
                None => write!(f, "{mag}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Trial-division factorization of a positive integer (denominators stay
/// small in practice: they are u-scaling targets, not cryptographic sizes).
fn factor_positive(n: &BigInt) -> Vec<(BigInt, u32)> {
    debug_assert!(n.is_positive());
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0u32;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d = if d == BigInt::from(2) {
            BigInt::from(3)
        } else {
            d + 2
        };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}
