//! Exact arithmetic for elliptic surfaces fibered over hyperelliptic curves.
//!
//! The library builds, from the ground up, everything needed to certify the
//! standard hypotheses about a short-Weierstrass elliptic surface
//! `y² = x³ + a₄(t)x + a₆(t)` over a hyperelliptic base `w² = ∏(t − λᵢ)`:
//!
//! * [`rational`] — arbitrary-precision fractions, the scalar type everywhere;
//! * [`poly`] — dense univariate polynomials over the rationals (variable `t`),
//!   with gcd, squarefree decomposition, coprime bases, and valuations;
//! * [`ratfunc`] — canonical-form rational functions in `t`;
//! * [`curve_q`] — elliptic curves over ℚ: group law, integral models,
//!   Lutz–Nagell filtering, torsion orders;
//! * [`curve_ft`] — the generic fiber over ℚ(t): section arithmetic,
//!   j-invariant, isotriviality, specialization;
//! * [`surface`] — the surface layer: branch data, place-by-place vanishing
//!   orders, Kodaira types, Euler numbers, χ, minimality, adjunction;
//! * [`certify`] — the construction generator and the hypothesis checklist
//!   that ties it all together into a machine-readable certificate.
//!
//! All computation is exact; no floating point appears anywhere. The crate is
//! `no_std` (with `alloc`) so the algebra can run in embedded or wasm hosts.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod certify;
pub mod curve_ft;
pub mod curve_q;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod surface;

pub use certify::{
    build_construction, section_multiples_report, verify_construction, BuildError, Certificate,
    Check, ConstructionSpec, MultipleReport, SectionDegrees, Witness,
};
pub use curve_ft::{CurveFT, CurveFTError, SectionFT};
pub use curve_q::{CurveError, CurveQ, PointQ, TorsionOrder};
pub use poly::{Polynomial, Valuation};
pub use ratfunc::{RatFuncError, RationalFunction};
pub use rational::Rational;
pub use surface::{
    HyperellipticBase, KodairaType, LambdaViolation, PlaceLocus, PlaceReport, SurfaceError,
    SurfaceReport, WeierstrassSurfaceData,
};
