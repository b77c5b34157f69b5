//! The elliptic-surface layer over a hyperelliptic base.
//!
//! The base curve is `B: w² = ∏ᵢ (t − λᵢ)` (an odd number of branch values,
//! so `∞` is totally ramified and also a branch point). Weierstrass data
//! `a₄, a₆` are sections of `L⁴, L⁶` for the degree-1 line bundle
//! `L = 𝒪_B(∞)`; since the pole divisor of `t` on `B` is `2∞`, precisely the
//! polynomials of degree ≤ 2 (resp. ≤ 3) qualify.
//!
//! Everything the fibration's numerics need happens place by place:
//!
//! * affine places are monic squarefree coprime-basis factors of the
//!   discriminant (refined against the branch polynomial, so every factor is
//!   entirely branched or entirely unbranched);
//! * vanishing orders are computed downstairs in `t` and doubled at branch
//!   loci (the double cover ramifies there); the `∞`-order of a degree-`d`
//!   section of `L^⊗k` is `k − 2d`;
//! * each order triple maps to a Kodaira fiber type with its Euler number,
//!   the weighted Euler numbers sum to the surface's Euler number, and
//!   `χ(𝒪) = e/12` for minimal data;
//! * minimality means no place carries `v(a₄) ≥ 4` and `v(a₆) ≥ 6`
//!   simultaneously, and adjunction then makes any section a curve of
//!   self-intersection `−deg L = −1` and genus `g(B)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::curve_ft::CurveFT;
use crate::poly::{self, Polynomial, Valuation};
use crate::rational::Rational;

/// The hyperelliptic base `w² = ∏ (t − λᵢ)` with an odd number of branch
/// values.
///
/// Construction only fixes the shape (odd count ≥ 3, so the genus formula
/// applies); distinctness and nonvanishing of the λᵢ are *checked*, not
/// assumed, via [`HyperellipticBase::validate_lambdas`] — callers that need
/// a valid base (like [`WeierstrassSurfaceData::new`]) enforce them, while
/// certificate pipelines can report a violation as a failed check instead
/// of refusing to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticBase {
    genus: u32,
    lambdas: Vec<Rational>,
    branch_poly: Polynomial,
}

/// The first violated condition on a λ-list, with 1-based witness indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaViolation {
    /// Two branch values coincide.
    Duplicate { first: usize, second: usize },
    /// A branch value is zero.
    Zero { index: usize },
    /// A branch value is a root of the constraint polynomial it must avoid.
    ConstraintRoot { index: usize },
}

impl fmt::Display for LambdaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaViolation::Duplicate { first, second } => {
                write!(f, "duplicate lambda at indices {first} and {second}")
            }
            LambdaViolation::Zero { index } => write!(f, "lambda at index {index} is zero"),
            LambdaViolation::ConstraintRoot { index } => {
                write!(f, "lambda at index {index} is a root of the constraint polynomial")
            }
        }
    }
}

/// Weierstrass data on the base: `y² = x³ + a₄(t)x + a₆(t)` with
/// `a₄ ∈ H⁰(L⁴)`, `a₆ ∈ H⁰(L⁶)`.
///
/// Invariants, checked at construction:
/// * the base's λᵢ are pairwise distinct and nonzero;
/// * `deg a₄ ≤ 2` and `deg a₆ ≤ 3` (the section condition for `L = 𝒪_B(∞)`);
/// * the discriminant `Δ = −16(4a₄³ + 27a₆²)` is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassSurfaceData {
    base: HyperellipticBase,
    a4: Polynomial,
    a6: Polynomial,
}

/// Errors from surface-data construction and analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceError {
    /// Fewer than three branch values, or an even number of them.
    BadBranchCount { got: usize },
    /// The λ-list violates distinctness or nonvanishing.
    InvalidLambdas(LambdaViolation),
    /// A coefficient exceeds its section degree bound.
    SectionDegreeBound {
        name: &'static str,
        max: usize,
        got: usize,
    },
    /// The discriminant vanishes identically: no elliptic fibration.
    SingularEquation,
    /// An operation requires minimal Weierstrass data.
    NonMinimalData,
    /// An internal consistency check failed (inconsistent order triple or
    /// broken degree bookkeeping) — indicates a bug, not bad input.
    InvariantViolation(String),
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::BadBranchCount { got } => {
                write!(f, "need an odd number (>= 3) of branch values, got {got}")
            }
            SurfaceError::InvalidLambdas(v) => write!(f, "invalid branch values: {v}"),
            SurfaceError::SectionDegreeBound { name, max, got } => {
                write!(f, "section degree bound violated: deg {name} = {got} > {max}")
            }
            SurfaceError::SingularEquation => {
                write!(f, "singular equation: discriminant is identically zero")
            }
            SurfaceError::NonMinimalData => {
                write!(f, "operation requires minimal Weierstrass data")
            }
            SurfaceError::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl core::error::Error for SurfaceError {}

impl HyperellipticBase {
    /// Builds the base from its branch values. Requires an odd count ≥ 3
    /// (`2g + 1` values for genus `g ≥ 1`); value-level validity is left to
    /// [`validate_lambdas`](Self::validate_lambdas).
    pub fn new(lambdas: Vec<Rational>) -> Result<Self, SurfaceError> {
        let n = lambdas.len();
        if n < 3 || n.is_multiple_of(2) {
            return Err(SurfaceError::BadBranchCount { got: n });
        }
        let branch_poly = Polynomial::from_roots(&lambdas);
        Ok(HyperellipticBase {
            genus: ((n - 1) / 2) as u32,
            lambdas,
            branch_poly,
        })
    }

    /// The genus of `B`, by the Hurwitz formula for a double cover: with
    /// `2g + 2` branch points (the `2g + 1` finite ones plus `∞`), the genus
    /// is `(branch points − 2)/2 = g`.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    /// `∏ (t − λᵢ)`, monic of degree `2g + 1`.
    pub fn branch_poly(&self) -> &Polynomial {
        &self.branch_poly
    }

    /// Checks that the branch values are pairwise distinct, all nonzero, and
    /// avoid the roots of `constraint`. Returns the first violation, with
    /// 1-based indices, in that fixed order of conditions.
    pub fn validate_lambdas(&self, constraint: &Polynomial) -> Result<(), LambdaViolation> {
        for i in 0..self.lambdas.len() {
            for j in (i + 1)..self.lambdas.len() {
                if self.lambdas[i] == self.lambdas[j] {
                    return Err(LambdaViolation::Duplicate {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        for (i, lambda) in self.lambdas.iter().enumerate() {
            if lambda.is_zero() {
                return Err(LambdaViolation::Zero { index: i + 1 });
            }
        }
        for (i, lambda) in self.lambdas.iter().enumerate() {
            if constraint.evaluate(lambda).is_zero() {
                return Err(LambdaViolation::ConstraintRoot { index: i + 1 });
            }
        }
        Ok(())
    }
}

/// A Kodaira fiber type (or the two non-fiber outcomes of the order-triple
/// classification: a smooth fiber, and non-minimal data).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodairaType {
    /// Not a singular fiber at all.
    Smooth,
    /// `I_n`, `n ≥ 1`: a nodal rational curve for `n = 1`, a cycle of `n`
    /// rational curves for `n ≥ 2`.
    I(u32),
    II,
    III,
    IV,
    /// `I_n^*`, `n ≥ 0`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
    /// `v(a₄) ≥ 4` and `v(a₆) ≥ 6`: the Weierstrass data can be scaled down;
    /// no fiber type is assigned.
    NonMinimal,
}

impl KodairaType {
    /// The Euler number of the fiber; `None` for non-minimal data (no fiber
    /// is determined), 0 for a smooth fiber. For every genuine Kodaira type
    /// the Euler number equals the vanishing order of Δ at the place.
    pub fn euler_number(&self) -> Option<u32> {
        match self {
            KodairaType::Smooth => Some(0),
            KodairaType::I(n) => Some(*n),
            KodairaType::II => Some(2),
            KodairaType::III => Some(3),
            KodairaType::IV => Some(4),
            KodairaType::IStar(n) => Some(6 + n),
            KodairaType::IVStar => Some(8),
            KodairaType::IIIStar => Some(9),
            KodairaType::IIStar => Some(10),
            KodairaType::NonMinimal => None,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::Smooth => write!(f, "smooth"),
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
            KodairaType::NonMinimal => write!(f, "NON-MINIMAL"),
        }
    }
}

/// Where a place lives: a monic squarefree polynomial cutting out a packet
/// of affine points, or the single point over `t = ∞`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PlaceLocus {
    Affine(Polynomial),
    Infinity,
}

impl fmt::Display for PlaceLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceLocus::Affine(p) => write!(f, "{p}"),
            PlaceLocus::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for PlaceLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The classification of the fibers over one place of the base.
///
/// Orders are measured **on `B`**: at a branch locus they are twice the
/// orders in `t`; at `∞` they come from the section-degree formula. A
/// non-branch affine locus of degree `d` carries `2d` points of `B` (two
/// unramified preimages per root), a branch locus `d`, and `∞` exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceReport {
    pub locus: PlaceLocus,
    pub branch: bool,
    pub points_on_b: u32,
    pub v_a4: Valuation,
    pub v_a6: Valuation,
    pub v_delta: u32,
    pub kodaira_type: KodairaType,
    /// `None` exactly for a non-minimal place.
    pub euler_number: Option<u32>,
}

/// The full fiber analysis of one set of Weierstrass data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    /// Singular places only, affine loci in deterministic order, `∞` last.
    pub places: Vec<PlaceReport>,
    /// Σ points·euler over singular places; `None` when non-minimal.
    pub total_euler: Option<u32>,
    /// `total_euler / 12`; `None` when non-minimal.
    pub chi: Option<u32>,
    pub minimal: bool,
    pub base_genus: u32,
    pub isotrivial: bool,
}

/// The order at `∞` of a polynomial `h`, viewed as a section of `L^⊗k` on
/// `B` (where `t` has pole divisor `2∞`): `k − 2·deg h`. The zero section
/// vanishes to infinite order. Errors when `deg h > k/2` — then `h` is not
/// a section of `L^⊗k` at all.
pub fn infinity_order(h: &Polynomial, k: u32) -> Result<Valuation, SurfaceError> {
    match h.degree() {
        None => Ok(Valuation::Infinite),
        Some(d) => {
            let d = d as u32;
            if 2 * d > k {
                return Err(SurfaceError::SectionDegreeBound {
                    name: "section",
                    max: (k / 2) as usize,
                    got: d as usize,
                });
            }
            Ok(Valuation::Finite(k - 2 * d))
        }
    }
}

/// Maps a triple of vanishing orders (of `a₄`, `a₆`, `Δ` at one place of the
/// base, in characteristic zero) to its Kodaira fiber type.
///
/// The precondition is that the orders are consistent — they come from one
/// actual place via `Δ = −16(4a₄³ + 27a₆²)`. Inconsistent triples either
/// land on some type anyway or return an invariant-violation error; they
/// never panic.
pub fn classify_fiber(
    v_a4: Valuation,
    v_a6: Valuation,
    v_delta: u32,
) -> Result<KodairaType, SurfaceError> {
    if v_delta == 0 {
        return Ok(KodairaType::Smooth);
    }
    if v_a4.at_least(4) && v_a6.at_least(6) {
        return Ok(KodairaType::NonMinimal);
    }
    if v_a4 == Valuation::Finite(0) {
        return Ok(KodairaType::I(v_delta));
    }
    if v_a6 == Valuation::Finite(1) {
        return Ok(KodairaType::II);
    }
    if v_a4 == Valuation::Finite(1) {
        return Ok(KodairaType::III);
    }
    if v_a6 == Valuation::Finite(2) {
        return Ok(KodairaType::IV);
    }
    // From here on v(a₄) ≥ 2 and v(a₆) ≥ 3, so v(Δ) ≥ 6.
    if v_delta == 6 {
        return Ok(KodairaType::IStar(0));
    }
    if v_a4 == Valuation::Finite(2) && v_a6 == Valuation::Finite(3) {
        let n = v_delta.checked_sub(6).filter(|n| *n >= 1).ok_or_else(|| {
            SurfaceError::InvariantViolation(format!(
                "order triple (2, 3, {v_delta}) is impossible: v(delta) must exceed 6"
            ))
        })?;
        return Ok(KodairaType::IStar(n));
    }
    if v_a6 == Valuation::Finite(4) {
        return Ok(KodairaType::IVStar);
    }
    if v_a4 == Valuation::Finite(3) {
        return Ok(KodairaType::IIIStar);
    }
    if v_a6 == Valuation::Finite(5) {
        return Ok(KodairaType::IIStar);
    }
    // v(a₄) ≥ 4 and v(a₆) ≥ 6 was caught by the non-minimal branch; nothing
    // else remains for consistent input.
    Err(SurfaceError::InvariantViolation(format!(
        "unclassifiable order triple ({v_a4}, {v_a6}, {v_delta})"
    )))
}

impl WeierstrassSurfaceData {
    /// Validates and assembles surface data: distinct nonzero branch values,
    /// section degree bounds `deg a₄ ≤ 2`, `deg a₆ ≤ 3`, and a not
    /// identically vanishing discriminant.
    pub fn new(
        base: HyperellipticBase,
        a4: Polynomial,
        a6: Polynomial,
    ) -> Result<Self, SurfaceError> {
        // Only distinctness and nonvanishing here: branch values are allowed
        // to hit zeros of Δ (the analysis then doubles orders there).
        base.validate_lambdas(&Polynomial::one())
            .map_err(SurfaceError::InvalidLambdas)?;
        if let Some(d) = a4.degree() {
            if d > 2 {
                return Err(SurfaceError::SectionDegreeBound {
                    name: "a4",
                    max: 2,
                    got: d,
                });
            }
        }
        if let Some(d) = a6.degree() {
            if d > 3 {
                return Err(SurfaceError::SectionDegreeBound {
                    name: "a6",
                    max: 3,
                    got: d,
                });
            }
        }
        let data = WeierstrassSurfaceData { base, a4, a6 };
        if data.discriminant_section().is_zero() {
            return Err(SurfaceError::SingularEquation);
        }
        Ok(data)
    }

    pub fn base(&self) -> &HyperellipticBase {
        &self.base
    }

    pub fn a4(&self) -> &Polynomial {
        &self.a4
    }

    pub fn a6(&self) -> &Polynomial {
        &self.a6
    }

    /// `Δ(t) = −16(4a₄³ + 27a₆²)`, a section of `L^⊗12`; nonzero by the
    /// construction invariant.
    pub fn discriminant_section(&self) -> Polynomial {
        let four_a4_cubed = self.a4.pow(3).scale(&Rational::from(4));
        let squares = &four_a4_cubed + &self.a6.pow(2).scale(&Rational::from(27));
        squares.scale(&Rational::from(-16))
    }

    /// The generic fiber as a curve over ℚ(t).
    pub fn generic_fiber(&self) -> CurveFT {
        CurveFT::new(self.a4.clone(), self.a6.clone())
            .expect("surface data has nonzero discriminant")
    }

    /// Classifies every place of `B` with a singular fiber.
    ///
    /// Pipeline: squarefree-decompose `Δ`; refine its parts together with
    /// the branch polynomial into a coprime basis; per basis factor, take
    /// the `t`-orders of `a₄`, `a₆`, `Δ`, double them at branch factors, and
    /// count points of `B` over the factor; handle `∞` by the section-degree
    /// formula; classify each place and aggregate Euler numbers into `e` and
    /// `χ = e/12`.
    pub fn fiber_analysis(&self) -> Result<SurfaceReport, SurfaceError> {
        let places = self.analyze_places()?;

        // Degree bookkeeping: the B-orders of Δ over all places, weighted by
        // the number of points, must exhaust deg L^⊗12 = 12.
        let delta_degree_total: u32 = places
            .iter()
            .map(|p| p.points_on_b * p.v_delta)
            .sum();
        if delta_degree_total != 12 {
            return Err(SurfaceError::InvariantViolation(format!(
                "place-weighted orders of the discriminant sum to {delta_degree_total}, not 12"
            )));
        }

        let singular: Vec<PlaceReport> = places
            .into_iter()
            .filter(|p| p.kodaira_type != KodairaType::Smooth)
            .collect();
        let minimal = singular
            .iter()
            .all(|p| p.kodaira_type != KodairaType::NonMinimal);
        let (total_euler, chi) = if minimal {
            let total: u32 = singular
                .iter()
                .map(|p| {
                    p.points_on_b
                        * p.euler_number
                            .expect("minimal places always carry an Euler number")
                })
                .sum();
            if !total.is_multiple_of(12) {
                return Err(SurfaceError::InvariantViolation(format!(
                    "total Euler number {total} of minimal data is not divisible by 12"
                )));
            }
            (Some(total), Some(total / 12))
        } else {
            (None, None)
        };

        Ok(SurfaceReport {
            places: singular,
            total_euler,
            chi,
            minimal,
            base_genus: self.base.genus(),
            isotrivial: self.generic_fiber().is_isotrivial(),
        })
    }

    /// True iff no place of `B` (affine or `∞`) has `v(a₄) ≥ 4` and
    /// `v(a₆) ≥ 6` simultaneously. Such a pair of orders forces `v(Δ) ≥ 12`,
    /// so scanning the places where `Δ` vanishes (plus `∞`) is exhaustive.
    pub fn is_minimal(&self) -> Result<bool, SurfaceError> {
        Ok(self
            .analyze_places()?
            .iter()
            .all(|p| p.kodaira_type != KodairaType::NonMinimal))
    }

    /// Self-intersection and genus of a section of the fibration, from
    /// adjunction: a section `C ≅ B` has
    /// `2g(B) − 2 = C² + deg(ω_B ⊗ L) = C² + (2g − 2) + deg L`, so
    /// `C² = −deg L = −1`, and its genus is that of the base.
    ///
    /// Requires minimal data — on a non-minimal model the smooth surface the
    /// formula speaks about belongs to the scaled-down data instead.
    pub fn section_self_intersection(&self) -> Result<(i64, u32), SurfaceError> {
        if !self.is_minimal()? {
            return Err(SurfaceError::NonMinimalData);
        }
        Ok((-1, self.base.genus()))
    }

    /// Order triples, point counts, and fiber types over every basis place
    /// (singular or not) plus `∞`.
    fn analyze_places(&self) -> Result<Vec<PlaceReport>, SurfaceError> {
        let delta = self.discriminant_section();
        let (_, delta_parts) =
            poly::squarefree_decomposition(&delta).expect("discriminant is nonzero");
        let mut basis_inputs: Vec<Polynomial> =
            delta_parts.into_iter().map(|(part, _)| part).collect();
        basis_inputs.push(self.base.branch_poly().clone());
        let basis = poly::coprime_basis(&basis_inputs).expect("inputs are nonzero");

        let mut places = Vec::with_capacity(basis.len() + 1);
        for factor in basis {
            let branch = factor.divides(self.base.branch_poly());
            let degree = factor.degree().expect("basis factors are nonconstant") as u32;
            // Orders in t, then on B: ramification doubles them at branch
            // loci.
            let cover_multiplier = if branch { 2 } else { 1 };
            let scale = |v: Valuation| match v {
                Valuation::Finite(k) => Valuation::Finite(k * cover_multiplier),
                Valuation::Infinite => Valuation::Infinite,
            };
            let v_a4 = scale(poly::valuation_at(&self.a4, &factor));
            let v_a6 = scale(poly::valuation_at(&self.a6, &factor));
            let v_delta = poly::valuation_at(&delta, &factor)
                .finite()
                .expect("discriminant is nonzero")
                * cover_multiplier;
            let points_on_b = if branch { degree } else { 2 * degree };
            let kodaira_type = classify_fiber(v_a4, v_a6, v_delta)?;
            places.push(PlaceReport {
                locus: PlaceLocus::Affine(factor),
                branch,
                points_on_b,
                v_a4,
                v_a6,
                v_delta,
                kodaira_type,
                euler_number: kodaira_type.euler_number(),
            });
        }

        // The place over t = ∞: one (totally ramified) point; the section
        // degrees already measure orders on B.
        let v_a4 = infinity_order(&self.a4, 4)?;
        let v_a6 = infinity_order(&self.a6, 6)?;
        let v_delta = infinity_order(&delta, 12)?
            .finite()
            .expect("discriminant is nonzero");
        let kodaira_type = classify_fiber(v_a4, v_a6, v_delta)?;
        places.push(PlaceReport {
            locus: PlaceLocus::Infinity,
            branch: true,
            points_on_b: 1,
            v_a4,
            v_a6,
            v_delta,
            kodaira_type,
            euler_number: kodaira_type.euler_number(),
        });

        Ok(places)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_pair(n, d)
    }

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_integer(v)).collect()
    }

    fn base(values: &[i64]) -> HyperellipticBase {
        HyperellipticBase::new(rats(values)).unwrap()
    }

    /// a₄ = t² + 1, a₆ = 1 over the genus-2 base with λ = (1, 2, 3, 4, 5).
    fn example_data() -> WeierstrassSurfaceData {
        WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::from_ints(&[1, 0, 1]),
            Polynomial::one(),
        )
        .unwrap()
    }

    /// 4(t² + 1)³ + 27, monic-normalized.
    fn d_core_monic() -> Polynomial {
        Polynomial::from_ints(&[31, 0, 12, 0, 12, 0, 4]).monic()
    }

    #[test]
    fn genus_from_branch_count() {
        assert_eq!(base(&[1, 2, 3, 4, 5]).genus(), 2);
        assert_eq!(base(&[1, 2, 3]).genus(), 1);
        assert_eq!(base(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]).genus(), 5);
    }

    #[test]
    fn branch_count_must_be_odd_and_at_least_three() {
        assert_eq!(
            HyperellipticBase::new(rats(&[1, 2])).unwrap_err(),
            SurfaceError::BadBranchCount { got: 2 }
        );
        assert_eq!(
            HyperellipticBase::new(rats(&[1])).unwrap_err(),
            SurfaceError::BadBranchCount { got: 1 }
        );
        assert_eq!(
            HyperellipticBase::new(rats(&[1, 2, 3, 4])).unwrap_err(),
            SurfaceError::BadBranchCount { got: 4 }
        );
    }

    #[test]
    fn branch_polynomial_is_the_product_of_roots() {
        let b = base(&[1, 2, 3]);
        // (t−1)(t−2)(t−3) = t³ − 6t² + 11t − 6.
        assert_eq!(b.branch_poly(), &Polynomial::from_ints(&[-6, 11, -6, 1]));
        assert!(b.branch_poly().is_monic());
    }

    #[test]
    fn lambda_validation_accepts_the_standard_choice() {
        let d = Polynomial::from_ints(&[31, 0, 12, 0, 12, 0, 4]);
        assert_eq!(base(&[1, 2, 3, 4, 5]).validate_lambdas(&d), Ok(()));
        // The values of d at 1..5 are in fact 59, 527, 4027, 19679, 70331.
        for (lambda, expected) in [(1, 59), (2, 527), (3, 4027), (4, 19679), (5, 70331)] {
            assert_eq!(d.evaluate(&r(lambda, 1)), r(expected, 1));
        }
    }

    #[test]
    fn lambda_validation_reports_first_violation_with_one_based_indices() {
        let d = Polynomial::one();
        assert_eq!(
            base(&[1, 1, 3, 4, 5]).validate_lambdas(&d),
            Err(LambdaViolation::Duplicate { first: 1, second: 2 })
        );
        assert_eq!(
            HyperellipticBase::new(rats(&[0, 2, 3, 4, 5]))
                .unwrap()
                .validate_lambdas(&d),
            Err(LambdaViolation::Zero { index: 1 })
        );
        // Distinctness outranks the zero check when both are violated.
        assert_eq!(
            HyperellipticBase::new(rats(&[0, 2, 2, 4, 5]))
                .unwrap()
                .validate_lambdas(&d),
            Err(LambdaViolation::Duplicate { first: 2, second: 3 })
        );
        // Constraint roots come last.
        let constraint = Polynomial::from_roots(&[r(3, 1)]);
        assert_eq!(
            base(&[1, 2, 3, 4, 5]).validate_lambdas(&constraint),
            Err(LambdaViolation::ConstraintRoot { index: 3 })
        );
    }

    #[test]
    fn surface_data_enforces_degree_bounds() {
        let err = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::from_ints(&[0, 0, 0, 1]),
            Polynomial::one(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            SurfaceError::SectionDegreeBound {
                name: "a4",
                max: 2,
                got: 3
            }
        );
        let err = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::zero(),
            Polynomial::from_ints(&[0, 0, 0, 0, 1]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            SurfaceError::SectionDegreeBound {
                name: "a6",
                max: 3,
                got: 4
            }
        );
    }

    #[test]
    fn surface_data_rejects_identically_singular_equations() {
        // 4(−3)³ + 27·2² = 0.
        let err = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::constant(r(-3, 1)),
            Polynomial::constant(r(2, 1)),
        )
        .unwrap_err();
        assert_eq!(err, SurfaceError::SingularEquation);
    }

    #[test]
    fn surface_data_rejects_invalid_branch_values() {
        let err = WeierstrassSurfaceData::new(
            HyperellipticBase::new(rats(&[1, 1, 3, 4, 5])).unwrap(),
            Polynomial::from_ints(&[1, 0, 1]),
            Polynomial::one(),
        )
        .unwrap_err();
        assert!(matches!(err, SurfaceError::InvalidLambdas(_)));
    }

    #[test]
    fn discriminant_of_the_example_data() {
        let delta = example_data().discriminant_section();
        assert_eq!(
            delta,
            Polynomial::from_ints(&[-496, 0, -192, 0, -192, 0, -64])
        );
        // −16·27 for a₄ = 0, a₆ = 1.
        let flat = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::zero(),
            Polynomial::one(),
        )
        .unwrap();
        assert_eq!(
            flat.discriminant_section(),
            Polynomial::constant(r(-432, 1))
        );
    }

    #[test]
    fn infinity_order_formula() {
        // Δ of degree 6 as a section of L¹²: order 0 at ∞.
        let delta = example_data().discriminant_section();
        assert_eq!(infinity_order(&delta, 12), Ok(Valuation::Finite(0)));
        // A constant as a section of L⁶ vanishes to order 6 at ∞.
        assert_eq!(
            infinity_order(&Polynomial::one(), 6),
            Ok(Valuation::Finite(6))
        );
        // t as a section of L²: pole divisor exactly 2∞, order 0.
        assert_eq!(infinity_order(&Polynomial::t(), 2), Ok(Valuation::Finite(0)));
        // The zero polynomial vanishes identically.
        assert_eq!(
            infinity_order(&Polynomial::zero(), 4),
            Ok(Valuation::Infinite)
        );
        // Degree too large: not a section.
        assert!(matches!(
            infinity_order(&Polynomial::from_ints(&[0, 0, 1]), 2),
            Err(SurfaceError::SectionDegreeBound { .. })
        ));
    }

    #[test]
    fn kodaira_classification_table() {
        use KodairaType::*;
        let f = Valuation::Finite;
        let cases = [
            ((f(0), f(0), 0), Smooth),
            ((f(0), f(0), 1), I(1)),
            ((f(0), f(0), 5), I(5)),
            ((f(0), f(0), 10), I(10)),
            ((f(1), f(1), 2), II),
            ((f(2), f(1), 2), II),
            ((f(1), f(2), 3), III),
            ((f(1), f(3), 3), III),
            ((f(2), f(2), 4), IV),
            ((f(3), f(2), 4), IV),
            ((f(2), f(3), 6), IStar(0)),
            ((f(3), f(4), 6), IStar(0)),
            ((f(2), f(3), 7), IStar(1)),
            ((f(2), f(3), 8), IStar(2)),
            ((f(3), f(4), 8), IVStar),
            ((f(3), f(5), 9), IIIStar),
            ((f(4), f(5), 10), IIStar),
            ((f(4), f(6), 12), NonMinimal),
            ((f(5), f(7), 14), NonMinimal),
            ((Valuation::Infinite, f(6), 12), NonMinimal),
            ((f(4), Valuation::Infinite, 12), NonMinimal),
        ];
        for ((a4, a6, delta), expected) in cases {
            assert_eq!(
                classify_fiber(a4, a6, delta),
                Ok(expected),
                "triple ({a4}, {a6}, {delta})"
            );
        }
        // Euler numbers follow the fixed table (= v(Δ) for genuine types).
        assert_eq!(I(1).euler_number(), Some(1));
        assert_eq!(I(7).euler_number(), Some(7));
        assert_eq!(II.euler_number(), Some(2));
        assert_eq!(III.euler_number(), Some(3));
        assert_eq!(IV.euler_number(), Some(4));
        assert_eq!(IStar(0).euler_number(), Some(6));
        assert_eq!(IStar(3).euler_number(), Some(9));
        assert_eq!(IVStar.euler_number(), Some(8));
        assert_eq!(IIIStar.euler_number(), Some(9));
        assert_eq!(IIStar.euler_number(), Some(10));
        assert_eq!(NonMinimal.euler_number(), None);
    }

    #[test]
    fn kodaira_classification_rejects_impossible_star_triples() {
        // (2, 3, 4) cannot arise: v(Δ) ≥ 6 whenever v(a₄) ≥ 2, v(a₆) ≥ 3.
        assert!(matches!(
            classify_fiber(Valuation::Finite(2), Valuation::Finite(3), 4),
            Err(SurfaceError::InvariantViolation(_))
        ));
    }

    #[test]
    fn fiber_analysis_of_the_example_family() {
        let report = example_data().fiber_analysis().unwrap();
        // One affine locus: the sextic core, unbranched, 12 points on B,
        // every fiber a node.
        assert_eq!(report.places.len(), 1);
        let place = &report.places[0];
        assert_eq!(place.locus, PlaceLocus::Affine(d_core_monic()));
        assert!(!place.branch);
        assert_eq!(place.points_on_b, 12);
        assert_eq!(place.v_a4, Valuation::Finite(0));
        assert_eq!(place.v_a6, Valuation::Finite(0));
        assert_eq!(place.v_delta, 1);
        assert_eq!(place.kodaira_type, KodairaType::I(1));
        assert_eq!(place.euler_number, Some(1));
        assert_eq!(report.total_euler, Some(12));
        assert_eq!(report.chi, Some(1));
        assert!(report.minimal);
        assert!(!report.isotrivial);
        assert_eq!(report.base_genus, 2);
    }

    #[test]
    fn fiber_analysis_is_genus_independent_for_the_example_family() {
        for (lambdas, genus) in [
            (vec![1i64, 2, 3, 4, 5, 6, 7], 3u32),
            (vec![1, 2, 3, 4, 5, 6, 7, 8, 9], 4),
        ] {
            let data = WeierstrassSurfaceData::new(
                base(&lambdas),
                Polynomial::from_ints(&[1, 0, 1]),
                Polynomial::one(),
            )
            .unwrap();
            let report = data.fiber_analysis().unwrap();
            assert_eq!(report.base_genus, genus);
            assert_eq!(report.places.len(), 1);
            assert_eq!(report.places[0].points_on_b, 12);
            assert_eq!(report.places[0].kodaira_type, KodairaType::I(1));
            assert_eq!(report.chi, Some(1));
        }
    }

    #[test]
    fn branch_places_double_the_orders() {
        // a₄ = −3, a₆ = 2 + t: Δ = −432t(t + 4). Branch value −4 sits on a
        // root of Δ, so that place ramifies: downstairs order 1 becomes I₂
        // with a single point. The root t = 0 is unbranched: I₁ on two
        // points. At ∞ the orders (4, 4, 8) give IV*.
        let data = WeierstrassSurfaceData::new(
            base(&[-4, 1, 2, 3, 5]),
            Polynomial::constant(r(-3, 1)),
            Polynomial::from_ints(&[2, 1]),
        )
        .unwrap();
        assert_eq!(
            data.discriminant_section(),
            Polynomial::from_ints(&[0, -1728, -432])
        );
        let report = data.fiber_analysis().unwrap();
        assert_eq!(report.places.len(), 3);

        let at_zero = &report.places[0];
        assert_eq!(at_zero.locus, PlaceLocus::Affine(Polynomial::t()));
        assert!(!at_zero.branch);
        assert_eq!(at_zero.points_on_b, 2);
        assert_eq!(at_zero.kodaira_type, KodairaType::I(1));

        let at_minus_four = &report.places[1];
        assert_eq!(
            at_minus_four.locus,
            PlaceLocus::Affine(Polynomial::from_ints(&[4, 1]))
        );
        assert!(at_minus_four.branch);
        assert_eq!(at_minus_four.points_on_b, 1);
        assert_eq!(at_minus_four.v_delta, 2);
        assert_eq!(at_minus_four.kodaira_type, KodairaType::I(2));

        let at_infinity = &report.places[2];
        assert_eq!(at_infinity.locus, PlaceLocus::Infinity);
        assert_eq!(at_infinity.v_a4, Valuation::Finite(4));
        assert_eq!(at_infinity.v_a6, Valuation::Finite(4));
        assert_eq!(at_infinity.v_delta, 8);
        assert_eq!(at_infinity.kodaira_type, KodairaType::IVStar);

        // 1·2 + 2·1 + 8·1 = 12.
        assert_eq!(report.total_euler, Some(12));
        assert_eq!(report.chi, Some(1));
        assert!(report.minimal);
    }

    #[test]
    fn starred_fiber_at_a_branch_place() {
        // a₄ = t − 1, a₆ = (t − 1)² with branch value 1:
        // Δ = −16(t−1)³(27t − 23). Downstairs orders (1, 2, 3) double to
        // (2, 4, 6): type I₀* on one point. The simple root 23/27 is
        // unbranched I₁ on two points, and ∞ has orders (2, 2, 4): IV.
        let data = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::from_ints(&[-1, 1]),
            Polynomial::from_roots(&[r(1, 1), r(1, 1)]),
        )
        .unwrap();
        let report = data.fiber_analysis().unwrap();
        assert_eq!(report.places.len(), 3);

        let at_one = &report.places[0];
        assert_eq!(at_one.locus, PlaceLocus::Affine(Polynomial::from_ints(&[-1, 1])));
        assert!(at_one.branch);
        assert_eq!(
            (at_one.v_a4, at_one.v_a6, at_one.v_delta),
            (Valuation::Finite(2), Valuation::Finite(4), 6)
        );
        assert_eq!(at_one.kodaira_type, KodairaType::IStar(0));
        assert_eq!(at_one.points_on_b, 1);

        let at_simple_root = &report.places[1];
        assert_eq!(
            at_simple_root.locus,
            PlaceLocus::Affine(Polynomial::new(vec![r(-23, 27), r(1, 1)]))
        );
        assert_eq!(at_simple_root.kodaira_type, KodairaType::I(1));
        assert_eq!(at_simple_root.points_on_b, 2);

        let at_infinity = &report.places[2];
        assert_eq!(at_infinity.kodaira_type, KodairaType::IV);

        // 6·1 + 1·2 + 4·1 = 12.
        assert_eq!(report.total_euler, Some(12));
        assert_eq!(report.chi, Some(1));
    }

    #[test]
    fn non_minimal_place_at_a_branch_value() {
        // a₄ = (t−1)², a₆ = (t−1)³ over a base branched at 1: B-orders
        // (4, 6, 12) — non-minimal.
        let data = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::from_roots(&[r(1, 1), r(1, 1)]),
            Polynomial::from_roots(&[r(1, 1), r(1, 1), r(1, 1)]),
        )
        .unwrap();
        assert_eq!(data.is_minimal(), Ok(false));
        let report = data.fiber_analysis().unwrap();
        assert_eq!(report.places.len(), 1);
        assert_eq!(report.places[0].kodaira_type, KodairaType::NonMinimal);
        assert_eq!(report.places[0].euler_number, None);
        assert_eq!(report.total_euler, None);
        assert_eq!(report.chi, None);
        assert!(!report.minimal);
    }

    #[test]
    fn non_minimal_place_at_infinity() {
        // a₄ = 0 vanishes to infinite order everywhere; a₆ = 1 has order 6
        // at ∞ — non-minimal there, even though no affine place is singular.
        let data = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::zero(),
            Polynomial::one(),
        )
        .unwrap();
        assert_eq!(data.is_minimal(), Ok(false));
        let report = data.fiber_analysis().unwrap();
        assert_eq!(report.places.len(), 1);
        assert_eq!(report.places[0].locus, PlaceLocus::Infinity);
        assert_eq!(report.places[0].v_a4, Valuation::Infinite);
        assert_eq!(report.places[0].v_a6, Valuation::Finite(6));
        assert_eq!(report.places[0].v_delta, 12);
        assert_eq!(report.places[0].kodaira_type, KodairaType::NonMinimal);
    }

    #[test]
    fn example_family_is_minimal() {
        assert_eq!(example_data().is_minimal(), Ok(true));
        // At ∞: v(a₄) = 4 − 2·2 = 0 even though v(a₆) = 6.
        assert_eq!(
            infinity_order(example_data().a4(), 4),
            Ok(Valuation::Finite(0))
        );
        assert_eq!(
            infinity_order(example_data().a6(), 6),
            Ok(Valuation::Finite(6))
        );
    }

    #[test]
    fn section_self_intersection_via_adjunction() {
        assert_eq!(example_data().section_self_intersection(), Ok((-1, 2)));
        // Genus 5 variant: same self-intersection, genus follows the base.
        let data = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]),
            Polynomial::from_ints(&[1, 0, 1]),
            Polynomial::one(),
        )
        .unwrap();
        assert_eq!(data.section_self_intersection(), Ok((-1, 5)));
        // Refused on non-minimal data.
        let bad = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::zero(),
            Polynomial::one(),
        )
        .unwrap();
        assert_eq!(
            bad.section_self_intersection(),
            Err(SurfaceError::NonMinimalData)
        );
    }

    #[test]
    fn kodaira_type_display() {
        assert_eq!(KodairaType::I(1).to_string(), "I1");
        assert_eq!(KodairaType::I(12).to_string(), "I12");
        assert_eq!(KodairaType::IStar(0).to_string(), "I0*");
        assert_eq!(KodairaType::IStar(4).to_string(), "I4*");
        assert_eq!(KodairaType::IVStar.to_string(), "IV*");
        assert_eq!(KodairaType::NonMinimal.to_string(), "NON-MINIMAL");
        assert_eq!(KodairaType::Smooth.to_string(), "smooth");
    }

    #[test]
    fn isotrivial_data_is_flagged() {
        // Constant coefficients: every fiber isomorphic.
        let data = WeierstrassSurfaceData::new(
            base(&[1, 2, 3, 4, 5]),
            Polynomial::one(),
            Polynomial::one(),
        )
        .unwrap();
        let report = data.fiber_analysis().unwrap();
        assert!(report.isotrivial);
    }
}
