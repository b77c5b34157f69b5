//! Dense univariate polynomials over the rationals, in the variable `t`.
//!
//! Everything downstream — discriminants, branch polynomials, vanishing
//! orders, fiber classification — reduces to a handful of exact polynomial
//! primitives implemented here: division with remainder, monic gcd, Yun's
//! squarefree decomposition, gcd-free (coprime) basis refinement, and
//! valuations. There is deliberately no factorization into irreducibles:
//! coprime-basis refinement separates every pair of loci the surface layer
//! ever needs to tell apart, at a fraction of the cost.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A polynomial in `t` with rational coefficients, stored densely with the
/// lowest-degree coefficient first.
///
/// Invariants:
/// * the coefficient list never ends in a zero — the zero polynomial is the
///   empty list, so representations are canonical and equality structural;
/// * consequently `degree()` is `None` exactly for the zero polynomial,
///   keeping the degree sentinel out of index arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// The order of vanishing of a polynomial along a place: finite for nonzero
/// polynomials, infinite for the zero polynomial (which vanishes everywhere).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// The finite order, or `None` when infinite.
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(k) => Some(k),
            Valuation::Infinite => None,
        }
    }

    /// True when the order is at least `k` (always true for infinite).
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Errors from polynomial operations with nonzero preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// `gcd(0, 0)` is undefined.
    BothZero,
    /// An operation required a nonzero polynomial.
    ZeroInput,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::BothZero => write!(f, "gcd of two zero polynomials is undefined"),
            PolyError::ZeroInput => write!(f, "operation requires a nonzero polynomial"),
        }
    }
}

impl core::error::Error for PolyError {}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros to restore the canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// A constant polynomial (canonical zero if `c` is zero).
    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { coeffs: vec![c] }
        }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine-integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// `∏ᵢ (t − rᵢ)` — e.g. the branch polynomial of a hyperelliptic curve.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Polynomial::one(), |acc, r| {
            &acc * &Polynomial::new(vec![-r, Rational::one()])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficients, ascending; empty for zero.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^exp` by repeated multiplication (exponents stay small here).
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_integer(k as i64))
                .collect(),
        )
    }

    /// Exact evaluation at a rational point, by Horner's rule.
    pub fn evaluate(&self, b: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * b) + c;
        }
        acc
    }

    /// Quotient and remainder of `self` by `divisor`, with
    /// `deg(remainder) < deg(divisor)`.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dlc = divisor
            .leading_coeff()
            .expect("polynomial division by zero");
        let ddeg = divisor.degree().unwrap();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Polynomial::zero(), self.clone());
        }
        let dlc_inv = dlc.recip().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let qdeg = rem.len() - divisor.coeffs.len();
        let mut quot = vec![Rational::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let factor = &rem[k + ddeg] * &dlc_inv;
            if !factor.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let delta = dc * &factor;
                    rem[k + j] = &rem[k + j] - &delta;
                }
            }
            quot[k] = factor;
        }
        rem.truncate(ddeg);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Remainder of `self` modulo `m` — used e.g. to evaluate a polynomial
    /// at the roots of `t² + 1` without leaving the rationals.
    pub fn rem(&self, m: &Polynomial) -> Polynomial {
        self.div_rem(m).1
    }

    /// True when `self` divides `other` exactly.
    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    /// Deterministic order: by degree, then lexicographically on the
    /// ascending coefficient list. Used to sort bases and place reports.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for Polynomial {
    /// Human form, highest degree first: `4t^6 + 12t^4 + 12t^2 + 31`.
    /// Non-integer coefficients are parenthesized: `(1/4)t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    if mag.is_integer() {
                        write!(f, "{mag}")?;
                    } else {
                        write!(f, "({mag})")?;
                    }
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    // Debug routes through Display: `t^2 + 1` reads better in assertion
    // failures than a coefficient vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
///
/// The result divides both inputs and is divided by every common divisor;
/// `gcd(p, 0)` is `monic(p)`. Errors when both inputs are zero.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// Yun's squarefree decomposition: `p = constant · ∏ partᵢ^multᵢ` with the
/// parts monic, squarefree, pairwise coprime, and the multiplicities
/// strictly increasing. A nonzero constant decomposes as `(c, [])`.
///
/// Errors on the zero polynomial.
pub fn squarefree_decomposition(
    p: &Polynomial,
) -> Result<(Rational, Vec<(Polynomial, u32)>), PolyError> {
    let lc = p.leading_coeff().ok_or(PolyError::ZeroInput)?.clone();
    if p.is_constant() {
        return Ok((lc, Vec::new()));
    }
    // Yun's algorithm (characteristic zero): peel off the multiplicity-i
    // part at step i by gcd'ing against a running derivative defect.
    let mut parts = Vec::new();
    let g = gcd(p, &p.derivative()).expect("p is nonzero");
    let mut w = p.div_rem(&g).0; // product of distinct factors (times lc)
    let mut z = &p.derivative().div_rem(&g).0 - &w.derivative();
    let mut mult = 1u32;
    while !w.is_constant() {
        let f = gcd(&w, &z).expect("w is nonconstant");
        if !f.is_constant() {
            parts.push((f.clone(), mult));
        }
        w = w.div_rem(&f).0;
        z = &z.div_rem(&f).0 - &w.derivative();
        mult += 1;
    }
    Ok((lc, parts))
}

/// Refines nonzero squarefree polynomials into a gcd-free basis: pairwise
/// coprime monic squarefree polynomials such that each input is, up to a
/// constant, a product of basis elements. Constant inputs contribute
/// nothing. The basis is returned in the deterministic [`Ord`] order.
///
/// Errors on a zero input.
pub fn coprime_basis(polys: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys {
        if p.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let mut cur = p.monic();
        let mut i = 0;
        while i < basis.len() && !cur.is_constant() {
            let g = gcd(&cur, &basis[i]).expect("basis elements are nonzero");
            if g.is_constant() {
                i += 1;
                continue;
            }
            if g != basis[i] {
                // Split the basis element into the shared part and the rest;
                // both inputs are squarefree, so one division strips the
                // entire overlap.
                let rest = basis[i].div_rem(&g).0.monic();
                basis[i] = g.clone();
                basis.insert(i + 1, rest);
            }
            cur = cur.div_rem(&g).0;
            i += 1;
        }
        if !cur.is_constant() {
            basis.push(cur.monic());
        }
    }
    basis.sort();
    Ok(basis)
}

/// The largest `k` with `q^k` dividing `p`, by repeated exact division.
/// The zero polynomial has infinite valuation along every place.
///
/// # Panics
/// Panics unless `q` is monic and nonconstant (callers pass coprime-basis
/// factors, which always are).
pub fn valuation_at(p: &Polynomial, q: &Polynomial) -> Valuation {
    assert!(
        q.is_monic() && !q.is_constant(),
        "valuation requires a monic nonconstant place polynomial"
    );
    if p.is_zero() {
        return Valuation::Infinite;
    }
    let mut k = 0u32;
    let mut cur = p.clone();
    loop {
        let (quot, rem) = cur.div_rem(q);
        if !rem.is_zero() {
            return Valuation::Finite(k);
        }
        k += 1;
        cur = quot;
    }
}

/// Renders a polynomial as its JSON-style coefficient list, e.g.
/// `["31", "0", "12", "0", "12", "0", "4"]` — ascending, empty for zero.
pub fn coeff_strings(p: &Polynomial) -> Vec<String> {
    use alloc::string::ToString;
    p.coeffs().iter().map(|c| c.to_string()).collect()
}
