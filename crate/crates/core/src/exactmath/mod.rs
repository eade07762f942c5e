//! Exact scalar arithmetic and dense linear algebra.
//!
//! Everything in the crate sits on two scalar types: [`Rational`]
//! (arbitrary precision, always reduced) and [`ParamScalar`], a rational
//! function over the rationals in a single named parameter. Matrices are
//! generic over the [`Field`] trait so that the same elimination code runs
//! over either.

mod matrix;
mod parse;
mod poly;
mod scalar;

pub use matrix::{Matrix, SolveOutcome};
pub use parse::{parse_scalar, ParseError, ParseErrorKind};
pub use poly::{poly_rational_roots, Poly};
pub use scalar::ParamScalar;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rational = BigRational;

/// Shorthand for `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"` into a rational. Used for command-line values.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let s = parse_scalar(text, None).ok()?;
    s.as_rational()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("matrix has parameter-dependent entries")]
    Parameterized,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
}

/// Exact field operations shared by [`Rational`] and [`ParamScalar`].
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` when `self` is zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
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
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Lossy conversion used by the floating-point flow and by sanity checks.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational nearest-ish to `x`: continued-fraction expansion capped at
/// denominators below `max_den`.
pub fn rational_from_f64(x: f64, max_den: i64) -> Rational {
    let neg = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return <Rational as Zero>::zero();
    }
    let r = Rational::new(BigInt::from(p1), BigInt::from(q1));
    if neg {
        -r
    } else {
        r
    }
}

pub(crate) fn rational_is_negative(r: &Rational) -> bool {
    r.is_negative()
}
