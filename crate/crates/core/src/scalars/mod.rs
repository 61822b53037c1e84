//! Exact coefficient rings.
//!
//! Everything in this crate is computed over [`Rational`], over
//! [`AlphaScalar`] (rational functions in one indeterminate `α`), or over
//! truncated power series [`HSeries`] in `h` with coefficients in either.

mod alpha;
mod rational;
mod series;

pub use alpha::{AlphaScalar, Poly};
pub use rational::Rational;
pub use series::{series_arith, series_exp, HSeries, SeriesOp, MAX_ORDER};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("exponential needs a zero constant term")]
    NonzeroConstant,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar JSON: {0}")]
    Json(String),
}

/// A commutative ring with exact equality.
///
/// Arithmetic takes references so that big-number coefficients are not
/// cloned on every operation.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    /// Multiplicative inverse when one exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, ScalarError>;
}

/// `(-1)^k` as a ring element.
pub fn sign<R: Ring>(odd: bool) -> R {
    if odd {
        R::one().neg()
    } else {
        R::one()
    }
}
