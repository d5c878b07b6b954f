//! Lebesgue exponents `p ∈ [1, ∞]` and their conjugates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

/// An exponent `p ∈ [1, ∞]`.
///
/// Rational exponents are kept exact so that threshold comparisons such as
/// `p ≤ 2d/(d−1)` are decided without rounding at the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Rational(Ratio<i64>),
    Real(f64),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("exponent must lie in [1, inf], got {0}")]
pub struct ExponentError(pub String);

impl Exponent {
    pub fn integer(p: i64) -> Result<Self, ExponentError> {
        Self::rational(p, 1)
    }

    pub fn rational(num: i64, den: i64) -> Result<Self, ExponentError> {
        if den == 0 {
            return Err(ExponentError(format!("{num}/{den}")));
        }
        let r = Ratio::new(num, den);
        if r < Ratio::one() {
            return Err(ExponentError(r.to_string()));
        }
        Ok(Exponent::Rational(r))
    }

    pub fn real(p: f64) -> Result<Self, ExponentError> {
        if p.is_nan() || p < 1.0 {
            return Err(ExponentError(p.to_string()));
        }
        if p.is_infinite() {
            return Ok(Exponent::Infinity);
        }
        Ok(Exponent::Real(p))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Exponent::Infinity)
    }

    pub fn value(&self) -> f64 {
        match self {
            Exponent::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Exponent::Real(x) => *x,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    /// The conjugate index `q` with `1/p + 1/q = 1`.
    pub fn conjugate(&self) -> Exponent {
        match *self {
            Exponent::Rational(r) if r == Ratio::one() => Exponent::Infinity,
            Exponent::Rational(r) => Exponent::Rational(r / (r - Ratio::one())),
            Exponent::Real(x) if x == 1.0 => Exponent::Infinity,
            Exponent::Real(x) => Exponent::Real(x / (x - 1.0)),
            Exponent::Infinity => Exponent::Rational(Ratio::one()),
        }
    }

    /// Compares against an exact rational threshold.
    pub fn cmp_ratio(&self, threshold: Ratio<i64>) -> Ordering {
        match self {
            Exponent::Rational(r) => r.cmp(&threshold),
            Exponent::Real(x) => {
                let t = threshold.to_f64().unwrap_or(f64::NAN);
                x.partial_cmp(&t).unwrap_or(Ordering::Greater)
            }
            Exponent::Infinity => Ordering::Greater,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Exponent::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Exponent::Real(x) => write!(f, "{x}"),
            Exponent::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = ExponentError;

    /// Accepts `inf`, integers, `p/q` and decimals; decimals with at most
    /// twelve fractional digits are stored exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Exponent::Infinity);
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| ExponentError(s.into()))?;
            let d: i64 = d.trim().parse().map_err(|_| ExponentError(s.into()))?;
            return Exponent::rational(n, d);
        }
        if let Some(r) = crate::scalar::parse_rational(s) {
            if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
                return Exponent::rational(n, d);
            }
        }
        let x: f64 = s.parse().map_err(|_| ExponentError(s.into()))?;
        Exponent::real(x)
    }
}
