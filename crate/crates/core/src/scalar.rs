//! Coefficient fields.
//!
//! Elements are generic over a [`Coeff`] type. Two are provided: exact
//! Gaussian rationals ([`GaussRat`]) and IEEE complex doubles ([`Approx`]).
//! Because the mode is a type parameter, exact and approximate elements can
//! never be combined by accident; [`Scalar`] is the dynamically tagged
//! variant used at I/O boundaries, where mixing is a runtime error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Exact complex numbers with rational real and imaginary parts.
pub type GaussRat = Complex<BigRational>;

/// Floating complex numbers.
pub type Approx = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    Exact,
    Approx,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::Exact => f.write_str("exact"),
            ScalarMode::Approx => f.write_str("approx"),
        }
    }
}

pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: ScalarMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    /// Embeds a real rational.
    fn from_ratio(r: &BigRational) -> Self;
    fn to_complex(&self) -> Complex64;
    /// Renders the real and imaginary parts for the text formats.
    fn render(&self) -> (String, String);

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn modulus(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl Coeff for GaussRat {
    const MODE: ScalarMode = ScalarMode::Exact;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(BigRational::from_integer(n.clone()), BigRational::zero())
    }

    fn from_ratio(r: &BigRational) -> Self {
        Complex::new(r.clone(), BigRational::zero())
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    fn render(&self) -> (String, String) {
        (format_rational(&self.re), format_rational(&self.im))
    }
}

impl Coeff for Approx {
    const MODE: ScalarMode = ScalarMode::Approx;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Complex64::new(n.to_f64().unwrap_or(f64::INFINITY), 0.0)
    }

    fn from_ratio(r: &BigRational) -> Self {
        Complex64::new(ratio_to_f64(r), 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn render(&self) -> (String, String) {
        (format!("{}", self.re), format!("{}", self.im))
    }
}

/// Converts a rational to the nearest double, staying finite for huge
/// numerators and denominators where a naive quotient would overflow.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // Integer quotient with ~64 significant bits, then rescale.
    let s = 64 - (r.numer().bits() as i64 - r.denom().bits() as i64);
    let (num, den) = if s >= 0 {
        (r.numer() << s as u64, r.denom().clone())
    } else {
        (r.numer().clone(), r.denom() << (-s) as u64)
    };
    let q = (num / den).to_f64().unwrap_or(0.0);
    let half = (s / 2) as i32;
    q * 2f64.powi(-half) * 2f64.powi(-(s as i32 - half))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n`, `p/q`, or a plain decimal such as `-3.25` or `1e-3` into an
/// exact rational. Decimals are read digit by digit, so `0.1` is exactly 1/10.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse::<BigInt>().ok()? / 10;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Exact Gaussian rational from two rationals.
pub fn gauss(re: BigRational, im: BigRational) -> GaussRat {
    Complex::new(re, im)
}

/// Exact Gaussian rational `re/den + i·im/den`.
pub fn gauss_frac(re: i64, im: i64, den: i64) -> GaussRat {
    Complex::new(
        BigRational::new(re.into(), den.into()),
        BigRational::new(im.into(), den.into()),
    )
}

/// A coefficient carrying its mode at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(GaussRat),
    Approx(Approx),
}

impl Scalar {
    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Exact(_) => ScalarMode::Exact,
            Scalar::Approx(_) => ScalarMode::Approx,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(z) => z.to_complex(),
            Scalar::Approx(z) => *z,
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(Coeff::conj(z)),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a + b)),
            (Scalar::Approx(a), Scalar::Approx(b)) => Ok(Scalar::Approx(a + b)),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a - b)),
            (Scalar::Approx(a), Scalar::Approx(b)) => Ok(Scalar::Approx(a - b)),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a * b)),
            (Scalar::Approx(a), Scalar::Approx(b)) => Ok(Scalar::Approx(a * b)),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }

    /// Tolerance comparison; exact operands are compared through their
    /// floating images.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        (self.to_complex() - other.to_complex()).norm() <= tol
    }

    /// Exact equality; only meaningful between exact scalars.
    pub fn exact_eq(&self, other: &Scalar) -> Result<bool, AlgebraError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(a == b),
            _ => Err(AlgebraError::ModeMismatch),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = match self {
            Scalar::Exact(z) => z.render(),
            Scalar::Approx(z) => z.render(),
        };
        write!(f, "{re} {im}")
    }
}

/// `|r|` as a float, used for norms of rational data.
pub fn abs_f64(r: &BigRational) -> f64 {
    ratio_to_f64(&r.abs())
}

#[cfg(test)]
mod tests {
    use super::{
        format_rational, gauss_frac, parse_rational, ratio_to_f64, BigInt, BigRational, Coeff, Complex64, GaussRat,
        Scalar,
    };
    use crate::error::AlgebraError;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_rational("3"), Some(q(3, 1)));
        assert_eq!(parse_rational("-2/6"), Some(q(-1, 3)));
        assert_eq!(parse_rational("0.1"), Some(q(1, 10)));
        assert_eq!(parse_rational("-3.8"), Some(q(-19, 5)));
        assert_eq!(parse_rational("2.5e2"), Some(q(250, 1)));
        assert_eq!(parse_rational("1e-3"), Some(q(1, 1000)));
        assert_eq!(parse_rational(".5"), Some(q(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&q(4, 2)), "2");
        assert_eq!(format_rational(&q(-1, 3)), "-1/3");
    }

    #[test]
    fn exact_arithmetic_is_closed() {
        let a = gauss_frac(1, 2, 3);
        let b = gauss_frac(-1, 1, 2);
        let prod = a.clone() * b.clone();
        // (1+2i)/3 * (-1+i)/2 = (-1 + i - 2i - 2)/6 = (-3 - i)/6
        assert_eq!(prod, gauss_frac(-3, -1, 6));
        assert_eq!(a.clone() - a.clone(), GaussRat::zero());
        assert!(Coeff::is_zero(&(a.clone() + (-a))));
    }

    #[test]
    fn mode_mixing_is_rejected() {
        let e = Scalar::Exact(gauss_frac(1, 0, 1));
        let a = Scalar::Approx(Complex64::new(1.0, 0.0));
        assert_eq!(e.try_add(&a), Err(AlgebraError::ModeMismatch));
        assert_eq!(a.try_mul(&e), Err(AlgebraError::ModeMismatch));
        assert!(e.exact_eq(&a).is_err());
        assert!(e.approx_eq(&a, 1e-15));
        assert_eq!(
            e.try_mul(&e).unwrap(),
            Scalar::Exact(gauss_frac(1, 0, 1))
        );
    }

    #[test]
    fn huge_rationals_convert_to_finite_floats() {
        let big = num_traits::pow(BigInt::from(3), 2000);
        let r = BigRational::new(big.clone() + 1, big);
        assert!((ratio_to_f64(&r) - 1.0).abs() < 1e-15);
        let tiny = BigRational::new(1.into(), num_traits::pow(BigInt::from(2), 1100));
        assert_eq!(ratio_to_f64(&tiny), 0.0);
    }
}
