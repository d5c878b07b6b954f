//! The radial subalgebra of ℂF_k in sphere coordinates.
//!
//! A radial element is a coefficient sequence against the sphere sums
//! `χ_n = Σ_{|x|=n} x`. Products, transforms and norms are computed on the
//! coefficients; group elements are only materialised by [`expand`] for
//! cross-checks at small radii.

mod critical;
mod expand;
mod roots;
mod spherical;
mod structure;
mod transform;

pub use critical::{critical_exponent, radial_linf_verdict, CriticalBranch, CriticalExponent, exponent_curve};
pub use expand::{expand, radial_projection, EXPANSION_LIMIT};
pub use roots::{radial_zero_set, ComplexRoot, RadialZeroSet, RealRoot, SpectrumEllipse};
pub use spherical::{
    phi_p_norm, spherical_function, witness_radius, witness_residual, witness_residual_closed_form,
    PhiNorm, SphericalFunction,
};
pub use structure::{radial_convolve, sphere_product};
pub use transform::{eval_pn, gelfand_transform, pn_polynomial, Polynomial, RadialPolynomialTransform};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::error::AlgebraError;
use crate::exponent::Exponent;
use crate::scalar::{Approx, Coeff};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadialError {
    #[error("rank mismatch: F_{0} vs F_{1}")]
    RankMismatch(u32, u32),
    #[error("radial algebra needs rank at least 2, got {0}")]
    InvalidRank(u32),
    #[error("operation needs a finitely supported element; a tail is attached")]
    TailPresent,
    #[error("the zero element has no transform zeros")]
    ZeroElement,
    #[error("expansion would create {words} words, above the guard of {limit}")]
    ExpansionTooLarge { words: u128, limit: u128 },
    #[error("support reaches radius {support} beyond the requested {max_len}")]
    SupportTooLong { support: usize, max_len: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `e_n = |{x : |x| = n}|` in F_k: 1 for n = 0, else 2k(2k−1)^{n−1}.
pub fn sphere_size(k: u32, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    BigInt::from(2 * k) * num_traits::pow(BigInt::from(2 * k - 1), n - 1)
}

pub fn sphere_size_f64(k: u32, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    2.0 * k as f64 * (2.0 * k as f64 - 1.0).powi(n as i32 - 1)
}

/// Coefficients beyond the stored prefix, `a_{start + j·stride} = first·ratio^j`
/// for j ≥ 0 and zero elsewhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricTail {
    pub start: usize,
    pub stride: usize,
    pub first: f64,
    pub ratio: f64,
}

impl GeometricTail {
    /// `Σ e_n |a_n|^p` over the tail, `None` when the series diverges.
    pub fn lp_norm_pow(&self, k: u32, p: f64) -> Option<f64> {
        if self.first == 0.0 {
            return Some(0.0);
        }
        let w = 2.0 * k as f64 - 1.0;
        let q = w.powi(self.stride as i32) * self.ratio.abs().powf(p);
        if q >= 1.0 {
            return None;
        }
        Some(sphere_size_f64(k, self.start) * self.first.abs().powf(p) / (1.0 - q))
    }
}

/// `Σ a_n χ_n` in ℂF_k, optionally followed by an analytic tail.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialElement<C: Coeff> {
    k: u32,
    coeffs: Vec<C>,
    tail: Option<GeometricTail>,
}

impl<C: Coeff> RadialElement<C> {
    /// Trailing zero coefficients are trimmed.
    pub fn new(k: u32, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RadialElement {
            k,
            coeffs,
            tail: None,
        }
    }

    pub fn zero(k: u32) -> Self {
        RadialElement::new(k, Vec::new())
    }

    /// The sphere sum χ_n.
    pub fn chi(k: u32, n: usize) -> Self {
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = C::one();
        RadialElement::new(k, coeffs)
    }

    pub fn with_tail(mut self, tail: GeometricTail) -> Self {
        self.tail = Some(tail);
        self
    }

    pub fn rank(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn tail(&self) -> Option<&GeometricTail> {
        self.tail.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.tail.is_none()
    }

    /// Largest n with a_n ≠ 0 in the finite part.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self, RadialError> {
        if self.k != other.k {
            return Err(RadialError::RankMismatch(self.k, other.k));
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(RadialElement::new(
            self.k,
            (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        ))
    }

    pub fn scale(&self, c: &C) -> Self {
        RadialElement::new(self.k, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn to_approx(&self) -> RadialElement<Approx> {
        RadialElement {
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c.to_complex()).collect(),
            tail: self.tail,
        }
    }

    /// `(Σ e_n |a_n|^p)^{1/p}` over the finite part, sup for p = ∞.
    pub fn lp_norm(&self, p: Exponent) -> f64 {
        match p {
            Exponent::Infinity => self.coeffs.iter().map(|c| c.modulus()).fold(0.0, f64::max),
            _ => self.lp_norm_pow(p.value()).powf(1.0 / p.value()),
        }
    }

    /// `Σ e_n |a_n|^p` over the finite part.
    pub fn lp_norm_pow(&self, p: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| weighted_power(self.k, n, c.modulus(), p))
            .sum()
    }
}

/// `e_n · m^p`, evaluated in logs so large spheres do not overflow.
pub(crate) fn weighted_power(k: u32, n: usize, modulus: f64, p: f64) -> f64 {
    if modulus == 0.0 {
        return 0.0;
    }
    let log_e = if n == 0 {
        0.0
    } else {
        (2.0 * k as f64).ln() + (n as f64 - 1.0) * (2.0 * k as f64 - 1.0).ln()
    };
    (log_e + p * modulus.ln()).exp()
}

pub(crate) fn check_rank(k: u32) -> Result<(), RadialError> {
    if k < 2 {
        return Err(RadialError::InvalidRank(k));
    }
    Ok(())
}
