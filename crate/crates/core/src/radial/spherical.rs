//! Spherical functions `φ_z = Σ P_n(z)/e_n χ_n` and truncated witnesses.

use super::{check_rank, radial_convolve, weighted_power, RadialElement, RadialError, SpectrumEllipse};
use crate::exponent::Exponent;
use crate::scalar::{Approx, Coeff};

/// The spherical function at `z`, evaluated lazily.
///
/// The normalised coefficients `c_n = P_n(z)/e_n` obey
/// `c_0 = 1`, `c_1 = z/2k`, `c_{n+1} = (z c_n − c_{n−1})/(2k−1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalFunction<C: Coeff> {
    pub k: u32,
    pub z: C,
}

impl<C: Coeff> SphericalFunction<C> {
    pub fn in_spectrum(&self) -> bool {
        SpectrumEllipse { k: self.k }.contains(self.z.to_complex(), 1e-12)
    }

    /// Witnesses off the real axis are not covered by the classical theory.
    pub fn is_experimental(&self) -> bool {
        self.z.to_complex().im != 0.0
    }

    /// `c_0, …, c_radius`.
    pub fn coefficients(&self, radius: usize) -> Vec<C> {
        let mut out = Vec::with_capacity(radius + 1);
        out.push(C::one());
        if radius == 0 {
            return out;
        }
        let two_k = num_rational::BigRational::new(1.into(), (2 * self.k).into());
        let inv_w2 = num_rational::BigRational::new(1.into(), (2 * self.k - 1).into());
        out.push(self.z.clone() * C::from_ratio(&two_k));
        for n in 1..radius {
            let next = (self.z.clone() * out[n].clone() - out[n - 1].clone()) * C::from_ratio(&inv_w2);
            out.push(next);
        }
        out
    }

    pub fn coefficient(&self, n: usize) -> C {
        self.coefficients(n).pop().expect("nonempty")
    }

    /// `φ_z^{(radius)}`, the restriction to spheres of radius ≤ `radius`.
    pub fn truncate(&self, radius: usize) -> RadialElement<C> {
        RadialElement::new(self.k, self.coefficients(radius))
    }
}

pub fn spherical_function<C: Coeff>(k: u32, z: C) -> Result<SphericalFunction<C>, RadialError> {
    check_rank(k)?;
    Ok(SphericalFunction { k, z })
}

/// Sphere radius of the level-`n` witness truncation: `φ_z^{(n)}` keeps the
/// spheres of radius at most `2n`, i.e. the first `n+1` terms of the
/// even series `φ_0 = Σ (−1)^n (2k−1)^{−n} χ_{2n}`.
pub fn witness_radius(level: usize) -> usize {
    2 * level
}

/// `‖α ∗ φ_z^{(N)}‖_p`, computed in sphere coordinates.
///
/// When α̂(z) = 0 all interior spheres cancel and only spheres near the
/// truncation radius survive.
pub fn witness_residual<C: Coeff>(
    alpha: &RadialElement<C>,
    z: &C,
    level: usize,
    p: Exponent,
) -> Result<f64, RadialError> {
    let phi = spherical_function(alpha.k, z.clone())?;
    let trunc = phi.truncate(witness_radius(level));
    let prod = radial_convolve(alpha, &trunc)?;
    Ok(prod.lp_norm(p))
}

/// `(2k (2k−1)^{N(2−p)})^{1/p}`, the exact residual of χ_1 against φ_0^{(N)}.
pub fn witness_residual_closed_form(k: u32, level: usize, p: f64) -> f64 {
    let w = 2.0 * k as f64 - 1.0;
    ((2.0 * k as f64).ln() + level as f64 * (2.0 - p) * w.ln()).exp().powf(1.0 / p)
}

/// Partial and (when available) closed-form values of `Σ e_n |φ_z(n)|^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiNorm {
    /// `Σ_{n≤N} e_n |P_n(z)/e_n|^p`, or the sup for p = ∞.
    pub partial: f64,
    /// Exact series value for z = 0 and p > 2.
    pub closed_form: Option<f64>,
    /// Estimated ratio between consecutive pairs of sphere contributions.
    pub term_ratio: Option<f64>,
    /// The partial sums do not settle: contributions stop decaying.
    pub diverging: bool,
}

/// `‖φ_z‖_p^p` for real `z`, truncated at radius `radius`.
pub fn phi_p_norm(k: u32, z: f64, p: Exponent, radius: usize) -> Result<PhiNorm, RadialError> {
    check_rank(k)?;
    let coeffs = spherical_function(k, Approx::new(z, 0.0))?.coefficients(radius);
    if p.is_infinite() {
        let sup = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        return Ok(PhiNorm {
            partial: sup,
            closed_form: if z == 0.0 { Some(1.0) } else { None },
            term_ratio: None,
            diverging: false,
        });
    }
    let pv = p.value();
    let terms: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| weighted_power(k, n, c.norm(), pv))
        .collect();
    let partial = terms.iter().sum();

    let closed_form = (z == 0.0 && pv > 2.0).then(|| {
        let w = 2.0 * k as f64 - 1.0;
        let r = w.powf(-(pv - 2.0));
        1.0 + (2.0 * k as f64 / w) * r / (1.0 - r)
    });

    // Contributions of φ_0 vanish on odd spheres, so compare pairs.
    let pairs: Vec<f64> = terms[1..].chunks(2).map(|c| c.iter().sum()).collect();
    let term_ratio = if pairs.len() >= 4 {
        let tail = &pairs[pairs.len() / 2..];
        let ratios: Vec<f64> = tail
            .windows(2)
            .filter(|w| w[0] > 0.0)
            .map(|w| w[1] / w[0])
            .collect();
        (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64)
    } else {
        None
    };
    let diverging = if z == 0.0 {
        pv <= 2.0
    } else {
        term_ratio.is_some_and(|r| r >= 1.0 - 1e-9)
    };
    Ok(PhiNorm {
        partial,
        closed_form,
        term_ratio,
        diverging,
    })
}
