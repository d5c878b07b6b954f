//! Zeros of the Gelfand transform, located against the spectrum ellipse.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{gelfand_transform, RadialElement, RadialError};
use crate::scalar::Coeff;

/// `X = {x+iy : (x/2k)² + (y/(2k−2))² ≤ 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumEllipse {
    pub k: u32,
}

impl SpectrumEllipse {
    pub fn semi_axes(&self) -> (f64, f64) {
        (2.0 * self.k as f64, 2.0 * self.k as f64 - 2.0)
    }

    /// Membership with a relative slack `tol` on the quadratic form.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        let (a, b) = self.semi_axes();
        (z.re / a).powi(2) + (z.im / b).powi(2) <= 1.0 + tol
    }
}

/// Membership slack for roots sitting on the ellipse boundary.
const BOUNDARY_TOL: f64 = 1e-12;
/// Accepted backward error `|α̂(z)| / ‖coeffs‖`.
const BACKWARD_TOL: f64 = 1e-9;
/// Imaginary parts below this (relative) are treated as real roots.
const REAL_SNAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    /// In the open interval (−2k, 2k).
    pub in_open_interval: bool,
    pub in_spectrum: bool,
    /// Located by a sign change; false for touching (even order) roots.
    pub sign_change: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRoot {
    pub value: Complex64,
    pub in_spectrum: bool,
    pub backward_error: f64,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialZeroSet {
    pub k: u32,
    pub degree: usize,
    pub real: Vec<RealRoot>,
    /// Non-real roots.
    pub complex: Vec<ComplexRoot>,
}

impl RadialZeroSet {
    /// Roots lying in the spectrum X, real first.
    pub fn spectral_roots(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self
            .real
            .iter()
            .filter(|r| r.in_spectrum)
            .map(|r| Complex64::new(r.value, 0.0))
            .collect();
        out.extend(
            self.complex
                .iter()
                .filter(|r| r.in_spectrum && r.accepted)
                .map(|r| r.value),
        );
        out
    }

    /// Real roots in (−2k, 2k), the set the critical exponent is built on.
    pub fn interval_roots(&self) -> Vec<f64> {
        self.real
            .iter()
            .filter(|r| r.in_open_interval)
            .map(|r| r.value)
            .collect()
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    coeffs.iter().rev().fold((zero, zero), |(p, dp), c| (p * z + c, dp * z + p))
}

fn newton_polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    let mut best = (horner(coeffs, z).norm(), z);
    for _ in 0..8 {
        let (p, dp) = horner_with_derivative(coeffs, z);
        if dp.norm() == 0.0 {
            break;
        }
        z -= p / dp;
        let r = horner(coeffs, z).norm();
        if r < best.0 {
            best = (r, z);
        }
        if r == 0.0 {
            break;
        }
    }
    best.1
}

/// Eigenvalues of the companion matrix of a polynomial of degree ≥ 1.
fn companion_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    match m.clone().try_schur(f64::EPSILON, 10_000) {
        Some(s) => s.eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default(),
        None => m.eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default(),
    }
}

fn bisect_real(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let f = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let mut flo = f(lo);
    while hi - lo > 1e-12 * (1.0 + lo.abs().max(hi.abs())) {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All zeros of `α̂`, real ones isolated by sign changes and complex ones
/// from the companion matrix.
pub fn radial_zero_set<C: Coeff>(alpha: &RadialElement<C>) -> Result<RadialZeroSet, RadialError> {
    let transform = gelfand_transform(alpha)?;
    let coeffs: Vec<Complex64> = transform.poly.coeffs().iter().map(|c| c.to_complex()).collect();
    let Some(degree) = transform.poly.degree() else {
        return Err(RadialError::ZeroElement);
    };
    let k = alpha.k;
    let ellipse = SpectrumEllipse { k };
    let half_width = 2.0 * k as f64;
    let mut out = RadialZeroSet {
        k,
        degree,
        real: Vec::new(),
        complex: Vec::new(),
    };
    if degree == 0 {
        return Ok(out);
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let is_real = coeffs.iter().all(|c| c.im.abs() <= 1e-15 * scale);

    let make_real = |value: f64, sign_change: bool| RealRoot {
        value,
        in_open_interval: value > -half_width && value < half_width,
        in_spectrum: ellipse.contains(Complex64::new(value, 0.0), BOUNDARY_TOL),
        sign_change,
    };

    if is_real {
        let real: Vec<f64> = coeffs.iter().map(|c| c.re).collect();
        let lead = real[degree].abs();
        let bound = 1.0 + real[..degree].iter().map(|c| c.abs() / lead).fold(0.0, f64::max);
        let cells = 8192;
        let f = |x: f64| real.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let mut x0 = -bound;
        let mut f0 = f(x0);
        for i in 1..=cells {
            let x1 = -bound + 2.0 * bound * i as f64 / cells as f64;
            let f1 = f(x1);
            if f0 == 0.0 {
                out.real.push(make_real(x0, true));
            } else if f1 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
                out.real.push(make_real(bisect_real(&real, x0, x1), true));
            }
            x0 = x1;
            f0 = f1;
        }
        if f0 == 0.0 {
            out.real.push(make_real(x0, true));
        }
    }

    for r in companion_roots(&coeffs) {
        let r = newton_polish(&coeffs, r);
        if r.im.abs() <= REAL_SNAP * (1.0 + r.re.abs()) {
            let near = out
                .real
                .iter()
                .any(|e| (e.value - r.re).abs() <= REAL_SNAP * (1.0 + r.re.abs()));
            if !near {
                out.real.push(make_real(r.re, false));
            }
        } else {
            let backward_error = horner(&coeffs, r).norm() / scale;
            out.complex.push(ComplexRoot {
                value: r,
                in_spectrum: ellipse.contains(r, BOUNDARY_TOL),
                backward_error,
                accepted: backward_error <= BACKWARD_TOL,
            });
        }
    }
    out.real.sort_by(|a, b| a.value.total_cmp(&b.value));
    out.complex
        .sort_by(|a, b| a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss_frac, GaussRat};

    fn radial(k: u32, v: Vec<GaussRat>) -> RadialElement<GaussRat> {
        RadialElement::new(k, v)
    }

    #[test]
    fn chi1_has_zero_at_origin() {
        let z = radial_zero_set(&RadialElement::<GaussRat>::chi(2, 1)).unwrap();
        assert_eq!(z.real.len(), 1);
        assert!(z.real[0].value.abs() < 1e-12);
        assert!(z.real[0].in_spectrum && z.real[0].in_open_interval);
        assert!(z.complex.is_empty());
    }

    #[test]
    fn constants_have_no_zeros() {
        let z = radial_zero_set(&RadialElement::<GaussRat>::chi(3, 0)).unwrap();
        assert!(z.real.is_empty() && z.complex.is_empty());
        assert!(matches!(
            radial_zero_set(&RadialElement::<GaussRat>::zero(2)),
            Err(RadialError::ZeroElement)
        ));
    }

    #[test]
    fn linear_root() {
        let a = radial(2, vec![gauss_frac(-19, 0, 5), GaussRat::one()]);
        let z = radial_zero_set(&a).unwrap();
        assert_eq!(z.real.len(), 1);
        assert!((z.real[0].value - 3.8).abs() < 1e-12);
        assert!(z.real[0].in_open_interval);
    }

    #[test]
    fn complex_roots_are_tagged() {
        // z² + 16 = χ_2 + 20 χ_0 for k = 2: roots ±4i, outside X (b = 2)
        let a = radial(2, vec![GaussRat::from_i64(20), GaussRat::zero(), GaussRat::one()]);
        let z = radial_zero_set(&a).unwrap();
        assert!(z.real.is_empty());
        assert_eq!(z.complex.len(), 2);
        assert!(z.complex.iter().all(|r| !r.in_spectrum && r.accepted));
        assert!((z.complex[0].value.im.abs() - 4.0).abs() < 1e-12);
        // z² + 1: roots ±i inside X
        let b = radial(2, vec![GaussRat::from_i64(5), GaussRat::zero(), GaussRat::one()]);
        let z = radial_zero_set(&b).unwrap();
        assert!(z.complex.iter().all(|r| r.in_spectrum));
    }

    #[test]
    fn touching_double_root_is_found() {
        // (z − 1)² = z² − 2z + 1 = χ_2 − 2χ_1 + 5χ_0 for k = 2
        let a = radial(2, vec![GaussRat::from_i64(5), GaussRat::from_i64(-2), GaussRat::one()]);
        let z = radial_zero_set(&a).unwrap();
        assert_eq!(z.real.len(), 1);
        assert!((z.real[0].value - 1.0).abs() < 1e-6);
        assert!(!z.real[0].sign_change);
    }

    #[test]
    fn ellipse_membership() {
        let x = SpectrumEllipse { k: 2 };
        assert!(x.contains(Complex64::new(4.0, 0.0), 1e-12));
        assert!(!x.contains(Complex64::new(5.0, 0.0), 1e-12));
        assert!(x.contains(Complex64::new(0.0, 2.0), 1e-12));
        assert!(!x.contains(Complex64::new(0.0, 2.1), 1e-12));
    }
}
