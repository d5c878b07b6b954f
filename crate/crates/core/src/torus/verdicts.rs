//! Exponent verdicts for ℂℤ^d.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use super::{CoverReport, TorusError, TrigPolynomial};
use crate::exponent::Exponent;
use crate::verdict::{Caveat, Citation, Verdict, VerdictStatus};

/// `2d/(d−1)`; below or at it no element of ℂℤ^d is a p-zero divisor.
pub fn theorem1_threshold(d: usize) -> Result<Ratio<i64>, TorusError> {
    match d {
        0 => Err(TorusError::ZeroDimension),
        1 => Err(TorusError::DimensionMismatch { expected: 2, got: 1 }),
        _ => Ok(Ratio::new(2 * d as i64, d as i64 - 1)),
    }
}

/// Decides from `(d, p)` alone; the answer does not depend on α.
///
/// For d = 1 every criterion here needs d ≥ 2, so the verdict is
/// out of scope rather than an error.
pub fn theorem1_verdict(d: usize, p: Exponent) -> Result<Verdict, TorusError> {
    if d == 0 {
        return Err(TorusError::ZeroDimension);
    }
    if d == 1 {
        return Ok(Verdict::new(VerdictStatus::OutOfScope, Citation::AbelianExponentBound));
    }
    let t = theorem1_threshold(d)?;
    let status = match p.cmp_ratio(t) {
        Ordering::Greater => VerdictStatus::Unknown,
        _ => VerdictStatus::NonzeroDivisor,
    };
    Ok(Verdict::new(status, Citation::AbelianExponentBound).with_threshold(t.to_f64().unwrap_or(f64::NAN)))
}

/// `p* = 2(d−ν)/(d−1−ν)` for `0 ≤ ν ≤ d−2`.
pub fn relative_nullity_threshold(d: usize, nu: usize) -> Result<Ratio<i64>, TorusError> {
    if d < 2 {
        return Err(TorusError::DimensionMismatch { expected: 2, got: d });
    }
    if nu == d - 1 {
        return Err(TorusError::HyperplaneRegime);
    }
    if nu > d - 1 {
        return Err(TorusError::NullityOutOfRange { d, nu, max: d - 2 });
    }
    let (d, nu) = (d as i64, nu as i64);
    Ok(Ratio::new(2 * (d - nu), d - 1 - nu))
}

/// Zero divisor iff `p > p*`, under the sampled constant-nullity hypothesis.
pub fn theorem3_verdict(d: usize, nu: usize, p: Exponent) -> Result<Verdict, TorusError> {
    let t = relative_nullity_threshold(d, nu)?;
    let status = match p.cmp_ratio(t) {
        Ordering::Greater => VerdictStatus::ZeroDivisor,
        _ => VerdictStatus::NonzeroDivisor,
    };
    Ok(Verdict::new(status, Citation::RelativeNullity)
        .with_threshold(t.to_f64().unwrap_or(f64::NAN))
        .with_caveat(Caveat::HypothesisNotCertified))
}

/// Uniform nonzero divisor evidence from a hyperplane cover. An uncovered
/// sample leaves the question open, since other planes might still cover.
pub fn theorem2_evidence(report: &CoverReport) -> Verdict {
    let status = if report.covered {
        VerdictStatus::NonzeroDivisor
    } else {
        VerdictStatus::Unknown
    };
    Verdict::new(status, Citation::HyperplaneCover).with_caveat(Caveat::SampledEvidence)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalCheck {
    /// Grid mean of `|α̂|²`.
    pub grid_mean: f64,
    /// `Σ |a_n|²`.
    pub coefficient_sum: f64,
    pub relative_error: f64,
}

/// Compares `(2π)^{−d} ∫ |α̂|²`, approximated by the grid mean, with `Σ|a_n|²`.
pub fn parseval_check(alpha: &TrigPolynomial, resolution: usize) -> Result<ParsevalCheck, TorusError> {
    if resolution < 8 {
        return Err(TorusError::InvalidResolution(resolution));
    }
    let d = alpha.dim();
    let total = resolution.pow(d as u32);
    let step = 2.0 * PI / resolution as f64;
    let mut t = vec![0.0; d];
    let mut acc = 0.0;
    for mut idx in 0..total {
        for x in t.iter_mut().rev() {
            *x = -PI + (idx % resolution) as f64 * step;
            idx /= resolution;
        }
        acc += alpha.eval_at(&t).norm_sqr();
    }
    let grid_mean = acc / total as f64;
    let coefficient_sum = alpha.coefficient_energy();
    Ok(ParsevalCheck {
        grid_mean,
        coefficient_sum,
        relative_error: (grid_mean - coefficient_sum).abs() / coefficient_sum.max(f64::MIN_POSITIVE),
    })
}
