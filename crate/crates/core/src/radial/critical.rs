//! The critical exponent p(α) and the L^∞ annihilator verdict.

use super::{radial_zero_set, RadialElement, RadialError};
use crate::scalar::Coeff;
use crate::verdict::{Citation, Verdict, VerdictStatus, Witness};

/// Which of the three regimes of `m(α)` produced the exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalBranch {
    /// No transform zero in (−2k, 2k): p(α) = ∞.
    Empty,
    /// m(α) ∈ [0, 2ω]: p(α) = 2.
    SmallM,
    /// m(α) ∈ (2ω, 2k): p(α) solves `m = ω(ω^{1−2/p} + ω^{2/p−1})`.
    LargeM,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalExponent {
    /// `min |t|` over real zeros in (−2k, 2k), or +∞ when there are none.
    pub m: f64,
    pub p: f64,
    pub branch: CriticalBranch,
    /// `|curve(p) − m|` for the large-m branch, zero otherwise.
    pub residual: f64,
}

/// `ω(ω^{1−2/p} + ω^{2/p−1})` with `ω = √(2k−1)`; increases from 2ω at
/// p = 2 to 2k as p → ∞.
pub fn exponent_curve(k: u32, p: f64) -> f64 {
    let w = (2.0 * k as f64 - 1.0).sqrt();
    let e = 1.0 - 2.0 / p;
    w * (w.powf(e) + w.powf(-e))
}

const BISECTION_TOL: f64 = 1e-10;

fn solve_curve(k: u32, m: f64) -> (f64, f64) {
    let mut lo = 2.0;
    let mut hi = 4.0;
    while exponent_curve(k, hi) < m {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = exponent_curve(k, mid) - m;
        if f.abs() <= BISECTION_TOL * 1e-3 {
            lo = mid;
            hi = mid;
            break;
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    (p, (exponent_curve(k, p) - m).abs())
}

pub fn critical_exponent<C: Coeff>(alpha: &RadialElement<C>) -> Result<CriticalExponent, RadialError> {
    let zeros = radial_zero_set(alpha)?;
    let m = zeros
        .interval_roots()
        .into_iter()
        .map(f64::abs)
        .fold(f64::INFINITY, f64::min);
    let k = alpha.k;
    let two_w = 2.0 * (2.0 * k as f64 - 1.0).sqrt();
    let out = if m.is_infinite() {
        CriticalExponent { m, p: f64::INFINITY, branch: CriticalBranch::Empty, residual: 0.0 }
    } else if m <= two_w {
        CriticalExponent { m, p: 2.0, branch: CriticalBranch::SmallM, residual: 0.0 }
    } else {
        let (p, residual) = solve_curve(k, m);
        CriticalExponent { m, p, branch: CriticalBranch::LargeM, residual }
    };
    Ok(out)
}

/// Nonzero divisor on L^∞ exactly when α̂ has no zero in the spectrum X;
/// otherwise φ_z at a zero z annihilates α.
pub fn radial_linf_verdict<C: Coeff>(alpha: &RadialElement<C>) -> Result<Verdict, RadialError> {
    let zeros = radial_zero_set(alpha)?;
    let roots = zeros.spectral_roots();
    let Some(z) = roots.first() else {
        return Ok(Verdict::new(VerdictStatus::NonzeroDivisor, Citation::SphericalAnnihilator));
    };
    Ok(Verdict::new(VerdictStatus::ZeroDivisor, Citation::SphericalAnnihilator).with_witness(
        Witness::SphericalFunction {
            rank: alpha.k,
            z: *z,
            experimental: z.im != 0.0,
        },
    ))
}
