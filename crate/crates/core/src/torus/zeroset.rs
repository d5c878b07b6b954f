use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::{TorusError, TorusPoint, TrigPolynomial};

/// Sampled points of `Z(α) = {t : α̂(t) = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSetSample {
    pub dim: usize,
    pub points: Vec<TorusPoint>,
    /// `|α̂|` at each stored point.
    pub abs_values: Vec<f64>,
    pub resolution: usize,
    /// Grid step `2π / resolution`.
    pub step: f64,
    pub tol: f64,
}

impl ZeroSetSample {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }
}

const BISECTION_STEPS: usize = 60;

/// Uniform grid scan of `[−π, π)^d` followed by bisection on grid edges.
///
/// A node is kept when `|α̂| ≤ tol·Σ|a_n|`. An edge between two unflagged
/// nodes with values `v_a`, `v_b` is refined when `Re(v_a·conj v_b) < 0`,
/// i.e. the value swings through a half turn. For real transforms this is a
/// sign change. The refinement bisects `Re(conj(u)·α̂)` with `u` the phase of
/// `v_a`, and the result is kept only if it passes the same threshold.
///
/// Output is in grid order: each node, then its refined forward edges.
pub fn sample_zero_set(
    alpha: &TrigPolynomial,
    resolution: usize,
    tol: f64,
) -> Result<ZeroSetSample, TorusError> {
    if resolution < 8 {
        return Err(TorusError::InvalidResolution(resolution));
    }
    if !(tol > 0.0) {
        return Err(TorusError::InvalidTolerance(tol));
    }
    if alpha.is_zero() {
        return Err(TorusError::ZeroPolynomial);
    }
    let d = alpha.dim();
    let step = 2.0 * PI / resolution as f64;
    let threshold = tol * alpha.abs_sum();
    let total = resolution.pow(d as u32);

    let index_to_node = |mut idx: usize| -> Vec<usize> {
        let mut node = vec![0; d];
        for j in (0..d).rev() {
            node[j] = idx % resolution;
            idx /= resolution;
        }
        node
    };
    let node_to_index = |node: &[usize]| node.iter().fold(0, |acc, &i| acc * resolution + i);
    let coords = |node: &[usize]| -> Vec<f64> { node.iter().map(|&i| -PI + i as f64 * step).collect() };

    let values: Vec<Complex64> = (0..total)
        .into_par_iter()
        .map(|idx| alpha.eval_at(&coords(&index_to_node(idx))))
        .collect();
    let flagged = |idx: usize| values[idx].norm() <= threshold;

    let found: Vec<Vec<(TorusPoint, f64)>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let mut out = Vec::new();
            let node = index_to_node(idx);
            let va = values[idx];
            if flagged(idx) {
                out.push((TorusPoint::new(coords(&node)), va.norm()));
                return out;
            }
            for axis in 0..d {
                let mut next = node.clone();
                next[axis] = (next[axis] + 1) % resolution;
                let nidx = node_to_index(&next);
                let vb = values[nidx];
                if flagged(nidx) || (va * vb.conj()).re >= 0.0 {
                    continue;
                }
                let u = va / va.norm();
                let base = coords(&node);
                let at = |s: f64| {
                    let mut t = base.clone();
                    t[axis] += s;
                    t
                };
                let h = |s: f64| (u.conj() * alpha.eval_at(&at(s))).re;
                let (mut lo, mut hi) = (0.0, step);
                for _ in 0..BISECTION_STEPS {
                    let mid = 0.5 * (lo + hi);
                    if h(mid) > 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let t = at(0.5 * (lo + hi));
                let v = alpha.eval_at(&t).norm();
                if v <= threshold {
                    out.push((TorusPoint::new(t), v));
                }
            }
            out
        })
        .collect();

    let (points, abs_values) = found.into_iter().flatten().unzip();
    Ok(ZeroSetSample {
        dim: d,
        points,
        abs_values,
        resolution,
        step,
        tol,
    })
}
