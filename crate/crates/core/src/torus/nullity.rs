//! Relative nullity of a zero set from the Hessian of local graphs.
//!
//! Around a sampled zero the set is written as a graph
//! `t_a = φ(t_others)` over the axis `a` where `|∂_a α̂|` is largest. The
//! values of φ on a 3×3 stencil come from Newton solves along that axis,
//! and their finite-difference Hessian has rank `d−1−ν`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::{TorusError, TorusPoint, TrigPolynomial, ZeroSetSample};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullityParams {
    /// Singular values at most `rank_tol·max(σ_max, 1)` count as zero.
    pub rank_tol: f64,
    pub fd_step: f64,
    /// Chart radius; `None` means five grid steps of the sample.
    pub chart_radius: Option<f64>,
    pub max_charts: usize,
}

impl Default for NullityParams {
    fn default() -> Self {
        NullityParams {
            rank_tol: 1e-5,
            fd_step: 1e-3,
            chart_radius: None,
            max_charts: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartFlag {
    /// Fewer than two other sample points inside the chart.
    Sparse,
    /// The gradient of α̂ vanishes at the centre.
    NonGraph,
    /// A stencil root left the chart or did not converge.
    RootFailed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChartReport {
    pub center: TorusPoint,
    /// The graph direction.
    pub axis: Option<usize>,
    pub singular_values: Vec<f64>,
    pub rank: Option<usize>,
    pub flags: Vec<ChartFlag>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NullityReport {
    pub dim: usize,
    /// Most frequent `d−1−rank` over usable charts.
    pub nu: usize,
    pub hessian_rank: usize,
    pub rank_tol: f64,
    pub fd_step: f64,
    pub chart_radius: f64,
    pub sample_count: usize,
    pub charts: Vec<ChartReport>,
    /// Every usable chart produced the same rank.
    pub constant_rank: bool,
}

fn choose_centers(sample: &ZeroSetSample, radius: f64, max_charts: usize) -> Vec<usize> {
    let n = sample.len();
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..max_charts.min(n) {
        let i = j * n / max_charts.min(n);
        if chosen
            .iter()
            .all(|&c| sample.points[c].distance(&sample.points[i]) >= radius)
        {
            chosen.push(i);
        }
    }
    chosen
}

struct Chart<'a> {
    alpha: &'a TrigPolynomial,
    center: Vec<f64>,
    axis: usize,
    phase: Complex64,
    radius: f64,
    accept: f64,
}

impl Chart<'_> {
    /// `φ` at the centre shifted by `delta` in the non-graph coordinates.
    fn solve(&self, delta: &[f64]) -> Option<f64> {
        let mut t = self.center.clone();
        let mut k = 0;
        for (j, x) in t.iter_mut().enumerate() {
            if j != self.axis {
                *x += delta[k];
                k += 1;
            }
        }
        let x0 = self.center[self.axis];
        for _ in 0..60 {
            let (v, g) = self.alpha.eval_with_gradient(&t);
            let f = (self.phase.conj() * v).re;
            let df = (self.phase.conj() * g[self.axis]).re;
            if df == 0.0 {
                return None;
            }
            let step = f / df;
            t[self.axis] -= step;
            if (t[self.axis] - x0).abs() > self.radius {
                return None;
            }
            if step.abs() <= 1e-15 * (1.0 + t[self.axis].abs()) {
                break;
            }
        }
        (self.alpha.eval_at(&t).norm() <= self.accept).then_some(t[self.axis])
    }

    fn hessian(&self, h: f64) -> Option<DMatrix<f64>> {
        let m = self.center.len() - 1;
        let e = |pairs: &[(usize, f64)]| {
            let mut delta = vec![0.0; m];
            for &(i, s) in pairs {
                delta[i] += s;
            }
            self.solve(&delta)
        };
        let f0 = e(&[])?;
        let mut hess = DMatrix::zeros(m, m);
        for i in 0..m {
            let fp = e(&[(i, h)])?;
            let fm = e(&[(i, -h)])?;
            hess[(i, i)] = (fp - 2.0 * f0 + fm) / (h * h);
            for l in 0..i {
                let pp = e(&[(i, h), (l, h)])?;
                let pm = e(&[(i, h), (l, -h)])?;
                let mp = e(&[(i, -h), (l, h)])?;
                let mm = e(&[(i, -h), (l, -h)])?;
                let v = (pp - pm - mp + mm) / (4.0 * h * h);
                hess[(i, l)] = v;
                hess[(l, i)] = v;
            }
        }
        Some(hess)
    }
}

/// Estimates the relative nullity of `Z(α)` from charts around sampled zeros.
pub fn estimate_nullity(
    alpha: &TrigPolynomial,
    sample: &ZeroSetSample,
    params: NullityParams,
) -> Result<NullityReport, TorusError> {
    let d = alpha.dim();
    if sample.dim != d {
        return Err(TorusError::DimensionMismatch {
            expected: d,
            got: sample.dim,
        });
    }
    if sample.is_empty() {
        return Err(TorusError::EmptySample);
    }
    let radius = params.chart_radius.unwrap_or(5.0 * sample.step);
    if !(params.rank_tol > 0.0) || !(params.fd_step > 0.0) || params.max_charts == 0 {
        return Err(TorusError::InvalidParams(format!(
            "rank_tol {} fd_step {} max_charts {}",
            params.rank_tol, params.fd_step, params.max_charts
        )));
    }
    if 2.0 * params.fd_step >= radius {
        return Err(TorusError::InvalidParams(format!(
            "fd_step {} does not fit in chart radius {radius}",
            params.fd_step
        )));
    }
    let accept = sample.tol.max(1e-10) * alpha.abs_sum();
    let centers = choose_centers(sample, radius, params.max_charts);

    let charts: Vec<ChartReport> = centers
        .par_iter()
        .map(|&i| {
            let center = sample.points[i].clone();
            let mut report = ChartReport {
                center: center.clone(),
                axis: None,
                singular_values: Vec::new(),
                rank: None,
                flags: Vec::new(),
            };
            let neighbours = sample
                .points
                .iter()
                .enumerate()
                .filter(|(j, p)| *j != i && p.distance(&center) < radius)
                .count();
            if d > 1 && neighbours < 2 {
                report.flags.push(ChartFlag::Sparse);
            }
            let (_, grad) = alpha.eval_with_gradient(center.coords());
            let (axis, g) = grad
                .iter()
                .enumerate()
                .fold((0, Complex64::new(0.0, 0.0)), |best, (j, g)| {
                    if g.norm() > best.1.norm() {
                        (j, *g)
                    } else {
                        best
                    }
                });
            if g.norm() <= 1e-8 * alpha.abs_sum() {
                report.flags.push(ChartFlag::NonGraph);
                return report;
            }
            report.axis = Some(axis);
            let chart = Chart {
                alpha,
                center: center.coords().to_vec(),
                axis,
                phase: g / g.norm(),
                radius,
                accept,
            };
            let Some(hess) = chart.hessian(params.fd_step) else {
                report.flags.push(ChartFlag::RootFailed);
                return report;
            };
            let sv: Vec<f64> = if d > 1 {
                hess.singular_values().iter().copied().collect()
            } else {
                Vec::new()
            };
            let smax = sv.iter().copied().fold(0.0, f64::max);
            let cut = params.rank_tol * smax.max(1.0);
            report.rank = Some(sv.iter().filter(|&&s| s > cut).count());
            report.singular_values = sv;
            report
        })
        .collect();

    let usable: Vec<usize> = charts
        .iter()
        .filter(|c| c.flags.is_empty())
        .filter_map(|c| c.rank)
        .collect();
    if usable.is_empty() {
        return Err(TorusError::TooSparse(format!(
            "{} charts tried, none usable",
            charts.len()
        )));
    }
    let mut counts = vec![0usize; d];
    for &r in &usable {
        counts[r] += 1;
    }
    let hessian_rank = (0..d)
        .max_by(|a, b| counts[*a].cmp(&counts[*b]).then(b.cmp(a)))
        .expect("d ≥ 1");
    Ok(NullityReport {
        dim: d,
        nu: d - 1 - hessian_rank,
        hessian_rank,
        rank_tol: params.rank_tol,
        fd_step: params.fd_step,
        chart_radius: radius,
        sample_count: sample.len(),
        constant_rank: usable.iter().all(|&r| r == hessian_rank),
        charts,
    })
}
