use std::f64::consts::PI;

use super::{TorusError, TorusPoint, ZeroSetSample};

/// `{x ∈ ℝ^d : normal·x = offset}` with a unit normal, projected to 𝕋^d
/// through the cube `[−π, π]^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Vec<f64>,
    offset: f64,
}

impl Hyperplane {
    /// Scales `(normal, offset)` so that the normal has unit length.
    pub fn new(normal: Vec<f64>, offset: f64) -> Result<Hyperplane, TorusError> {
        let len = normal.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(len > 0.0) || !len.is_finite() {
            return Err(TorusError::DegenerateNormal);
        }
        Ok(Hyperplane {
            normal: normal.iter().map(|x| x / len).collect(),
            offset: offset / len,
        })
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Distance from `x ∈ ℝ^d` to the plane, provided the foot of the
    /// perpendicular lies in the cube enlarged by `slack`.
    fn cube_distance(&self, x: &[f64], slack: f64) -> Option<f64> {
        let signed: f64 = self.normal.iter().zip(x).map(|(n, v)| n * v).sum::<f64>() - self.offset;
        let inside = x
            .iter()
            .zip(&self.normal)
            .all(|(v, n)| (v - signed * n).abs() <= PI + slack);
        inside.then_some(signed.abs())
    }

    /// Distance on the torus, minimised over the 3^d lifts of `t`.
    pub fn torus_distance(&self, t: &TorusPoint, slack: f64) -> f64 {
        let d = t.dim();
        let mut best = f64::INFINITY;
        for code in 0..3usize.pow(d as u32) {
            let mut c = code;
            let lift: Vec<f64> = t
                .coords()
                .iter()
                .map(|x| {
                    let s = (c % 3) as f64 - 1.0;
                    c /= 3;
                    x + 2.0 * PI * s
                })
                .collect();
            if let Some(dist) = self.cube_distance(&lift, slack) {
                best = best.min(dist);
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverReport {
    pub covered: bool,
    pub uncovered: Vec<TorusPoint>,
    pub dist_tol: f64,
    pub sample_count: usize,
}

/// Checks whether every sampled zero lies within `dist_tol` of one of the
/// planes.
pub fn hyperplane_cover_check(
    sample: &ZeroSetSample,
    planes: &[Hyperplane],
    dist_tol: f64,
) -> Result<CoverReport, TorusError> {
    if !(dist_tol > 0.0) {
        return Err(TorusError::InvalidTolerance(dist_tol));
    }
    if let Some(p) = planes.iter().find(|p| p.dim() != sample.dim) {
        return Err(TorusError::DimensionMismatch {
            expected: sample.dim,
            got: p.dim(),
        });
    }
    let uncovered: Vec<TorusPoint> = sample
        .points
        .iter()
        .filter(|t| !planes.iter().any(|p| p.torus_distance(t, dist_tol) <= dist_tol))
        .cloned()
        .collect();
    Ok(CoverReport {
        covered: uncovered.is_empty(),
        uncovered,
        dist_tol,
        sample_count: sample.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(points: Vec<Vec<f64>>) -> ZeroSetSample {
        let d = points.first().map_or(2, |p| p.len());
        ZeroSetSample {
            dim: d,
            abs_values: vec![0.0; points.len()],
            points: points.into_iter().map(TorusPoint::new).collect(),
            resolution: 16,
            step: 2.0 * PI / 16.0,
            tol: 1e-8,
        }
    }

    #[test]
    fn normalisation() {
        let h = Hyperplane::new(vec![3.0, 4.0], 10.0).unwrap();
        assert!((h.normal()[0] - 0.6).abs() < 1e-15 && (h.offset() - 2.0).abs() < 1e-15);
        assert!(Hyperplane::new(vec![0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn empty_sample_is_covered() {
        let r = hyperplane_cover_check(&sample(vec![]), &[], 1e-6).unwrap();
        assert!(r.covered);
    }

    #[test]
    fn face_identification() {
        // t₁ = π is the same torus line as t₁ = −π
        let plane = Hyperplane::new(vec![1.0, 0.0], PI).unwrap();
        let s = sample(vec![vec![-PI, 0.3], vec![PI - 1e-9, -2.0]]);
        assert!(hyperplane_cover_check(&s, &[plane], 1e-6).unwrap().covered);
        // a plane meeting the cube only outside the sample's lifts
        let far = Hyperplane::new(vec![1.0, 1.0], 1.9 * PI).unwrap();
        let r = hyperplane_cover_check(&sample(vec![vec![0.0, 0.0]]), &[far], 1e-6).unwrap();
        assert!(!r.covered && r.uncovered.len() == 1);
    }

    #[test]
    fn diagonal_line_wraps() {
        // t₁ − t₂ = 0 on the torus passes through (π−ε, π−ε) and (−π, −π)
        let plane = Hyperplane::new(vec![1.0, -1.0], 0.0).unwrap();
        let s = sample(vec![vec![-PI, -PI], vec![1.0, 1.0]]);
        assert!(hyperplane_cover_check(&s, &[plane], 1e-9).unwrap().covered);
    }
}
