use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use super::TorusError;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::group::{Group, LatticePoint};
use crate::scalar::Coeff;

/// A point of 𝕋^d with every coordinate reduced into [−π, π).
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    coords: Vec<f64>,
}

fn canonical_angle(x: f64) -> f64 {
    let r = x - 2.0 * PI * ((x + PI) / (2.0 * PI)).floor();
    if r >= PI {
        r - 2.0 * PI
    } else if r < -PI {
        r + 2.0 * PI
    } else {
        r
    }
}

impl TorusPoint {
    pub fn new(coords: Vec<f64>) -> TorusPoint {
        TorusPoint {
            coords: coords.into_iter().map(canonical_angle).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Geodesic sup-distance on the torus.
    pub fn distance(&self, other: &TorusPoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let d = (a - b).abs() % (2.0 * PI);
                d.min(2.0 * PI - d)
            })
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c:.12}")?;
        }
        Ok(())
    }
}

/// `α̂(t) = Σ a_n e^{−i n·t}` for α ∈ ℂℤ^d.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    dim: usize,
    terms: Vec<(Vec<f64>, Complex64)>,
    abs_sum: f64,
}

impl TrigPolynomial {
    pub fn from_element<C: Coeff>(alpha: &Element<LatticePoint, C>) -> Result<Self, TorusError> {
        let Group::Lattice { dim } = alpha.group() else {
            return Err(AlgebraError::InvalidGroup(format!(
                "torus transforms need Z^d, got {}",
                alpha.group()
            ))
            .into());
        };
        if dim == 0 {
            return Err(TorusError::ZeroDimension);
        }
        let terms: Vec<(Vec<f64>, Complex64)> = alpha
            .terms()
            .map(|(n, c)| (n.coords().iter().map(|&x| x as f64).collect(), c.to_complex()))
            .collect();
        let abs_sum = terms.iter().map(|(_, c)| c.norm()).sum();
        Ok(TrigPolynomial {
            dim,
            terms,
            abs_sum,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ |a_n|`, an upper bound for `|α̂|`.
    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    /// `Σ |a_n|²`.
    pub fn coefficient_energy(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm_sqr()).sum()
    }

    pub fn eval(&self, t: &TorusPoint) -> Result<Complex64, TorusError> {
        if t.dim() != self.dim {
            return Err(TorusError::DimensionMismatch {
                expected: self.dim,
                got: t.dim(),
            });
        }
        Ok(self.eval_at(t.coords()))
    }

    /// Evaluation at a raw coordinate vector of the right length.
    pub fn eval_at(&self, t: &[f64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(n, c)| c * phase(n, t))
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
    }

    /// `(α̂(t), ∂α̂/∂t_j)`, where `∂_j α̂ = Σ −i n_j a_n e^{−i n·t}`.
    pub fn eval_with_gradient(&self, t: &[f64]) -> (Complex64, Vec<Complex64>) {
        let zero = Complex64::new(0.0, 0.0);
        let mut value = zero;
        let mut grad = vec![zero; self.dim];
        for (n, c) in &self.terms {
            let v = c * phase(n, t);
            value += v;
            for (g, nj) in grad.iter_mut().zip(n) {
                *g += Complex64::new(0.0, -nj) * v;
            }
        }
        (value, grad)
    }
}

fn phase(n: &[f64], t: &[f64]) -> Complex64 {
    let dot: f64 = n.iter().zip(t).map(|(a, b)| a * b).sum();
    Complex64::from_polar(1.0, -dot)
}
