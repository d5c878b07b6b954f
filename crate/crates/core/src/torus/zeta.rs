//! Discrete correspondence between functions on ℝ^d and on 𝕋^d × ℤ^d.
//!
//! Here the torus is ℝ^d/ℤ^d cut into `m` cells per unit and the lattice
//! coordinate is restricted to the window `[−R, R]^d`. A real cell at
//! `x = n + j/m` (with `0 ≤ j < m`) corresponds to torus cell `j` and
//! lattice point `n`, so that `(ζf)(t, n) = f(t + n)`. With this sign the
//! translation actions `(nf)(x) = f(x − n)` and `(nF)(t, k) = F(t, k − n)`
//! are intertwined by ζ.

use num_complex::Complex64;

use super::TorusError;
use crate::element::Element;
use crate::group::{Group, LatticePoint};
use crate::scalar::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    dim: usize,
    resolution: usize,
    radius: i64,
}

impl Shape {
    fn new(dim: usize, resolution: usize, radius: i64) -> Result<Shape, TorusError> {
        if dim == 0 {
            return Err(TorusError::ZeroDimension);
        }
        if resolution == 0 || radius < 0 {
            return Err(TorusError::ShapeMismatch(format!(
                "resolution {resolution} and radius {radius} must be positive"
            )));
        }
        Ok(Shape { dim, resolution, radius })
    }

    fn window(&self) -> usize {
        2 * self.radius as usize + 1
    }

    fn axis_cells(&self) -> usize {
        self.resolution * self.window()
    }

    fn len(&self) -> usize {
        self.axis_cells().pow(self.dim as u32)
    }

    fn torus_len(&self) -> usize {
        self.resolution.pow(self.dim as u32)
    }

    fn lattice_len(&self) -> usize {
        self.window().pow(self.dim as u32)
    }

    fn in_window(&self, n: &[i64]) -> bool {
        n.iter().all(|x| x.abs() <= self.radius)
    }

    fn lattice_index(&self, n: &[i64]) -> usize {
        n.iter()
            .fold(0, |acc, &x| acc * self.window() + (x + self.radius) as usize)
    }

    fn lattice_point(&self, mut idx: usize) -> Vec<i64> {
        let mut n = vec![0; self.dim];
        for x in n.iter_mut().rev() {
            *x = (idx % self.window()) as i64 - self.radius;
            idx /= self.window();
        }
        n
    }

    fn torus_index(&self, j: &[usize]) -> usize {
        j.iter().fold(0, |acc, &x| acc * self.resolution + x)
    }

    fn torus_cell(&self, mut idx: usize) -> Vec<usize> {
        let mut j = vec![0; self.dim];
        for x in j.iter_mut().rev() {
            *x = idx % self.resolution;
            idx /= self.resolution;
        }
        j
    }

    /// Real cell with torus part `j` and lattice part `n`, per axis
    /// `c = (n + R)·m + j`.
    fn real_index(&self, j: &[usize], n: &[i64]) -> usize {
        j.iter().zip(n).fold(0, |acc, (&j, &n)| {
            acc * self.axis_cells() + (n + self.radius) as usize * self.resolution + j
        })
    }

    fn real_split(&self, mut idx: usize) -> (Vec<usize>, Vec<i64>) {
        let mut j = vec![0; self.dim];
        let mut n = vec![0; self.dim];
        for a in (0..self.dim).rev() {
            let c = idx % self.axis_cells();
            idx /= self.axis_cells();
            j[a] = c % self.resolution;
            n[a] = (c / self.resolution) as i64 - self.radius;
        }
        (j, n)
    }
}

/// A function on ℝ^d sampled on cells of width `1/m` over `[−R, R+1)^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealGridFunction {
    shape: Shape,
    values: Vec<Complex64>,
}

/// A function on 𝕋^d × ℤ^d: `m^d` torus cells times the window `[−R, R]^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    shape: Shape,
    values: Vec<Complex64>,
}

macro_rules! shared_accessors {
    ($t:ty) => {
        impl $t {
            pub fn dim(&self) -> usize {
                self.shape.dim
            }

            pub fn resolution(&self) -> usize {
                self.shape.resolution
            }

            pub fn radius(&self) -> i64 {
                self.shape.radius
            }

            pub fn values(&self) -> &[Complex64] {
                &self.values
            }
        }
    };
}

shared_accessors!(RealGridFunction);
shared_accessors!(GridFunction);

impl RealGridFunction {
    /// `values` are indexed lexicographically by per-axis real cell.
    pub fn new(
        dim: usize,
        resolution: usize,
        radius: i64,
        values: Vec<Complex64>,
    ) -> Result<Self, TorusError> {
        let shape = Shape::new(dim, resolution, radius)?;
        if values.len() != shape.len() {
            return Err(TorusError::ShapeMismatch(format!(
                "expected {} values, got {}",
                shape.len(),
                values.len()
            )));
        }
        Ok(RealGridFunction { shape, values })
    }

    /// Builds from `f(j, n)`, the value on the cell `n + j/m`.
    pub fn from_fn(
        dim: usize,
        resolution: usize,
        radius: i64,
        f: impl Fn(&[usize], &[i64]) -> Complex64,
    ) -> Result<Self, TorusError> {
        let shape = Shape::new(dim, resolution, radius)?;
        let values = (0..shape.len())
            .map(|i| {
                let (j, n) = shape.real_split(i);
                f(&j, &n)
            })
            .collect();
        Ok(RealGridFunction { shape, values })
    }

    pub fn get(&self, j: &[usize], n: &[i64]) -> Complex64 {
        self.values[self.shape.real_index(j, n)]
    }
}

impl GridFunction {
    /// `values` are indexed torus-major: `torus_index · window^d + lattice_index`.
    pub fn new(
        dim: usize,
        resolution: usize,
        radius: i64,
        values: Vec<Complex64>,
    ) -> Result<Self, TorusError> {
        let shape = Shape::new(dim, resolution, radius)?;
        if values.len() != shape.len() {
            return Err(TorusError::ShapeMismatch(format!(
                "expected {} values, got {}",
                shape.len(),
                values.len()
            )));
        }
        Ok(GridFunction { shape, values })
    }

    pub fn from_fn(
        dim: usize,
        resolution: usize,
        radius: i64,
        f: impl Fn(&[usize], &[i64]) -> Complex64,
    ) -> Result<Self, TorusError> {
        let shape = Shape::new(dim, resolution, radius)?;
        let mut values = Vec::with_capacity(shape.len());
        for ti in 0..shape.torus_len() {
            let j = shape.torus_cell(ti);
            for li in 0..shape.lattice_len() {
                values.push(f(&j, &shape.lattice_point(li)));
            }
        }
        Ok(GridFunction { shape, values })
    }

    /// `F(t, n) = β(n)`, constant along the torus.
    pub fn from_lattice<C: Coeff>(
        beta: &Element<LatticePoint, C>,
        resolution: usize,
        radius: i64,
    ) -> Result<Self, TorusError> {
        let dim = lattice_dim(beta)?;
        Self::from_fn(dim, resolution, radius, |_, n| {
            beta.coeff(&LatticePoint(n.to_vec())).to_complex()
        })
    }

    pub fn get(&self, j: &[usize], n: &[i64]) -> Complex64 {
        self.values[self.shape.torus_index(j) * self.shape.lattice_len() + self.shape.lattice_index(n)]
    }
}

fn lattice_dim<C: Coeff>(alpha: &Element<LatticePoint, C>) -> Result<usize, TorusError> {
    match alpha.group() {
        Group::Lattice { dim } => Ok(dim),
        g => Err(crate::error::AlgebraError::InvalidGroup(format!("expected Z^d, got {g}")).into()),
    }
}

/// `(ζf)(t, n) = f(t + n)`, a pure re-indexing.
pub fn zeta_map(f: &RealGridFunction) -> GridFunction {
    let s = f.shape;
    let mut values = Vec::with_capacity(s.len());
    for ti in 0..s.torus_len() {
        let j = s.torus_cell(ti);
        for li in 0..s.lattice_len() {
            values.push(f.values[s.real_index(&j, &s.lattice_point(li))]);
        }
    }
    GridFunction { shape: s, values }
}

pub fn zeta_inverse(g: &GridFunction) -> RealGridFunction {
    let s = g.shape;
    let values = (0..s.len())
        .map(|i| {
            let (j, n) = s.real_split(i);
            g.get(&j, &n)
        })
        .collect();
    RealGridFunction { shape: s, values }
}

fn shifts<C: Coeff>(
    alpha: &Element<LatticePoint, C>,
    shape: &Shape,
) -> Result<Vec<(Vec<i64>, Complex64)>, TorusError> {
    let dim = lattice_dim(alpha)?;
    if dim != shape.dim {
        return Err(TorusError::DimensionMismatch {
            expected: shape.dim,
            got: dim,
        });
    }
    alpha
        .terms()
        .map(|(n, c)| {
            if n.max_abs() > 2 * shape.radius {
                return Err(TorusError::WindowOverflow {
                    shift: n.to_string(),
                    radius: shape.radius,
                });
            }
            Ok((n.coords().to_vec(), c.to_complex()))
        })
        .collect()
}

fn boundary_points(shape: &Shape, flagged: &[bool]) -> Vec<LatticePoint> {
    flagged
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| LatticePoint(shape.lattice_point(i)))
        .collect()
}

/// `(αF)(t, k) = Σ a_n F(t, k − n)`, with values outside the window read as
/// zero. Lattice points whose sum touched the outside are returned sorted.
pub fn act_on_gridfunction<C: Coeff>(
    alpha: &Element<LatticePoint, C>,
    f: &GridFunction,
) -> Result<(GridFunction, Vec<LatticePoint>), TorusError> {
    let s = f.shape;
    let terms = shifts(alpha, &s)?;
    let mut flagged = vec![false; s.lattice_len()];
    let mut values = vec![Complex64::new(0.0, 0.0); s.len()];
    for li in 0..s.lattice_len() {
        let k = s.lattice_point(li);
        for (n, c) in &terms {
            let src: Vec<i64> = k.iter().zip(n).map(|(a, b)| a - b).collect();
            if !s.in_window(&src) {
                flagged[li] = true;
                continue;
            }
            let si = s.lattice_index(&src);
            for ti in 0..s.torus_len() {
                let base = ti * s.lattice_len();
                values[base + li] += c * f.values[base + si];
            }
        }
    }
    Ok((GridFunction { shape: s, values }, boundary_points(&s, &flagged)))
}

/// `(αf)(x) = Σ a_n f(x − n)` on the real grid, treating cells outside the
/// window as zero. Boundary cells are reported by their lattice part.
pub fn act_on_real<C: Coeff>(
    alpha: &Element<LatticePoint, C>,
    f: &RealGridFunction,
) -> Result<(RealGridFunction, Vec<LatticePoint>), TorusError> {
    let s = f.shape;
    let terms = shifts(alpha, &s)?;
    let mut flagged = vec![false; s.lattice_len()];
    let mut values = vec![Complex64::new(0.0, 0.0); s.len()];
    for (i, out) in values.iter_mut().enumerate() {
        let (j, k) = s.real_split(i);
        for (n, c) in &terms {
            let src: Vec<i64> = k.iter().zip(n).map(|(a, b)| a - b).collect();
            if !s.in_window(&src) {
                flagged[s.lattice_index(&k)] = true;
                continue;
            }
            *out += c * f.values[s.real_index(&j, &src)];
        }
    }
    Ok((RealGridFunction { shape: s, values }, boundary_points(&s, &flagged)))
}
