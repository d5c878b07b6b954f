//! Fourier analysis of ℂℤ^d on the torus 𝕋^d = ℝ^d / 2πℤ^d.

mod cover;
mod nullity;
mod trig;
mod verdicts;
mod zeroset;
mod zeta;

pub use cover::{hyperplane_cover_check, CoverReport, Hyperplane};
pub use nullity::{estimate_nullity, ChartFlag, ChartReport, NullityParams, NullityReport};
pub use trig::{TorusPoint, TrigPolynomial};
pub use verdicts::{
    parseval_check, relative_nullity_threshold, theorem1_threshold, theorem1_verdict,
    theorem2_evidence, theorem3_verdict, ParsevalCheck,
};
pub use zeroset::{sample_zero_set, ZeroSetSample};
pub use zeta::{
    act_on_gridfunction, act_on_real, zeta_inverse, zeta_map, GridFunction, RealGridFunction,
};

use thiserror::Error;

use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TorusError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("the zero polynomial vanishes on the whole torus")]
    ZeroPolynomial,
    #[error("grid resolution must be at least 8, got {0}")]
    InvalidResolution(usize),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("hyperplane normal must be nonzero")]
    DegenerateNormal,
    #[error("zero-set sample is empty")]
    EmptySample,
    #[error("no chart of the zero set supports a stencil: {0}")]
    TooSparse(String),
    #[error("invalid estimator parameters: {0}")]
    InvalidParams(String),
    #[error("nullity {nu} is outside 0..={max} for d = {d}")]
    NullityOutOfRange { d: usize, nu: usize, max: usize },
    #[error("nullity d-1 means the zero set is locally flat; use the hyperplane cover check")]
    HyperplaneRegime,
    #[error("lattice shift {shift} leaves the window of radius {radius}")]
    WindowOverflow { shift: String, radius: i64 },
    #[error("grid shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
