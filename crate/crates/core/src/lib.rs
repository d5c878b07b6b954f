//! Group algebras of ℤ^d and of free groups acting on ℓ^p spaces.
//!
//! The crate is organised by subsystem:
//!
//! - [`scalar`], [`exponent`], [`group`], [`element`], [`format`]: exact and
//!   floating arithmetic on finitely supported elements of ℂG for G = ℤ^d or
//!   the free group F_k.
//! - [`torus`]: Fourier transforms of ℂℤ^d on the torus, zero-set sampling,
//!   hyperplane covers, relative nullity, exponent verdicts and the discrete
//!   correspondence between ℝ^d and 𝕋^d × ℤ^d.
//! - [`radial`]: the radial subalgebra of ℂF_k in sphere coordinates, its
//!   Gelfand transform, spherical functions and critical exponents.
//! - [`stallings`]: folded subgroup automata, coset decomposition and the
//!   embedding used to transfer radial witnesses to sums of generators.

pub mod element;
pub mod error;
pub mod exponent;
pub mod format;
pub mod group;
pub mod radial;
pub mod scalar;
pub mod stallings;
pub mod torus;
pub mod verdict;

pub use element::Element;
pub use error::{AlgebraError, ParseError};
pub use exponent::Exponent;
pub use group::{FreeWord, Group, GroupElement, LatticePoint, Letter};
pub use scalar::{Approx, Coeff, GaussRat, Scalar, ScalarMode};
pub use verdict::{Citation, Verdict, VerdictStatus, Witness};
