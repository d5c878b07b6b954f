//! Finitely generated subgroups of free groups.
//!
//! [`SubgroupAutomaton`] folds a wedge of generator loops into the core
//! graph of the subgroup; membership, rank and right-coset splitting are
//! read off that graph. [`Embedding`] is the homomorphism F_k → F_{k/2+1}
//! sending generator pairs to `w y_j^{±1}`, used to move radial witnesses
//! from a free subgroup onto sums of generators.

mod automaton;
mod cosets;
mod embedding;
mod relations;

use thiserror::Error;

use crate::error::AlgebraError;
use crate::radial::RadialError;

pub use automaton::{
    evaluate_factorization, substitute_generators, Edge, FoldOrder, Membership, SubgroupAutomaton,
};
pub use cosets::{coset_decompose, CosetDecomposition};
pub use embedding::{example2_witness, Embedding, TransferWitness};
pub use relations::{
    no_relation_check, pair_generators, power_generators, shifted_power_generators, NoRelationReport,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StallingsError {
    #[error("free group rank must be positive, got {0}")]
    InvalidRank(u32),
    #[error("generator {word} does not lie in F_{rank}")]
    GeneratorOutsideRank { word: String, rank: u32 },
    #[error("element lives in {got}, automaton subgroup lives in F_{rank}")]
    GroupMismatch { rank: u32, got: String },
    #[error("the embedding needs an even source rank, got {0}")]
    OddRank(u32),
    #[error("source rank {got} is below the minimum {min}")]
    RankTooSmall { got: u32, min: u32 },
    #[error("{0} is not in the image of the embedding")]
    NotInImage(String),
    #[error("exponent {0} must be finite and at least 1")]
    InvalidExponent(f64),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Radial(#[from] RadialError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
