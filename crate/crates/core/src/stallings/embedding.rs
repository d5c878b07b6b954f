//! The embedding θ: F_k → F_{k/2+1} and the transfer of the radial witness.

use super::{coset_decompose, StallingsError, SubgroupAutomaton};
use crate::element::Element;
use crate::exponent::Exponent;
use crate::group::{FreeWord, Group, Letter};
use crate::radial::{expand, spherical_function, witness_radius, witness_residual_closed_form, GeometricTail};
use crate::scalar::{Coeff, GaussRat};

/// `θ(x_{2j−1}) = w y_j`, `θ(x_{2j}) = w y_j⁻¹` with `y_j = x_j` and
/// `w = x_{k/2+1}` in the target group.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    source_rank: u32,
    images: Vec<FreeWord>,
    automaton: SubgroupAutomaton,
}

impl Embedding {
    pub fn new(k: u32) -> Result<Embedding, StallingsError> {
        if k < 2 {
            return Err(StallingsError::RankTooSmall { got: k, min: 2 });
        }
        if k % 2 == 1 {
            return Err(StallingsError::OddRank(k));
        }
        let w = Letter::gen(k / 2 + 1);
        let images: Vec<FreeWord> = (1..=k / 2)
            .flat_map(|j| {
                [
                    FreeWord::from_letters([w, Letter::gen(j)]),
                    FreeWord::from_letters([w, Letter::inv_gen(j)]),
                ]
            })
            .collect();
        let automaton = SubgroupAutomaton::build(&images, k / 2 + 1)?;
        Ok(Embedding {
            source_rank: k,
            images,
            automaton,
        })
    }

    pub fn source_rank(&self) -> u32 {
        self.source_rank
    }

    pub fn target_rank(&self) -> u32 {
        self.source_rank / 2 + 1
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Core graph of `θ(F_k)`.
    pub fn automaton(&self) -> &SubgroupAutomaton {
        &self.automaton
    }

    /// The image subgroup has rank k, so θ is injective.
    pub fn certify(&self) -> bool {
        self.automaton.subgroup_rank() == self.source_rank as usize
    }

    pub fn apply_word(&self, word: &FreeWord) -> FreeWord {
        super::substitute_generators(word, &self.images)
    }

    /// Linear extension of θ to ℂF_k.
    pub fn apply<C: Coeff>(&self, alpha: &Element<FreeWord, C>) -> Result<Element<FreeWord, C>, StallingsError> {
        let source = Group::Free { rank: self.source_rank };
        if alpha.group() != source {
            return Err(StallingsError::GroupMismatch {
                rank: self.source_rank,
                got: alpha.group().to_string(),
            });
        }
        Ok(alpha.relabel(Group::Free { rank: self.target_rank() }, |u| self.apply_word(u))?)
    }

    /// θ⁻¹ of a word in the image.
    pub fn preimage_word(&self, word: &FreeWord) -> Result<FreeWord, StallingsError> {
        self.automaton
            .membership(word)
            .generator_word
            .ok_or_else(|| StallingsError::NotInImage(word.to_string()))
    }

    pub fn preimage<C: Coeff>(&self, beta: &Element<FreeWord, C>) -> Result<Element<FreeWord, C>, StallingsError> {
        let terms = beta
            .terms()
            .map(|(u, c)| Ok((self.preimage_word(u)?, c.clone())))
            .collect::<Result<Vec<_>, StallingsError>>()?;
        Ok(Element::from_terms(Group::Free { rank: self.source_rank }, terms)?)
    }

    /// `x_1 + ⋯ + x_k` in ℂF_k.
    pub fn generator_sum<C: Coeff>(&self) -> Element<FreeWord, C> {
        let group = Group::Free { rank: self.source_rank };
        Element::from_terms(group, (1..=self.source_rank).map(|i| (FreeWord::gen(i), C::one())))
            .expect("generators of the source group")
    }
}

/// The truncated annihilator of `x_1 + ⋯ + x_k` pulled back through θ.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferWitness {
    pub k: u32,
    pub level: usize,
    pub p: f64,
    /// `γ_N` in ℂF_k with `θ(γ_N) = β_s`.
    pub gamma: Element<FreeWord, GaussRat>,
    /// The coset representative `s`.
    pub representative: FreeWord,
    /// Whether `s` is the identity, the preferred choice.
    pub identity_coset: bool,
    /// Number of cosets of θ(F_k) meeting `supp β_N`.
    pub coset_count: usize,
    /// `‖(x_1 + ⋯ + x_k) ∗ γ_N‖_p`.
    pub residual: f64,
    /// The radial residual `‖χ_1 ∗ φ_0^{(N)}‖_p` in the rank-k/2 subgroup.
    pub pushed_bound: f64,
    /// `‖φ_0 − φ_0^{(N)}‖_p` in the rank-k/2 subgroup.
    pub tail_bound: Option<f64>,
}

/// Builds `γ_N` from the level-N truncation of φ_0 on the subgroup free on
/// `y_1, …, y_{k/2}` and measures how far it is from being annihilated.
/// Any finite `p ≥ 1` is accepted; the residual only decays for `p > 2`.
pub fn example2_witness(k: u32, level: usize, p: f64) -> Result<TransferWitness, StallingsError> {
    if k % 2 == 1 {
        return Err(StallingsError::OddRank(k));
    }
    if k < 4 {
        return Err(StallingsError::RankTooSmall { got: k, min: 4 });
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(StallingsError::InvalidExponent(p));
    }
    let theta = Embedding::new(k)?;
    let half = k / 2;
    let target = Group::Free { rank: theta.target_rank() };

    let zero = GaussRat::from_i64(0);
    let phi = spherical_function(half, zero)?.truncate(witness_radius(level));
    let beta = expand(&phi, witness_radius(level))?.relabel(target, |u| u.clone())?;

    let pieces = coset_decompose(&beta, theta.automaton())?;
    let identity = FreeWord::identity();
    let (representative, piece) = match pieces.piece(&identity) {
        Some(piece) if !piece.is_zero() => (identity, piece.clone()),
        _ => pieces
            .pieces()
            .iter()
            .find(|(_, piece)| !piece.is_zero())
            .map(|(s, piece)| (s.clone(), piece.clone()))
            .ok_or_else(|| StallingsError::InvariantViolated("every coset piece vanishes".into()))?,
    };
    let gamma = theta.preimage(&piece)?;
    if theta.apply(&gamma)? != piece {
        return Err(StallingsError::InvariantViolated("θ(γ) differs from the coset piece".into()));
    }

    let product = theta.generator_sum::<GaussRat>().convolve(&gamma)?;
    let residual = product.lp_norm(Exponent::real(p).map_err(|_| StallingsError::InvalidExponent(p))?);
    let w = 2.0 * half as f64 - 1.0;
    let sign = if level % 2 == 0 { -1.0 } else { 1.0 };
    let tail = GeometricTail {
        start: witness_radius(level) + 2,
        stride: 2,
        first: sign * w.powi(-(level as i32 + 1)),
        ratio: -1.0 / w,
    };
    Ok(TransferWitness {
        k,
        level,
        p,
        identity_coset: representative.is_empty(),
        representative,
        coset_count: pieces.len(),
        gamma,
        residual,
        pushed_bound: witness_residual_closed_form(half, level, p),
        tail_bound: tail.lp_norm_pow(half, p).map(|s| s.powf(1.0 / p)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_certified() {
        for k in [2, 4, 6, 8] {
            let theta = Embedding::new(k).unwrap();
            assert!(theta.certify());
            assert_eq!(theta.images()[0].to_string(), format!("x{} x1", k / 2 + 1));
        }
        assert!(matches!(Embedding::new(5), Err(StallingsError::OddRank(5))));
    }

    #[test]
    fn embedding_round_trip() {
        let theta = Embedding::new(4).unwrap();
        let u = FreeWord::parse("x1 X3 x4 x4 x2").unwrap();
        let image = theta.apply_word(&u);
        assert_eq!(theta.preimage_word(&image).unwrap(), u);
        assert!(theta.preimage_word(&FreeWord::gen(1)).is_err());
    }

    #[test]
    fn level_zero_witness() {
        let t = example2_witness(4, 0, 3.0).unwrap();
        assert!(t.identity_coset);
        assert_eq!(t.coset_count, 1);
        assert_eq!(t.gamma, Element::identity(Group::Free { rank: 4 }));
        assert!((t.residual - 4f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(example2_witness(5, 1, 3.0), Err(StallingsError::OddRank(5))));
        assert!(matches!(example2_witness(2, 1, 3.0), Err(StallingsError::RankTooSmall { .. })));
        assert!(matches!(example2_witness(4, 1, 0.5), Err(StallingsError::InvalidExponent(_))));
        assert!(example2_witness(4, 1, 2.0).unwrap().tail_bound.is_none());
    }
}
