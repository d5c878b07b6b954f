//! Splitting elements of ℂF_k along right cosets `H·t` of a subgroup.

use std::collections::BTreeMap;

use super::{StallingsError, SubgroupAutomaton};
use crate::element::Element;
use crate::group::{FreeWord, Group};
use crate::scalar::Coeff;

/// `β = Σ_t β_t ∗ δ_t` with every `β_t` supported in the subgroup.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetDecomposition<C: Coeff> {
    group: Group,
    pieces: BTreeMap<FreeWord, Element<FreeWord, C>>,
}

impl<C: Coeff> CosetDecomposition<C> {
    /// Pieces keyed by representative, in shortlex order of the representative.
    pub fn pieces(&self) -> &BTreeMap<FreeWord, Element<FreeWord, C>> {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece(&self, representative: &FreeWord) -> Option<&Element<FreeWord, C>> {
        self.pieces.get(representative)
    }

    /// `Σ_t β_t ∗ δ_t`.
    pub fn reassemble(&self) -> Result<Element<FreeWord, C>, StallingsError> {
        let mut out = Element::zero(self.group);
        for (t, piece) in &self.pieces {
            out = out.add(&piece.convolve(&Element::delta(self.group, t.clone())?)?)?;
        }
        Ok(out)
    }
}

impl SubgroupAutomaton {
    /// Identifies the right coset `H·u`: the vertex where reading `u`
    /// leaves the core graph, and the unread suffix. Beyond the core the
    /// coset graph is a forest, so this pair determines the coset.
    pub fn coset_key(&self, u: &FreeWord) -> (usize, FreeWord) {
        let (v, read) = self.read_prefix(u);
        (v, FreeWord::from_letters(u.letters()[read..].iter().copied()))
    }
}

/// Groups `supp β` by right cosets of the automaton's subgroup. Each coset
/// is represented by its shortlex-smallest support word `t`, and
/// `β_t = Σ_{u ∈ Ht} β(u) δ_{u t⁻¹}`.
pub fn coset_decompose<C: Coeff>(
    beta: &Element<FreeWord, C>,
    aut: &SubgroupAutomaton,
) -> Result<CosetDecomposition<C>, StallingsError> {
    let group = beta.group();
    if group != (Group::Free { rank: aut.rank() }) {
        return Err(StallingsError::GroupMismatch {
            rank: aut.rank(),
            got: group.to_string(),
        });
    }
    // support terms come out in shortlex order, so the first word seen in a
    // coset is its representative
    let mut classes: BTreeMap<(usize, FreeWord), (FreeWord, Vec<(FreeWord, C)>)> = BTreeMap::new();
    for (u, c) in beta.terms() {
        let (rep, terms) = classes
            .entry(aut.coset_key(u))
            .or_insert_with(|| (u.clone(), Vec::new()));
        terms.push((u.mul_word(&rep.inverse_word()), c.clone()));
    }
    let mut pieces = BTreeMap::new();
    for (rep, terms) in classes.into_values() {
        pieces.insert(rep, Element::from_terms(group, terms)?);
    }
    Ok(CosetDecomposition { group, pieces })
}
