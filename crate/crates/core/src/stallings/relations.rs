//! Generating sets with known ranks and a bounded search for relations.

use rayon::prelude::*;

use super::substitute_generators;
use crate::group::{FreeWord, Letter};

/// `{x_i² : i ≤ n} ∪ {x_i x_{i+1} : i < n}` in F_n, free of rank 2n−1.
pub fn power_generators(n: u32) -> Vec<FreeWord> {
    let mut g: Vec<FreeWord> = (1..=n).map(|i| FreeWord::gen(i).pow(2)).collect();
    g.extend((1..n).map(|i| FreeWord::from_letters([Letter::gen(i), Letter::gen(i + 1)])));
    g
}

/// `{x_i² : i ≤ n} ∪ {x_i⁻¹ x_{i+1} : i < n}` in F_n, free of rank 2n−1.
pub fn shifted_power_generators(n: u32) -> Vec<FreeWord> {
    let mut g: Vec<FreeWord> = (1..=n).map(|i| FreeWord::gen(i).pow(2)).collect();
    g.extend((1..n).map(|i| FreeWord::from_letters([Letter::inv_gen(i), Letter::gen(i + 1)])));
    g
}

/// `{w x_i, w x_i⁻¹ : i ≤ n}` in F_{n+1} with `w = x_{n+1}`, free of rank 2n.
pub fn pair_generators(n: u32) -> Vec<FreeWord> {
    let w = Letter::gen(n + 1);
    (1..=n)
        .flat_map(|i| {
            [
                FreeWord::from_letters([w, Letter::gen(i)]),
                FreeWord::from_letters([w, Letter::inv_gen(i)]),
            ]
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct NoRelationReport {
    pub generators: usize,
    pub max_len: usize,
    /// Nonempty reduced abstract words examined.
    pub words_checked: u64,
    /// The first abstract word found to map to the identity.
    pub relation: Option<FreeWord>,
}

impl NoRelationReport {
    pub fn holds(&self) -> bool {
        self.relation.is_none()
    }
}

struct Search<'a> {
    images: Vec<FreeWord>,
    letters: &'a [Letter],
    max_len: usize,
}

impl Search<'_> {
    fn image(&self, l: Letter) -> &FreeWord {
        let i = self.letters.iter().position(|&m| m == l).expect("known letter");
        &self.images[i]
    }

    /// Depth-first over reduced extensions of `word`, whose image is `value`.
    fn explore(&self, word: &mut Vec<Letter>, value: &FreeWord, count: &mut u64) -> Option<FreeWord> {
        *count += 1;
        if value.is_empty() {
            return Some(FreeWord::from_letters(word.iter().copied()));
        }
        if word.len() == self.max_len {
            return None;
        }
        let last = *word.last().expect("nonempty");
        for &l in self.letters {
            if l == last.inverse() {
                continue;
            }
            word.push(l);
            let next = value.mul_word(self.image(l));
            let found = self.explore(word, &next, count);
            word.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Checks that no nonempty reduced word of length ≤ `max_len` in abstract
/// generators `a_i ↦ generators[i−1]` maps to the identity.
pub fn no_relation_check(generators: &[FreeWord], max_len: usize) -> NoRelationReport {
    let m = generators.len() as u32;
    let letters: Vec<Letter> = Letter::all(m).collect();
    let search = Search {
        images: letters
            .iter()
            .map(|&l| substitute_generators(&FreeWord::letter(l), generators))
            .collect(),
        letters: &letters,
        max_len,
    };
    let results: Vec<(u64, Option<FreeWord>)> = if max_len == 0 {
        Vec::new()
    } else {
        letters
            .par_iter()
            .map(|&l| {
                let mut count = 0;
                let found = search.explore(&mut vec![l], search.image(l), &mut count);
                (count, found)
            })
            .collect()
    };
    NoRelationReport {
        generators: generators.len(),
        max_len,
        words_checked: results.iter().map(|r| r.0).sum(),
        relation: results.into_iter().find_map(|r| r.1),
    }
}
