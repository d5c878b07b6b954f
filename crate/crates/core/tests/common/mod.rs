#![allow(dead_code)]

use rand::Rng;
use zdlab_core::radial::RadialElement;
use zdlab_core::scalar::gauss_frac;
use zdlab_core::{Element, FreeWord, GaussRat, Group, LatticePoint, Letter};

/// A small Gaussian rational with denominator at most 4.
pub fn gauss<R: Rng>(rng: &mut R) -> GaussRat {
    let den = rng.random_range(1..=4);
    gauss_frac(rng.random_range(-5..=5), rng.random_range(-5..=5), den)
}

pub fn nonzero_gauss<R: Rng>(rng: &mut R) -> GaussRat {
    loop {
        let c = gauss(rng);
        if c != gauss_frac(0, 0, 1) {
            return c;
        }
    }
}

/// A uniformly chosen reduced word of length exactly `len`.
pub fn word_of_len<R: Rng>(rng: &mut R, rank: u32, len: usize) -> FreeWord {
    let letters: Vec<Letter> = Letter::all(rank).collect();
    let mut out: Vec<Letter> = Vec::with_capacity(len);
    while out.len() < len {
        let l = letters[rng.random_range(0..letters.len())];
        if out.last().is_some_and(|m| m.inverse() == l) {
            continue;
        }
        out.push(l);
    }
    FreeWord::from_letters(out)
}

pub fn word<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    word_of_len(rng, rank, len)
}

pub fn free_element<R: Rng>(rng: &mut R, rank: u32, support: usize, max_len: usize) -> Element<FreeWord, GaussRat> {
    let terms: Vec<(FreeWord, GaussRat)> = (0..support).map(|_| (word(rng, rank, max_len), gauss(rng))).collect();
    Element::from_terms(Group::Free { rank }, terms).unwrap()
}

pub fn lattice_point<R: Rng>(rng: &mut R, dim: usize, radius: i64) -> LatticePoint {
    LatticePoint((0..dim).map(|_| rng.random_range(-radius..=radius)).collect())
}

pub fn lattice_element<R: Rng>(
    rng: &mut R,
    dim: usize,
    support: usize,
    radius: i64,
) -> Element<LatticePoint, GaussRat> {
    let terms: Vec<(LatticePoint, GaussRat)> =
        (0..support).map(|_| (lattice_point(rng, dim, radius), gauss(rng))).collect();
    Element::from_terms(Group::Lattice { dim }, terms).unwrap()
}

/// A radial element with coefficients on spheres `0..len`.
pub fn radial<R: Rng>(rng: &mut R, k: u32, len: usize) -> RadialElement<GaussRat> {
    RadialElement::new(k, (0..len).map(|_| gauss(rng)).collect())
}

pub fn lattice(dim: usize, terms: &[(&[i64], GaussRat)]) -> Element<LatticePoint, GaussRat> {
    Element::from_terms(
        Group::Lattice { dim },
        terms.iter().map(|(n, c)| (LatticePoint(n.to_vec()), c.clone())),
    )
    .unwrap()
}

/// `cos t₁ + cos t₂ − ½` as an element of ℂℤ^dim.
pub fn level_curve(dim: usize) -> Element<LatticePoint, GaussRat> {
    let half = gauss_frac(1, 0, 2);
    let point = |axis: usize, s: i64| {
        let mut v = vec![0; dim];
        v[axis] = s;
        v
    };
    let terms = vec![
        (vec![0; dim], gauss_frac(-1, 0, 2)),
        (point(0, 1), half.clone()),
        (point(0, -1), half.clone()),
        (point(1, 1), half.clone()),
        (point(1, -1), half),
    ];
    Element::from_terms(Group::Lattice { dim }, terms.into_iter().map(|(n, c)| (LatticePoint(n), c))).unwrap()
}

/// `δ_0 − δ_{e_1}`, whose transform vanishes on the coordinate plane t₁ = 0.
pub fn flat(dim: usize) -> Element<LatticePoint, GaussRat> {
    let mut e1 = vec![0; dim];
    e1[0] = 1;
    Element::from_terms(
        Group::Lattice { dim },
        [(LatticePoint(vec![0; dim]), gauss_frac(1, 0, 1)), (LatticePoint(e1), gauss_frac(-1, 0, 1))],
    )
    .unwrap()
}

pub mod strategies {
    use proptest::prelude::*;
    use zdlab_core::radial::RadialElement;
    use zdlab_core::scalar::gauss_frac;
    use zdlab_core::{Element, FreeWord, GaussRat, Group, LatticePoint, Letter};

    pub fn gauss() -> impl Strategy<Value = GaussRat> {
        (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(re, im, den)| gauss_frac(re, im, den))
    }

    /// Freely reduced words; cancellation makes short words more common.
    pub fn word(rank: u32, max_len: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((1..=rank, any::<bool>()), 0..=max_len)
            .prop_map(|ls| FreeWord::from_letters(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
    }

    pub fn free_element(rank: u32, support: usize, max_len: usize) -> impl Strategy<Value = Element<FreeWord, GaussRat>> {
        prop::collection::vec((word(rank, max_len), gauss()), 0..=support)
            .prop_map(move |terms| Element::from_terms(Group::Free { rank }, terms).unwrap())
    }

    pub fn lattice_element(dim: usize, support: usize, radius: i64) -> impl Strategy<Value = Element<LatticePoint, GaussRat>> {
        prop::collection::vec((prop::collection::vec(-radius..=radius, dim), gauss()), 0..=support).prop_map(
            move |terms| {
                Element::from_terms(Group::Lattice { dim }, terms.into_iter().map(|(n, c)| (LatticePoint(n), c))).unwrap()
            },
        )
    }

    pub fn radial(k: u32, max_len: usize) -> impl Strategy<Value = RadialElement<GaussRat>> {
        prop::collection::vec(gauss(), 0..=max_len).prop_map(move |c| RadialElement::new(k, c))
    }
}
