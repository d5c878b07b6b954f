//! Finitely supported elements of the group algebra ℂG.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::AlgebraError;
use crate::exponent::Exponent;
use crate::group::{Group, GroupElement};
use crate::scalar::{Approx, Coeff};

/// A finite formal sum `Σ a_g g` with no stored zero coefficients.
///
/// Terms are kept in a `BTreeMap` so every listing comes out in the group
/// element order (shortlex for words, lexicographic for lattice points).
#[derive(Debug, Clone, PartialEq)]
pub struct Element<E: GroupElement, C: Coeff> {
    group: Group,
    terms: BTreeMap<E, C>,
}

impl<E: GroupElement, C: Coeff> Element<E, C> {
    pub fn zero(group: Group) -> Self {
        Element {
            group,
            terms: BTreeMap::new(),
        }
    }

    /// `δ_g`, the unit mass at `g`.
    pub fn delta(group: Group, g: E) -> Result<Self, AlgebraError> {
        Self::from_terms(group, [(g, C::one())])
    }

    pub fn identity(group: Group) -> Self {
        let mut out = Self::zero(group);
        out.terms.insert(E::identity(&group), C::one());
        out
    }

    /// Builds an element, summing repeated group elements and dropping zeros.
    pub fn from_terms(
        group: Group,
        terms: impl IntoIterator<Item = (E, C)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            if !g.belongs_to(&group) {
                return Err(AlgebraError::ForeignElement {
                    element: g.to_string(),
                    group,
                });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    /// Adds `c·g`; the caller guarantees `g` lies in the group.
    pub(crate) fn add_term(&mut self, g: E, c: C) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &E) -> C {
        self.terms.get(g).cloned().unwrap_or_else(C::zero)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_group(&self, other: &Group) -> Result<(), AlgebraError> {
        if self.group != *other {
            return Err(AlgebraError::GroupMismatch {
                left: self.group,
                right: *other,
            });
        }
        Ok(())
    }

    fn check_member(&self, g: &E) -> Result<(), AlgebraError> {
        if !g.belongs_to(&self.group) {
            return Err(AlgebraError::ForeignElement {
                element: g.to_string(),
                group: self.group,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_group(&other.group)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&(-C::one())))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.group);
        for (g, a) in &self.terms {
            out.add_term(g.clone(), a.clone() * c.clone());
        }
        out
    }

    /// The convolution `α∗β`, whose coefficient at g is `Σ_h a_{gh⁻¹} b_h`.
    pub fn convolve(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_group(&other.group)?;
        let mut out = Self::zero(self.group);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.mul(h), a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    /// `β̃ = Σ b_g g⁻¹`.
    pub fn tilde(&self) -> Self {
        self.map_terms(|g, c| (g.inverse(), c.clone()))
    }

    /// `β̄ = Σ conj(b_g) g`.
    pub fn bar(&self) -> Self {
        self.map_terms(|g, c| (g.clone(), c.conj()))
    }

    /// `β* = Σ conj(b_g) g⁻¹`.
    pub fn star(&self) -> Self {
        self.map_terms(|g, c| (g.inverse(), c.conj()))
    }

    fn map_terms(&self, f: impl Fn(&E, &C) -> (E, C)) -> Self {
        let mut out = Self::zero(self.group);
        for (g, c) in &self.terms {
            let (h, d) = f(g, c);
            out.add_term(h, d);
        }
        out
    }

    /// `⟨α, β⟩ = Σ a_g conj(b_g)`.
    pub fn pairing(&self, other: &Self) -> Result<C, AlgebraError> {
        self.check_group(&other.group)?;
        let (small, large, swap) = if self.terms.len() <= other.terms.len() {
            (self, other, false)
        } else {
            (other, self, true)
        };
        let mut acc = C::zero();
        for (g, c) in &small.terms {
            if let Some(d) = large.terms.get(g) {
                acc = if swap {
                    acc + d.clone() * c.conj()
                } else {
                    acc + c.clone() * d.conj()
                };
            }
        }
        Ok(acc)
    }

    /// The right translate `β_y(x) = β(xy⁻¹)`, i.e. `β∗δ_y`.
    pub fn translate(&self, y: &E) -> Result<Self, AlgebraError> {
        self.check_member(y)?;
        Ok(self.map_terms(|g, c| (g.mul(y), c.clone())))
    }

    /// `Σ c_i α_{y_i}`.
    pub fn linear_combination_of_translates(&self, pairs: &[(C, E)]) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(self.group);
        for (c, y) in pairs {
            self.check_member(y)?;
            for (g, a) in &self.terms {
                out.add_term(g.mul(y), a.clone() * c.clone());
            }
        }
        Ok(out)
    }

    /// `(Σ|a_g|^p)^{1/p}`, or the sup norm for `p = ∞`.
    pub fn lp_norm(&self, p: Exponent) -> f64 {
        lp_norm_of(self.terms.values().map(|c| c.modulus()), p)
    }

    pub fn to_approx(&self) -> Element<E, Approx> {
        Element {
            group: self.group,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), c.to_complex()))
                .filter(|(_, c)| *c != Complex64::new(0.0, 0.0))
                .collect(),
        }
    }

    /// Applies a map of group elements that is injective on the support.
    pub fn relabel<F: GroupElement>(
        &self,
        group: Group,
        f: impl Fn(&E) -> F,
    ) -> Result<Element<F, C>, AlgebraError> {
        Element::from_terms(group, self.terms.iter().map(|(g, c)| (f(g), c.clone())))
    }
}

pub(crate) fn lp_norm_of(moduli: impl Iterator<Item = f64>, p: Exponent) -> f64 {
    match p {
        Exponent::Infinity => moduli.fold(0.0, f64::max),
        _ => {
            let pv = p.value();
            if pv == 1.0 {
                return moduli.sum();
            }
            let v: Vec<f64> = moduli.collect();
            let scale = v.iter().cloned().fold(0.0, f64::max);
            if scale == 0.0 {
                return 0.0;
            }
            let s: f64 = v.iter().map(|m| (m / scale).powf(pv)).sum();
            scale * s.powf(1.0 / pv)
        }
    }
}
