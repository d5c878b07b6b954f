use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{check_rank, sphere_size, RadialElement, RadialError};
use crate::element::Element;
use crate::error::AlgebraError;
use crate::group::{sphere, FreeWord, Group};
use crate::scalar::Coeff;

/// Upper bound on the number of words [`expand`] will materialise.
pub const EXPANSION_LIMIT: u128 = 2_000_000;

/// Writes `Σ a_n χ_n` out as an element of ℂF_k. Only for cross-checks.
pub fn expand<C: Coeff>(
    alpha: &RadialElement<C>,
    max_len: usize,
) -> Result<Element<FreeWord, C>, RadialError> {
    check_rank(alpha.k)?;
    if alpha.tail.is_some() {
        return Err(RadialError::TailPresent);
    }
    if let Some(d) = alpha.degree() {
        if d > max_len {
            return Err(RadialError::SupportTooLong {
                support: d,
                max_len,
            });
        }
    }
    let words: u128 = (0..=max_len)
        .map(|n| sphere_size(alpha.k, n).to_u128().unwrap_or(u128::MAX))
        .fold(0u128, |a, b| a.saturating_add(b));
    if words > EXPANSION_LIMIT {
        return Err(RadialError::ExpansionTooLarge {
            words,
            limit: EXPANSION_LIMIT,
        });
    }
    let group = Group::Free { rank: alpha.k };
    let mut out = Element::zero(group);
    for (n, c) in alpha.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for w in sphere(alpha.k, n) {
            out.add_term(w, c.clone());
        }
    }
    Ok(out)
}

/// The radial projection `P(β) = Σ_n (1/e_n Σ_{|x|=n} β(x)) χ_n`.
pub fn radial_projection<C: Coeff>(
    beta: &Element<FreeWord, C>,
) -> Result<RadialElement<C>, RadialError> {
    let Group::Free { rank } = beta.group() else {
        return Err(RadialError::Algebra(AlgebraError::InvalidGroup(
            "radial projection needs a free group".into(),
        )));
    };
    check_rank(rank)?;
    let mut sums: Vec<C> = Vec::new();
    for (w, c) in beta.terms() {
        let n = w.len();
        if sums.len() <= n {
            sums.resize(n + 1, C::zero());
        }
        sums[n] = sums[n].clone() + c.clone();
    }
    let coeffs = sums
        .into_iter()
        .enumerate()
        .map(|(n, s)| {
            let inv = BigRational::new(1.into(), sphere_size(rank, n));
            s * C::from_ratio(&inv)
        })
        .collect();
    Ok(RadialElement::new(rank, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss_frac, GaussRat};

    #[test]
    fn chi1_expansion() {
        let e = expand(&RadialElement::<GaussRat>::chi(2, 1), 1).unwrap();
        let words: Vec<String> = e.terms().map(|(w, _)| w.to_string()).collect();
        assert_eq!(words, ["x1", "X1", "x2", "X2"]);
        let unit = expand(&RadialElement::<GaussRat>::chi(2, 0), 3).unwrap();
        assert_eq!(unit, Element::identity(Group::Free { rank: 2 }));
    }

    #[test]
    fn expansion_guards() {
        let big = RadialElement::<GaussRat>::chi(2, 20);
        assert!(matches!(expand(&big, 20), Err(RadialError::ExpansionTooLarge { .. })));
        assert!(matches!(
            expand(&RadialElement::<GaussRat>::chi(2, 3), 2),
            Err(RadialError::SupportTooLong { .. })
        ));
    }

    #[test]
    fn projection_of_a_generator() {
        let g = Group::Free { rank: 2 };
        let b = Element::delta(g, FreeWord::gen(1)).unwrap();
        let p: RadialElement<GaussRat> = radial_projection(&b).unwrap();
        assert_eq!(p.coeffs(), &[GaussRat::zero(), gauss_frac(1, 0, 4)]);
    }

    #[test]
    fn projection_fixes_radial_elements() {
        let r = RadialElement::new(2, vec![gauss_frac(1, 0, 1), gauss_frac(0, 0, 1), gauss_frac(-2, 1, 3)]);
        assert_eq!(radial_projection(&expand(&r, 2).unwrap()).unwrap(), r);
    }
}
