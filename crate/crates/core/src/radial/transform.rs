//! The polynomials P_n and the Gelfand transform `α̂(z) = Σ a_n P_n(z)`.
//!
//! ```text
//! P_0 = 1,  P_1 = z,  P_2 = z² − 2k,
//! P_{n+1} = z P_n − (2k−1) P_{n−1}   (n ≥ 2)
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{RadialElement, RadialError};
use crate::scalar::Coeff;

/// A univariate polynomial, coefficients in increasing degree, trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Integer coefficients of P_n in the monomial basis.
pub fn pn_polynomial(k: u32, n: usize) -> Vec<BigInt> {
    let two_k = BigInt::from(2 * k);
    let w2 = BigInt::from(2 * k - 1);
    let mut prev = vec![BigInt::from(1)];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![BigInt::zero(), BigInt::from(1)];
    for m in 1..n {
        // P_{m+1} = z P_m − c_m P_{m−1}, with c_1 = 2k and c_m = 2k−1 after
        let c = if m == 1 { &two_k } else { &w2 };
        let mut next = vec![BigInt::zero(); m + 2];
        for (i, x) in cur.iter().enumerate() {
            next[i + 1] += x;
        }
        for (i, x) in prev.iter().enumerate() {
            next[i] -= x * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n(z) by running the three-term recurrence on the value z.
pub fn eval_pn<C: Coeff>(k: u32, n: usize, z: &C) -> C {
    let mut prev = C::one();
    if n == 0 {
        return prev;
    }
    let mut cur = z.clone();
    for m in 1..n {
        let c = C::from_i64(if m == 1 { 2 * k as i64 } else { 2 * k as i64 - 1 });
        let next = z.clone() * cur.clone() - c * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The Gelfand transform of a finitely supported radial element.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPolynomialTransform<C: Coeff> {
    pub k: u32,
    pub poly: Polynomial<C>,
}

impl<C: Coeff> RadialPolynomialTransform<C> {
    pub fn eval(&self, z: &C) -> C {
        self.poly.eval(z)
    }

    /// Rewrites the transform back in the χ basis, peeling off leading
    /// terms since every P_n is monic of degree n.
    pub fn to_radial(&self) -> RadialElement<C> {
        let mut rest: Vec<C> = self.poly.coeffs().to_vec();
        let mut out = vec![C::zero(); rest.len()];
        for n in (0..rest.len()).rev() {
            let lead = rest[n].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in pn_polynomial(self.k, n).iter().enumerate() {
                rest[i] = rest[i].clone() - lead.clone() * C::from_bigint(c);
            }
            out[n] = lead;
        }
        RadialElement::new(self.k, out)
    }
}

pub fn gelfand_transform<C: Coeff>(
    alpha: &RadialElement<C>,
) -> Result<RadialPolynomialTransform<C>, RadialError> {
    if alpha.tail.is_some() {
        return Err(RadialError::TailPresent);
    }
    let mut out = vec![C::zero(); alpha.coeffs.len()];
    for (n, a) in alpha.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (i, c) in pn_polynomial(alpha.k, n).iter().enumerate() {
            if !c.is_zero() {
                out[i] = out[i].clone() + a.clone() * C::from_bigint(c);
            }
        }
    }
    Ok(RadialPolynomialTransform {
        k: alpha.k,
        poly: Polynomial::new(out),
    })
}

#[cfg(test)]
mod tests {
    use super::{eval_pn, gelfand_transform, pn_polynomial, BigInt, Polynomial, RadialElement};
    use crate::scalar::Coeff;
    use crate::radial::sphere_size;
    use crate::scalar::{gauss_frac, GaussRat};
    use num_rational::BigRational;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(pn_polynomial(2, 0), ints(&[1]));
        assert_eq!(pn_polynomial(2, 1), ints(&[0, 1]));
        assert_eq!(pn_polynomial(2, 2), ints(&[-4, 0, 1]));
        // P_3 = z(z² − 4) − 3z = z³ − 7z
        assert_eq!(pn_polynomial(2, 3), ints(&[0, -7, 0, 1]));
    }

    #[test]
    fn values_at_zero() {
        let zero = GaussRat::zero();
        for k in 2..6u32 {
            assert_eq!(eval_pn(k, 2, &zero), GaussRat::from_i64(-2 * k as i64));
            assert_eq!(eval_pn(k, 3, &zero), zero);
        }
        // P_{2n}(0)/e_{2n} = (−1)^n / 3^n for k = 2
        for n in 0..=6usize {
            let v = eval_pn(2, 2 * n, &zero);
            let ratio = v * GaussRat::from_ratio(&BigRational::new(1.into(), sphere_size(2, 2 * n)));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = GaussRat::from_ratio(&BigRational::new(
                sign.into(),
                num_traits::pow(BigInt::from(3), n),
            ));
            assert_eq!(ratio, expected);
        }
    }

    #[test]
    fn recurrence_and_polynomial_agree() {
        let z = gauss_frac(3, -2, 7);
        for n in 0..10 {
            let poly = Polynomial::new(
                pn_polynomial(3, n).iter().map(GaussRat::from_bigint).collect(),
            );
            assert_eq!(poly.eval(&z), eval_pn(3, n, &z));
        }
    }

    #[test]
    fn transforms_of_spheres() {
        let t = gelfand_transform(&RadialElement::<GaussRat>::chi(2, 1)).unwrap();
        assert_eq!(t.poly.coeffs(), &[GaussRat::zero(), GaussRat::one()]);
        let t = gelfand_transform(&RadialElement::<GaussRat>::chi(3, 2)).unwrap();
        assert_eq!(
            t.poly.coeffs(),
            &[GaussRat::from_i64(-6), GaussRat::zero(), GaussRat::one()]
        );
    }

    #[test]
    fn basis_change_is_invertible() {
        let r = RadialElement::new(
            2,
            vec![gauss_frac(1, 0, 2), gauss_frac(0, 0, 1), gauss_frac(-3, 1, 1), gauss_frac(2, 0, 5)],
        );
        let t = gelfand_transform(&r).unwrap();
        assert_eq!(t.poly.degree(), Some(3));
        assert_eq!(t.to_radial(), r);
    }
}
