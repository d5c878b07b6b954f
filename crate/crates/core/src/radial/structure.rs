//! Structure constants `χ_m ∗ χ_n = Σ_r c^r_{mn} χ_r`.
//!
//! Everything is generated from the two base rules
//!
//! ```text
//! χ_1 ∗ χ_1 = χ_2 + 2k χ_0
//! χ_1 ∗ χ_n = χ_{n+1} + (2k−1) χ_{n−1}     (n ≥ 2)
//! ```
//!
//! by writing χ_m = χ_1∗χ_{m−1} − c_{m−1} χ_{m−2}, so no sphere is ever
//! enumerated.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{RadialElement, RadialError};
use crate::scalar::Coeff;

type Table = RwLock<HashMap<(u32, usize, usize), Arc<Vec<BigInt>>>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The coefficient of χ_{n−1} in χ_1 ∗ χ_n.
fn lowering(k: u32, n: usize) -> BigInt {
    if n == 1 {
        BigInt::from(2 * k)
    } else {
        BigInt::from(2 * k - 1)
    }
}

/// χ_1 ∗ Σ b_r χ_r.
fn chi1_times(k: u32, b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); b.len() + 1];
    for (r, c) in b.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[r + 1] += c;
        if r >= 1 {
            out[r - 1] += c * lowering(k, r);
        }
    }
    out
}

/// Integer coefficients of χ_m ∗ χ_n, indexed by r = 0..=m+n.
///
/// Results are memoised in a process-wide table; concurrent callers may both
/// compute an entry, and the first insert wins.
pub fn sphere_product(k: u32, m: usize, n: usize) -> Arc<Vec<BigInt>> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    if let Some(hit) = table().read().expect("table lock").get(&(k, m, n)) {
        return hit.clone();
    }
    let value = match m {
        0 => {
            let mut v = vec![BigInt::zero(); n + 1];
            v[n] = BigInt::from(1);
            v
        }
        1 => {
            let mut unit = vec![BigInt::zero(); n + 1];
            unit[n] = BigInt::from(1);
            chi1_times(k, &unit)
        }
        _ => {
            let prev = sphere_product(k, m - 1, n);
            let prev2 = sphere_product(k, m - 2, n);
            let mut v = chi1_times(k, &prev);
            let c = lowering(k, m - 1);
            for (r, x) in prev2.iter().enumerate() {
                v[r] -= x * &c;
            }
            v.resize(m + n + 1, BigInt::zero());
            v
        }
    };
    debug_assert!(value.iter().all(|c| c >= &BigInt::zero()));
    let value = Arc::new(value);
    table()
        .write()
        .expect("table lock")
        .entry((k, m, n))
        .or_insert(value)
        .clone()
}

/// Convolution of two finitely supported radial elements.
pub fn radial_convolve<C: Coeff>(
    a: &RadialElement<C>,
    b: &RadialElement<C>,
) -> Result<RadialElement<C>, RadialError> {
    if a.k != b.k {
        return Err(RadialError::RankMismatch(a.k, b.k));
    }
    if a.tail.is_some() || b.tail.is_some() {
        return Err(RadialError::TailPresent);
    }
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return Ok(RadialElement::zero(a.k));
    }
    let len = a.coeffs.len() + b.coeffs.len() - 1;
    let mut out = vec![C::zero(); len];
    for (m, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (n, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x.clone() * y.clone();
            let consts = sphere_product(a.k, m, n);
            for (r, c) in consts.iter().enumerate() {
                if !c.is_zero() {
                    out[r] = out[r].clone() + xy.clone() * C::from_bigint(c);
                }
            }
        }
    }
    Ok(RadialElement::new(a.k, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    fn chi(k: u32, n: usize) -> RadialElement<GaussRat> {
        RadialElement::chi(k, n)
    }

    fn ints(k: u32, v: &[i64]) -> RadialElement<GaussRat> {
        RadialElement::new(k, v.iter().map(|&x| GaussRat::from_i64(x)).collect())
    }

    #[test]
    fn unit_is_chi0() {
        let b = ints(2, &[1, -2, 0, 5]);
        assert_eq!(radial_convolve(&chi(2, 0), &b).unwrap(), b);
    }

    #[test]
    fn base_rules() {
        assert_eq!(radial_convolve(&chi(2, 1), &chi(2, 1)).unwrap(), ints(2, &[4, 0, 1]));
        assert_eq!(radial_convolve(&chi(2, 1), &chi(2, 2)).unwrap(), ints(2, &[0, 3, 0, 1]));
        assert_eq!(radial_convolve(&chi(3, 1), &chi(3, 1)).unwrap(), ints(3, &[6, 0, 1]));
    }

    #[test]
    fn product_is_commutative_and_sums_to_sphere_sizes() {
        // Σ_r c^r_{mn} e_r = e_m e_n
        for k in [2u32, 3] {
            for m in 0..6 {
                for n in 0..6 {
                    let a = sphere_product(k, m, n);
                    assert_eq!(a, sphere_product(k, n, m));
                    let total: BigInt = a
                        .iter()
                        .enumerate()
                        .map(|(r, c)| c * super::super::sphere_size(k, r))
                        .sum();
                    assert_eq!(total, super::super::sphere_size(k, m) * super::super::sphere_size(k, n));
                }
            }
        }
    }

    #[test]
    fn rank_mismatch() {
        assert!(matches!(
            radial_convolve(&chi(2, 1), &chi(3, 1)),
            Err(RadialError::RankMismatch(2, 3))
        ));
    }
}
