mod common;

use common::strategies::lattice_element;
use proptest::prelude::*;
use zdlab_core::torus::{
    act_on_gridfunction, act_on_real, hyperplane_cover_check, parseval_check, sample_zero_set, theorem2_evidence,
    zeta_inverse, zeta_map, GridFunction, Hyperplane, TrigPolynomial,
};
use zdlab_core::VerdictStatus;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn parseval_on_the_grid(alpha in lattice_element(2, 6, 3)) {
        prop_assume!(!alpha.is_zero());
        let p = TrigPolynomial::from_element(&alpha).unwrap();
        let check = parseval_check(&p, 16).unwrap();
        prop_assert!(check.relative_error <= 1e-12);
    }

    #[test]
    fn zeta_round_trips(values in prop::collection::vec(-4.0f64..4.0, 2 * 9 * 4)) {
        let vals: Vec<_> = values.chunks(2).map(|c| num_complex::Complex64::new(c[0], c[1])).collect();
        let g = GridFunction::new(1, 4, 4, vals).unwrap();
        prop_assert_eq!(zeta_map(&zeta_inverse(&g)), g);
    }

    #[test]
    fn actions_commute_with_zeta(alpha in lattice_element(1, 4, 3), seed in any::<u32>()) {
        let g = GridFunction::from_fn(1, 8, 4, |j, n| {
            num_complex::Complex64::new((j[0] as i64 * 7 + n[0] * 3 + seed as i64 % 11) as f64, n[0] as f64)
        })
        .unwrap();
        let real = zeta_inverse(&g);
        let (lhs, b1) = act_on_gridfunction(&alpha, &g).unwrap();
        let (rhs, b2) = act_on_real(&alpha, &real).unwrap();
        prop_assert_eq!(lhs, zeta_map(&rhs));
        prop_assert_eq!(b1, b2);
    }
}

#[test]
fn difference_zeros_lie_on_a_hyperplane() {
    let p = TrigPolynomial::from_element(&common::flat(2)).unwrap();
    let sample = sample_zero_set(&p, 64, 1e-8).unwrap();
    let plane = Hyperplane::new(vec![1.0, 0.0], 0.0).unwrap();
    let report = hyperplane_cover_check(&sample, &[plane], 1e-6).unwrap();
    assert!(report.covered && report.sample_count > 0);
    assert_eq!(theorem2_evidence(&report).status, VerdictStatus::NonzeroDivisor);
}

#[test]
fn level_curve_is_not_flat() {
    let p = TrigPolynomial::from_element(&common::level_curve(2)).unwrap();
    let sample = sample_zero_set(&p, 64, 1e-8).unwrap();
    let planes = [Hyperplane::new(vec![1.0, 0.0], 0.0).unwrap(), Hyperplane::new(vec![0.0, 1.0], 0.0).unwrap()];
    let report = hyperplane_cover_check(&sample, &planes, 1e-3).unwrap();
    assert!(!report.covered);
    assert_eq!(theorem2_evidence(&report).status, VerdictStatus::Unknown);
    for t in &sample.points {
        assert!(p.eval(t).unwrap().norm() <= 1e-6);
    }
}
