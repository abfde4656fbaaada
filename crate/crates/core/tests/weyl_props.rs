use latticeqm::weyl::{
    build_clock, build_shift, fourier_forward, fourier_inverse, representation_residual,
    weyl_residual, FiniteSpace, OperatorMatrix, StateVector,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn vector(max_dim: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(
        (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im)),
        2..=max_dim,
    )
}

proptest! {
    #[test]
    fn clock_and_shift_have_order_n(n in 2usize..=48) {
        let space = FiniteSpace::new(n).unwrap();
        let id = OperatorMatrix::identity(n);
        prop_assert_eq!(build_shift(&space).pow(n as u64).max_abs_diff(&id), 0.0);
        prop_assert!(build_clock(&space).pow(n as u64).max_abs_diff(&id) <= 1e-12);
    }

    #[test]
    fn weyl_relation_holds(n in 2usize..=128, s in -1000i64..1000, t in -1000i64..1000) {
        let space = FiniteSpace::new(n).unwrap();
        prop_assert!(weyl_residual(&space, s, t) <= 1e-12);
    }

    #[test]
    fn fourier_preserves_norm_and_inverts(v in vector(64)) {
        let space = FiniteSpace::new(v.len()).unwrap();
        let v = StateVector::new(v);
        let f = fourier_forward(&space, &v);
        prop_assert!((f.norm() - v.norm()).abs() <= 1e-12);
        prop_assert!(fourier_inverse(&space, &f).max_abs_diff(&v) <= 1e-12);
    }

    #[test]
    fn translation_and_modulation_act_on_functions(v in vector(40), a in -50i64..50, b in -50i64..50) {
        let space = FiniteSpace::new(v.len()).unwrap();
        let r = representation_residual(&space, a, b, &StateVector::new(v)).unwrap();
        prop_assert!(r.max() <= 1e-12, "{r:?}");
    }
}
