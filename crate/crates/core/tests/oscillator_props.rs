use latticeqm::oscillator::OscillatorModel;
use latticeqm::poly::HalfInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ladders_and_commutators(twice_j in 1i64..=40, beta in 0.05..3.09f64, level in 0usize..=40) {
        let model = OscillatorModel::new(HalfInt::from_twice(twice_j), beta).unwrap();
        let n = level % (model.size() + 1);
        let j = twice_j as f64 / 2.0;
        let nf = n as f64;
        let (up, down) = model.ladder_residual(n).unwrap();
        prop_assert!(up <= 1e-10 && down <= 1e-10);
        let c = model.commutator_eigenvalue(n).unwrap();
        prop_assert!((c.value - (1.0 - nf / j)).abs() <= 1e-10 && c.residual <= 1e-10);
        let a = model.anticommutator_eigenvalue(n).unwrap();
        prop_assert!((a.value - (2.0 * nf + 1.0 - nf * nf / j)).abs() <= 1e-10 && a.residual <= 1e-10);
    }

    #[test]
    fn lowering_the_ground_state_is_a_structural_zero(twice_j in 1i64..=30, beta in 0.05..3.09f64) {
        let model = OscillatorModel::new(HalfInt::from_twice(twice_j), beta).unwrap();
        prop_assert!(model.annihilation(&model.level(0).unwrap()).unwrap().is_structural_zero());
        let top = model.level(model.size()).unwrap();
        prop_assert!(model.creation(&top).unwrap().is_structural_zero());
    }

    #[test]
    fn position_spectrum_is_equally_spaced(twice_j in 1i64..=30, beta in 0.05..3.09f64) {
        let model = OscillatorModel::new(HalfInt::from_twice(twice_j), beta).unwrap();
        let n = twice_j as f64;
        for (i, e) in model.position_spectrum().unwrap().into_iter().enumerate() {
            prop_assert!((e - (2.0 * i as f64 - n) / n.sqrt()).abs() <= 1e-10);
        }
    }
}
