use latticeqm::hydrogen::HydrogenModel;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn radial_system_identities(gamma in 0.5..6.0f64, mu in 0.1..0.8f64) {
        let model = HydrogenModel::new(gamma, mu, 6).unwrap();
        for n in 0..=6 {
            for x in 0..=model.x_cut() {
                prop_assert!(model.sl_difference_residual(n, x).unwrap() <= 1e-10);
            }
            let eig = model.sl_eigenvalue(n).unwrap();
            prop_assert!((eig.value - (mu - 1.0) * n as f64).abs() <= 1e-10);
        }
        prop_assert!(model.sl_off_diagonal() <= 1e-10);
    }

    #[test]
    fn ladders_connect_neighbouring_levels(gamma in 0.5..6.0f64, mu in 0.1..0.8f64) {
        let model = HydrogenModel::new(gamma, mu, 6).unwrap();
        for n in 0..=5 {
            let up = model.ladder_up_fit(n).unwrap();
            prop_assert!((1.0 - up.cosine).abs() <= 1e-10);
            prop_assert!((up.prefactor - up.expected).abs() <= 1e-9);
            if n > 0 {
                let down = model.ladder_down_fit(n).unwrap();
                prop_assert!((1.0 - down.cosine).abs() <= 1e-10);
                prop_assert!((down.prefactor - down.expected).abs() <= 1e-9);
            }
        }
    }
}
