use latticeqm::dirac::{
    delta_pm, delta_pm_composed, diff_ops, eta, kernel_identity_residual,
    kg_factorization_residual, DiffKind, FourMomentum, GammaSet, LatticeParams, Sign, SpinorField,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lattice() -> impl Strategy<Value = (LatticeParams, u64)> {
    (
        prop::array::uniform4(2usize..=4),
        0.1..2.0f64,
        0.0..3.0f64,
        any::<u64>(),
    )
        .prop_map(|(ext, eps, m, seed)| (LatticeParams::new(eps, ext, m).unwrap(), seed))
}

fn fields(params: LatticeParams, seed: u64) -> (SpinorField, SpinorField) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (
        SpinorField::random(params, &mut rng),
        SpinorField::random(params, &mut rng),
    )
}

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn summation_by_parts((params, seed) in lattice(), mu in 0usize..4) {
        let (f, g) = fields(params, seed);
        let lhs = diff_ops(&f, mu, DiffKind::Forward).unwrap().inner(&g);
        let rhs = f.inner(&diff_ops(&g, mu, DiffKind::Backward).unwrap());
        prop_assert!((lhs + rhs).norm() <= 1e-14 * params.volume() as f64);
        let lhs = diff_ops(&f, mu, DiffKind::ForwardAverage).unwrap().inner(&g);
        let rhs = f.inner(&diff_ops(&g, mu, DiffKind::BackwardAverage).unwrap());
        prop_assert!((lhs - rhs).norm() <= 1e-14 * params.volume() as f64);
    }

    #[test]
    fn difference_operators_commute((params, seed) in lattice(), mu in 0usize..4, nu in 0usize..4) {
        let (f, _) = fields(params, seed);
        for s in SIGNS {
            for t in SIGNS {
                let ab = delta_pm(&delta_pm(&f, nu, t).unwrap(), mu, s).unwrap();
                let ba = delta_pm(&delta_pm(&f, mu, s).unwrap(), nu, t).unwrap();
                prop_assert!(ab.max_abs_diff(&ba) <= 1e-13 * (1.0 + ab.max_abs()));
                let de = delta_pm(&eta(&f, t), mu, s).unwrap();
                let ed = eta(&delta_pm(&f, mu, s).unwrap(), t);
                prop_assert!(de.max_abs_diff(&ed) <= 1e-13 * (1.0 + de.max_abs()));
            }
        }
    }

    #[test]
    fn stencil_matches_one_direction_passes((params, seed) in lattice(), mu in 0usize..4) {
        let (f, _) = fields(params, seed);
        let others: Vec<usize> = (0..4).filter(|&v| v != mu).collect();
        for s in SIGNS {
            let direct = delta_pm(&f, mu, s).unwrap();
            let composed = delta_pm_composed(&f, mu, s, [others[2], others[0], others[1]]).unwrap();
            prop_assert!(direct.max_abs_diff(&composed) <= 1e-13 * (1.0 + direct.max_abs()));
        }
    }

    #[test]
    fn kernel_identity_away_from_poles(k in prop::array::uniform4(-0.49..0.49f64), eps in 0.1..2.0f64) {
        let params = LatticeParams::new(eps, [4; 4], 1.0).unwrap();
        let k = FourMomentum::new(k.map(|v| v / eps), eps).unwrap();
        for mu in 0..4 {
            let r = kernel_identity_residual(&params, &k, mu).unwrap();
            let scale = 1.0 + k.ptilde()[mu].abs();
            prop_assert!(r <= 1e-12 * scale, "mu={mu} r={r}");
        }
    }

    #[test]
    fn dirac_squares_to_klein_gordon((params, seed) in lattice()) {
        let (f, _) = fields(params, seed);
        prop_assert!(kg_factorization_residual(&f, &GammaSet::dirac()) <= 1e-12 * (1.0 + params.m0c.powi(2)) / params.epsilon.powi(2).min(1.0));
    }
}
