//! The lattice Dirac operator squares to the lattice Klein-Gordon operator.

use latticeqm::dirac::{
    kg_factorization_residual, kg_stencil, GammaSet, LatticeParams, SpinorField,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> latticeqm::Result<()> {
    let gammas = GammaSet::dirac();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ext in [[2; 4], [3, 4, 3, 4], [6; 4]] {
        let params = LatticeParams::new(0.25, ext, 2.0)?;
        let stencil = kg_stencil(&params);
        let field = SpinorField::random(params, &mut rng);
        println!(
            "{ext:?}: {} stencil points, |D⁻D⁺ψ + Kψ| = {:.2e}",
            stencil.terms().count(),
            kg_factorization_residual(&field, &gammas)
        );
    }
    Ok(())
}
