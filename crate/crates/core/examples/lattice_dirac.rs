//! Plane-wave solutions of the lattice Dirac equation and the
//! tan-dispersion relation.

use latticeqm::dirac::{
    dirac_apply, dirac_spinor, dispersion_residual, dispersion_solve, FourMomentum, GammaSet,
    LatticeParams, PlaneWave,
};

fn main() -> latticeqm::Result<()> {
    let gammas = GammaSet::dirac();
    println!("Clifford residual {:.1e}", gammas.clifford_residual());
    let params = LatticeParams::new(0.5, [10; 4], 1.0)?;
    for n in [[0, 0, 0, 0], [0, 1, 0, 0], [0, 1, -2, 1], [0, 2, 2, -2]] {
        let q = params.quantized_momentum(n)?.k();
        let k0 = dispersion_solve(&params, [q[1], q[2], q[3]])?;
        let k = FourMomentum::new([k0, q[1], q[2], q[3]], params.epsilon)?;
        let u = dirac_spinor(&gammas, &k, params.m0c, params.phase)?;
        let wave = PlaneWave::new(params, k, u);
        println!(
            "n = {:?}  k0 = {k0:.6}  dispersion {:.1e}  |Dψ| = {:.1e}",
            &n[1..],
            dispersion_residual(&params, &k)?,
            dirac_apply(&wave, &gammas).max_abs()
        );
    }
    Ok(())
}
