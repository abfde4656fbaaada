//! Clock and shift matrices on C^N, the relation U_a V_b = ω^{ab} V_b U_a
//! and the finite Fourier transform.

use latticeqm::weyl::{
    basis_intertwine_residual, build_clock, build_shift, continuum_limit_probe, finite_fourier,
    fourier_unitarity_residual, weyl_residual, ContinuumProbe, FiniteSpace,
};

fn main() -> latticeqm::Result<()> {
    let space = FiniteSpace::new(5)?;
    let (a, b) = (build_shift(&space), build_clock(&space));
    println!("N = 5, A is a permutation: {}", a.is_permutation());
    println!(
        "A^5 = 1 to {:.1e}",
        a.pow(5)
            .max_abs_diff(&latticeqm::weyl::OperatorMatrix::identity(5))
    );
    println!(
        "B^5 = 1 to {:.1e}",
        b.pow(5)
            .max_abs_diff(&latticeqm::weyl::OperatorMatrix::identity(5))
    );

    for (s, t) in [(1, 1), (2, -3), (4, 7)] {
        println!(
            "weyl({s:>2}, {t:>2}) residual {:.2e}",
            weyl_residual(&space, s, t)
        );
    }

    let f = finite_fourier(&space);
    println!("F[1][1] = {:.6}", f.get(1, 1));
    println!("F unitary to {:.2e}", fourier_unitarity_residual(&space));
    println!(
        "F U_a F^-1 = V_a to {:.2e}",
        basis_intertwine_residual(&space, 2, 3)
    );

    let dims = [16, 64, 256, 1024];
    println!("\n  N   deviation |ω^st - e^(iστ)|");
    for row in continuum_limit_probe(
        ContinuumProbe {
            sigma: 1.035,
            tau: 1.04,
        },
        &dims,
    )? {
        println!(
            "{:>5}  {:.3e}  (s, t) = ({}, {})",
            row.dim, row.deviation, row.s, row.t
        );
    }
    Ok(())
}
