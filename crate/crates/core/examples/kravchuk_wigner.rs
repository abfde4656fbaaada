//! Orthonormal Kravchuk functions and their identity with Wigner d-functions.

use std::f64::consts::PI;

use latticeqm::poly::{wigner_d, HalfInt, KravchukFamily, WignerDTable};

fn main() -> latticeqm::Result<()> {
    let fam = KravchukFamily::new(400, 0.3)?;
    let table = fam.table();
    println!(
        "N = 400, p = 0.3: Gram residual {:.2e}",
        table.gram_residual()
    );
    println!("phi_7(120) = {:.12}", table.get(7, 120));

    let j = HalfInt::from_twice(9);
    let beta = PI / 3.0;
    let d = WignerDTable::new(j, beta)?;
    println!(
        "\nj = {j}, β = π/3, rows unit to {:.2e}",
        d.unit_norm_residual()
    );
    let mut worst: f64 = 0.0;
    for m in (-9..=9).step_by(2).map(HalfInt::from_twice) {
        for mp in (-9..=9).step_by(2).map(HalfInt::from_twice) {
            worst = worst.max((wigner_d(j, m, mp, beta)? - d.get(m, mp)?).abs());
        }
    }
    println!("factorial sum vs Kravchuk recurrence: {worst:.2e}");

    let half = HalfInt::from_twice(1);
    let m = d.get(half, HalfInt::from_twice(-1))?;
    println!("d^(9/2)_(1/2,-1/2)(π/3) = {m:.12}");
    Ok(())
}
