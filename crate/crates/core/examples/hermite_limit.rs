//! Low oscillator levels approach Hermite functions as j grows.

use std::f64::consts::FRAC_PI_2;

use latticeqm::oscillator::{hermite_convergence, OscillatorModel};
use latticeqm::poly::HalfInt;

fn main() -> latticeqm::Result<()> {
    let models = [25, 50, 100, 200, 400]
        .into_iter()
        .map(|twice| OscillatorModel::new(HalfInt::from_twice(twice), FRAC_PI_2))
        .collect::<latticeqm::Result<Vec<_>>>()?;
    for n in 0..3 {
        println!("level {n}");
        for row in hermite_convergence(&models, n)? {
            println!("  j = {:>5}   sup error {:.3e}", row.j, row.sup_error);
        }
    }
    Ok(())
}
