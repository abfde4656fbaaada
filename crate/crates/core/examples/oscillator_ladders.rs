//! The discrete oscillator on d^j(β): ladder recurrences and the
//! deformed commutator.

use latticeqm::oscillator::OscillatorModel;
use latticeqm::poly::HalfInt;

fn main() -> latticeqm::Result<()> {
    let model = OscillatorModel::new(HalfInt::from_twice(10), 1.1)?;
    let j = 5.0;
    println!("j = 5, β = 1.1, p = {:.6}", model.p());
    println!(" n   ladder(up, down)       [A,A†]   1-n/j   {{A,A†}}  2n+1-n²/j");
    for n in 0..model.size() {
        let (up, down) = model.ladder_residual(n)?;
        let c = model.commutator_eigenvalue(n)?;
        let a = model.anticommutator_eigenvalue(n)?;
        let nf = n as f64;
        println!(
            "{n:>2}   {up:.1e} {down:.1e}   {:>8.4} {:>7.4}  {:>8.4} {:>8.4}",
            c.value,
            1.0 - nf / j,
            a.value,
            2.0 * nf + 1.0 - nf * nf / j
        );
    }
    println!(
        "\nposition spectrum {:?}",
        model
            .position_spectrum()?
            .iter()
            .map(|v| format!("{v:.4}"))
            .collect::<Vec<_>>()
    );
    Ok(())
}
