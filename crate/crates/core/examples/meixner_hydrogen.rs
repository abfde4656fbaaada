//! Meixner radial functions: the difference equation, ladders and the
//! Laguerre limit.

use latticeqm::hydrogen::{laguerre_limit_probe, HydrogenModel};

fn main() -> latticeqm::Result<()> {
    let model = HydrogenModel::new(2.0, 0.5, 6)?;
    let t = model.truncation();
    println!(
        "γ = 2, μ = 0.5: x_cut = {}, tail ≤ {:.1e}",
        t.x_cut, t.tail_bound
    );
    println!("SL off-diagonal {:.2e}", model.sl_off_diagonal());
    for n in 0..=5 {
        let eig = model.sl_eigenvalue(n)?;
        let up = model.ladder_up_fit(n)?;
        let expected = (model.mu() - 1.0) * n as f64;
        print!(
            "n = {n}: eigenvalue {:.6} ((μ-1)n = {expected:.6})  L+ cos {:.12} c = {:.6}",
            eig.value, up.cosine, up.prefactor
        );
        if n > 0 {
            let down = model.ladder_down_fit(n)?;
            print!("  L- cos {:.12}", down.cosine);
        }
        println!();
    }

    let models = [0.9, 0.95, 0.975, 0.9875]
        .into_iter()
        .map(|mu| HydrogenModel::new(4.0, mu, 3))
        .collect::<latticeqm::Result<Vec<_>>>()?;
    println!("\nn = 2, l = 1 against the Laguerre function");
    for row in laguerre_limit_probe(&models, 2, 1)? {
        println!("  μ = {:.4}  sup error {:.3e}", row.mu, row.sup_error);
    }
    Ok(())
}
