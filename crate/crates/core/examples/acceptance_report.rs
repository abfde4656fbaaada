//! Runs a reduced report and prints it as CSV.

use latticeqm::report::{all_pass, render, run_suite, Format, RunConfig, Suite};

fn main() -> latticeqm::Result<()> {
    let mut cfg = RunConfig {
        suites: vec![Suite::Weyl, Suite::Oscillator, Suite::Hydrogen],
        ..RunConfig::default()
    };
    cfg.weyl.dims = vec![3, 8, 13];
    cfg.oscillator.twice_js = vec![4, 9];
    cfg.hydrogen.points = vec![(2.0, 0.5)];
    let records = run_suite(&cfg)?;
    print!("{}", render(&records, Format::Csv));
    eprintln!(
        "{} records, all pass: {}",
        records.len(),
        all_pass(&records)
    );
    Ok(())
}
