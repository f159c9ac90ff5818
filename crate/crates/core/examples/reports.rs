//! The JSON side: a seeded random beam file, a recipe report and its
//! recomputed residuals. The `symplectica` binary wraps the same calls.

use symplectica::cli::{cmd_diagonalize, cmd_gen, cmd_invariants, CliResult};
use symplectica::dirac::DiagonalizeStrategy;

fn main() -> CliResult<()> {
    let file = cmd_gen(2, 7)?;
    println!("{}", serde_json::to_string(&file)?);
    println!("{}", serde_json::to_string_pretty(&cmd_invariants(&file)?)?);

    let report = cmd_diagonalize(&file, DiagonalizeStrategy::Direct)?;
    for s in &report.steps {
        println!("{:<12} {:?}", s.kind, s.angle);
    }
    for (name, value) in report.recompute_residuals()?.entries() {
        println!("{name:<16} {value:.1e}");
    }
    Ok(())
}
