//! Decompose a 12-periodic signal into its six cyclotomic kernel
//! components P_1, AP_1, C_3, AP_2, C_6, C_12 (the direct sum that the
//! period-12 space splits into), then verify reconstruction, memberships,
//! and projector idempotence.

use perspace::subspaces::{cyclotomic_decompose, cyclotomic_project};
use perspace::{Grid, Rational, Signal};

fn main() -> perspace::Result<()> {
    let grid = Grid::new(Rational::integer(12), 120)?;
    // a deterministic "random" 12-periodic signal
    let values: Vec<f64> = (0..120)
        .map(|j| {
            let a = ((j * 37 + 11) % 101) as f64 / 101.0;
            let b = ((j * 59 + 3) % 83) as f64 / 83.0;
            2.0 * a - b - 0.5
        })
        .collect();
    let f = Signal::new(grid, values)?;

    let decomposition = cyclotomic_decompose(&f, 12)?;
    println!("component      sup norm   membership deviation");
    for (label, part) in &decomposition.parts {
        println!(
            "{:<12}  {:>9.5}   {:.2e}",
            label.to_string(),
            part.sup_norm(),
            label.membership_deviation(part)?
        );
    }
    println!(
        "reconstruction residual: {:.2e}",
        decomposition.reconstruction_residual()
    );

    // projecting a part onto its own order reproduces it; any other
    // order gives zero
    let (label, part) = &decomposition.parts[2];
    println!();
    println!("idempotence on the {label} part:");
    let again = cyclotomic_project(part, 3)?;
    println!(
        "  re-projection diff: {:.2e}",
        perspace::max_abs_diff(&again, part)?
    );
    let cross = cyclotomic_project(part, 4)?;
    println!("  cross-projection sup norm: {:.2e}", cross.sup_norm());
    Ok(())
}
