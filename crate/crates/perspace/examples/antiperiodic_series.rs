//! Expand signals into series of antiperiodic terms of shrinking
//! antiperiod, one where the expansion converges (centered sawtooth) and
//! one where it stalls (raw sawtooth, whose nonzero mean survives every
//! level because antiperiodic terms average to zero).

use perspace::halving::antiperiodic_series;
use perspace::{combine, Generator, Grid, Rational, Signal};

fn main() -> perspace::Result<()> {
    let grid = Grid::new(Rational::one(), 64)?;
    let raw = Signal::generate(grid, Generator::Sawtooth)?;
    let half = Signal::generate(grid, Generator::Constant(0.5))?;
    let centered = combine(1.0, &raw, -1.0, &half)?;

    println!("centered sawtooth (mean 0):");
    let report = antiperiodic_series(&centered, 1e-2, 6)?;
    for (n, norm) in report.residual_norms.iter().enumerate() {
        println!(
            "  residual after level {n}: {norm:.6}  (bound 2^-{} = {:.6})",
            n + 1,
            0.5f64.powi(n as i32 + 1)
        );
    }
    println!(
        "  converged: {} after {} levels",
        report.converged, report.levels_used
    );

    // the partial sum misses the source by exactly the residual norm
    let mut partial = Signal::zero(grid);
    for term in &report.partial_terms {
        partial = combine(1.0, &partial, 1.0, term)?;
    }
    let error = perspace::max_abs_diff(&partial, &centered)?;
    println!("  partial-sum error: {error:.6}");

    println!();
    println!("raw sawtooth (mean 1/2):");
    let report = antiperiodic_series(&raw, 1e-2, 5)?;
    for (n, norm) in report.residual_norms.iter().enumerate() {
        println!("  residual after level {n}: {norm:.6}");
    }
    println!("  converged: {}", report.converged);
    println!("  the residuals stall at the sample mean {:.6}", raw.mean());
    Ok(())
}
