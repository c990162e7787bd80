//! Shift polynomials bound to a grid are circulant operators. This walks
//! through the algebra on the three-point grid: spectra, a solve, the
//! singular case, and the rational operator expression
//! `(I - E) / (2I + E^2)` acting as a projector.

use perspace::circulant::{apply_rational, bind, in_kernel};
use perspace::{Generator, Grid, Rational, ShiftPoly, Signal};

fn main() -> perspace::Result<()> {
    let grid = Grid::new(Rational::integer(3), 3)?;
    let f = Signal::generate(
        grid,
        Generator::Cos {
            freq: Rational::new(1, 3),
        },
    )?;

    // L = E^2 + E + I annihilates cos(2 pi x / 3): spectrum {3, 0, 0}
    let l = ShiftPoly::geometric(Rational::one(), 3);
    let bound = bind(&l, &grid)?;
    println!("spectrum of I + E + E^2 on the 3-point grid:");
    for (b, z) in bound.eigenvalues().iter().enumerate() {
        println!(
            "  bin {b}: {:.4} + {:.4}i  (|.| = {:.4})",
            z.re,
            z.im,
            z.norm()
        );
    }
    println!(
        "cos(2 pi x/3) in ker(E^2+E+I): {}",
        in_kernel(&l, &f, 1e-12)?
    );

    // a well-conditioned solve: (2I + E^2) y = 3 has the constant solution 1
    let den = ShiftPoly::identity().scale(2.0) + ShiftPoly::shift(Rational::integer(2));
    let den_op = bind(&den, &grid)?;
    let rhs = Signal::generate(grid, Generator::Constant(3.0))?;
    let y = den_op.solve_default(&rhs)?;
    println!("solve (2I + E^2) y = 3  ->  y = {:?}", y.values());
    let back = den_op.apply(&y)?;
    println!(
        "round-trip residual: {:.2e}",
        perspace::max_abs_diff(&back, &rhs)?
    );

    // the singular case is refused, naming the dead bins
    match bound.solve_default(&f) {
        Err(e) => println!("solving against I + E + E^2: {e}"),
        Ok(_) => unreachable!("operator is singular"),
    }

    // (I - E) / (2I + E^2) fixes anything in ker(E^2 + E + I)
    let num = ShiftPoly::identity() - ShiftPoly::shift(Rational::one());
    let projected = apply_rational(&num, &den, &f)?;
    println!(
        "(I-E)/(2I+E^2) fixes the kernel member: max diff {:.2e}",
        perspace::max_abs_diff(&projected, &f)?
    );
    Ok(())
}
