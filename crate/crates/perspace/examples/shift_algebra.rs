//! The shift-operator algebra underneath everything: `E^h` as an exact
//! index rotation, difference operators, operator products realizing
//! composition, and the generation formulas as one operator product.

use perspace::halving::periodic_generation;
use perspace::{Generator, Grid, Rational, ShiftPoly, Signal};

fn main() -> perspace::Result<()> {
    let grid = Grid::new(Rational::one(), 16)?;
    let f = Signal::generate(grid, Generator::Sawtooth)?;

    // E^{1/4} then E^{1/2} is E^{3/4}
    let a = f.shift(Rational::new(1, 4))?.shift(Rational::new(1, 2))?;
    let b = f.shift(Rational::new(3, 4))?;
    println!("shift composition exact: {}", a.values() == b.values());

    // delta annihilates constants; on the unit grid E reduces to I
    let delta = ShiftPoly::delta();
    let constant = Signal::generate(grid, Generator::Constant(2.0))?;
    println!(
        "delta of a constant: sup = {}",
        delta.apply(&constant)?.sup_norm()
    );

    // operator multiplication is composition on signals
    let half_sum = ShiftPoly::identity() + ShiftPoly::shift(Rational::new(1, 2));
    let quarter_sum = ShiftPoly::identity() + ShiftPoly::shift(Rational::new(1, 4));
    let product = &half_sum * &quarter_sum;
    let via_product = product.apply(&f)?;
    let via_composition = quarter_sum.apply(&half_sum.apply(&f)?)?;
    println!(
        "product vs composition: {:.2e}",
        perspace::max_abs_diff(&via_product, &via_composition)?
    );

    // the n-th periodic generation as one product (1/2^n) prod (I + E^{p/2^i})
    let n = 3;
    let mut op = ShiftPoly::identity();
    let mut shift = Rational::one();
    for _ in 0..n {
        shift /= Rational::integer(2);
        op = &op * &(ShiftPoly::identity() + ShiftPoly::shift(shift));
    }
    let product_form = op.scale(0.5f64.powi(n)).apply(&f)?;
    let iterated = periodic_generation(&f, n as u32)?;
    println!(
        "operator-product generation vs iterated splits: {:.2e}",
        perspace::max_abs_diff(&product_form, &iterated)?
    );
    println!(
        "f_{n} is periodic with 1/{}: {}",
        1 << n,
        iterated.is_periodic_with(Rational::new(1, 1 << n), 1e-12)?
    );
    Ok(())
}
