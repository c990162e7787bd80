//! Split the unit sawtooth into its half-period periodic and antiperiodic
//! parts, and verify the split against the closed-form answers
//! `f_1(x) = (2x + 1/2 - floor(x) - floor(x + 1/2)) / 2` and
//! `ft_1(x) = (floor(x + 1/2) - floor(x) - 1/2) / 2`.

use perspace::halving::split_half;
use perspace::{Generator, Grid, Rational, Signal};

fn main() -> perspace::Result<()> {
    let grid = Grid::new(Rational::one(), 8)?;
    let sawtooth = Signal::generate(grid, Generator::Sawtooth)?;

    let (periodic, antiperiodic) = split_half(&sawtooth)?;

    println!("x        saw      f_1      ft_1");
    for j in 0..8 {
        let x = grid.point(j);
        println!(
            "{:<8} {:>7.4}  {:>7.4}  {:>7.4}",
            x.to_string(),
            sawtooth.values()[j],
            periodic.values()[j],
            antiperiodic.values()[j],
        );
    }

    let half = Rational::new(1, 2);
    println!();
    println!(
        "f_1 periodic with 1/2:      {}",
        periodic.is_periodic_with(half, 1e-12)?
    );
    println!(
        "ft_1 antiperiodic with 1/2: {}",
        antiperiodic.is_antiperiodic_with(half, 1e-12)?
    );

    // closed forms, evaluated exactly in rational arithmetic
    let mut worst: f64 = 0.0;
    for j in 0..8 {
        let x = grid.point(j);
        let fx = closed_form_periodic(x);
        let gx = closed_form_antiperiodic(x);
        worst = worst.max((periodic.values()[j] - fx).abs());
        worst = worst.max((antiperiodic.values()[j] - gx).abs());
    }
    println!("max deviation from the closed forms: {worst:.2e}");
    Ok(())
}

fn closed_form_periodic(x: Rational) -> f64 {
    let two_x = Rational::integer(2) * x;
    let floor_x = Rational::integer(x.floor_int());
    let floor_shifted = Rational::integer((x + Rational::new(1, 2)).floor_int());
    ((two_x + Rational::new(1, 2) - floor_x - floor_shifted) / Rational::integer(2)).to_f64()
}

fn closed_form_antiperiodic(x: Rational) -> f64 {
    let floor_x = Rational::integer(x.floor_int());
    let floor_shifted = Rational::integer((x + Rational::new(1, 2)).floor_int());
    ((floor_shifted - floor_x - Rational::new(1, 2)) / Rational::integer(2)).to_f64()
}
