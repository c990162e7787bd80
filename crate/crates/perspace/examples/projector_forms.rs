//! The rational-operator projectors on small spaces, and the canonical
//! operator forms of subspace elements: folds `(I + E^d + ...)` for the
//! periodic subspaces and alternating sums for the antiperiodic ones.

use perspace::subspaces::{fold, normalized_fold, p12_forms, project_ap3, project_p3};
use perspace::{combine, Generator, Grid, Rational, Signal};

fn main() -> perspace::Result<()> {
    // project a mixed 3-periodic signal into P_1 + ker(E^2+E+I)
    let g3 = Grid::new(Rational::integer(3), 3)?;
    let oscillation = Signal::generate(
        g3,
        Generator::Cos {
            freq: Rational::new(1, 3),
        },
    )?;
    let constant = Signal::generate(g3, Generator::Constant(0.75))?;
    let mixed = combine(1.0, &oscillation, 1.0, &constant)?;

    let (p1_part, s_part) = project_p3(&mixed)?;
    println!("project_p3 on cos(2 pi x/3) + 3/4:");
    println!("  P_1 part: {:?}", p1_part.values());
    println!(
        "  kernel part - cos: {:.2e}",
        perspace::max_abs_diff(&s_part, &oscillation)?
    );

    // the antiperiodic analogue on the period-6 grid
    let g6 = Grid::new(Rational::integer(6), 12)?;
    let t_member = Signal::generate(
        g6,
        Generator::Cos {
            freq: Rational::new(1, 6),
        },
    )?;
    let ap1_member = Signal::generate(
        g6,
        Generator::Cos {
            freq: Rational::new(1, 2),
        },
    )?;
    let blended = combine(1.0, &t_member, 1.0, &ap1_member)?;
    let (ap1_part, t_part) = project_ap3(&blended)?;
    println!();
    println!("project_ap3 on cos(pi x/3) + cos(pi x):");
    println!(
        "  AP_1 recovery: {:.2e}",
        perspace::max_abs_diff(&ap1_part, &ap1_member)?
    );
    println!(
        "  T recovery:    {:.2e}",
        perspace::max_abs_diff(&t_part, &t_member)?
    );

    // folds drop a 6-periodic signal onto a divisor period; the result
    // stays on the input grid and can be restricted to its new period
    println!();
    let f = Signal::new(g6, (0..12).map(|j| ((j * j) % 5) as f64).collect())?;
    for d in [3u64, 2, 1] {
        let folded = fold(&f, 6, d)?;
        let compact = folded.restrict(Rational::integer(d as i64))?;
        println!(
            "fold to d = {d}: periodic with {d}: {} ({} samples restricted to {})",
            folded.is_periodic_with(Rational::integer(d as i64), 1e-12)?,
            folded.len(),
            compact.len()
        );
    }
    // the averaging fold fixes subspace members
    let member = Signal::generate(
        g6,
        Generator::Cos {
            freq: Rational::new(1, 3),
        },
    )?;
    let back = normalized_fold(&member, 6, 3)?;
    println!(
        "normalized fold fixes a P_3 member: {:.2e}",
        perspace::max_abs_diff(&back, &member)?
    );

    // all nine canonical forms of a 12-periodic signal
    let g12 = Grid::new(Rational::integer(12), 24)?;
    let h = Signal::new(
        g12,
        (0..24).map(|j| ((j * 7 + 2) % 11) as f64 - 5.0).collect(),
    )?;
    println!();
    println!("p12 canonical forms and their membership deviations:");
    for (label, form) in p12_forms(&h)? {
        println!(
            "  {:<6} {:.2e}",
            label.to_string(),
            label.membership_deviation(&form)?
        );
    }
    Ok(())
}
