//! Shift polynomials bound to a grid become circulant linear operators:
//! cyclic index rotations diagonalized by the discrete Fourier transform.
//! Binding computes the spectrum once; `solve` divides DFT bins.
//!
//! The transform is the naive O(N^2) sum. Grids here are desk scale and
//! the simple sum keeps the numerical story easy to reason about.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::shift::ShiftPoly;
use crate::signal::Signal;

/// Largest tolerated imaginary residue when a result is cast back to real
/// samples. Real coefficient sequences give conjugate-symmetric spectra,
/// so anything above this indicates an internal inconsistency.
pub const IMAG_RESIDUE_LIMIT: f64 = 1e-10;

/// Relative factor for the default singularity threshold.
pub const DEFAULT_SING_REL: f64 = 1e-9;

/// DFT eigenvalues of a bound operator.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub min_abs: f64,
}

/// A shift polynomial bound to a grid: a circulant operator with its
/// first column (the image of the delta signal) and full spectrum.
#[derive(Clone, Debug)]
pub struct CirculantOp {
    grid: Grid,
    first_column: Vec<f64>,
    eigenvalues: Vec<Complex64>,
    source: ShiftPoly,
}

/// Bind a shift polynomial to a grid. Every shift must land on the grid.
pub fn bind(op: &ShiftPoly, grid: &Grid) -> Result<CirculantOp> {
    let n = grid.n_samples();
    // coefficient sequence a[k]: total weight on the rotation by k samples
    let mut coeff = vec![0.0; n];
    for (h, c) in op.terms() {
        coeff[grid.offset_for_shift(h)?] += c;
    }
    let mut first_column = vec![0.0; n];
    for j in 0..n {
        first_column[j] = coeff[(n - j) % n];
    }
    // eigenvalue at bin b: sum_k a[k] e^{+2 pi i k b / N}
    let roots = unit_roots(n);
    let mut eigenvalues = Vec::with_capacity(n);
    for b in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &a) in coeff.iter().enumerate() {
            if a != 0.0 {
                acc += a * roots[(k * b) % n];
            }
        }
        eigenvalues.push(acc);
    }
    Ok(CirculantOp {
        grid: *grid,
        first_column,
        eigenvalues,
        source: op.clone(),
    })
}

impl CirculantOp {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn first_column(&self) -> &[f64] {
        &self.first_column
    }

    pub fn source(&self) -> &ShiftPoly {
        &self.source
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum {
            eigenvalues: self.eigenvalues.clone(),
            min_abs: self.min_abs(),
        }
    }

    pub fn min_abs(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(f64::INFINITY, |a, z| a.min(z.norm()))
    }

    pub fn max_abs(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0f64, |a, z| a.max(z.norm()))
    }

    /// `DEFAULT_SING_REL * max |eigenvalue|`; the spectra of interest here
    /// are either bounded away from zero by 1 or exactly singular, so a
    /// relative guard is enough.
    pub fn default_sing_tol(&self) -> f64 {
        DEFAULT_SING_REL * self.max_abs()
    }

    /// Apply through the spectral route: transform, multiply bins by the
    /// eigenvalues, transform back. Agrees with the time-domain
    /// `ShiftPoly::apply` to rounding.
    pub fn apply(&self, f: &Signal) -> Result<Signal> {
        if f.grid() != &self.grid {
            return Err(Error::GridMismatch);
        }
        let mut bins = dft(f.values());
        for (bin, lambda) in bins.iter_mut().zip(&self.eigenvalues) {
            *bin *= lambda;
        }
        real_signal(self.grid, &inverse_dft(&bins))
    }

    /// Solve `self * y = g` by dividing DFT bins. Errors when any
    /// eigenvalue magnitude falls below `sing_tol`, listing the offending
    /// bins; no implicit projection onto the solvable part ever happens.
    pub fn solve(&self, g: &Signal, sing_tol: f64) -> Result<Signal> {
        if g.grid() != &self.grid {
            return Err(Error::GridMismatch);
        }
        let singular: Vec<usize> = self
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() < sing_tol)
            .map(|(b, _)| b)
            .collect();
        if !singular.is_empty() {
            return Err(Error::SingularOperator {
                bins: singular,
                min_abs: self.min_abs(),
                tol: sing_tol,
            });
        }
        let mut bins = dft(g.values());
        for (bin, lambda) in bins.iter_mut().zip(&self.eigenvalues) {
            *bin /= lambda;
        }
        real_signal(self.grid, &inverse_dft(&bins))
    }

    pub fn solve_default(&self, g: &Signal) -> Result<Signal> {
        self.solve(g, self.default_sing_tol())
    }
}

/// Apply the rational operator expression `num / den` to `f`:
/// apply `num` in the time domain, then solve the bound `den` system.
pub fn apply_rational(num: &ShiftPoly, den: &ShiftPoly, f: &Signal) -> Result<Signal> {
    let den_op = bind(den, f.grid())?;
    let rhs = num.apply(f)?;
    den_op.solve_default(&rhs)
}

/// Is `f` in the kernel of `op` on its grid? Checks
/// `sup |op f| <= tol * (1 + sup |f|)`.
pub fn in_kernel(op: &ShiftPoly, f: &Signal, tol: f64) -> Result<bool> {
    let image = op.apply(f)?;
    Ok(image.sup_norm() <= tol * (1.0 + f.sup_norm()))
}

/// Unit roots `e^{2 pi i k / n}` for `k < n`.
fn unit_roots(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64))
        .collect()
}

/// Forward transform: `F[b] = sum_j x[j] e^{-2 pi i j b / N}`.
pub fn dft(values: &[f64]) -> Vec<Complex64> {
    let n = values.len();
    let roots = unit_roots(n);
    (0..n)
        .map(|b| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &x) in values.iter().enumerate() {
                acc += x * roots[(n - (j * b) % n) % n];
            }
            acc
        })
        .collect()
}

/// Inverse transform including the `1/N` normalization.
pub fn inverse_dft(bins: &[Complex64]) -> Vec<Complex64> {
    let n = bins.len();
    let roots = unit_roots(n);
    (0..n)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (b, z) in bins.iter().enumerate() {
                acc += z * roots[(j * b) % n];
            }
            acc / n as f64
        })
        .collect()
}

/// Cast complex samples back to a real signal, truncating imaginary parts
/// below [`IMAG_RESIDUE_LIMIT`] and refusing anything larger.
pub fn real_signal(grid: Grid, samples: &[Complex64]) -> Result<Signal> {
    let worst = samples.iter().fold(0.0f64, |a, z| a.max(z.im.abs()));
    if worst > IMAG_RESIDUE_LIMIT {
        return Err(Error::NumericInconsistency(worst));
    }
    Signal::new(grid, samples.iter().map(|z| z.re).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::signal::{max_abs_diff, Generator};

    fn grid_p3() -> Grid {
        Grid::new(Rational::integer(3), 3).unwrap()
    }

    fn cos_third() -> Signal {
        Signal::generate(
            grid_p3(),
            Generator::Cos {
                freq: Rational::new(1, 3),
            },
        )
        .unwrap()
    }

    fn l_poly() -> ShiftPoly {
        // E^2 + E + I
        ShiftPoly::geometric(Rational::one(), 3)
    }

    fn two_i_plus_e2() -> ShiftPoly {
        ShiftPoly::identity().scale(2.0) + ShiftPoly::shift(Rational::integer(2))
    }

    #[test]
    fn identity_spectrum_is_all_ones() {
        let grid = Grid::new(Rational::one(), 8).unwrap();
        let op = bind(&ShiftPoly::identity(), &grid).unwrap();
        for z in op.eigenvalues() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
        assert_eq!(op.first_column()[0], 1.0);
    }

    #[test]
    fn cube_root_sum_spectrum() {
        let op = bind(&l_poly(), &grid_p3()).unwrap();
        let mags: Vec<f64> = op.eigenvalues().iter().map(|z| z.norm()).collect();
        assert!((mags[0] - 3.0).abs() < 1e-13);
        assert!(mags[1] < 1e-13);
        assert!(mags[2] < 1e-13);
        assert!(op.min_abs() < 1e-13);
    }

    #[test]
    fn shifted_identity_spectrum_stays_away_from_zero() {
        // eigenvalues 2 + w^{2b} at the cube roots of unity
        let op = bind(&two_i_plus_e2(), &grid_p3()).unwrap();
        for (b, z) in op.eigenvalues().iter().enumerate() {
            let angle = std::f64::consts::TAU * (2.0 * b as f64) / 3.0;
            let expected = Complex64::new(2.0, 0.0) + Complex64::from_polar(1.0, angle);
            assert!((z - expected).norm() < 1e-13);
            assert!(z.norm() >= 1.0 - 1e-13);
        }
    }

    #[test]
    fn first_column_is_the_delta_image() {
        let op = ShiftPoly::from_terms([
            (2.0, Rational::zero()),
            (-1.0, Rational::one()),
            (0.5, Rational::integer(2)),
        ]);
        let grid = Grid::new(Rational::integer(3), 6).unwrap();
        let bound = bind(&op, &grid).unwrap();
        let mut delta = vec![0.0; 6];
        delta[0] = 1.0;
        let image = op.apply(&Signal::new(grid, delta).unwrap()).unwrap();
        assert_eq!(bound.first_column(), image.values());
    }

    #[test]
    fn spectral_apply_matches_time_domain() {
        let op = two_i_plus_e2();
        let bound = bind(&op, &grid_p3()).unwrap();
        let f = cos_third();
        let spectral = bound.apply(&f).unwrap();
        let direct = op.apply(&f).unwrap();
        assert!(max_abs_diff(&spectral, &direct).unwrap() < 1e-12);
    }

    #[test]
    fn solve_constant_system() {
        let bound = bind(&two_i_plus_e2(), &grid_p3()).unwrap();
        let three = Signal::generate(grid_p3(), Generator::Constant(3.0)).unwrap();
        let y = bound.solve_default(&three).unwrap();
        for v in y.values() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_solve_reports_bins() {
        let bound = bind(&l_poly(), &grid_p3()).unwrap();
        let g = cos_third();
        match bound.solve_default(&g) {
            Err(Error::SingularOperator { bins, .. }) => assert_eq!(bins, vec![1, 2]),
            other => panic!("expected singular operator, got {other:?}"),
        }
    }

    #[test]
    fn solve_round_trip() {
        let bound = bind(&two_i_plus_e2(), &grid_p3()).unwrap();
        let g = cos_third();
        let y = bound.solve_default(&g).unwrap();
        let back = bound.apply(&y).unwrap();
        assert!(max_abs_diff(&back, &g).unwrap() <= 1e-10 * g.sup_norm().max(1.0));
    }

    #[test]
    fn rational_operator_identity() {
        let f = cos_third();
        let out = apply_rational(&ShiftPoly::identity(), &ShiftPoly::identity(), &f).unwrap();
        assert!(max_abs_diff(&out, &f).unwrap() < 1e-13);
    }

    #[test]
    fn rational_projector_fixes_kernel_member() {
        // (I - E) / (2I + E^2) fixes signals annihilated by E^2 + E + I
        let f = cos_third();
        let num = ShiftPoly::identity() - ShiftPoly::shift(Rational::one());
        let out = apply_rational(&num, &two_i_plus_e2(), &f).unwrap();
        assert!(max_abs_diff(&out, &f).unwrap() < 1e-12);
    }

    #[test]
    fn rational_projector_fixes_constants() {
        // (I + E + E^2) / (2I + E^2) is the identity on 1-periodic signals
        let c = Signal::generate(grid_p3(), Generator::Constant(1.25)).unwrap();
        let out = apply_rational(&l_poly(), &two_i_plus_e2(), &c).unwrap();
        assert!(max_abs_diff(&out, &c).unwrap() < 1e-12);
    }

    #[test]
    fn kernel_tests() {
        let f = cos_third();
        assert!(in_kernel(&l_poly(), &f, 1e-12).unwrap());

        let one = Signal::generate(grid_p3(), Generator::Constant(1.0)).unwrap();
        assert!(!in_kernel(&l_poly(), &one, 1e-9).unwrap());
        assert_eq!(l_poly().apply(&one).unwrap().values()[0], 3.0);

        // E^2 - E + I annihilates cos(pi x / 3) on the period-6 grid
        let g6 = Grid::new(Rational::integer(6), 6).unwrap();
        let f6 = Signal::generate(
            g6,
            Generator::Cos {
                freq: Rational::new(1, 6),
            },
        )
        .unwrap();
        let t_poly = ShiftPoly::from_terms([
            (1.0, Rational::integer(2)),
            (-1.0, Rational::one()),
            (1.0, Rational::zero()),
        ]);
        assert!(in_kernel(&t_poly, &f6, 1e-12).unwrap());
    }

    #[test]
    fn grid_mismatch_is_refused() {
        let bound = bind(&ShiftPoly::identity(), &grid_p3()).unwrap();
        let other = Signal::zero(Grid::new(Rational::integer(3), 6).unwrap());
        assert!(matches!(bound.apply(&other), Err(Error::GridMismatch)));
        assert!(matches!(
            bound.solve_default(&other),
            Err(Error::GridMismatch)
        ));
    }

    /// Dense Gaussian elimination, used only as an independent oracle for
    /// the spectral solver.
    fn dense_solve(matrix: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut a: Vec<Vec<f64>> = matrix
            .iter()
            .zip(rhs)
            .map(|(row, &b)| {
                let mut r = row.clone();
                r.push(b);
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            a.swap(col, pivot);
            let lead = a[col][col];
            assert!(lead.abs() > 1e-12, "oracle matrix is singular");
            for r in 0..n {
                if r != col {
                    let factor = a[r][col] / lead;
                    for c in col..=n {
                        a[r][c] -= factor * a[col][c];
                    }
                }
            }
        }
        (0..n).map(|r| a[r][n] / a[r][r]).collect()
    }

    #[test]
    fn solve_matches_a_dense_gaussian_oracle() {
        for (grid, values) in [
            (grid_p3(), vec![0.8, -0.4, 1.9]),
            (
                Grid::new(Rational::integer(6), 6).unwrap(),
                vec![0.3, -1.2, 0.7, 2.1, -0.5, 0.9],
            ),
        ] {
            let n = grid.n_samples();
            let op = ShiftPoly::identity().scale(2.0) + ShiftPoly::shift(Rational::integer(2));
            let bound = bind(&op, &grid).unwrap();

            // full matrix from the operator action on delta columns
            let mut matrix = vec![vec![0.0; n]; n];
            for (j, row) in (0..n)
                .map(|col| {
                    let mut delta = vec![0.0; n];
                    delta[col] = 1.0;
                    op.apply(&Signal::new(grid, delta).unwrap()).unwrap()
                })
                .enumerate()
            {
                for r in 0..n {
                    matrix[r][j] = row.values()[r];
                }
            }

            let g = Signal::new(grid, values).unwrap();
            let expected = dense_solve(&matrix, g.values());
            let y = bound.solve_default(&g).unwrap();
            for (a, b) in y.values().iter().zip(&expected) {
                assert!((a - b).abs() < 1e-10, "{a} vs {b}");
            }
        }
    }
}
