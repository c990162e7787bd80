//! Folds between integer-period spaces, the rational-operator projectors
//! on `P_3`, `AP_3`, and `AP_6`, and the general cyclotomic decomposition.
//!
//! On an integer-period grid the shift-by-one eigenvalue at DFT bin `b` is
//! a `p`-th root of unity. Grouping bins by the multiplicative order of
//! that root splits the space into kernels of cyclotomic operators, one
//! per divisor of `p`; for `p = 12` these are exactly the six components
//! `P_1, AP_1, AP_2` and the kernels of `E^2+E+I`, `E^2-E+I`, `E^4-E^2+I`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::gcd;

use crate::circulant::{apply_rational, dft, inverse_dft, real_signal};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::shift::ShiftPoly;
use crate::signal::Signal;

/// Label of a subspace inside an integer-period space: `P(d)` periodic
/// with `d`, `AP(d)` antiperiodic with `d`, `C(k)` the kernel of the k-th
/// cyclotomic operator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SubspaceLabel {
    P(u64),
    AP(u64),
    C(u64),
}

impl fmt::Display for SubspaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceLabel::P(d) => write!(f, "P_{d}"),
            SubspaceLabel::AP(d) => write!(f, "AP_{d}"),
            SubspaceLabel::C(k) => write!(f, "C_{k}"),
        }
    }
}

impl SubspaceLabel {
    /// Canonical name for the kernel of the k-th cyclotomic operator:
    /// order 1 is `P_1`, order `2^j` is `AP_{2^(j-1)}`, everything else
    /// keeps the `C_k` name.
    pub fn for_order(k: u64) -> SubspaceLabel {
        if k == 1 {
            SubspaceLabel::P(1)
        } else if k.is_power_of_two() {
            SubspaceLabel::AP(k / 2)
        } else {
            SubspaceLabel::C(k)
        }
    }

    /// Measured violation of the label's membership predicate.
    pub fn membership_deviation(&self, f: &Signal) -> Result<f64> {
        match self {
            SubspaceLabel::P(d) => f.shift_deviation(Rational::integer(*d as i64), 1.0),
            SubspaceLabel::AP(d) => f.shift_deviation(Rational::integer(*d as i64), -1.0),
            SubspaceLabel::C(k) => {
                let image = cyclotomic_poly(*k).to_shift_poly().apply(f)?;
                Ok(image.sup_norm() / (1.0 + f.sup_norm()))
            }
        }
    }

    pub fn is_member(&self, f: &Signal, tol: f64) -> Result<bool> {
        Ok(self.membership_deviation(f)? <= tol)
    }
}

/// Integer coefficients of the k-th cyclotomic polynomial, constant term
/// first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicPoly {
    pub index: u64,
    pub coefficients: Vec<i64>,
}

impl CyclotomicPoly {
    /// The polynomial as an operator in the unit shift: `sum c_i E^i`.
    pub fn to_shift_poly(&self) -> ShiftPoly {
        ShiftPoly::from_terms(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, &c)| (c as f64, Rational::integer(i as i64))),
        )
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Compute the k-th cyclotomic polynomial by dividing `x^k - 1` by every
/// lower cyclotomic polynomial of a divisor index.
pub fn cyclotomic_poly(k: u64) -> CyclotomicPoly {
    assert!(k > 0, "cyclotomic index must be positive");
    if k == 1 {
        return CyclotomicPoly {
            index: 1,
            coefficients: vec![-1, 1],
        };
    }
    let mut coefficients = vec![0i64; k as usize + 1];
    coefficients[0] = -1;
    coefficients[k as usize] = 1;
    for d in crate::lattice::divisors(k) {
        if d < k {
            coefficients = exact_poly_div(&coefficients, &cyclotomic_poly(d).coefficients);
        }
    }
    CyclotomicPoly {
        index: k,
        coefficients,
    }
}

/// Exact long division of integer polynomials with a monic divisor.
fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let deg_out = num.len() - den.len();
    let mut out = vec![0i64; deg_out + 1];
    for i in (0..=deg_out).rev() {
        let lead = rem[i + den.len() - 1];
        out[i] = lead;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= lead * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    out
}

fn require_divisor(d: u64, p: u64) -> Result<()> {
    if d == 0 || p == 0 || !p.is_multiple_of(d) {
        return Err(Error::NotADivisor { d, p });
    }
    Ok(())
}

/// `(I + E^d + E^{2d} + ... + E^{(m-1)d}) f` with `m = p/d`, mapping a
/// `p`-periodic signal onto a `d`-periodic one. `p` is the period claimed
/// for the input; the result stays on the input grid. No `1/m` scaling is
/// applied; see [`normalized_fold`] for the averaging view.
pub fn fold(f: &Signal, p: u64, d: u64) -> Result<Signal> {
    require_divisor(d, p)?;
    let op = ShiftPoly::geometric(Rational::integer(d as i64), p / d);
    op.apply(f)
}

/// `fold / m`: the averaging form that sends a `d`-periodic signal,
/// viewed in the period-`p` space as `f/m`, back to itself.
pub fn normalized_fold(f: &Signal, p: u64, d: u64) -> Result<Signal> {
    require_divisor(d, p)?;
    let m = p / d;
    let folded = fold(f, p, d)?;
    let scaled: Vec<f64> = folded.values().iter().map(|v| v / m as f64).collect();
    Signal::new(*folded.grid(), scaled)
}

/// `(I - E^d + E^{2d} - ... + E^{(m-1)d}) f` with `m = p/d` odd, mapping a
/// `p`-antiperiodic signal onto a `d`-antiperiodic one. An even quotient
/// is refused: the alternating sum only telescopes across `E^p = -I` when
/// `m` is odd.
pub fn antifold(f: &Signal, p: u64, d: u64) -> Result<Signal> {
    require_divisor(d, p)?;
    let m = p / d;
    if m.is_multiple_of(2) {
        return Err(Error::EvenQuotient { m });
    }
    let op = ShiftPoly::alternating(Rational::integer(d as i64), m);
    op.apply(f)
}

fn two_i_plus(shift: i64) -> ShiftPoly {
    ShiftPoly::identity().scale(2.0) + ShiftPoly::shift(Rational::integer(shift))
}

fn require_period_multiple(f: &Signal, q: u64) -> Result<u64> {
    let p = f.grid().integer_period()?;
    if p % q != 0 {
        return Err(Error::NotADivisor { d: q, p });
    }
    Ok(p)
}

/// Split a 3-periodic signal into its 1-periodic part and its component
/// in the kernel of `E^2 + E + I`, via
/// `g = (I+E+E^2)/(2I+E^2) f` and `h = (I-E)/(2I+E^2) f`.
pub fn project_p3(f: &Signal) -> Result<(Signal, Signal)> {
    require_period_multiple(f, 3)?;
    let den = two_i_plus(2);
    let g = apply_rational(&ShiftPoly::geometric(Rational::one(), 3), &den, f)?;
    let h = apply_rational(
        &(ShiftPoly::identity() - ShiftPoly::shift(Rational::one())),
        &den,
        f,
    )?;
    Ok((g, h))
}

/// Split a 3-antiperiodic signal into its 1-antiperiodic part and its
/// component in the kernel of `E^2 - E + I`, via
/// `g = (E^2-E+I)/(2I+E^2) f` and `h = (I+E)/(2I+E^2) f`.
pub fn project_ap3(f: &Signal) -> Result<(Signal, Signal)> {
    require_period_multiple(f, 6)?;
    let den = two_i_plus(2);
    let g = apply_rational(&ShiftPoly::alternating(Rational::one(), 3), &den, f)?;
    let h = apply_rational(
        &(ShiftPoly::identity() + ShiftPoly::shift(Rational::one())),
        &den,
        f,
    )?;
    Ok((g, h))
}

/// Split a 6-antiperiodic signal into its 2-antiperiodic part and its
/// component in the kernel of `E^4 - E^2 + I`, via
/// `g = (E^4-E^2+I)/(2I+E^4) f` and `h = (I+E^2)/(2I+E^4) f`.
pub fn project_ap6(f: &Signal) -> Result<(Signal, Signal)> {
    require_period_multiple(f, 12)?;
    let den = two_i_plus(4);
    let g = apply_rational(&ShiftPoly::alternating(Rational::integer(2), 3), &den, f)?;
    let h = apply_rational(
        &(ShiftPoly::identity() + ShiftPoly::shift(Rational::integer(2))),
        &den,
        f,
    )?;
    Ok((g, h))
}

/// Multiplicative order of the shift-by-one eigenvalue at DFT bin `b` on
/// a grid of integer period `p`: the order of `e^{2 pi i b / p}`.
/// `gcd(0, p) = p`, so bin 0 has order 1.
fn bin_order(b: usize, p: u64) -> u64 {
    p / gcd(b as u64 % p, p)
}

/// The component of `f` supported on DFT bins whose shift eigenvalue is a
/// primitive k-th root of unity; exactly the part of `f` in the kernel of
/// the k-th cyclotomic operator.
pub fn cyclotomic_project(f: &Signal, k: u64) -> Result<Signal> {
    let p = f.grid().integer_period()?;
    require_divisor(k, p)?;
    // the unit shift must land on the grid for the bin classification
    f.grid().offset_for_shift(Rational::one())?;
    let mut bins = dft(f.values());
    for (b, bin) in bins.iter_mut().enumerate() {
        if bin_order(b, p) != k {
            *bin = num_complex::Complex64::new(0.0, 0.0);
        }
    }
    real_signal(*f.grid(), &inverse_dft(&bins))
}

/// A signal split into labeled subspace components that sum back to it.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub source: Signal,
    pub parts: Vec<(SubspaceLabel, Signal)>,
}

impl Decomposition {
    pub fn part(&self, label: SubspaceLabel) -> Option<&Signal> {
        self.parts.iter().find(|(l, _)| *l == label).map(|(_, s)| s)
    }

    pub fn labels(&self) -> Vec<SubspaceLabel> {
        self.parts.iter().map(|(l, _)| *l).collect()
    }

    /// Pointwise sum of all parts.
    pub fn sum(&self) -> Signal {
        let mut acc = Signal::zero(*self.source.grid());
        for (_, part) in &self.parts {
            acc = crate::signal::combine(1.0, &acc, 1.0, part).expect("same grid");
        }
        acc
    }

    /// Largest deviation between the part sum and the source.
    pub fn reconstruction_residual(&self) -> f64 {
        crate::signal::max_abs_diff(&self.sum(), &self.source).expect("same grid")
    }
}

/// Decompose a signal of integer period `p` into one component per
/// divisor `k` of `p`, each in the kernel of the k-th cyclotomic
/// operator. Labels use the periodic/antiperiodic aliases where they
/// exist: `C(1) = P(1)`, `C(2) = AP(1)`, `C(4) = AP(2)`, and so on.
pub fn cyclotomic_decompose(f: &Signal, p: u64) -> Result<Decomposition> {
    let grid_p = f.grid().integer_period()?;
    if grid_p != p {
        return Err(Error::InvalidParameter(format!(
            "claimed period {p} does not match the grid period {grid_p}"
        )));
    }
    let mut parts = Vec::new();
    for k in crate::lattice::divisors(p) {
        parts.push((SubspaceLabel::for_order(k), cyclotomic_project(f, k)?));
    }
    Ok(Decomposition {
        source: f.clone(),
        parts,
    })
}

/// The canonical subspace forms of a 6-periodic signal: geometric sums
/// `f_d = (I + E^d + ...)f` landing in `P_d` and alternating sums landing
/// in the antiperiodic spaces.
///
/// The step-2 alternating form `(I - E^2 + E^4)f` is returned under
/// `AP(2)` for completeness, but a 6-periodic signal has no nonzero
/// 2-antiperiodic component, so that form satisfies its predicate only
/// when it vanishes.
pub fn p6_forms(f: &Signal) -> Result<BTreeMap<SubspaceLabel, Signal>> {
    require_period_multiple(f, 6)?;
    let mut out = BTreeMap::new();
    for d in [1u64, 2, 3] {
        let op = ShiftPoly::geometric(Rational::integer(d as i64), 6 / d);
        out.insert(SubspaceLabel::P(d), op.apply(f)?);
        let alt = ShiftPoly::alternating(Rational::integer(d as i64), 6 / d);
        out.insert(SubspaceLabel::AP(d), alt.apply(f)?);
    }
    Ok(out)
}

/// The canonical subspace forms of a 12-periodic signal: `f_d` for each
/// divisor `d < 12` and the alternating forms for the antiperiodic spaces
/// `AP_1, AP_2, AP_3, AP_6`.
pub fn p12_forms(f: &Signal) -> Result<BTreeMap<SubspaceLabel, Signal>> {
    require_period_multiple(f, 12)?;
    let mut out = BTreeMap::new();
    for d in [1u64, 2, 3, 4, 6] {
        let op = ShiftPoly::geometric(Rational::integer(d as i64), 12 / d);
        out.insert(SubspaceLabel::P(d), op.apply(f)?);
    }
    for d in [1u64, 2, 3, 6] {
        let alt = ShiftPoly::alternating(Rational::integer(d as i64), 12 / d);
        out.insert(SubspaceLabel::AP(d), alt.apply(f)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::signal::{combine, max_abs_diff, Generator};

    fn int_grid(p: i64, n: usize) -> Grid {
        Grid::new(Rational::integer(p), n).unwrap()
    }

    fn cos_freq(grid: Grid, num: i64, den: i64) -> Signal {
        Signal::generate(
            grid,
            Generator::Cos {
                freq: Rational::new(num, den),
            },
        )
        .unwrap()
    }

    #[test]
    fn cyclotomic_coefficient_table() {
        assert_eq!(cyclotomic_poly(1).coefficients, vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2).coefficients, vec![1, 1]);
        assert_eq!(cyclotomic_poly(3).coefficients, vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4).coefficients, vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6).coefficients, vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12).coefficients, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(12).degree(), 4);
    }

    #[test]
    fn cyclotomic_product_is_shift_power_minus_identity() {
        for p in [1u64, 2, 3, 4, 6, 8, 12] {
            let mut product = ShiftPoly::identity();
            for k in crate::lattice::divisors(p) {
                product = &product * &cyclotomic_poly(k).to_shift_poly();
            }
            let expected = ShiftPoly::shift(Rational::integer(p as i64)) - ShiftPoly::identity();
            assert_eq!(product, expected, "divisor product for p = {p}");
        }
    }

    #[test]
    fn fold_examples() {
        let g = int_grid(6, 12);
        let one = Signal::generate(g, Generator::Constant(1.0)).unwrap();
        let folded = fold(&one, 6, 3).unwrap();
        let two = Signal::generate(g, Generator::Constant(2.0)).unwrap();
        assert!(max_abs_diff(&folded, &two).unwrap() < 1e-15);

        // cos(2 pi x / 6) cancels against its half-period shift
        let osc = cos_freq(g, 1, 6);
        assert!(fold(&osc, 6, 3).unwrap().sup_norm() < 1e-14);

        assert!(matches!(
            fold(&one, 6, 4),
            Err(Error::NotADivisor { d: 4, p: 6 })
        ));
    }

    #[test]
    fn fold_round_trip_recovers_subspace_members() {
        // f_d in P_d, fed back as f_d / m, folds to itself
        let g = int_grid(6, 12);
        let f_d = cos_freq(g, 1, 3); // 3-periodic on the period-6 grid
        let seeded = combine(0.5, &f_d, 0.0, &f_d).unwrap();
        let back = fold(&seeded, 6, 3).unwrap();
        assert!(max_abs_diff(&back, &f_d).unwrap() < 1e-12);

        let normalized = normalized_fold(&f_d, 6, 3).unwrap();
        assert!(max_abs_diff(&normalized, &f_d).unwrap() < 1e-12);
    }

    #[test]
    fn antifold_produces_antiperiodic_output() {
        // cos(pi x / 3) is 3-antiperiodic on the period-6 grid
        let g = int_grid(6, 12);
        let f = cos_freq(g, 1, 6);
        assert!(f.is_antiperiodic_with(Rational::integer(3), 1e-12).unwrap());
        let out = antifold(&f, 3, 1).unwrap();
        assert!(out.is_antiperiodic_with(Rational::one(), 1e-12).unwrap());

        // a 3-antiperiodic signal with a genuine 1-antiperiodic component
        // antifolds to three times that component
        let ap1 = cos_freq(g, 1, 2);
        let mixed = combine(1.0, &ap1, 1.0, &f).unwrap();
        assert!(mixed
            .is_antiperiodic_with(Rational::integer(3), 1e-12)
            .unwrap());
        let out = antifold(&mixed, 3, 1).unwrap();
        assert!(out.is_antiperiodic_with(Rational::one(), 1e-12).unwrap());
        let expected = combine(3.0, &ap1, 0.0, &ap1).unwrap();
        assert!(max_abs_diff(&out, &expected).unwrap() < 1e-12);

        assert!(matches!(
            antifold(&f, 6, 3),
            Err(Error::EvenQuotient { m: 2 })
        ));
    }

    #[test]
    fn antifold_round_trip() {
        // seed with a 1-antiperiodic signal over antiperiod 3: m = 3 odd
        let g = int_grid(6, 12);
        let ap1 = cos_freq(g, 1, 2); // cos(pi x) antiperiodic with 1
        let third = combine(1.0 / 3.0, &ap1, 0.0, &ap1).unwrap();
        let back = antifold(&third, 3, 1).unwrap();
        assert!(max_abs_diff(&back, &ap1).unwrap() < 1e-12);
    }

    #[test]
    fn project_p3_examples() {
        let g = int_grid(3, 3);
        let f = cos_freq(g, 1, 3);
        let (p1, s) = project_p3(&f).unwrap();
        assert!(p1.sup_norm() < 1e-12);
        assert!(max_abs_diff(&s, &f).unwrap() < 1e-12);

        let c = Signal::generate(g, Generator::Constant(2.0)).unwrap();
        let (p1, s) = project_p3(&c).unwrap();
        assert!(max_abs_diff(&p1, &c).unwrap() < 1e-12);
        assert!(s.sup_norm() < 1e-12);

        // parts recombine and pass their memberships
        let noisy = Signal::new(g, vec![0.3, -1.2, 2.4]).unwrap();
        let (p1, s) = project_p3(&noisy).unwrap();
        let back = combine(1.0, &p1, 1.0, &s).unwrap();
        assert!(max_abs_diff(&back, &noisy).unwrap() < 1e-10);
        assert!(p1.is_periodic_with(Rational::one(), 1e-9).unwrap());
        assert!(SubspaceLabel::C(3).is_member(&s, 1e-9).unwrap());
    }

    #[test]
    fn project_ap3_examples() {
        let g = int_grid(6, 6);
        let f = cos_freq(g, 1, 6); // in the kernel of E^2 - E + I
        let (ap1, t) = project_ap3(&f).unwrap();
        assert!(ap1.sup_norm() < 1e-12);
        assert!(max_abs_diff(&t, &f).unwrap() < 1e-12);

        let g1 = cos_freq(g, 1, 2); // cos(pi x), already 1-antiperiodic
        let (ap1, t) = project_ap3(&g1).unwrap();
        assert!(max_abs_diff(&ap1, &g1).unwrap() < 1e-12);
        assert!(t.sup_norm() < 1e-12);
    }

    #[test]
    fn project_ap6_on_a_six_antiperiodic_signal() {
        let g = int_grid(12, 24);
        // pattern on [0, 6), negated on [6, 12)
        let pattern = [
            0.7, -0.3, 1.1, 0.2, -0.9, 0.5, 0.1, -0.4, 0.8, -1.3, 0.6, 0.05,
        ];
        let mut values = vec![0.0; 24];
        for j in 0..12 {
            values[j] = pattern[j];
            values[j + 12] = -pattern[j];
        }
        let f = Signal::new(g, values).unwrap();
        assert!(f.is_antiperiodic_with(Rational::integer(6), 1e-12).unwrap());

        let (ap2, u) = project_ap6(&f).unwrap();
        let back = combine(1.0, &ap2, 1.0, &u).unwrap();
        assert!(max_abs_diff(&back, &f).unwrap() < 1e-10);
        assert!(ap2
            .is_antiperiodic_with(Rational::integer(2), 1e-9)
            .unwrap());
        assert!(SubspaceLabel::C(12).is_member(&u, 1e-9).unwrap());
    }

    #[test]
    fn cyclotomic_project_examples() {
        let g = int_grid(12, 120);
        let c = Signal::generate(g, Generator::Constant(3.0)).unwrap();
        assert!(max_abs_diff(&cyclotomic_project(&c, 1).unwrap(), &c).unwrap() < 1e-12);
        for k in [2u64, 3, 4, 6, 12] {
            assert!(cyclotomic_project(&c, k).unwrap().sup_norm() < 1e-12);
        }

        // cos(2 pi x / 3) lives entirely on order-3 bins
        let f = cos_freq(g, 1, 3);
        assert!(max_abs_diff(&cyclotomic_project(&f, 3).unwrap(), &f).unwrap() < 1e-12);
        assert!(cyclotomic_project(&f, 1).unwrap().sup_norm() < 1e-12);

        assert!(matches!(
            cyclotomic_project(&f, 5),
            Err(Error::NotADivisor { d: 5, p: 12 })
        ));
    }

    #[test]
    fn decompose_partitions_by_order() {
        let g = int_grid(12, 60);
        let values: Vec<f64> = (0..60).map(|j| ((j * j + 3) % 17) as f64 - 8.0).collect();
        let f = Signal::new(g, values).unwrap();
        let dec = cyclotomic_decompose(&f, 12).unwrap();
        assert_eq!(
            dec.labels(),
            vec![
                SubspaceLabel::P(1),
                SubspaceLabel::AP(1),
                SubspaceLabel::C(3),
                SubspaceLabel::AP(2),
                SubspaceLabel::C(6),
                SubspaceLabel::C(12),
            ]
        );
        assert!(dec.reconstruction_residual() < 1e-9);
        for (label, part) in &dec.parts {
            assert!(label.is_member(part, 1e-9).unwrap(), "{label} membership");
        }

        assert!(cyclotomic_decompose(&f, 6).is_err());
    }

    #[test]
    fn decompose_trivial_period() {
        let g = int_grid(1, 4);
        let f = Signal::generate(g, Generator::Constant(1.5)).unwrap();
        let dec = cyclotomic_decompose(&f, 1).unwrap();
        assert_eq!(dec.labels(), vec![SubspaceLabel::P(1)]);
        assert!(max_abs_diff(&dec.parts[0].1, &f).unwrap() < 1e-12);
    }

    #[test]
    fn decompose_p3_matches_rational_projectors() {
        let g = int_grid(3, 3);
        let f = Signal::new(g, vec![0.9, -0.1, 0.4]).unwrap();
        let dec = cyclotomic_decompose(&f, 3).unwrap();
        let (p1, s) = project_p3(&f).unwrap();
        assert!(max_abs_diff(dec.part(SubspaceLabel::P(1)).unwrap(), &p1).unwrap() < 1e-9);
        assert!(max_abs_diff(dec.part(SubspaceLabel::C(3)).unwrap(), &s).unwrap() < 1e-9);
    }

    #[test]
    fn p6_forms_structure() {
        let g = int_grid(6, 6);
        let one = Signal::generate(g, Generator::Constant(1.0)).unwrap();
        let forms = p6_forms(&one).unwrap();
        assert_eq!(forms.len(), 6);
        let six = Signal::generate(g, Generator::Constant(6.0)).unwrap();
        assert!(max_abs_diff(&forms[&SubspaceLabel::P(1)], &six).unwrap() < 1e-15);
        assert_eq!(forms[&SubspaceLabel::AP(1)].sup_norm(), 0.0);

        // (I+E+E^2)(I+E^3) agrees with I+E+...+E^5 on signals
        let f = cos_freq(g, 1, 6);
        let inner = ShiftPoly::geometric(Rational::integer(3), 2)
            .apply(&f)
            .unwrap();
        let via_product = ShiftPoly::geometric(Rational::one(), 3)
            .apply(&inner)
            .unwrap();
        let direct = ShiftPoly::geometric(Rational::one(), 6).apply(&f).unwrap();
        assert!(max_abs_diff(&via_product, &direct).unwrap() < 1e-13);
    }

    #[test]
    fn p6_form_memberships_hold_except_the_degenerate_one() {
        let g = int_grid(6, 12);
        let values: Vec<f64> = (0..12).map(|j| ((5 * j + 1) % 7) as f64 - 3.0).collect();
        let f = Signal::new(g, values).unwrap();
        let forms = p6_forms(&f).unwrap();
        for d in [1u64, 2, 3] {
            assert!(forms[&SubspaceLabel::P(d)]
                .is_periodic_with(Rational::integer(d as i64), 1e-12)
                .unwrap());
        }
        for d in [1u64, 3] {
            assert!(forms[&SubspaceLabel::AP(d)]
                .is_antiperiodic_with(Rational::integer(d as i64), 1e-12)
                .unwrap());
        }
        // AP_2 intersects P_6 only in zero, so the step-2 alternating form
        // passes its predicate exactly when it vanishes
        let ap2 = &forms[&SubspaceLabel::AP(2)];
        assert_eq!(
            ap2.is_antiperiodic_with(Rational::integer(2), 1e-9)
                .unwrap(),
            ap2.sup_norm() <= 1e-9
        );
    }

    #[test]
    fn p12_forms_all_pass_their_predicates() {
        let g = int_grid(12, 24);
        let values: Vec<f64> = (0..24).map(|j| ((7 * j + 2) % 11) as f64 - 5.0).collect();
        let f = Signal::new(g, values).unwrap();
        let forms = p12_forms(&f).unwrap();
        assert_eq!(forms.len(), 9);
        for d in [1u64, 2, 3, 4, 6] {
            assert!(forms[&SubspaceLabel::P(d)]
                .is_periodic_with(Rational::integer(d as i64), 1e-12)
                .unwrap());
        }
        for d in [1u64, 2, 3, 6] {
            assert!(forms[&SubspaceLabel::AP(d)]
                .is_antiperiodic_with(Rational::integer(d as i64), 1e-12)
                .unwrap());
        }
    }
}
