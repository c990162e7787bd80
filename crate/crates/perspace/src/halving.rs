//! The binary decomposition of a periodic signal into a half-period
//! periodic part and a half-period antiperiodic part, iterated into
//! generation sequences and the antiperiodic series expansion.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signal::{combine, Signal};

/// Split `h` into `(f, g)` with `f = (h + E^{p/2} h) / 2` periodic with
/// `p/2` and `g = (h - E^{p/2} h) / 2` antiperiodic with `p/2`.
/// The grid must have an even sample count; `f + g = h` pointwise.
pub fn split_half(h: &Signal) -> Result<(Signal, Signal)> {
    let n = h.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddSampleCount(n));
    }
    let half = h.grid().period() / Rational::integer(2);
    let shifted = h.shift(half)?;
    let f = combine(0.5, h, 0.5, &shifted)?;
    let g = combine(0.5, h, -0.5, &shifted)?;
    Ok((f, g))
}

fn check_levels(f: &Signal, n: u32) -> Result<()> {
    let samples = f.len();
    if n >= usize::BITS || !samples.is_multiple_of(1usize << n) {
        return Err(Error::GridNotDivisible {
            n: samples,
            levels: n,
        });
    }
    Ok(())
}

/// The n-th periodic generation: the half-periodic component after `n`
/// successive splits, so it is periodic with `p / 2^n`. `n = 0` returns
/// the signal itself.
pub fn periodic_generation(f: &Signal, n: u32) -> Result<Signal> {
    check_levels(f, n)?;
    let mut current = f.clone();
    let mut q = f.grid().period();
    for _ in 0..n {
        q /= Rational::integer(2);
        let shifted = current.shift(q)?;
        current = combine(0.5, &current, 0.5, &shifted)?;
    }
    Ok(current)
}

/// The n-th antiperiodic generation (`n >= 1`): what the n-th split peels
/// off, i.e. the difference of consecutive periodic generations. It is
/// antiperiodic with `p / 2^n`.
pub fn antiperiodic_generation(f: &Signal, n: u32) -> Result<Signal> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "antiperiodic generations start at n = 1".into(),
        ));
    }
    check_levels(f, n)?;
    let previous = periodic_generation(f, n - 1)?;
    let current = periodic_generation(f, n)?;
    combine(1.0, &previous, -1.0, &current)
}

/// All generations of `f` down to depth `n`, with the reconstruction
/// `f = f_n + sum of antiperiodic generations` built in.
#[derive(Clone, Debug)]
pub struct GenerationTable {
    pub source: Signal,
    pub depth: u32,
    /// `periodic[k]` is the (k+1)-th periodic generation, periodic with `p / 2^(k+1)`.
    pub periodic: Vec<Signal>,
    /// `antiperiodic[k]` is the (k+1)-th antiperiodic generation.
    pub antiperiodic: Vec<Signal>,
}

impl GenerationTable {
    /// `f_n + sum_k antiperiodic_k`, which reconstructs the source.
    pub fn recombined(&self) -> Result<Signal> {
        let mut acc = match self.periodic.last() {
            Some(last) => last.clone(),
            None => self.source.clone(),
        };
        for term in &self.antiperiodic {
            acc = combine(1.0, &acc, 1.0, term)?;
        }
        Ok(acc)
    }
}

pub fn generation_table(f: &Signal, n: u32) -> Result<GenerationTable> {
    check_levels(f, n)?;
    let mut periodic = Vec::with_capacity(n as usize);
    let mut antiperiodic = Vec::with_capacity(n as usize);
    let mut current = f.clone();
    let mut q = f.grid().period();
    for _ in 0..n {
        q /= Rational::integer(2);
        let shifted = current.shift(q)?;
        let next = combine(0.5, &current, 0.5, &shifted)?;
        antiperiodic.push(combine(1.0, &current, -1.0, &next)?);
        periodic.push(next.clone());
        current = next;
    }
    Ok(GenerationTable {
        source: f.clone(),
        depth: n,
        periodic,
        antiperiodic,
    })
}

/// Expansion of `f` as a sum of antiperiodic generations, stopping at the
/// first level whose periodic remainder has sup norm at most `tol`.
///
/// A non-convergent run is reported, not an error: the residual norms of a
/// signal with nonzero mean stall at that mean, because every antiperiodic
/// term averages to zero.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    /// Antiperiodic generations, level 1 upward.
    pub partial_terms: Vec<Signal>,
    /// `residual_norms[k]` is the sup norm of the k-th periodic generation;
    /// index 0 is the source itself.
    pub residual_norms: Vec<f64>,
    pub converged: bool,
    pub levels_used: u32,
}

pub fn antiperiodic_series(f: &Signal, tol: f64, max_levels: u32) -> Result<SeriesReport> {
    check_levels(f, max_levels)?;
    let mut partial_terms = Vec::new();
    let mut residual_norms = vec![f.sup_norm()];
    let mut current = f.clone();
    let mut q = f.grid().period();
    let mut levels_used = 0u32;
    while *residual_norms.last().expect("nonempty") > tol && levels_used < max_levels {
        q /= Rational::integer(2);
        let shifted = current.shift(q)?;
        let next = combine(0.5, &current, 0.5, &shifted)?;
        partial_terms.push(combine(1.0, &current, -1.0, &next)?);
        residual_norms.push(next.sup_norm());
        current = next;
        levels_used += 1;
    }
    let converged = *residual_norms.last().expect("nonempty") <= tol;
    Ok(SeriesReport {
        partial_terms,
        residual_norms,
        converged,
        levels_used,
    })
}
