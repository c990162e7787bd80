//! Uniform sampling grids over one fundamental period.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One period `[0, period)` sampled at `n_samples` equally spaced points.
///
/// The step `period / n_samples` is an exact rational, so "does this shift
/// land on a grid point" is a yes/no question, never a tolerance question.
/// Two grids are compatible iff they are equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Grid {
    period: Rational,
    n_samples: usize,
}

impl Grid {
    pub fn new(period: Rational, n_samples: usize) -> Result<Self> {
        if !period.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "grid period must be positive, got {period}"
            )));
        }
        if n_samples == 0 {
            return Err(Error::InvalidParameter(
                "grid needs at least one sample".into(),
            ));
        }
        Ok(Grid { period, n_samples })
    }

    pub fn period(&self) -> Rational {
        self.period
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn step(&self) -> Rational {
        self.period / Rational::integer(self.n_samples as i64)
    }

    /// Sample position `j * step` as an exact rational.
    pub fn point(&self, j: usize) -> Rational {
        self.step() * Rational::integer(j as i64)
    }

    /// Index offset realizing the shift `E^h`, i.e. `(h mod period) / step`.
    /// Errors unless the reduced shift is an exact multiple of the step.
    pub fn offset_for_shift(&self, h: Rational) -> Result<usize> {
        let reduced = h.rem_euclid(self.period);
        let ratio = reduced / self.step();
        match ratio.to_integer() {
            Some(k) => Ok(k as usize),
            None => Err(Error::IncommensurateShift {
                shift: h,
                step: self.step(),
            }),
        }
    }

    /// Grid period as a positive integer, when it is one.
    pub fn integer_period(&self) -> Result<u64> {
        match self.period.to_integer() {
            Some(p) if p > 0 => Ok(p as u64),
            _ => Err(Error::IntegerGridRequired(self.period)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(num: i64, den: i64, n: usize) -> Grid {
        Grid::new(Rational::new(num, den), n).unwrap()
    }

    #[test]
    fn step_is_exact() {
        assert_eq!(grid(1, 1, 4).step(), Rational::new(1, 4));
        assert_eq!(grid(3, 2, 9).step(), Rational::new(1, 6));
    }

    #[test]
    fn offsets_wrap_modulo_period() {
        let g = grid(1, 1, 4);
        assert_eq!(g.offset_for_shift(Rational::new(1, 2)).unwrap(), 2);
        assert_eq!(g.offset_for_shift(Rational::integer(1)).unwrap(), 0);
        assert_eq!(g.offset_for_shift(Rational::new(-1, 4)).unwrap(), 3);
        assert_eq!(g.offset_for_shift(Rational::new(5, 4)).unwrap(), 1);
    }

    #[test]
    fn incommensurate_shift_is_rejected() {
        let g = grid(1, 1, 4);
        assert!(matches!(
            g.offset_for_shift(Rational::new(1, 3)),
            Err(Error::IncommensurateShift { .. })
        ));
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid::new(Rational::zero(), 4).is_err());
        assert!(Grid::new(Rational::new(-1, 2), 4).is_err());
        assert!(Grid::new(Rational::one(), 0).is_err());
    }

    #[test]
    fn integer_period_detection() {
        assert_eq!(grid(12, 1, 120).integer_period().unwrap(), 12);
        assert!(grid(1, 2, 4).integer_period().is_err());
    }
}
