//! Sampled periodic signals and the elementary operations on them.
//!
//! A [`Signal`] is one fundamental period of a function on a [`Grid`];
//! indexing wraps modulo the sample count, which is what makes the shift
//! operator an exact cyclic rotation.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::rational::Rational;

/// Immutable sampled signal: `values[j]` is the function value at `j * step`.
#[derive(Clone, PartialEq, Debug)]
pub struct Signal {
    grid: Grid,
    values: Vec<f64>,
}

/// Named sample generators covering the waveforms used throughout the crate.
#[derive(Clone, Debug)]
pub enum Generator {
    /// `x - floor(x)`, evaluated exactly in rational arithmetic.
    Sawtooth,
    /// `cos(2 pi freq x)` for a rational frequency.
    Cos {
        freq: Rational,
    },
    /// `sin(2 pi freq x)` for a rational frequency.
    Sin {
        freq: Rational,
    },
    Constant(f64),
    /// Explicit sample list; its length must match the grid.
    Custom(Vec<f64>),
}

/// Pointwise maps with a known parity, for composition arguments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointwiseMap {
    Identity,
    Abs,
    Square,
    Cube,
    Exp,
    Negate,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

impl PointwiseMap {
    pub fn parity(&self) -> Parity {
        match self {
            PointwiseMap::Abs | PointwiseMap::Square => Parity::Even,
            PointwiseMap::Identity | PointwiseMap::Cube | PointwiseMap::Negate => Parity::Odd,
            PointwiseMap::Exp => Parity::Neither,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            PointwiseMap::Identity => x,
            PointwiseMap::Abs => x.abs(),
            PointwiseMap::Square => x * x,
            PointwiseMap::Cube => x * x * x,
            PointwiseMap::Exp => x.exp(),
            PointwiseMap::Negate => -x,
        }
    }
}

impl Signal {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n_samples() {
            return Err(Error::LengthMismatch {
                expected: grid.n_samples(),
                got: values.len(),
            });
        }
        Ok(Signal { grid, values })
    }

    /// Evaluate a generator on every grid point.
    ///
    /// Sawtooth and constant values are exact; trig generators reduce the
    /// rational phase modulo one before a single float conversion, so equal
    /// phases give bitwise-equal samples.
    pub fn generate(grid: Grid, generator: Generator) -> Result<Self> {
        let n = grid.n_samples();
        let values = match generator {
            Generator::Sawtooth => (0..n)
                .map(|j| {
                    let x = grid.point(j);
                    (x - Rational::integer(x.floor_int())).to_f64()
                })
                .collect(),
            Generator::Cos { freq } => trig_samples(&grid, freq, f64::cos),
            Generator::Sin { freq } => trig_samples(&grid, freq, f64::sin),
            Generator::Constant(c) => {
                if !c.is_finite() {
                    return Err(Error::InvalidParameter(format!("non-finite constant {c}")));
                }
                vec![c; n]
            }
            Generator::Custom(values) => {
                if values.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        got: values.len(),
                    });
                }
                if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
                    return Err(Error::InvalidParameter(format!("non-finite sample {bad}")));
                }
                values
            }
        };
        Ok(Signal { grid, values })
    }

    pub fn zero(grid: Grid) -> Self {
        Signal {
            values: vec![0.0; grid.n_samples()],
            grid,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at index `j`, wrapping modulo the sample count.
    pub fn at(&self, j: usize) -> f64 {
        self.values[j % self.values.len()]
    }

    /// `E^h`: the signal `x -> f(x + h)`, as an exact index rotation.
    pub fn shift(&self, h: Rational) -> Result<Signal> {
        let k = self.grid.offset_for_shift(h)?;
        let n = self.len();
        let values = (0..n).map(|j| self.values[(j + k) % n]).collect();
        Ok(Signal {
            grid: self.grid,
            values,
        })
    }

    /// Does `q` act as a period of this signal, up to `tol`?
    pub fn is_periodic_with(&self, q: Rational, tol: f64) -> Result<bool> {
        self.shift_deviation(q, 1.0).map(|dev| dev <= tol)
    }

    /// Does `q` act as an antiperiod (`f(x+q) = -f(x)`), up to `tol`?
    pub fn is_antiperiodic_with(&self, q: Rational, tol: f64) -> Result<bool> {
        self.shift_deviation(q, -1.0).map(|dev| dev <= tol)
    }

    /// `sup_j |f[j+k] - sign * f[j]|` for the offset of `q`; the measured
    /// violation behind both membership predicates.
    pub fn shift_deviation(&self, q: Rational, sign: f64) -> Result<f64> {
        if !q.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "period candidate must be positive, got {q}"
            )));
        }
        let k = self.grid.offset_for_shift(q)?;
        let n = self.len();
        let mut dev = 0.0f64;
        for j in 0..n {
            dev = dev.max((self.values[(j + k) % n] - sign * self.values[j]).abs());
        }
        Ok(dev)
    }

    /// Rescale the argument: sample `j` keeps its value but now represents
    /// `f(omega x)` on a grid of period `period / omega`.
    pub fn dilate(&self, omega: Rational) -> Result<Signal> {
        if !omega.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "dilation factor must be positive, got {omega}"
            )));
        }
        let grid = Grid::new(self.grid.period() / omega, self.len())?;
        Ok(Signal {
            grid,
            values: self.values.clone(),
        })
    }

    pub fn map(&self, m: PointwiseMap) -> Signal {
        Signal {
            grid: self.grid,
            values: self.values.iter().map(|&x| m.eval(x)).collect(),
        }
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.len() as f64
    }

    /// Restriction to the prefix `[0, q)` for a divisor `q` of the period.
    /// The result represents the same function whenever the signal is
    /// `q`-periodic.
    pub fn restrict(&self, q: Rational) -> Result<Signal> {
        let ratio = self.grid.period() / q;
        if !q.is_positive() || !ratio.is_integer() || ratio.num() < 1 {
            return Err(Error::InvalidParameter(format!(
                "{q} does not evenly divide period {}",
                self.grid.period()
            )));
        }
        let n = self.len() / ratio.num() as usize;
        if n * ratio.num() as usize != self.len() {
            return Err(Error::GridNotDivisible {
                n: self.len(),
                levels: 0,
            });
        }
        Ok(Signal {
            grid: Grid::new(q, n)?,
            values: self.values[..n].to_vec(),
        })
    }
}

/// `a*f + b*g` pointwise; the grids must match.
pub fn combine(a: f64, f: &Signal, b: f64, g: &Signal) -> Result<Signal> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch);
    }
    let values = f
        .values
        .iter()
        .zip(&g.values)
        .map(|(x, y)| a * x + b * y)
        .collect();
    Ok(Signal {
        grid: f.grid,
        values,
    })
}

/// Largest pointwise distance between two signals on the same grid.
pub fn max_abs_diff(f: &Signal, g: &Signal) -> Result<f64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch);
    }
    Ok(f.values
        .iter()
        .zip(&g.values)
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs())))
}

fn trig_samples(grid: &Grid, freq: Rational, func: fn(f64) -> f64) -> Vec<f64> {
    (0..grid.n_samples())
        .map(|j| {
            let phase = (freq * grid.point(j)).rem_euclid(Rational::one());
            func(std::f64::consts::TAU * phase.to_f64())
        })
        .collect()
}
