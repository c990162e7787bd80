//! Formal shift-operator polynomials `sum c_i E^{h_i}`.
//!
//! A [`ShiftPoly`] is period-agnostic: shifts are reduced modulo a period
//! only when the operator is applied to a signal. This keeps the same
//! formal object usable on every space, and makes operator multiplication
//! a plain convolution of shifts (`E^a * E^b = E^{a+b}`).

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::rational::Rational;
use crate::signal::Signal;

/// Finite sum of shifted identities with real coefficients. The empty sum
/// is the zero operator; zero coefficients are dropped eagerly.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ShiftPoly {
    terms: BTreeMap<Rational, f64>,
}

impl ShiftPoly {
    pub fn zero() -> Self {
        ShiftPoly::default()
    }

    /// The identity operator `I = E^0`.
    pub fn identity() -> Self {
        ShiftPoly::term(1.0, Rational::zero())
    }

    /// The pure shift `E^h`.
    pub fn shift(h: Rational) -> Self {
        ShiftPoly::term(1.0, h)
    }

    /// A single term `c * E^h`.
    pub fn term(coefficient: f64, h: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if coefficient != 0.0 {
            terms.insert(h, coefficient);
        }
        ShiftPoly { terms }
    }

    /// The forward difference `E - I`.
    pub fn delta() -> Self {
        ShiftPoly::shift(Rational::one()) - ShiftPoly::identity()
    }

    /// The backward difference `I - E^{-1}`.
    pub fn nabla() -> Self {
        ShiftPoly::identity() - ShiftPoly::shift(Rational::integer(-1))
    }

    /// `I + E^h + E^{2h} + ... + E^{(m-1)h}`.
    pub fn geometric(h: Rational, m: u64) -> Self {
        let mut terms = BTreeMap::new();
        for i in 0..m {
            *terms.entry(h * Rational::integer(i as i64)).or_insert(0.0) += 1.0;
        }
        ShiftPoly { terms }.dropped_zeros()
    }

    /// `I - E^h + E^{2h} - ... +- E^{(m-1)h}`.
    pub fn alternating(h: Rational, m: u64) -> Self {
        let mut terms = BTreeMap::new();
        for i in 0..m {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            *terms.entry(h * Rational::integer(i as i64)).or_insert(0.0) += sign;
        }
        ShiftPoly { terms }.dropped_zeros()
    }

    pub fn from_terms<I: IntoIterator<Item = (f64, Rational)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (c, h) in iter {
            *terms.entry(h).or_insert(0.0) += c;
        }
        ShiftPoly { terms }.dropped_zeros()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending shift order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, f64)> + '_ {
        self.terms.iter().map(|(&h, &c)| (h, c))
    }

    pub fn coefficient(&self, h: Rational) -> f64 {
        self.terms.get(&h).copied().unwrap_or(0.0)
    }

    pub fn scale(&self, factor: f64) -> Self {
        ShiftPoly {
            terms: self
                .terms
                .iter()
                .filter(|&(_, &c)| c * factor != 0.0)
                .map(|(&h, &c)| (h, c * factor))
                .collect(),
        }
    }

    /// Apply the operator to a signal: `sum c_i * f(x + h_i)` pointwise.
    /// Every shift must land on the grid.
    pub fn apply(&self, f: &Signal) -> Result<Signal> {
        let n = f.len();
        let mut offsets = Vec::with_capacity(self.terms.len());
        for (&h, &c) in &self.terms {
            offsets.push((f.grid().offset_for_shift(h)?, c));
        }
        let src = f.values();
        let mut out = vec![0.0; n];
        for (k, c) in offsets {
            for j in 0..n {
                out[j] += c * src[(j + k) % n];
            }
        }
        Signal::new(*f.grid(), out)
    }

    fn dropped_zeros(mut self) -> Self {
        self.terms.retain(|_, c| *c != 0.0);
        self
    }
}

impl Add for &ShiftPoly {
    type Output = ShiftPoly;
    fn add(self, rhs: &ShiftPoly) -> ShiftPoly {
        let mut terms = self.terms.clone();
        for (&h, &c) in &rhs.terms {
            *terms.entry(h).or_insert(0.0) += c;
        }
        ShiftPoly { terms }.dropped_zeros()
    }
}

impl Sub for &ShiftPoly {
    type Output = ShiftPoly;
    fn sub(self, rhs: &ShiftPoly) -> ShiftPoly {
        let mut terms = self.terms.clone();
        for (&h, &c) in &rhs.terms {
            *terms.entry(h).or_insert(0.0) -= c;
        }
        ShiftPoly { terms }.dropped_zeros()
    }
}

impl Mul for &ShiftPoly {
    type Output = ShiftPoly;
    fn mul(self, rhs: &ShiftPoly) -> ShiftPoly {
        let mut terms: BTreeMap<Rational, f64> = BTreeMap::new();
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &rhs.terms {
                *terms.entry(a + b).or_insert(0.0) += ca * cb;
            }
        }
        ShiftPoly { terms }.dropped_zeros()
    }
}

impl Neg for &ShiftPoly {
    type Output = ShiftPoly;
    fn neg(self) -> ShiftPoly {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ShiftPoly {
            type Output = ShiftPoly;
            fn $method(self, rhs: ShiftPoly) -> ShiftPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ShiftPoly {
    type Output = ShiftPoly;
    fn neg(self) -> ShiftPoly {
        -&self
    }
}

/// Convenience wrapper mirroring the operator notation `op f`.
pub fn apply_operator(op: &ShiftPoly, f: &Signal) -> Result<Signal> {
    op.apply(f)
}
