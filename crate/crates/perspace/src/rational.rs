//! Exact rational arithmetic for periods, shifts, and grid steps.
//!
//! Commensurability decisions (does a shift land on the grid? does `d`
//! divide the period?) must never depend on floating-point rounding, so
//! every period-like quantity in this crate is a [`Rational`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact fraction `num/den`, always stored reduced with `den >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Build `num/den`. Panics if `den == 0`; use [`Rational::from_str`]
    /// for fallible parsing of external input.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        Rational(Ratio::new(num, den))
    }

    pub const fn integer(n: i64) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    pub const fn zero() -> Self {
        Self::integer(0)
    }

    pub const fn one() -> Self {
        Self::integer(1)
    }

    pub fn num(&self) -> i64 {
        *self.0.numer()
    }

    pub fn den(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.num() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num() > 0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> i64 {
        self.0.floor().to_integer()
    }

    /// Exact value as an integer, if `den == 1`.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.num())
    }

    /// Euclidean remainder in `[0, modulus)` for a positive modulus.
    pub fn rem_euclid(&self, modulus: Rational) -> Self {
        assert!(modulus.is_positive(), "modulus must be positive");
        let q = (*self / modulus).floor_int();
        *self - modulus * Rational::integer(q)
    }

    /// One conversion to floating point; exact rational arithmetic should
    /// happen before this call.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("i64 ratio fits in f64")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"3"`, `"-1/2"`, and exact decimal literals like `"0.25"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseError(format!("not a rational: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let num: i64 = n.trim().parse().map_err(|_| bad())?;
            let den: i64 = d.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(Error::ParseError(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(num, den))
        } else if let Some((int, frac)) = s.split_once('.') {
            let sign = if int.trim_start().starts_with('-') {
                -1
            } else {
                1
            };
            let whole: i64 = if int.is_empty() || int == "-" {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if frac.len() > 15 {
                return Err(Error::ParseError(format!("decimal too long: {s:?}")));
            }
            let digits: i64 = frac.parse().map_err(|_| bad())?;
            let scale = 10i64.pow(frac.len() as u32);
            Ok(Rational::integer(whole) + Rational::new(sign * digits, scale))
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(Rational::integer(n))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $assign_trait for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Best rational approximation of `x` within `1e-12 * max(1, |x|)`,
/// found by continued fractions. Used to recover exact grid steps from
/// floating-point columns in signal files.
pub fn rationalize(x: f64) -> Result<Rational> {
    if !x.is_finite() {
        return Err(Error::ParseError(format!("cannot rationalize {x}")));
    }
    let tol = 1e-12 * x.abs().max(1.0);
    let sign: i64 = if x < 0.0 { -1 } else { 1 };
    let target = x.abs();

    let (mut h0, mut k0, mut h1, mut k1) = (1i64, 0i64, target.floor() as i64, 1i64);
    let mut frac = target - target.floor();
    for _ in 0..64 {
        let approx = h1 as f64 / k1 as f64;
        if (approx - target).abs() <= tol {
            return Ok(Rational::new(sign * h1, k1));
        }
        if frac == 0.0 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let a = a as i64;
        let h2 = a.checked_mul(h1).and_then(|v| v.checked_add(h0));
        let k2 = a.checked_mul(k1).and_then(|v| v.checked_add(k0));
        match (h2, k2) {
            (Some(h2), Some(k2)) if k2 <= 1_000_000_000_000 => {
                h0 = h1;
                k0 = k1;
                h1 = h2;
                k1 = k2;
            }
            _ => break,
        }
    }
    let approx = h1 as f64 / k1 as f64;
    if (approx - target).abs() <= tol {
        Ok(Rational::new(sign * h1, k1))
    } else {
        Err(Error::ParseError(format!("no exact rational near {x}")))
    }
}
