//! Sampled periodic signals and their decompositions into periodic and
//! antiperiodic subspaces.
//!
//! Everything runs on exact rational grids: a [`Signal`] holds one
//! fundamental period of samples, shifts are cyclic index rotations, and
//! shift-operator polynomials act as circulant linear operators. On that
//! footing the crate provides
//!
//! - the halving split of a period-`p` signal into a `p/2`-periodic and a
//!   `p/2`-antiperiodic part, iterated into generation sequences and an
//!   antiperiodic series expansion ([`halving`]),
//! - circulant spectra, solves, and rational operator expressions like
//!   `(I - E) / (2I + E^2)` ([`circulant`]),
//! - fold operators between integer-period spaces and the cyclotomic
//!   kernel projectors that split `P_12` into six components
//!   ([`subspaces`]),
//! - the divisor-lattice periodicity diagram with DOT output
//!   ([`lattice`]),
//! - signal file formats and machine-readable reports for the `perspace`
//!   command-line tool ([`io`]).
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example split_sawtooth`.

pub mod circulant;
mod error;
pub mod grid;
pub mod halving;
pub mod io;
pub mod lattice;
pub mod rational;
pub mod shift;
pub mod signal;
pub mod subspaces;

pub use error::{Error, Result};
pub use grid::Grid;
pub use rational::Rational;
pub use shift::ShiftPoly;
pub use signal::{combine, max_abs_diff, Generator, Parity, PointwiseMap, Signal};

/// Default absolute comparison tolerance: double precision with headroom
/// for O(N) accumulation.
pub const DEFAULT_TOL: f64 = 1e-9;
