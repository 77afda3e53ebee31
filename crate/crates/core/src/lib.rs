//! Exact Dedekind-type sums and the lattice-point counts built from them.
//!
//! Every value is an exact rational ([`Rational`]). Root-of-unity sums are
//! evaluated in the rational group algebra of ℤ/m ([`CycVec`]), never in
//! floating point.
//!
//! - [`dedekind`]: classical Dedekind sums (naive and Euclidean-speed) and
//!   Dedekind-Rademacher sums.
//! - [`fouriersums`]: Fourier-Dedekind sums and Zagier's higher-dimensional sums.
//! - [`partition`]: restricted partition counts, the q-polynomial and the
//!   closed formula for the coin-exchange count.
//! - [`identities`]: residuals (LHS - RHS) for every reciprocity law.
//! - [`cone2d`]: signed unimodular decomposition of plane cones.
//! - [`verify`]: seeded sweeps over the identities, used by the CLI.

pub mod cone2d;
pub mod dedekind;
mod error;
pub mod exactcore;
pub mod fouriersums;
pub mod identities;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use exactcore::{CycVec, Rational, TruncSeries};
