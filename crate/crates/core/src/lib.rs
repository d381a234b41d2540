//! Exact computation with Eulerian polynomials and the permutation
//! statistics behind them.
//!
//! * [`perm`]: permutations, statistic vectors `E`, `D`, `M`, `D′`, `E′`, the
//!   operators `Δ`, `Δ′`, `Δ″`, `Λ`, permutation classes and endofunctions.
//! * [`bijections`]: the fundamental transformation and the maps built on it.
//! * [`poly`]: exact polynomials, Eulerian and Roselle polynomials by several
//!   independent methods, Stirling numbers and the finite identities.
//! * [`series`]: truncated power series with polynomial coefficients, the
//!   generating-function identities, permanents and determinants.
//! * [`alternating`]: descent/rise words, the `∇` derivation, the `c_{n,k}`
//!   triangle and the Euler numbers.

pub mod alternating;
pub mod bijections;
mod budget;
pub mod certify;
mod error;
pub mod perm;
pub mod poly;
pub mod series;
mod witness;

pub use budget::Budget;
pub use error::{Error, Result};
pub use perm::{ClassTag, FunctionMap, Permutation, StatVector};
pub use poly::{BiPoly, ExactPoly};
pub use series::TruncSeries;
pub use witness::Witness;
