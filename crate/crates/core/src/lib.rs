//! Scalar SDE simulation built around the explicit Euler scheme.
//!
//! The crate simulates one-dimensional Itô equations
//! `dX = f(X) dt + g(X) dW`, estimates absolute moments of the Euler
//! iterates by deterministic parallel Monte Carlo, evaluates exact-solution
//! oracles where a closed form exists, and computes analytic lower bounds
//! that certify moment blow-up when a coefficient grows super-linearly.

pub mod bounds;
pub mod brownian;
pub mod euler;
pub mod exact;
pub mod models;
pub mod montecarlo;

mod error;

pub use error::{Error, Result};
