//! Exact and analytic computation of Ramanujan's third-order mock theta
//! coefficients `α(n)`, with verifiers for the bounds built on them.

pub mod cli;
pub mod error;
pub mod exact_series;
pub mod heegner;
pub mod kloosterman;
pub mod numeric;
pub mod quadforms;
pub mod verifier;

pub use error::{Error, Result};
pub use numeric::{BigComplex, BigReal, ExactInt};
