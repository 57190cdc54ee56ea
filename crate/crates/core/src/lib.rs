//! Exact constant-term computation for q-Dyson style products.
//!
//! The crate is organized bottom-up:
//!
//! - [`laurent`]: sparse Laurent polynomials in `q, x_0, ..., x_n`
//! - [`qseries`]: univariate polynomials and reduced rational functions in `q`
//! - [`dyson`]: problem instances, brute-force constant terms, the cyclic action
//! - [`closed_forms`]: evaluators for the closed formulas
//! - [`gx`]: partial-fraction constant-term extraction over iterated Laurent series
//! - [`verify`]: parameter sweeps that check the identities against each other

pub mod closed_forms;
pub mod dyson;
pub mod error;
pub mod gx;
pub mod laurent;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
