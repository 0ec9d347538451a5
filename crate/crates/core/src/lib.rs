//! Relativistic bound states of the Hulthen potential under spin and
//! pseudospin symmetry: closed-form spectra and two-component radial spinors
//! for two centrifugal substitution schemes, an independent shooting-method
//! eigenvalue oracle, and the published reference tables.

// `!(x > 0.0)` guards are deliberate: they reject NaN along with the
// out-of-domain sign, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod error;
pub mod model;
pub mod nu;
pub mod oracle;
pub mod spectra;
pub mod spinor;
pub mod specfun;
pub mod tables;

pub use error::{Error, Result};
pub use model::{ModelParams, QuantumState, Scheme, SchemeConfig, Symmetry};
