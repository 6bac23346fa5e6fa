//! Exact gamma-matrix algebra and a calculus of the discrete symmetries
//! P, T, C and light-speed inversion Q acting on Dirac spinor fields.

pub mod clifford;
pub mod discrete;
pub mod em;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod planewave;
pub mod report;
pub mod scalars;
pub mod suites;

pub use error::{Error, Result};
