//! Exact K0 computations for exceptional collections on the Hirzebruch
//! surface `Sigma2` and on its deformation `P1 x P1`.

pub mod basis;
pub mod cohomology;
pub mod error;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod mutation;
pub mod sample;
pub mod search;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
