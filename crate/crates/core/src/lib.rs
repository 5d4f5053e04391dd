//! Exact arithmetic for Seidel matrices and equiangular line systems.

pub mod algebraic;
pub mod bounds;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod matrix;
pub mod nonexistence;
pub mod poly;
pub mod repro;
pub mod spectra;

pub use error::*;
pub use linalg::IntMatrix;
pub use matrix::{AmbientGraph, SeidelMatrix, SwitchingOperation};
pub use poly::Poly;
pub use spectra::Spectrum;
pub use algebraic::AlgebraicNumber;
