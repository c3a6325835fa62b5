//! Multiplicity matrices of *-homomorphisms between finite-dimensional
//! C*-algebras, and the exact integer linear algebra needed to decide their
//! properties and those of the induced map on K0.
//!
//! A finite-dimensional C*-algebra `M_{n_1} + ... + M_{n_k}` is an
//! [`FdAlgebra`]; a homomorphism into `M_{m_1} + ... + M_{m_l}` is determined up
//! to unitary equivalence by its `l x k` multiplicity matrix `E`, and K0 of
//! the homomorphism is `X -> E X` on `Z^k -> Z^l`.

pub mod cstar;
mod error;
pub mod intlin;
pub mod oracle;
#[cfg(feature = "sampling")]
pub mod sample;

pub use cstar::{analyze, compose, make_hom, AnalysisReport, FdAlgebra, FdHom};
pub use error::{Error, Result};
pub use intlin::{IntMatrix, MinorGcdResult, SmithDecomposition};

pub use num_bigint::BigInt;
