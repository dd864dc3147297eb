//! Exact computations around the Misra-Miwa Fock space and the quantum
//! group `U_q(gl_N)`: universal Verma modules, Shapovalov forms, Jantzen
//! numbers and a finite-dimensional tensor-power oracle.

pub mod cli;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod partition;
pub mod ring;
pub mod verify;
pub mod verma;
pub mod weyl;

pub use error::{Error, Result};
