//! Bohr-type radius computations for Ma–Minda starlike and convex classes and
//! their K-quasiconformal harmonic extensions, plus randomized numerical
//! verification of the underlying coefficient inequalities.

pub mod error;
pub mod extremal;
pub mod psi;
pub mod quadrature;
pub mod radius;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use psi::{PsiFamily, PsiFunction};
pub use series::TruncatedSeries;
