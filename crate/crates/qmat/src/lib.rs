//! Exact symbolic kernel for quantum matrix algebras.
//!
//! The crate provides:
//! - [`qcoeff`]: exact Laurent-polynomial coefficients in `q` over `Z`;
//! - [`pbwcore`]: a rewriting engine for q-commutation presentations with
//!   ordered PBW bases (normal forms, quotients, localization, tensor
//!   products, gradings, homomorphisms);
//! - [`qmatrix`]: the quantum matrix algebra, quantum minors by two
//!   independent methods, comultiplication, counit and transpose;
//! - [`gradedideal`]: exact membership for ideals generated by homogeneous
//!   elements, by fraction-free elimination over the coefficient ring;
//! - [`strata`]: torus-invariant stratification machinery — stratum ideals,
//!   step-triangular factor algebras, the comultiplication-based embeddings,
//!   stratum search, and the 2x2 catalog of torus-invariant primes;
//! - [`verify`]: exhaustive symbolic verification suites S1..S16 with
//!   structured reports.

pub mod error;
pub mod gradedideal;
pub mod pbwcore;
pub mod qcoeff;
pub mod qmatrix;
pub mod strata;
pub mod verify;

pub use error::{Error, Result};
