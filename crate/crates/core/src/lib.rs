//! Exact-arithmetic kernel for finite-dimensional quasi-Hopf algebras.
//!
//! Structures are given by structure constants over ℚ or a prime field and
//! every identity is checked by exact coordinate equality — tolerance zero.
//! The crate covers quasi-bialgebra and quasi-Hopf axioms, Drinfeld's gauge
//! element, the Hausser–Nill elements, left integrals and the Frobenius
//! isomorphism, module and comodule algebras, smash and quasi-smash products,
//! the Morita context between a smash product and the invariants, canonical
//! Galois maps, total integrals and gauge twisting.
//!
//! Tuple sweeps run in parallel by default (`parallel` feature, on rayon);
//! disabling the feature falls back to sequential execution with identical
//! results and reporting.

pub mod algebra;
pub mod catalog;
pub mod comodule;
pub mod derived;
pub mod error;
pub mod exec;
pub mod files;
pub mod integrals;
pub mod linmap;
pub mod module_algebra;
pub mod morita;
pub mod quasihopf;
pub mod quotient;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use exec::Exec;
pub use report::Report;
pub use scalar::{Field, Scalar};
