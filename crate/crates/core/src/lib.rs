//! Exact verification toolkit for the golden-ratio matrix U, its Cartan
//! square cmU, the exchange matrix J, the 3-qubit Hadamard matrix and the
//! E8 root system.
//!
//! Everything except the hull analysis in [`projection`] runs in exact
//! arithmetic over Q(√5)(√φ).

pub mod constants;
pub mod error;
pub mod field;
pub mod identities;
pub mod lattice;
pub mod matrix;
pub mod projection;
pub mod roots;

pub use error::{Error, Result};
pub use field::{GoldenExt, GoldenScalar, Rational};
pub use matrix::{CharPoly, ExactMatrix};
