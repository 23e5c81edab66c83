//! Exact representations and realizations of three-dimensional quadratic
//! algebras: Q⁻(2), Q⁺(2), Q⁻(1,1), Q⁺(1,1), together with su(2) and su(1,1).
//!
//! Everything is exact (`Rational`, and `SqrtRational` for matrix elements)
//! except the Tavis–Cummings eigenvalues.

pub mod algebra;
pub mod diffop;
pub mod error;
pub mod exact;
pub mod expr;
pub mod fock;
pub mod poly;
pub mod rep;
pub mod spectra;

pub use algebra::{ClassId, ClassParams, Mode, QuadraticAlgebraSpec};
pub use error::{Error, Result};
pub use exact::{q, Rational, SqrtRational};
pub use poly::Polynomial;
pub use rep::TripleRep;
