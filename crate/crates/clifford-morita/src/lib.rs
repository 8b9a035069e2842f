//! Exact computer algebra for real and complex Clifford superalgebras:
//! graded Morita theory, classification of the basic representatives and
//! Grothendieck group tables, all over exact rational scalars.

pub mod algebra;
pub mod blade;
pub mod classify;
pub mod cli;
pub mod error;
pub mod grothendieck;
pub mod linalg;
pub mod modules;
pub mod morita;
pub mod parser;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use algebra::{
    clifford_complex, clifford_real, grassmann_real, is_isomorphic_via, supertwist_check,
    Corner, Element, SuperAlgebra,
};
pub use blade::Signature;
pub use error::{Error, Result};
pub use linalg::{Matrix, RowSpan};
pub use scalar::{ExactScalar, GaussRat, Rat};

/// Concrete algebra types used throughout the CLI.
pub type RealAlgebra = SuperAlgebra<Rat>;
pub type ComplexAlgebra = SuperAlgebra<GaussRat>;

/// CLI entry point; returns the process exit code.
pub fn run() -> i32 {
    cli::run()
}
