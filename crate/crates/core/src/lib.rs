//! Exact computations with module coalgebras over bialgebras.

pub mod bialgebra;
pub mod coalgebra;
pub mod engine;
pub mod error;
pub mod hopf_module;
pub mod linalg;
pub mod module_coalgebra;
pub mod scalar;
pub mod schneider;
pub mod zoo;

pub use error::{Error, Result};
pub use scalar::{FieldKind, Fp, Scalar};

pub type Q = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;
