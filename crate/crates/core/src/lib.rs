//! Exact computer algebra for invertible solutions of the pentagon equation
//! `R¹²R¹³R²³ = R²³R¹²` in Mₙ(k)⊗Mₙ(k), the Hopf algebras they encode, and
//! Heisenberg doubles.

pub mod check;
pub mod error;
pub mod field;
pub mod format;
pub mod gallery;
pub mod heisenberg;
pub mod hopf;
pub mod linalg;
pub mod pentagon;
pub mod tensor;

pub use check::{Check, CheckReport};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use hopf::HopfData;
pub use linalg::Mat;
pub use pentagon::{analyze, verify_pentagon, Method, PentagonSolution, Side};
pub use tensor::{Leg, Tensor2, Tensor3};
