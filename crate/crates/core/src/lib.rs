//! Exact conventional and Hermitian Young projection operators in the group
//! algebra of `S_n`, with an explicit tensor realization on `(C^N)^{⊗n}`
//! used to cross-check every identity as a matrix identity.

pub mod algebra;
pub mod cli;
pub mod config;
mod error;
pub mod hermitian;
pub mod perm;
pub mod polynomial;
pub mod tableaux;
pub mod tensor;
pub mod verify;

pub use algebra::{
    antisymmetrizer, inequivalence_check, primitivity_check, symmetrizer, young_operator,
    AlgebraElement, PolyAlgebraElement, Rational,
};
pub use config::Limits;
pub use error::{Error, Result};
pub use hermitian::{hermitian_young, ProjectorCache};
pub use perm::Permutation;
pub use polynomial::{Polynomial, TracePolynomial};
pub use tensor::TensorOperator;
pub use tableaux::{enumerate_syt, Parent, YoungDiagram, YoungTableau};

