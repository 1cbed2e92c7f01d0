//! Finite pseudo effect algebras: axiom checking, the induced order, the
//! Riesz decomposition hierarchy, the lattice of signed additive measures
//! with Jordan decompositions and total variation, exact state polytopes
//! with simplex and barycentric analysis, orthogonality of states, and the
//! MV structure of intervals below a positive measure.
//!
//! All arithmetic is exact over arbitrary-precision rationals. Algebras are
//! given by their partial addition tables and certified against the axioms
//! before any derived structure is computed.

pub mod algebra;
pub mod cli;
pub mod construct;
pub mod error;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod measure;
pub mod mv;
pub mod orthogonality;
pub mod rat;
pub mod riesz;
pub mod sampling;
pub mod state;

pub use algebra::{CertifiedAlgebra, Elem, PartialAlgebra, ValidationReport};
pub use error::{Error, Result};
pub use measure::SignedMeasure;
pub use rat::Rat;
