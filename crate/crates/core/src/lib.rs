//! Exact verification and construction of BiHom-Ω algebraic structures
//! over the rationals.

pub mod algebra;
pub mod checkers;
pub mod constructions;
pub mod dsl;
pub mod forge;
pub mod linalg;
pub mod report;
pub mod semigroup;
