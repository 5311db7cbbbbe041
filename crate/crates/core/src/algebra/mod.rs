//! Exact arithmetic: finite fields, cyclotomic characters, polynomials,
//! polynomial matrices and linear algebra over GF(q).

pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod matrix;
pub mod poly;

pub use cyclotomic::{character, character_vec, CycloPoly, CyclotomicInt};
pub use field::{Field, Fq};
pub use matrix::{series_inverse, PolyMatrix, StructuredMatrix, StructuredTerm};
pub use poly::{Monomial, Substitution, Var, WeightPoly};
