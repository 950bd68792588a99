//! Schubert polynomials computed four independent ways, the zero-one
//! classification of permutations, and the coefficientwise pattern
//! dominance inequality for dual characters of flagged Weyl modules.
//!
//! - [`perm`]: permutations, diagrams, Rothe diagrams, pattern containment.
//! - [`poly`]: exact polynomials, divided differences, the classical Schubert polynomial.
//! - [`orthodontia`]: orthodontic sequences, intermediate diagrams, the operator formula.
//! - [`tableaux`]: root operators and the tableau expansion.
//! - [`weyl`]: dual characters via ranks of determinant products.
//! - [`classify`]: configurations, multiplicitous patterns, zero-one status.

pub mod error;
pub mod orthodontia;
pub mod perm;
pub mod poly;
pub mod tableaux;
pub mod weyl;
pub mod classify;

pub use error::{Error, Result};
pub use perm::{Column, DeleteMode, Diagram, Permutation};
pub use poly::{Monomial, Polynomial};
