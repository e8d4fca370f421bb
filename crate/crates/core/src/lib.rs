//! X-rays of Hamiltonian 2-torus actions, combinatorial symplectic cuts of
//! multiplicity-free U(2)-spaces, and Tolman's obstruction to invariant
//! Kähler structures, all in exact rational arithmetic.

pub mod cutting;
pub mod document;
pub mod error;
pub mod geometry;
pub mod group;
pub mod obstruction;
pub mod render;
pub mod scenarios;
pub mod xray;

pub use error::{Error, Result};
