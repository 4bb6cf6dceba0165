//! Exact-arithmetic homological algebra over graded quotient rings
//! R = k[x_1..x_m]/J: a Groebner engine for modules, Koszul and Tate-style
//! complexes, comparison maps between them, uniform Artin-Rees exponents,
//! eventually-finite-projective-dimension certification, and constructive
//! strong reducers with cone-width reduction.
//!
//! Everything is computed over F_p or Q with no floating point; claimed
//! identities are verified by normal forms, not assumed.

pub mod error;
pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod vector;
pub mod groebner;
pub mod submodule;
pub mod ideal;
pub mod fpmodule;
pub mod resolution;
pub mod complex;
pub mod koszul;
pub mod homcx;

pub use error::{Error, Result};
