//! Exact class-function machinery for finite reductive groups of types
//! D4, D5 and adjoint E6.
//!
//! Everything is computed symbolically in the prime-power parameter `q`
//! over the field Q(t), t a primitive cube root of unity. There is no
//! floating point anywhere; equality of results is bit-exact equality of
//! canonical forms.
//!
//! Module map:
//! - [`exactnum`]: cyclotomic rationals, polynomials and rational functions in q;
//! - [`coxeter`]: Weyl groups of types B/D as signed permutations, F-conjugacy;
//! - [`hecke`]: Iwahori-Hecke character values via seminormal representations;
//! - [`symbols`]: symbol combinatorics, families, Fourier matrices, f-vectors;
//! - [`classfun`]: class-function spaces over labelled class tables;
//! - [`sigma`]: F-stable class splitting via component groups, characteristic functions;
//! - [`bruhat`]: the Bruhat-cell counting identity and the sign pipeline.

pub mod bruhat;
pub mod classfun;
pub mod coxeter;
pub mod exactnum;
pub mod hecke;
pub mod sigma;
pub mod symbols;

mod error;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
