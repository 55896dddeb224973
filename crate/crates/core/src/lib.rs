//! Monomial combinatorics of colored quotient rings `k[X_lambda]/(Q_a + T^phi)`.
//!
//! Start with [`ring::RingSpec`], enumerate graded pieces with
//! [`space::enumerate_piece`], and build on the shadow, compression,
//! verification and multicomplex modules.

pub mod bits;
pub mod classify;
pub mod cli;
pub mod compress;
pub mod counterexample;
pub mod error;
pub mod format;
pub mod multicomplex;
pub mod ring;
pub mod space;
#[cfg(test)]
mod strategies;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Ext, Monomial, RingSpec, Variable};
