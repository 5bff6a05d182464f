//! Exact Bernoulli–Barnes numbers and polynomials, Fourier–Dedekind sums,
//! restricted partition functions, Hurwitz and Barnes zeta values, and a
//! registry of identities relating them.

pub mod barnes;
pub mod bernoulli;
pub mod dedekind;
pub mod error;
pub mod exact;
pub mod identities;
pub mod zeta;

pub use barnes::{AVec, BarnesTable};
pub use error::{Error, Result};
pub use exact::{Poly, Rational};
