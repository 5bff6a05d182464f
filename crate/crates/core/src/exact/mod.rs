//! Exact scalars and containers: rationals, polynomials, truncated power
//! series and combinatorial numbers.

pub mod comb;
pub mod poly;
pub mod rational;
pub mod series;

pub use comb::{binomial, factorial, stirling_first, CombCache};
pub use poly::Poly;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use series::{Coefficient, Series};
