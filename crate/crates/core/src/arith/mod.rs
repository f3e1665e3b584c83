//! Exact scalars and univariate polynomials over the rationals.

mod poly;
mod rational;

pub use poly::{poly_gcd, squarefree_part, Poly};
pub use rational::Rational;
