//! Exact scalars, polynomials and linear algebra.
//!
//! Everything here is over [`Rational`] or the Eisenstein field ℚ(ζ₃); there
//! is no floating-point path.

mod eisenstein;
mod matrix;
mod poly;
mod ratfn;
mod rational;

pub use eisenstein::Eisenstein;
pub use matrix::Matrix;
pub use poly::{rational_root_candidates, rational_roots, Poly};
pub use ratfn::RationalFn;
pub use rational::{fmt_rational, parse_rational, rat, Rational, Scalar};
