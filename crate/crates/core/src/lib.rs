//! Exact reconstruction of the Griess algebras generated by two central
//! charge 1/2 conformal vectors whose τ-involutions generate S₃.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, ℚ(ζ₃), polynomials, rational functions, matrices.
//! * [`algebra`]: commutative algebras with an invariant form, conformal
//!   vectors, eigenspace splitting and τ-involutions.
//! * [`ansatz`]: the λ-parametric product table, the λ classification and
//!   construction of the two admissible algebras, plus the audit of the
//!   printed constants.
//! * [`geometry`]: the S₃ action on the built algebra and the θ-fixed
//!   conformal splitting.
//! * [`series`]: the unitary Virasoro discrete series.
//! * [`fusion`]: fusion rings and their verification.
//! * [`report`]: the verification report consumed by the command-line tool.

pub mod algebra;
pub mod ansatz;
pub mod error;
pub mod exact;
pub mod format;
pub mod fusion;
pub mod geometry;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use exact::{rat, Eisenstein, Matrix, Poly, Rational, RationalFn, Scalar};
