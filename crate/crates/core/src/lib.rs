//! Exact-arithmetic engine for the rational functions attached to positive
//! root-lattice elements: the Hilbert series of Zastava spaces.
//!
//! For a finite root system with simple roots `α_1 … α_n` and a nonnegative
//! lattice element `α = Σ a_i α_i`, the engine computes the rational function
//! `J_α ∈ ℚ(q)` by several independent routes and cross-checks them:
//!
//! - the fermionic recursion over the order ideal `{β : 0 ≤ β ≤ α}`
//!   (all finite types) — [`jfunction`];
//! - the Toda recursion (type A) — [`jfunction`];
//! - the explicit triangular-array formula for the numerator `(q)_α² J_α`
//!   (type A) — [`type_a`];
//! - the monopole formula over multipartitions, as a truncated-series oracle
//!   (simply-laced types) — [`monopole`];
//! - torus-fixed-point counting on the candidate smooth projective variety,
//!   giving a conjectural Poincaré-polynomial realization (type A) —
//!   [`betti`].
//!
//! Proved identities (integrality of the numerator, palindromicity,
//! `q → q⁻¹` symmetry) are enforced as contracts; open conjectures
//! (positivity, unimodality, the Poincaré realization in rank ≥ 4) are
//! scanned and reported, never asserted. See [`lab`].
//!
//! All arithmetic is exact: arbitrary-precision integer polynomials,
//! Laurent polynomials and reduced rational functions in `q` ([`algebra`]).

pub mod algebra;
pub mod betti;
pub mod error;
pub mod jfunction;
pub mod lab;
pub mod monopole;
pub mod root_system;
pub mod type_a;

pub use error::{Error, Result};
