//! Exact-arithmetic verification of the recursive structure of
//! higher-order conformal curvatures on Einstein model geometries.
//!
//! Everything here is computed over arbitrary-precision rationals: the
//! solution-operator families solved from their defining recursion, the
//! polynomial families obtained by clearing their poles, the Q-curvature
//! and V-polynomials built on the volume coefficients, the composition
//! multiplicity calculus behind the recursive curvature formulas, and a
//! registry of named identity checks with exact-zero residuals.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`], [`poly`], [`ratfunc`] - the arithmetic substrate;
//! - [`series`] - truncated power series over a generic coefficient ring;
//! - [`compositions`] - compositions, multiplicities, recursion tables;
//! - [`curvature`] - scalar curvature data and closed low-order formulas;
//! - [`model`] - the Einstein model geometry with its exact expansions;
//! - [`families`] - the solution-operator recursion and its normalizations;
//! - [`qres`] - Q-curvature polynomials, V-polynomials, critical values;
//! - [`suite`] - the named check registry and deterministic grid runner.

pub mod compositions;
pub mod curvature;
pub mod error;
pub mod families;
pub mod model;
pub mod poly;
pub mod qres;
pub mod rational;
pub mod ratfunc;
pub mod series;
pub mod suite;

pub use error::{ArithmeticError, CombinatoricsError, ModelError, SeriesError, SuiteError};
pub use model::{EigenParameter, EinsteinModel};
pub use poly::Poly;
pub use rational::Rat;
pub use ratfunc::RatFunc;
pub use series::{HolographicCoefficients, Ring, Series};
pub use suite::{CheckResult, CheckStatus, GridPoint, Residual, VerificationReport};
