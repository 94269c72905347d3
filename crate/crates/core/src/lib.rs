//! Exact models of the tautological ring of a Jacobian.
//!
//! Cycles are written in the `λ_I^[m]` basis. A [`Model`] fixes an
//! admissible set of columns and a table of basic Pontryagin products; the
//! Fourier transform and both products on the whole space follow from it.

pub mod admissible;
pub mod builder;
pub mod catalog;
pub mod cycle;
pub mod error;
pub mod index;
pub mod json;
pub mod linear;
pub mod model;
pub mod oracle;
pub mod scalar;
pub mod solver;
pub mod verify;

pub use admissible::AdmissibleSet;
pub use cycle::{theta_power, BasisKey, Coefficient, Cycle};
pub use error::{Error, Result};
pub use index::{admissible_top, MultiIndex};
pub use linear::{LinearExpression, Unknown};
pub use model::Model;
pub use scalar::{binomial, factorial, Rational};
