//! Exact symbolic engine for the algebra of Birkhoff strata of the
//! Grassmannian Gr^(2).
//!
//! The crate builds symbolic canonical bases of the strata, derives the
//! closure constraints on their series parameters by exact Laurent
//! arithmetic, eliminates the dependent parameters, and extracts the
//! associated families of algebraic curves together with genus certificates.
//!
//! Every computation is exact over the rationals and deterministic; the
//! canonical text format of [`poly::Poly`] doubles as a golden-file contract.
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `strata` binary exposes the same functionality as subcommands.

pub mod closure;
pub mod curves;
pub mod genus;
pub mod laurent;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod reference;
pub mod report;
pub mod resultant;
pub mod strata;
pub mod var;

pub use closure::{check_associativity, derive_constraint_set, ConstraintSet};
pub use laurent::LaurentSeries;
pub use poly::{Monomial, Poly};
pub use rat::{rat, ratio, Rational};
pub use strata::{build_basis, BasisFamily, StratumSpec};
pub use var::VarId;
