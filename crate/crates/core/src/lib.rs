//! Exact computation of torus-equivariant Euler characteristics of
//! tautological classes on Hilbert schemes of points in the plane.
//!
//! The evaluators live in [`euler`]; they rest on the symmetric-function
//! layer in [`symfunc`] and [`hall_littlewood`].

pub mod character;
pub mod error;
pub mod euler;
pub mod expr;
pub mod hall_littlewood;
pub mod laurent;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use error::Error;
pub use expr::{parse_fexpr, parse_symfunc, FExpr};
pub use partition::Partition;
pub use ratfunc::RatFunc;
pub use series::BiSeries;
pub use symfunc::{Basis, SymFunc};
