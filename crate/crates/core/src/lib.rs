//! Weak del Pezzo surfaces as blow-ups of the plane: negative-curve models,
//! effective anticanonical divisors, and first global log canonical thresholds.

pub mod anticanon;
mod linalg;
pub mod lct;
pub mod piclattice;
pub mod surface;
pub mod verify;

/// Exact rational numbers used for every threshold.
pub type Rational = num_rational::Ratio<i64>;

pub use piclattice::{DivisorClass, LatticeError};
pub use surface::{Catalog, SingularityType, SurfaceModel};
