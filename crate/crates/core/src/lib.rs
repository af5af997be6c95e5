//! Projective geometric algebra for the euclidean plane and space.
//!
//! Multivectors over any signature `(p, m, z)`, with typed helpers for the
//! dual euclidean algebras P(R*(2,0,1)) and P(R*(3,0,1)): norms, motors, a
//! catalog of named constructions, rigid-body dynamics and dual-number
//! automatic differentiation.

pub mod algebra;
pub mod autodiff;
pub mod dynamics;
pub mod error;
pub mod formulas;
pub mod golden;
pub mod motors;
pub mod norms;
pub mod pga2d;
pub mod pga3d;
pub mod text;

pub use algebra::{Blade, CayleyTable, Multivector, Signature};
pub use error::{Error, Result};
pub use norms::DualNumber;
