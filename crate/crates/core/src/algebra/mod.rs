//! Signatures, blades, dense multivectors and every product on them.

mod blade;
mod cayley;
mod multivector;
mod signature;

pub use blade::{blade_product, reorder_sign, Blade};
pub use cayley::{canonical_blades, display_order, Basis, BasisElement, CayleyTable, Cell};
pub use multivector::Multivector;
pub use signature::{Signature, MAX_GENERATORS};
