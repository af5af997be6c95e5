//! Constructors and coordinate readers for the euclidean plane,
//! P(R*(2,0,1)). Lines are 1-vectors, points are 2-vectors:
//! `E0 = e12` (origin), `E1 = e20`, `E2 = e01` (x and y directions).

use crate::algebra::{Blade, Multivector, Signature};

pub const SIG: Signature = Signature::PLANE;

pub const E0: Blade = Blade(0b110);
/// Stored as `e02` with coefficient `-1`.
pub const E1: Blade = Blade(0b101);
pub const E2: Blade = Blade(0b011);

/// Line `a x + b y + c = 0`, i.e. `c e0 + a e1 + b e2`.
pub fn line(a: f64, b: f64, c: f64) -> Multivector {
    Multivector::from_terms(SIG, &[(0b001, c), (0b010, a), (0b100, b)])
}

/// Homogeneous point `x E1 + y E2 + z E0`.
pub fn homogeneous_point(x: f64, y: f64, z: f64) -> Multivector {
    Multivector::from_terms(SIG, &[(E1.0, -x), (E2.0, y), (E0.0, z)])
}

/// Euclidean point `(x, y)`.
pub fn point(x: f64, y: f64) -> Multivector {
    homogeneous_point(x, y, 1.0)
}

/// Ideal point (direction) `x E1 + y E2`.
pub fn ideal_point(x: f64, y: f64) -> Multivector {
    homogeneous_point(x, y, 0.0)
}

/// The ideal line `e0`.
pub fn ideal_line() -> Multivector {
    Multivector::generator(SIG, 0)
}

pub fn pseudoscalar() -> Multivector {
    Multivector::pseudoscalar(SIG)
}

/// Homogeneous coordinates `(x, y, z)` of a 2-vector.
pub fn homogeneous_coords(p: &Multivector) -> [f64; 3] {
    [-p.get(E1), p.get(E2), p.get(E0)]
}

/// Cartesian coordinates of a euclidean point, `None` for ideal points.
pub fn point_coords(p: &Multivector) -> Option<[f64; 2]> {
    let [x, y, z] = homogeneous_coords(p);
    if z.abs() <= 1e-12 * x.abs().max(y.abs()) || z == 0.0 {
        None
    } else {
        Some([x / z, y / z])
    }
}

/// Coefficients `(a, b, c)` of the line `a x + b y + c = 0`.
pub fn line_coeffs(m: &Multivector) -> [f64; 3] {
    [m.get(Blade(0b010)), m.get(Blade(0b100)), m.get(Blade(0b001))]
}
