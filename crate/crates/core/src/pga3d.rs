//! Constructors and coordinate readers for euclidean space, P(R*(3,0,1)).
//! Planes are 1-vectors, lines 2-vectors, points 3-vectors:
//! `E0 = e123`, `E1 = e032`, `E2 = e013`, `E3 = e021`.

use crate::algebra::{Blade, Multivector, Signature};

pub const SIG: Signature = Signature::SPACE;

pub const E0: Blade = Blade(0b1110);
/// Stored as `e023` with coefficient `-1`.
pub const E1: Blade = Blade(0b1101);
pub const E2: Blade = Blade(0b1011);
/// Stored as `e012` with coefficient `-1`.
pub const E3: Blade = Blade(0b0111);

/// Bivector blades in the order `e01 e02 e03 e23 e31 e12`, with the sign
/// relating each name to its canonical blade.
pub const BIVECTOR_BASIS: [(Blade, f64); 6] =
    [(Blade(0b0011), 1.0), (Blade(0b0101), 1.0), (Blade(0b1001), 1.0), (Blade(0b1100), 1.0), (Blade(0b1010), -1.0), (Blade(0b0110), 1.0)];

/// Plane `a x + b y + c z + d = 0`, i.e. `d e0 + a e1 + b e2 + c e3`.
pub fn plane(a: f64, b: f64, c: f64, d: f64) -> Multivector {
    Multivector::from_terms(SIG, &[(0b0001, d), (0b0010, a), (0b0100, b), (0b1000, c)])
}

/// Homogeneous point `x E1 + y E2 + z E3 + w E0`.
pub fn homogeneous_point(x: f64, y: f64, z: f64, w: f64) -> Multivector {
    Multivector::from_terms(SIG, &[(E1.0, -x), (E2.0, y), (E3.0, -z), (E0.0, w)])
}

pub fn point(x: f64, y: f64, z: f64) -> Multivector {
    homogeneous_point(x, y, z, 1.0)
}

pub fn ideal_point(x: f64, y: f64, z: f64) -> Multivector {
    homogeneous_point(x, y, z, 0.0)
}

/// The ideal plane `e0`.
pub fn ideal_plane() -> Multivector {
    Multivector::generator(SIG, 0)
}

pub fn pseudoscalar() -> Multivector {
    Multivector::pseudoscalar(SIG)
}

/// Bivector from coordinates on `e01 e02 e03 e23 e31 e12`.
pub fn bivector(c: [f64; 6]) -> Multivector {
    let mut out = Multivector::zero(SIG);
    for ((blade, sign), value) in BIVECTOR_BASIS.iter().zip(c) {
        out.set(*blade, sign * value);
    }
    out
}

/// Coordinates on `e01 e02 e03 e23 e31 e12`.
pub fn bivector_coords(b: &Multivector) -> [f64; 6] {
    let mut out = [0.0; 6];
    for (slot, (blade, sign)) in out.iter_mut().zip(BIVECTOR_BASIS) {
        *slot = sign * b.get(blade);
    }
    out
}

/// Line through `p` with direction `(dx, dy, dz)`.
pub fn line_through(p: [f64; 3], dir: [f64; 3]) -> Multivector {
    &point(p[0], p[1], p[2]) & &ideal_point(dir[0], dir[1], dir[2])
}

/// Homogeneous coordinates `(x, y, z, w)` of a 3-vector.
pub fn homogeneous_coords(p: &Multivector) -> [f64; 4] {
    [-p.get(E1), p.get(E2), -p.get(E3), p.get(E0)]
}

/// Cartesian coordinates of a euclidean point, `None` for ideal points.
pub fn point_coords(p: &Multivector) -> Option<[f64; 3]> {
    let [x, y, z, w] = homogeneous_coords(p);
    let scale = x.abs().max(y.abs()).max(z.abs());
    if w == 0.0 || w.abs() <= 1e-12 * scale {
        None
    } else {
        Some([x / w, y / w, z / w])
    }
}

/// Coefficients `(a, b, c, d)` of the plane `a x + b y + c z + d = 0`.
pub fn plane_coeffs(m: &Multivector) -> [f64; 4] {
    [m.get(Blade(0b0010)), m.get(Blade(0b0100)), m.get(Blade(0b1000)), m.get(Blade(0b0001))]
}
