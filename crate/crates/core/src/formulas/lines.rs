//! Line geometry and motors in space: common normals, angle and distance
//! between lines, rotors, translators and screws.

use super::{expect, ideal_or_zero, require, Tag};
use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::motors;
use crate::norms;
use crate::pga3d::{self, SIG};

fn line(l: &Multivector) -> Result<Multivector> {
    require(SIG, &[l])?;
    expect(l, Tag::Line)
}

/// Normalized common normal `Ω₁ × Ω₂`; ideal when the lines are parallel.
pub fn common_normal(l1: &Multivector, l2: &Multivector) -> Result<Multivector> {
    norms::normalize(&line(l1)?.commutator(&line(l2)?)?)
}

/// `acos(Ω̂₁ · Ω̂₂)` taken literally: since unit lines square to `−1`,
/// this is `π` for equal lines.
pub fn angle_between_lines_literal(l1: &Multivector, l2: &Multivector) -> Result<f64> {
    Ok((&line(l1)? | &line(l2)?).scalar_part().clamp(-1.0, 1.0).acos())
}

/// Angle between oriented lines, `acos(−Ω̂₁ · Ω̂₂)`, zero for equal lines.
/// Evaluated as `atan2(sin α, cos α)` with `sin α` the euclidean weight of
/// `⟨Ω̂₁Ω̂₂⟩₂`, which keeps full precision near 0 and π.
pub fn angle_between_lines(l1: &Multivector, l2: &Multivector) -> Result<f64> {
    let prod = &line(l1)? * &line(l2)?;
    let b = prod.grade_part(2);
    let sin = (-(&b * &b).scalar_part()).max(0.0).sqrt();
    Ok(sin.atan2(-prod.scalar_part()))
}

/// Separation of two lines of space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineDistance {
    /// Oriented distance `csc α (Ω̂₁ ∨ Ω̂₂)` between non-parallel lines.
    Skew { angle: f64, distance: f64 },
    /// Distance `‖Ω̂₁ ∓ Ω̂₂‖∞` between parallel lines.
    Parallel { distance: f64 },
}

impl LineDistance {
    pub fn distance(self) -> f64 {
        match self {
            LineDistance::Skew { distance, .. } | LineDistance::Parallel { distance } => distance,
        }
    }
}

/// Distance between two lines, with an explicit branch for parallels.
pub fn dist_between_lines(l1: &Multivector, l2: &Multivector) -> Result<LineDistance> {
    let (a, b) = (line(l1)?, line(l2)?);
    let angle = angle_between_lines(&a, &b)?;
    let sin = angle.sin();
    if sin.abs() > 1e-9 {
        return Ok(LineDistance::Skew { angle, distance: (&a & &b).scalar_part() / sin });
    }
    // Same orientation means a·b = −1, so a − b cancels the euclidean parts.
    let diff = if (&a | &b).scalar_part() < 0.0 { &a - &b } else { &a + &b };
    Ok(LineDistance::Parallel { distance: ideal_or_zero(&diff)? })
}

/// `csc α (Ω̂₁ ∨ Ω̂₂)`, failing for parallel lines.
pub fn dist_between_skew_lines(l1: &Multivector, l2: &Multivector) -> Result<f64> {
    match dist_between_lines(l1, l2)? {
        LineDistance::Skew { distance, .. } => Ok(distance),
        LineDistance::Parallel { .. } => Err(Error::ParallelLines),
    }
}

/// Reflection `a X a` in a plane.
pub fn reflect_in_plane(a: &Multivector, x: &Multivector) -> Result<Multivector> {
    require(SIG, &[a, x])?;
    Ok(motors::reflect(&expect(a, Tag::Plane)?, x))
}

/// `exp((θ/2) Ω̂)`: rotation by `θ` about a line.
pub fn rotor_about_axis(axis: &Multivector, angle: f64) -> Result<Multivector> {
    motors::exp_bivector(&(&line(axis)? * (angle / 2.0)))
}

/// `1 + (E0 ∨ (d/2) V̂) I`: translation by `d` along the ideal point `V`.
pub fn translator(v: &Multivector, d: f64) -> Result<Multivector> {
    require(SIG, &[v])?;
    let v = expect(v, Tag::IdealPoint)?;
    let origin = pga3d::point(0.0, 0.0, 0.0);
    let generator = &(&origin & &(&v * (d / 2.0))) * &pga3d::pseudoscalar();
    Ok(&Multivector::scalar(SIG, 1.0) + &generator)
}

/// Translator moving points by `(dx, dy, dz)`.
pub fn translator_by(offset: [f64; 3]) -> Multivector {
    let [x, y, z] = offset;
    let origin = pga3d::point(0.0, 0.0, 0.0);
    let v = pga3d::ideal_point(x / 2.0, y / 2.0, z / 2.0);
    &Multivector::scalar(SIG, 1.0) + &(&(&origin & &v) * &pga3d::pseudoscalar())
}

/// `exp(t (1 + pI) Ω̂)`: screw about `Ω` with pitch `p` at parameter `t`.
pub fn screw(axis: &Multivector, pitch: f64, t: f64) -> Result<Multivector> {
    let l = line(axis)?;
    let generator = norms::DualNumber::new(t, t * pitch).scale(&l);
    motors::exp_bivector(&generator)
}
