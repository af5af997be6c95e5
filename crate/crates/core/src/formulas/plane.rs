//! Constructions in the euclidean plane, P(R*(2,0,1)).

use super::{expect, ideal_or_zero, norm_or_zero, require, signed_ideal_or_zero, Separation, Tag};
use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::motors;
use crate::norms;
use crate::pga2d::{self, SIG};

fn line(a: &Multivector) -> Result<Multivector> {
    require(SIG, &[a])?;
    expect(a, Tag::Line)
}

fn point(p: &Multivector) -> Result<Multivector> {
    require(SIG, &[p])?;
    expect(p, Tag::Point)
}

/// Intersection point `a ∧ b` of two lines; ideal when they are parallel.
pub fn intersect_lines(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    Ok(&line(a)? ^ &line(b)?)
}

/// `acos(a·b)`: 0 or π for parallel lines.
pub fn angle_lines(a: &Multivector, b: &Multivector) -> Result<f64> {
    Ok((&line(a)? | &line(b)?).scalar_part().clamp(-1.0, 1.0).acos())
}

/// `asin ‖a∧b‖`, the unoriented angle in `[0, π/2]`.
pub fn angle_lines_via_meet(a: &Multivector, b: &Multivector) -> Result<f64> {
    let meet = &line(a)? ^ &line(b)?;
    Ok(norms::square(&meet).abs().sqrt().min(1.0).asin())
}

/// `‖a∧b‖∞` for parallel lines.
pub fn dist_parallel_lines(a: &Multivector, b: &Multivector) -> Result<f64> {
    let meet = &line(a)? ^ &line(b)?;
    if !meet.is_zero() && !norms::is_ideal(&meet) {
        return Err(Error::Degenerate("lines intersect".into()));
    }
    ideal_or_zero(&meet)
}

/// Angle for meeting lines, distance for parallel ones.
pub fn separation_lines(a: &Multivector, b: &Multivector) -> Result<Separation> {
    let meet = &line(a)? ^ &line(b)?;
    if meet.is_zero() || norms::is_ideal(&meet) {
        Ok(Separation::Parallel { distance: ideal_or_zero(&meet)? })
    } else {
        angle_lines(a, b).map(Separation::Angle)
    }
}

/// Joining line `P ∨ Q`.
pub fn join_points(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? & &point(q)?)
}

/// Direction `P × Q` perpendicular to the joining line.
pub fn perp_direction(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    point(p)?.commutator(&point(q)?)
}

/// `‖P ∨ Q‖`.
pub fn dist_points(p: &Multivector, q: &Multivector) -> Result<f64> {
    norm_or_zero(&join_points(p, q)?)
}

/// `‖P × Q‖∞`.
pub fn dist_points_commutator(p: &Multivector, q: &Multivector) -> Result<f64> {
    ideal_or_zero(&perp_direction(p, q)?)
}

/// `‖P − Q‖∞`.
pub fn dist_points_difference(p: &Multivector, q: &Multivector) -> Result<f64> {
    ideal_or_zero(&(&point(p)? - &point(q)?))
}

/// Oriented distance `‖a ∧ P‖`, the weight of the pseudoscalar `a ∧ P`.
pub fn oriented_dist_point_line(a: &Multivector, p: &Multivector) -> Result<f64> {
    signed_ideal_or_zero(&(&line(a)? ^ &point(p)?))
}

/// `asin ‖a ∧ V‖∞` for an ideal point `V`.
pub fn angle_ideal_point_line(a: &Multivector, v: &Multivector) -> Result<f64> {
    require(SIG, &[v])?;
    let v = expect(v, Tag::IdealPoint)?;
    Ok(ideal_or_zero(&(&line(a)? ^ &v))?.min(1.0).asin())
}

/// Line `P · a` through `P` perpendicular to `a`.
pub fn perp_line_through_point(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? | &line(a)?)
}

/// Point `(P · a) a` on `a` nearest to `P`.
pub fn nearest_point_on_line(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    let a = line(a)?;
    Ok(&(&point(p)? | &a) * &a)
}

/// Line `(P · a) P` through `P` parallel to `a`.
pub fn parallel_through_point(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    let p = point(p)?;
    Ok(&(&p | &line(a)?) * &p)
}

/// Oriented area `½ (A ∨ B ∨ C)`.
pub fn triangle_area(a: &Multivector, b: &Multivector, c: &Multivector) -> Result<f64> {
    Ok(0.5 * (&(&point(a)? & &point(b)?) & &point(c)?).scalar_part())
}

fn loop_edges(points: &[Multivector]) -> Result<Vec<Multivector>> {
    if points.len() < 3 {
        return Err(Error::Degenerate("a closed loop needs at least three points".into()));
    }
    let pts = points.iter().map(point).collect::<Result<Vec<_>>>()?;
    Ok((0..pts.len()).map(|i| &pts[i] & &pts[(i + 1) % pts.len()]).collect())
}

/// `Σ ‖Pᵢ ∨ Pᵢ₊₁‖` around a closed loop.
pub fn loop_length(points: &[Multivector]) -> Result<f64> {
    loop_edges(points)?.iter().map(norm_or_zero).sum()
}

/// `‖Σ Pᵢ ∨ Pᵢ₊₁‖∞` taken literally; this is twice the
/// oriented area.
pub fn loop_area_literal(points: &[Multivector]) -> Result<f64> {
    let total = loop_edges(points)?.into_iter().fold(Multivector::zero(SIG), |acc, e| &acc + &e);
    signed_ideal_or_zero(&total)
}

/// Oriented area of a closed loop, `½ ‖Σ Pᵢ ∨ Pᵢ₊₁‖∞`.
pub fn loop_area(points: &[Multivector]) -> Result<f64> {
    Ok(0.5 * loop_area_literal(points)?)
}

/// Reflection `a X a` in a line.
pub fn reflect(a: &Multivector, x: &Multivector) -> Result<Multivector> {
    require(SIG, &[x])?;
    Ok(motors::reflect(&line(a)?, x))
}

/// `exp((θ/2) P)`: rotation by `θ` about `P`, clockwise for positive `θ`.
pub fn rotor_about_point(p: &Multivector, angle: f64) -> Result<Multivector> {
    motors::exp_bivector(&(&point(p)? * (angle / 2.0)))
}

/// `1 + (d/2) V`: translation by `d` along `V` turned a quarter counterclockwise.
pub fn translator(v: &Multivector, d: f64) -> Result<Multivector> {
    require(SIG, &[v])?;
    let v = expect(v, Tag::IdealPoint)?;
    Ok(&Multivector::scalar(SIG, 1.0) + &(&v * (d / 2.0)))
}

/// Translator moving points by `(dx, dy)`.
pub fn translator_by(dx: f64, dy: f64) -> Multivector {
    &Multivector::scalar(SIG, 1.0) + &(pga2d::ideal_point(dy, -dx) * 0.5)
}

/// Motor `√(a₂a₁)` carrying `a₁` onto `a₂`.
pub fn motor_between_lines(a1: &Multivector, a2: &Multivector) -> Result<Multivector> {
    motors::motor_between(&line(a1)?, &line(a2)?)
}

/// `acos(⟨g⟩₀) · normalize(⟨g⟩₂)` for a rotator `g`.
pub fn log_rotor(g: &Multivector) -> Result<Multivector> {
    require(SIG, &[g])?;
    let g = motors::normalize_motor(g)?;
    let b = g.grade_part(2);
    if b.is_zero() {
        return Ok(Multivector::zero(SIG));
    }
    Ok(norms::normalize_euclidean(&b)? * g.scalar_part().clamp(-1.0, 1.0).acos())
}

/// Orthogonal split `m = (m·n) n + (m∧n) n` of a line against a unit line.
pub fn decompose_line(m: &Multivector, n: &Multivector) -> Result<(Multivector, Multivector)> {
    let (m, n) = (line(m)?, line(n)?);
    Ok((&(&m | &n) * &n, &(&m ^ &n) * &n))
}
