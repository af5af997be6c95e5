//! Constructions with points, lines and planes in euclidean space,
//! P(R*(3,0,1)).

use super::{expect, ideal_or_zero, norm_or_zero, require, signed_ideal_or_zero, Separation, Tag};
use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::norms;
use crate::pga3d::SIG;

fn plane(a: &Multivector) -> Result<Multivector> {
    require(SIG, &[a])?;
    expect(a, Tag::Plane)
}

fn line(l: &Multivector) -> Result<Multivector> {
    require(SIG, &[l])?;
    expect(l, Tag::Line)
}

fn point(p: &Multivector) -> Result<Multivector> {
    require(SIG, &[p])?;
    expect(p, Tag::Point)
}

/// Intersection line `a ∧ b` of two planes.
pub fn meet_planes(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    Ok(&plane(a)? ^ &plane(b)?)
}

/// `acos(a·b)`.
pub fn angle_planes(a: &Multivector, b: &Multivector) -> Result<f64> {
    Ok((&plane(a)? | &plane(b)?).scalar_part().clamp(-1.0, 1.0).acos())
}

/// `asin ‖a∧b‖`.
pub fn angle_planes_via_meet(a: &Multivector, b: &Multivector) -> Result<f64> {
    Ok(norms::square(&meet_planes(a, b)?).abs().sqrt().min(1.0).asin())
}

/// `‖a∧b‖∞` for parallel planes.
pub fn dist_parallel_planes(a: &Multivector, b: &Multivector) -> Result<f64> {
    let meet = meet_planes(a, b)?;
    if !meet.is_zero() && !norms::is_ideal(&meet) {
        return Err(Error::Degenerate("planes intersect".into()));
    }
    ideal_or_zero(&meet)
}

/// Angle for meeting planes, distance for parallel ones.
pub fn separation_planes(a: &Multivector, b: &Multivector) -> Result<Separation> {
    let meet = meet_planes(a, b)?;
    if meet.is_zero() || norms::is_ideal(&meet) {
        Ok(Separation::Parallel { distance: ideal_or_zero(&meet)? })
    } else {
        angle_planes(a, b).map(Separation::Angle)
    }
}

/// Joining line `P ∨ Q`.
pub fn join_points(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? & &point(q)?)
}

/// Intersection point `a ∧ b ∧ c` of three planes.
pub fn meet_three_planes(a: &Multivector, b: &Multivector, c: &Multivector) -> Result<Multivector> {
    Ok(&(&plane(a)? ^ &plane(b)?) ^ &plane(c)?)
}

/// Joining plane `P ∨ Q ∨ R` of three points.
pub fn join_three_points(p: &Multivector, q: &Multivector, r: &Multivector) -> Result<Multivector> {
    Ok(&(&point(p)? & &point(q)?) & &point(r)?)
}

/// Intersection point `Ω ∧ a` of a line and a plane.
pub fn meet_line_plane(l: &Multivector, a: &Multivector) -> Result<Multivector> {
    Ok(&line(l)? ^ &plane(a)?)
}

/// Joining plane `P ∨ Ω` of a point and a line.
pub fn join_point_line(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? & &line(l)?)
}

/// Oriented distance `‖a ∧ P‖` from a point to a plane.
pub fn dist_point_plane(a: &Multivector, p: &Multivector) -> Result<f64> {
    signed_ideal_or_zero(&(&plane(a)? ^ &point(p)?))
}

/// `asin ‖a ∧ V‖∞` for an ideal point `V`.
pub fn angle_ideal_point_plane(a: &Multivector, v: &Multivector) -> Result<f64> {
    require(SIG, &[v])?;
    let v = expect(v, Tag::IdealPoint)?;
    Ok(ideal_or_zero(&(&plane(a)? ^ &v))?.min(1.0).asin())
}

/// Ideal line `P × Q` perpendicular to the join of two points.
pub fn perp_line_to_join(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    point(p)?.commutator(&point(q)?)
}

/// `‖P ∨ Q‖`.
pub fn dist_points(p: &Multivector, q: &Multivector) -> Result<f64> {
    norm_or_zero(&join_points(p, q)?)
}

/// `‖P × Q‖∞`.
pub fn dist_points_commutator(p: &Multivector, q: &Multivector) -> Result<f64> {
    ideal_or_zero(&perp_line_to_join(p, q)?)
}

/// `‖P − Q‖∞`.
pub fn dist_points_difference(p: &Multivector, q: &Multivector) -> Result<f64> {
    ideal_or_zero(&(&point(p)? - &point(q)?))
}

/// Line `P · a` through a point perpendicular to a plane.
pub fn perp_line_point_plane(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? | &plane(a)?)
}

/// Projection `(P · a) a` of a point onto a plane.
pub fn project_point_plane(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    let a = plane(a)?;
    Ok(&(&point(p)? | &a) * &a)
}

/// Plane `(P · a) P` through a point parallel to a plane.
pub fn project_plane_point(p: &Multivector, a: &Multivector) -> Result<Multivector> {
    let p = point(p)?;
    Ok(&(&p | &plane(a)?) * &p)
}

/// Plane `Ω · a` through a line perpendicular to a plane.
pub fn plane_through_line_perp_plane(l: &Multivector, a: &Multivector) -> Result<Multivector> {
    Ok(&line(l)? | &plane(a)?)
}

/// Projection `(Ω · a) a` of a line onto a plane.
pub fn project_line_plane(l: &Multivector, a: &Multivector) -> Result<Multivector> {
    let a = plane(a)?;
    Ok(&(&line(l)? | &a) * &a)
}

/// Plane `(Ω · a) Ω` through a line, perpendicular to the plane `Ω · a`.
pub fn project_plane_line(l: &Multivector, a: &Multivector) -> Result<Multivector> {
    let l = line(l)?;
    Ok(&(&l | &plane(a)?) * &l)
}

/// Plane `P · Ω` through a point perpendicular to a line.
pub fn plane_through_point_perp_line(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    Ok(&point(p)? | &line(l)?)
}

/// Projection `(P · Ω) Ω` of a point onto a line.
pub fn project_point_line(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    let l = line(l)?;
    Ok(&(&point(p)? | &l) * &l)
}

/// Line `(P · Ω) P` through a point parallel to a line.
pub fn project_line_point(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    let p = point(p)?;
    Ok(&(&p | &line(l)?) * &p)
}

/// Line `((P · Ω) Ω) ∨ P` through a point meeting a line at a right angle.
pub fn perp_line_through_point(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    Ok(&project_point_line(p, l)? & &point(p)?)
}

/// The same line built from the point side: `((Ω · P) ∧ Ω) ∨ P`.
pub fn perpendicular_from_point(p: &Multivector, l: &Multivector) -> Result<Multivector> {
    let (p, l) = (point(p)?, line(l)?);
    if (&l & &p).max_abs() <= 1e-12 {
        return Err(Error::Degenerate("point lies on the line".into()));
    }
    Ok(&(&(&l | &p) ^ &l) & &p)
}

/// `A ∨ B ∨ C ∨ D`, six times the oriented volume of the tetrahedron.
fn tetra_join(a: &Multivector, b: &Multivector, c: &Multivector, d: &Multivector) -> Result<f64> {
    Ok((&(&(&point(a)? & &point(b)?) & &point(c)?) & &point(d)?).scalar_part())
}

/// `⅓ (A ∨ B ∨ C ∨ D)` taken literally; twice the volume.
pub fn tetra_volume_literal(a: &Multivector, b: &Multivector, c: &Multivector, d: &Multivector) -> Result<f64> {
    Ok(tetra_join(a, b, c, d)? / 3.0)
}

/// Oriented volume `(A ∨ B ∨ C ∨ D) / 6`.
pub fn simplex_volume(a: &Multivector, b: &Multivector, c: &Multivector, d: &Multivector) -> Result<f64> {
    Ok(tetra_join(a, b, c, d)? / 6.0)
}

fn face_planes(mesh: &[[Multivector; 3]]) -> Result<Vec<Multivector>> {
    if mesh.is_empty() {
        return Err(Error::Degenerate("empty mesh".into()));
    }
    mesh.iter().map(|[p, q, r]| join_three_points(p, q, r)).collect()
}

/// `½ Σ ‖P₁ ∨ P₂ ∨ P₃‖` over triangles.
pub fn mesh_area(mesh: &[[Multivector; 3]]) -> Result<f64> {
    Ok(0.5 * face_planes(mesh)?.iter().map(norm_or_zero).sum::<Result<f64>>()?)
}

/// Signed ideal norm of the summed face planes. Faces wound counterclockwise
/// seen from outside have offsets `−n·x`, so the sum is negated to make such
/// meshes positive.
fn mesh_plane_sum(mesh: &[[Multivector; 3]]) -> Result<f64> {
    let total = face_planes(mesh)?.into_iter().fold(Multivector::zero(SIG), |acc, f| &acc + &f);
    Ok(-signed_ideal_or_zero(&total)?)
}

/// `⅓ ‖Σ P₁ ∨ P₂ ∨ P₃‖∞` taken literally; twice the volume.
pub fn mesh_volume_literal(mesh: &[[Multivector; 3]]) -> Result<f64> {
    Ok(mesh_plane_sum(mesh)? / 3.0)
}

/// Oriented volume of a closed triangle mesh, `‖Σ P₁ ∨ P₂ ∨ P₃‖∞ / 6`.
pub fn mesh_volume(mesh: &[[Multivector; 3]]) -> Result<f64> {
    Ok(mesh_plane_sum(mesh)? / 6.0)
}

/// The twelve outward triangles of the axis-aligned box `[lo, hi]`.
pub fn box_mesh(lo: [f64; 3], hi: [f64; 3]) -> Vec<[Multivector; 3]> {
    let corner = |i: usize| {
        crate::pga3d::point(if i & 1 == 0 { lo[0] } else { hi[0] }, if i & 2 == 0 { lo[1] } else { hi[1] }, if i & 4 == 0 { lo[2] } else { hi[2] })
    };
    // Quads listed counterclockwise when seen from outside.
    let quads = [[0, 2, 3, 1], [4, 5, 7, 6], [0, 1, 5, 4], [2, 6, 7, 3], [0, 4, 6, 2], [1, 3, 7, 5]];
    quads.iter().flat_map(|q| [[q[0], q[1], q[2]], [q[0], q[2], q[3]]]).map(|t| [corner(t[0]), corner(t[1]), corner(t[2])]).collect()
}
