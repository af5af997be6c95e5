//! Registry of every construction under a kebab-case name, for callers that
//! pick formulas at run time.

use std::fmt;

use super::{lines, plane, space, Separation};
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::motors;

/// Result of evaluating a catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(f64),
    Element(Multivector),
    /// A distance returned by the parallel fallback of an angle or distance row.
    Parallel(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(x) => f.write_str(&crate::text::format_number(*x)),
            Value::Element(m) => write!(f, "{m}"),
            Value::Parallel(d) => write!(f, "parallel, distance {}", crate::text::format_number(*d)),
        }
    }
}

/// Number of arguments a formula takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Exactly(usize),
    /// Any count of at least `min` that is a multiple of `step`.
    Many {
        min: usize,
        step: usize,
    },
}

impl Arity {
    fn accepts(self, n: usize) -> bool {
        match self {
            Arity::Exactly(k) => n == k,
            Arity::Many { min, step } => n >= min && n.is_multiple_of(step),
        }
    }
}

pub struct Formula {
    pub name: &'static str,
    pub sig: Signature,
    /// Argument names, in order; numbers are passed as scalars.
    pub params: &'static str,
    pub summary: &'static str,
    pub arity: Arity,
    run: fn(&[Multivector]) -> Result<Value>,
}

impl Formula {
    pub fn eval(&self, args: &[Multivector]) -> Result<Value> {
        if !self.arity.accepts(args.len()) {
            return Err(Error::Degenerate(format!("{} takes {}, got {} arguments", self.name, self.params, args.len())));
        }
        if let Some(bad) = args.iter().find(|a| a.sig() != self.sig) {
            return Err(Error::SignatureMismatch(self.sig, bad.sig()));
        }
        (self.run)(args)
    }
}

fn num(x: &Multivector) -> Result<f64> {
    if x.grade_part(0) != *x {
        return Err(Error::WrongGrade { expected: 0, found: x.dominant_grade(0.0).unwrap_or(0) });
    }
    Ok(x.scalar_part())
}

fn n(x: f64) -> Result<Value> {
    Ok(Value::Number(x))
}

fn el(x: Multivector) -> Result<Value> {
    Ok(Value::Element(x))
}

fn sep(s: Separation) -> Result<Value> {
    Ok(match s {
        Separation::Angle(a) => Value::Number(a),
        Separation::Parallel { distance } => Value::Parallel(distance),
    })
}

fn triangles(args: &[Multivector]) -> Vec<[Multivector; 3]> {
    args.chunks(3).map(|c| [c[0].clone(), c[1].clone(), c[2].clone()]).collect()
}

const P2: Signature = Signature::PLANE;
const P3: Signature = Signature::SPACE;

macro_rules! entry {
    ($name:literal, $sig:expr, $params:literal, $arity:expr, $summary:literal, $run:expr) => {
        Formula { name: $name, sig: $sig, params: $params, summary: $summary, arity: $arity, run: $run }
    };
}

use Arity::{Exactly as E, Many};

static CATALOG: &[Formula] = &[
    entry!("2d-intersection-point-of-two-lines", P2, "a b", E(2), "a ∧ b", |a| el(plane::intersect_lines(&a[0], &a[1])?)),
    entry!("2d-angle-of-two-intersecting-lines", P2, "a b", E(2), "acos(a · b), or the parallel distance", |a| sep(plane::separation_lines(
        &a[0], &a[1]
    )?)),
    entry!("2d-angle-of-two-intersecting-lines-via-meet", P2, "a b", E(2), "asin ‖a ∧ b‖", |a| n(plane::angle_lines_via_meet(&a[0], &a[1])?)),
    entry!("2d-distance-of-two-parallel-lines", P2, "a b", E(2), "‖a ∧ b‖∞", |a| n(plane::dist_parallel_lines(&a[0], &a[1])?)),
    entry!("2d-joining-line-of-two-points", P2, "P Q", E(2), "P ∨ Q", |a| el(plane::join_points(&a[0], &a[1])?)),
    entry!("2d-perpendicular-direction-to-join-of-two-points", P2, "P Q", E(2), "P × Q", |a| el(plane::perp_direction(&a[0], &a[1])?)),
    entry!("2d-distance-between-two-points", P2, "P Q", E(2), "‖P ∨ Q‖", |a| n(plane::dist_points(&a[0], &a[1])?)),
    entry!("2d-distance-between-two-points-via-commutator", P2, "P Q", E(2), "‖P × Q‖∞", |a| n(plane::dist_points_commutator(&a[0], &a[1])?)),
    entry!("2d-distance-between-two-points-via-difference", P2, "P Q", E(2), "‖P − Q‖∞", |a| n(plane::dist_points_difference(&a[0], &a[1])?)),
    entry!("2d-oriented-distance-point-to-line", P2, "a P", E(2), "‖a ∧ P‖", |a| n(plane::oriented_dist_point_line(&a[0], &a[1])?)),
    entry!("2d-angle-of-ideal-point-to-line", P2, "a V", E(2), "asin ‖a ∧ V‖∞", |a| n(plane::angle_ideal_point_line(&a[0], &a[1])?)),
    entry!("2d-line-through-point-perpendicular-to-line", P2, "P a", E(2), "P · a", |a| el(plane::perp_line_through_point(&a[0], &a[1])?)),
    entry!("2d-nearest-point-on-line-to-point", P2, "P a", E(2), "(P · a) a", |a| el(plane::nearest_point_on_line(&a[0], &a[1])?)),
    entry!("2d-line-through-point-parallel-to-line", P2, "P a", E(2), "(P · a) P", |a| el(plane::parallel_through_point(&a[0], &a[1])?)),
    entry!("2d-oriented-area-of-triangle", P2, "A B C", E(3), "½ (A ∨ B ∨ C)", |a| n(plane::triangle_area(&a[0], &a[1], &a[2])?)),
    entry!("2d-length-of-closed-loop", P2, "P1 P2 P3 ...", Many { min: 3, step: 1 }, "Σ ‖Pᵢ ∨ Pᵢ₊₁‖", |a| n(plane::loop_length(a)?)),
    entry!("2d-oriented-area-of-closed-loop", P2, "P1 P2 P3 ...", Many { min: 3, step: 1 }, "½ ‖Σ Pᵢ ∨ Pᵢ₊₁‖∞", |a| n(
        plane::loop_area(a)?
    )),
    entry!(
        "2d-oriented-area-of-closed-loop-literal",
        P2,
        "P1 P2 P3 ...",
        Many { min: 3, step: 1 },
        "‖Σ Pᵢ ∨ Pᵢ₊₁‖∞ (twice the area)",
        |a| n(plane::loop_area_literal(a)?)
    ),
    entry!("2d-reflection-in-line", P2, "a X", E(2), "a X a", |a| el(plane::reflect(&a[0], &a[1])?)),
    entry!("2d-rotation-around-point", P2, "P angle X", E(3), "R X R̃ with R = exp((angle/2) P)", |a| el(motors::sandwich(
        &plane::rotor_about_point(&a[0], num(&a[1])?)?,
        &a[2]
    )?)),
    entry!("2d-rotor-around-point", P2, "P angle", E(2), "exp((angle/2) P)", |a| el(plane::rotor_about_point(&a[0], num(&a[1])?)?)),
    entry!("2d-translation", P2, "V d X", E(3), "T X T̃ with T = 1 + (d/2) V", |a| el(motors::sandwich(
        &plane::translator(&a[0], num(&a[1])?)?,
        &a[2]
    )?)),
    entry!("2d-translator", P2, "V d", E(2), "1 + (d/2) V", |a| el(plane::translator(&a[0], num(&a[1])?)?)),
    entry!("2d-motor-moving-line-to-line", P2, "a1 a2", E(2), "√(a2 a1)", |a| el(plane::motor_between_lines(&a[0], &a[1])?)),
    entry!("2d-logarithm-of-motor", P2, "g", E(1), "acos(⟨g⟩₀) normalize(⟨g⟩₂)", |a| el(plane::log_rotor(&a[0])?)),
    entry!("3d-intersection-line-of-two-planes", P3, "a b", E(2), "a ∧ b", |a| el(space::meet_planes(&a[0], &a[1])?)),
    entry!("3d-angle-of-two-intersecting-planes", P3, "a b", E(2), "acos(a · b), or the parallel distance", |a| sep(space::separation_planes(
        &a[0], &a[1]
    )?)),
    entry!("3d-angle-of-two-intersecting-planes-via-meet", P3, "a b", E(2), "asin ‖a ∧ b‖", |a| n(space::angle_planes_via_meet(&a[0], &a[1])?)),
    entry!("3d-distance-of-two-parallel-planes", P3, "a b", E(2), "‖a ∧ b‖∞", |a| n(space::dist_parallel_planes(&a[0], &a[1])?)),
    entry!("3d-joining-line-of-two-points", P3, "P Q", E(2), "P ∨ Q", |a| el(space::join_points(&a[0], &a[1])?)),
    entry!("3d-intersection-point-of-three-planes", P3, "a b c", E(3), "a ∧ b ∧ c", |a| el(space::meet_three_planes(&a[0], &a[1], &a[2])?)),
    entry!("3d-joining-plane-of-three-points", P3, "P Q R", E(3), "P ∨ Q ∨ R", |a| el(space::join_three_points(&a[0], &a[1], &a[2])?)),
    entry!("3d-intersection-of-line-and-plane", P3, "L a", E(2), "Ω ∧ a", |a| el(space::meet_line_plane(&a[0], &a[1])?)),
    entry!("3d-joining-plane-of-point-and-line", P3, "P L", E(2), "P ∨ Ω", |a| el(space::join_point_line(&a[0], &a[1])?)),
    entry!("3d-distance-from-point-to-plane", P3, "a P", E(2), "‖a ∧ P‖", |a| n(space::dist_point_plane(&a[0], &a[1])?)),
    entry!("3d-angle-of-ideal-point-to-plane", P3, "a V", E(2), "asin ‖a ∧ V‖∞", |a| n(space::angle_ideal_point_plane(&a[0], &a[1])?)),
    entry!("3d-perpendicular-line-to-join-of-two-points", P3, "P Q", E(2), "P × Q", |a| el(space::perp_line_to_join(&a[0], &a[1])?)),
    entry!("3d-distance-of-two-points", P3, "P Q", E(2), "‖P ∨ Q‖", |a| n(space::dist_points(&a[0], &a[1])?)),
    entry!("3d-distance-of-two-points-via-commutator", P3, "P Q", E(2), "‖P × Q‖∞", |a| n(space::dist_points_commutator(&a[0], &a[1])?)),
    entry!("3d-distance-of-two-points-via-difference", P3, "P Q", E(2), "‖P − Q‖∞", |a| n(space::dist_points_difference(&a[0], &a[1])?)),
    entry!("3d-line-through-point-perpendicular-to-plane", P3, "P a", E(2), "P · a", |a| el(space::perp_line_point_plane(&a[0], &a[1])?)),
    entry!("3d-project-point-onto-plane", P3, "P a", E(2), "(P · a) a", |a| el(space::project_point_plane(&a[0], &a[1])?)),
    entry!("3d-project-plane-onto-point", P3, "P a", E(2), "(P · a) P", |a| el(space::project_plane_point(&a[0], &a[1])?)),
    entry!("3d-plane-through-line-perpendicular-to-plane", P3, "L a", E(2), "Ω · a", |a| el(space::plane_through_line_perp_plane(&a[0], &a[1])?)),
    entry!("3d-project-line-onto-plane", P3, "L a", E(2), "(Ω · a) a", |a| el(space::project_line_plane(&a[0], &a[1])?)),
    entry!("3d-project-plane-onto-line", P3, "L a", E(2), "(Ω · a) Ω", |a| el(space::project_plane_line(&a[0], &a[1])?)),
    entry!("3d-plane-through-point-perpendicular-to-line", P3, "P L", E(2), "P · Ω", |a| el(space::plane_through_point_perp_line(&a[0], &a[1])?)),
    entry!("3d-project-point-onto-line", P3, "P L", E(2), "(P · Ω) Ω", |a| el(space::project_point_line(&a[0], &a[1])?)),
    entry!("3d-project-line-onto-point", P3, "P L", E(2), "(P · Ω) P", |a| el(space::project_line_point(&a[0], &a[1])?)),
    entry!("3d-line-through-point-perpendicular-to-line", P3, "P L", E(2), "((P · Ω) Ω) ∨ P", |a| el(space::perp_line_through_point(
        &a[0], &a[1]
    )?)),
    entry!("3d-line-through-point-meeting-line-orthogonally", P3, "P L", E(2), "((Ω · P) ∧ Ω) ∨ P", |a| el(space::perpendicular_from_point(
        &a[0], &a[1]
    )?)),
    entry!("3d-oriented-volume-of-tetrahedron", P3, "A B C D", E(4), "(A ∨ B ∨ C ∨ D) / 6", |a| n(space::simplex_volume(
        &a[0], &a[1], &a[2], &a[3]
    )?)),
    entry!("3d-oriented-volume-of-tetrahedron-literal", P3, "A B C D", E(4), "⅓ (A ∨ B ∨ C ∨ D) (twice the volume)", |a| n(
        space::tetra_volume_literal(&a[0], &a[1], &a[2], &a[3])?
    )),
    entry!("3d-area-of-triangle-mesh", P3, "P11 P12 P13 ...", Many { min: 3, step: 3 }, "½ Σ ‖Pᵢ₁ ∨ Pᵢ₂ ∨ Pᵢ₃‖", |a| n(
        space::mesh_area(&triangles(a))?
    )),
    entry!(
        "3d-volume-of-closed-triangle-mesh",
        P3,
        "P11 P12 P13 ...",
        Many { min: 3, step: 3 },
        "‖Σ Pᵢ₁ ∨ Pᵢ₂ ∨ Pᵢ₃‖∞ / 6",
        |a| n(space::mesh_volume(&triangles(a))?)
    ),
    entry!(
        "3d-volume-of-closed-triangle-mesh-literal",
        P3,
        "P11 P12 P13 ...",
        Many { min: 3, step: 3 },
        "⅓ ‖Σ Pᵢ₁ ∨ Pᵢ₂ ∨ Pᵢ₃‖∞ (twice the volume)",
        |a| n(space::mesh_volume_literal(&triangles(a))?)
    ),
    entry!("3d-common-normal-line", P3, "L1 L2", E(2), "normalize(Ω₁ × Ω₂)", |a| el(lines::common_normal(&a[0], &a[1])?)),
    entry!("3d-angle-between-lines", P3, "L1 L2", E(2), "acos(−Ω̂₁ · Ω̂₂)", |a| n(lines::angle_between_lines(&a[0], &a[1])?)),
    entry!("3d-angle-between-lines-literal", P3, "L1 L2", E(2), "acos(Ω̂₁ · Ω̂₂)", |a| n(lines::angle_between_lines_literal(&a[0], &a[1])?)),
    entry!("3d-distance-between-lines", P3, "L1 L2", E(2), "csc α (Ω̂₁ ∨ Ω̂₂), or the parallel distance", |a| {
        Ok(match lines::dist_between_lines(&a[0], &a[1])? {
            lines::LineDistance::Skew { distance, .. } => Value::Number(distance),
            lines::LineDistance::Parallel { distance } => Value::Parallel(distance),
        })
    }),
    entry!("3d-reflection-in-plane", P3, "a X", E(2), "a X a", |a| el(lines::reflect_in_plane(&a[0], &a[1])?)),
    entry!("3d-rotation-around-axis", P3, "L angle X", E(3), "R X R̃ with R = exp((angle/2) Ω)", |a| el(motors::sandwich(
        &lines::rotor_about_axis(&a[0], num(&a[1])?)?,
        &a[2]
    )?)),
    entry!("3d-rotor-around-axis", P3, "L angle", E(2), "exp((angle/2) Ω)", |a| el(lines::rotor_about_axis(&a[0], num(&a[1])?)?)),
    entry!("3d-translation", P3, "V d X", E(3), "T X T̃ with T = 1 + (E0 ∨ (d/2) V) I", |a| el(motors::sandwich(
        &lines::translator(&a[0], num(&a[1])?)?,
        &a[2]
    )?)),
    entry!("3d-translator", P3, "V d", E(2), "1 + (E0 ∨ (d/2) V) I", |a| el(lines::translator(&a[0], num(&a[1])?)?)),
    entry!("3d-screw", P3, "L pitch t", E(3), "exp(t (1 + pI) Ω)", |a| el(lines::screw(&a[0], num(&a[1])?, num(&a[2])?)?)),
    entry!("3d-logarithm-of-motor", P3, "m", E(1), "(atan(s/⟨m⟩₀) + (p/⟨m⟩₀) I) b̂", |a| el(motors::log_motor_closed_form(&a[0])?)),
    entry!("3d-motor-moving-line-to-line", P3, "L1 L2", E(2), "√(Ω₂ Ω₁⁻¹)", |a| el(motors::motor_between(&a[0], &a[1])?)),
];

pub fn all() -> &'static [Formula] {
    CATALOG
}

pub fn find(name: &str) -> Option<&'static Formula> {
    CATALOG.iter().find(|f| f.name == name)
}
