//! Named euclidean constructions in the plane and in space.
//!
//! Every function normalizes its arguments first, so callers can pass
//! points and hyperplanes with arbitrary weight. Scalar-valued constructions
//! return `f64`; the rest return multivectors.

pub mod catalog;
pub mod lines;
pub mod plane;
pub mod space;

use std::fmt;

use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::norms;

/// Geometric role of a homogeneous element of the plane or space algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Scalar,
    Point,
    IdealPoint,
    Line,
    IdealLine,
    Plane,
    IdealPlane,
    Pseudoscalar,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Scalar => "scalar",
            Tag::Point => "point",
            Tag::IdealPoint => "ideal-point",
            Tag::Line => "line",
            Tag::IdealLine => "ideal-line",
            Tag::Plane => "plane",
            Tag::IdealPlane => "ideal-plane",
            Tag::Pseudoscalar => "pseudoscalar",
        })
    }
}

/// A multivector together with its classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Entity {
    pub tag: Tag,
    pub mv: Multivector,
}

impl Entity {
    /// Classifies by grade and ideality: in the plane lines are 1-vectors
    /// and points 2-vectors; in space planes, lines and points have grades
    /// 1, 2 and 3.
    pub fn classify(mv: Multivector) -> Result<Entity> {
        let sig = mv.sig();
        if sig != Signature::PLANE && sig != Signature::SPACE {
            return Err(Error::UnsupportedSignature(sig));
        }
        if mv.is_zero() {
            return Err(Error::ZeroElement);
        }
        let grade = mv.dominant_grade(norms::GRADE_NOISE).ok_or(Error::NotHomogeneous)?;
        let ideal = norms::is_ideal(&mv);
        let space = sig == Signature::SPACE;
        let tag = match (grade, space, ideal) {
            (0, ..) => Tag::Scalar,
            (3, false, _) => Tag::Pseudoscalar,
            (4, true, _) => Tag::Pseudoscalar,
            (1, false, false) => Tag::Line,
            (1, false, true) => Tag::IdealLine,
            (2, false, false) | (3, true, false) => Tag::Point,
            (2, false, true) | (3, true, true) => Tag::IdealPoint,
            (1, true, false) => Tag::Plane,
            (1, true, true) => Tag::IdealPlane,
            (2, true, false) => Tag::Line,
            (2, true, true) => Tag::IdealLine,
            _ => unreachable!("grades are bounded by the signature"),
        };
        Ok(Entity { tag, mv })
    }
}

/// Angle between two elements that meet, or separation of parallel ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Separation {
    Angle(f64),
    Parallel { distance: f64 },
}

pub(crate) fn require(sig: Signature, args: &[&Multivector]) -> Result<()> {
    for a in args {
        if a.sig() != sig {
            return Err(Error::SignatureMismatch(sig, a.sig()));
        }
    }
    Ok(())
}

pub(crate) fn expect(x: &Multivector, tag: Tag) -> Result<Multivector> {
    let e = Entity::classify(x.clone())?;
    if e.tag != tag {
        return Err(Error::Degenerate(format!("expected {tag}, got {}", e.tag)));
    }
    norms::normalize(x)
}

/// Euclidean norm, with zero for a vanishing argument.
pub(crate) fn norm_or_zero(x: &Multivector) -> Result<f64> {
    if x.max_abs() < 1e-300 {
        Ok(0.0)
    } else {
        norms::euclidean_norm(x)
    }
}

/// Unsigned ideal norm, with zero for a vanishing argument.
pub(crate) fn ideal_or_zero(x: &Multivector) -> Result<f64> {
    if x.max_abs() < 1e-300 {
        Ok(0.0)
    } else {
        norms::ideal_magnitude(x)
    }
}

/// Signed ideal norm, with zero for a vanishing argument.
pub(crate) fn signed_ideal_or_zero(x: &Multivector) -> Result<f64> {
    if x.max_abs() < 1e-300 {
        Ok(0.0)
    } else {
        norms::ideal_norm(x)
    }
}
