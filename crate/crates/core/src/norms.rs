//! Euclidean and ideal norms, normalization and dual numbers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Blade, Multivector, Signature};
use crate::error::{Error, Result};

/// `|x²| ≤ IDEAL_THRESHOLD · max|coeff|²` classifies `x` as ideal.
pub const IDEAL_THRESHOLD: f64 = 1e-10;

/// Relative off-grade noise tolerated when classifying an element's grade.
pub const GRADE_NOISE: f64 = 1e-9;

/// Dual number `s + pI` with `I² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualNumber {
    pub s: f64,
    pub p: f64,
}

impl DualNumber {
    pub const ZERO: DualNumber = DualNumber { s: 0.0, p: 0.0 };
    pub const ONE: DualNumber = DualNumber { s: 1.0, p: 0.0 };

    pub fn new(s: f64, p: f64) -> Self {
        DualNumber { s, p }
    }

    /// `√(s + pI) = √s + p/(2√s) I`, defined for `s > 0`.
    pub fn sqrt(self) -> Result<Self> {
        if self.s <= 0.0 {
            return Err(Error::DualNotInvertible { s: self.s, p: self.p });
        }
        let r = self.s.sqrt();
        Ok(DualNumber { s: r, p: self.p / (2.0 * r) })
    }

    /// `(u + vI)⁻¹ = 1/u − (v/u²) I`, defined for `u ≠ 0`.
    pub fn inverse(self) -> Result<Self> {
        if self.s == 0.0 {
            return Err(Error::DualNotInvertible { s: self.s, p: self.p });
        }
        Ok(DualNumber { s: 1.0 / self.s, p: -self.p / (self.s * self.s) })
    }

    /// Reads the scalar and pseudoscalar coefficients of `x`.
    pub fn from_multivector(x: &Multivector) -> Self {
        DualNumber { s: x.scalar_part(), p: x.pseudoscalar_part() }
    }

    pub fn to_multivector(self, sig: Signature) -> Multivector {
        let mut out = Multivector::scalar(sig, self.s);
        out.set(Blade(sig.pseudoscalar_bits()), self.p);
        out
    }

    /// Multiplies a multivector by `s + pI`.
    pub fn scale(self, x: &Multivector) -> Multivector {
        let i = Multivector::pseudoscalar(x.sig());
        &(x * self.s) + &(&(x * &i) * self.p)
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, rhs: DualNumber) -> DualNumber {
        DualNumber { s: self.s + rhs.s, p: self.p + rhs.p }
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    fn sub(self, rhs: DualNumber) -> DualNumber {
        DualNumber { s: self.s - rhs.s, p: self.p - rhs.p }
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    fn mul(self, rhs: DualNumber) -> DualNumber {
        DualNumber { s: self.s * rhs.s, p: self.s * rhs.p + self.p * rhs.s }
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> DualNumber {
        DualNumber { s: -self.s, p: -self.p }
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}I", crate::text::format_number(self.s), crate::text::format_number(self.p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    Euclidean,
    Ideal,
}

/// A norm tagged with the branch that produced it. Euclidean values are
/// nonnegative; ideal values are signed for ideal hyperplanes and
/// pseudoscalars, where the coefficient space is one-dimensional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Norm {
    pub kind: NormKind,
    pub value: f64,
}

/// Scalar part of `x²`.
pub fn square(x: &Multivector) -> f64 {
    (x * x).scalar_part()
}

/// True when `x²` vanishes relative to the size of `x`.
pub fn is_ideal(x: &Multivector) -> bool {
    let scale = x.max_abs();
    square(x).abs() <= IDEAL_THRESHOLD * scale * scale
}

fn check_homogeneous(x: &Multivector) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    x.dominant_grade(GRADE_NOISE).ok_or(Error::NotHomogeneous)
}

/// `‖x‖ = √|x²|` for a euclidean k-vector.
pub fn euclidean_norm(x: &Multivector) -> Result<f64> {
    check_homogeneous(x)?;
    if is_ideal(x) {
        return Err(Error::IdealElement);
    }
    Ok(square(x).abs().sqrt())
}

/// Nonnegative ideal norm `‖J(x)‖` of an ideal k-vector.
pub fn ideal_magnitude(x: &Multivector) -> Result<f64> {
    check_homogeneous(x)?;
    if !is_ideal(x) {
        return Err(Error::EuclideanElement);
    }
    let j = x.poincare_dual();
    Ok((&j * &j.reverse()).scalar_part().abs().sqrt())
}

/// Ideal norm computed through `J`. Signed for ideal hyperplanes (`c e0`
/// gives `c`) and pseudoscalars (`aI` gives `a`), nonnegative otherwise.
pub fn ideal_norm(x: &Multivector) -> Result<f64> {
    let magnitude = ideal_magnitude(x)?;
    let grade = check_homogeneous(x)?;
    let sig = x.sig();
    let full = sig.pseudoscalar_bits();
    let signed_blade = if grade == sig.generators() {
        Some(0)
    } else if grade == 1 && sig.z() == 1 {
        Some(full ^ 1)
    } else {
        None
    };
    Ok(match signed_blade {
        Some(bits) => {
            let c = x.poincare_dual().get(Blade(bits));
            if c < 0.0 {
                -magnitude
            } else {
                magnitude
            }
        }
        None => magnitude,
    })
}

/// Euclidean norm when it exists, otherwise the ideal norm.
pub fn norm(x: &Multivector) -> Result<Norm> {
    check_homogeneous(x)?;
    if is_ideal(x) {
        Ok(Norm { kind: NormKind::Ideal, value: ideal_norm(x)? })
    } else {
        Ok(Norm { kind: NormKind::Euclidean, value: euclidean_norm(x)? })
    }
}

/// Divides by the euclidean norm, or by the ideal magnitude for ideal
/// elements. Euclidean points of the dual euclidean algebras are oriented so
/// their `E0` coefficient is positive.
pub fn normalize(x: &Multivector) -> Result<Multivector> {
    let grade = check_homogeneous(x)?;
    let sig = x.sig();
    let ideal = is_ideal(x);
    let n = if ideal { ideal_magnitude(x)? } else { euclidean_norm(x)? };
    if n == 0.0 {
        return Err(Error::ZeroElement);
    }
    let mut out = x / n;
    let origin = Blade(sig.pseudoscalar_bits() ^ 1);
    if !ideal && sig.is_dual_euclidean() && grade == sig.dim() && out.get(origin) < 0.0 {
        out = -out;
    }
    Ok(out)
}

/// Normalizes a euclidean element, rejecting ideal input.
pub fn normalize_euclidean(x: &Multivector) -> Result<Multivector> {
    euclidean_norm(x)?;
    normalize(x)
}
