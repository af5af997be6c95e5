//! Versors, sandwiches, bivector axes and the motor exponential, logarithm
//! and square root in the euclidean plane and space.

use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::norms::{self, DualNumber};

/// `gg̃` must be scalar to this relative precision for `g` to act as a versor.
const VERSOR_TOL: f64 = 1e-9;

fn check_euclidean(sig: Signature) -> Result<()> {
    if sig == Signature::PLANE || sig == Signature::SPACE {
        Ok(())
    } else {
        Err(Error::UnsupportedSignature(sig))
    }
}

fn check_grade(x: &Multivector, grade: usize) -> Result<()> {
    match x.dominant_grade(norms::GRADE_NOISE) {
        None if x.is_zero() => Ok(()),
        Some(g) if g == grade => Ok(()),
        Some(g) => Err(Error::WrongGrade { expected: grade, found: g }),
        None => Err(Error::NotHomogeneous),
    }
}

/// `g X g̃ / (g g̃)`: the isometry of a versor applied to `x`.
pub fn sandwich(g: &Multivector, x: &Multivector) -> Result<Multivector> {
    let rev = g.reverse();
    let n = g.geometric_product(&rev)?;
    let s = n.scalar_part();
    let scale = g.max_abs() * g.max_abs();
    let off_scalar = (&n - &Multivector::scalar(n.sig(), s)).max_abs();
    if s.abs() <= 1e-14 * scale || off_scalar > VERSOR_TOL * s.abs() {
        return Err(Error::NotVersor);
    }
    let out = g.geometric_product(x)?.geometric_product(&rev)?;
    Ok(out / s)
}

/// Reflection `a X a` in a normalized hyperplane `a`.
pub fn reflect(a: &Multivector, x: &Multivector) -> Multivector {
    a * x * a
}

/// Dual norm `‖B‖ = √(−B²) = u + vI` of a bivector; in the plane `v = 0`.
fn bivector_dual_square(b: &Multivector) -> DualNumber {
    let bb = b * b;
    let p = if b.sig().generators().is_multiple_of(2) { bb.pseudoscalar_part() } else { 0.0 };
    DualNumber::new(bb.scalar_part(), p)
}

/// Axis pair of a bivector with a euclidean part: `B = u B̂ + v B̂⊥` where
/// `B̂² = −1`, `B̂⊥ = B̂ I`, and the two commute.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisDecomposition {
    pub u: f64,
    pub v: f64,
    pub axis: Multivector,
    pub axis_perp: Multivector,
}

impl AxisDecomposition {
    pub fn reconstruct(&self) -> Multivector {
        &(&self.axis * self.u) + &(&self.axis_perp * self.v)
    }

    /// Pitch `v : u` of the corresponding screw.
    pub fn pitch(&self) -> f64 {
        self.v / self.u
    }
}

/// Splits a bivector of space into its euclidean axis and ideal polar axis.
pub fn axis_decompose(b: &Multivector) -> Result<AxisDecomposition> {
    if b.sig() != Signature::SPACE {
        return Err(Error::UnsupportedSignature(b.sig()));
    }
    check_grade(b, 2)?;
    if b.is_zero() || norms::is_ideal(b) {
        return Err(Error::IdealBivector);
    }
    let sq = bivector_dual_square(b);
    if sq.s >= 0.0 {
        return Err(Error::Degenerate("bivector with nonnegative square".into()));
    }
    let norm = DualNumber::new(-sq.s, -sq.p).sqrt()?;
    let axis = norm.inverse()?.scale(b);
    let axis_perp = &axis * &Multivector::pseudoscalar(b.sig());
    Ok(AxisDecomposition { u: norm.s, v: norm.p, axis, axis_perp })
}

fn sinc(u: f64) -> f64 {
    if u.abs() < 1e-4 {
        1.0 - u * u / 6.0
    } else {
        u.sin() / u
    }
}

/// `(cos u − sinc u) / u²`, which tends to `−1/3`.
fn cos_minus_sinc_over_sq(u: f64) -> f64 {
    if u.abs() < 1e-2 {
        let u2 = u * u;
        -1.0 / 3.0 + u2 / 30.0 - u2 * u2 / 840.0
    } else {
        (u.cos() - u.sin() / u) / (u * u)
    }
}

/// Exponential of a bivector.
///
/// Ideal bivectors give `1 + B`. In general, with `‖B‖ = u + vI`, the result
/// is `(cos u − v sin u I) + (sin u + v cos u I) B̂`, evaluated with the dual
/// inverse in `B̂` expanded so that small `u` stays well conditioned.
pub fn exp_bivector(b: &Multivector) -> Result<Multivector> {
    check_euclidean(b.sig())?;
    check_grade(b, 2)?;
    let sig = b.sig();
    let sq = bivector_dual_square(b);
    let u = (-sq.s).max(0.0).sqrt();
    let half_p = -0.5 * sq.p;
    let s = sinc(u);
    let mut out = b * s;
    out.set(crate::algebra::Blade::SCALAR, u.cos());
    if sig.generators().is_multiple_of(2) && half_p != 0.0 {
        let i = Multivector::pseudoscalar(sig);
        // ‖B‖² = −B², so p here is the I-coefficient of ‖B‖², i.e. −(B∧B).
        out += &(&i * (-half_p * s));
        out += &(&(b * &i) * (half_p * cos_minus_sinc_over_sq(u)));
    }
    Ok(out)
}

/// Divides an even element by `√(m m̃)` using the dual-number square root.
pub fn normalize_motor(m: &Multivector) -> Result<Multivector> {
    check_euclidean(m.sig())?;
    let n = m * &m.reverse();
    let nn = DualNumber::new(n.scalar_part(), if m.sig().generators().is_multiple_of(2) { n.pseudoscalar_part() } else { 0.0 });
    if nn.s <= 1e-14 * m.max_abs() * m.max_abs() {
        return Err(Error::NotVersor);
    }
    Ok(nn.sqrt()?.inverse()?.scale(m))
}

/// Logarithm of a normalized motor: returns `(u + vI) B̂` with
/// `exp(log m) = m`, where `u = atan2(s2, s1) ∈ [0, π]` from the split
/// `m = (s1 + p1 I) + (s2 + p2 I) B̂`. The dual weight `v` is `p2/s1`, or
/// `−p1/s2` when `|s1| < |s2|`.
pub fn log_motor(m: &Multivector) -> Result<Multivector> {
    check_euclidean(m.sig())?;
    let sig = m.sig();
    let space = sig == Signature::SPACE;
    let s1 = m.scalar_part();
    let p1 = if space { m.pseudoscalar_part() } else { 0.0 };
    let b = m.grade_part(2);
    let scale = m.max_abs();
    if b.max_abs() <= 1e-15 * scale {
        return if s1 > 0.0 { Ok(Multivector::zero(sig)) } else { Err(Error::AxisUndetermined) };
    }
    if norms::is_ideal(&b) {
        if s1.abs() <= 1e-12 * scale {
            return Err(Error::AxisUndetermined);
        }
        return Ok(&b / s1);
    }
    let sq = bivector_dual_square(&b);
    let norm = DualNumber::new(-sq.s, -sq.p).sqrt()?;
    let (s2, p2) = (norm.s, norm.p);
    if s1 == 0.0 && s2 == 0.0 {
        return Err(Error::AxisUndetermined);
    }
    let axis = norm.inverse()?.scale(&b);
    let u = s2.atan2(s1);
    if !space {
        return Ok(&axis * u);
    }
    let v = if s1.abs() >= s2.abs() { p2 / s1 } else { -p1 / s2 };
    Ok(DualNumber::new(u, v).scale(&axis))
}

/// The alternative logarithm in closed form: with `b = ⟨m⟩₂`,
/// `s = √(−b·b)`, `p = −(b∧b)/(2s)` and `b̂ = (s − pI)/s² b`,
/// `log m = (atan(s/⟨m⟩₀) + (p/⟨m⟩₀) I) b̂`.
///
/// Uses `atan` rather than `atan2`, so for `⟨m⟩₀ < 0` it returns the
/// logarithm of `−m`.
pub fn log_motor_closed_form(m: &Multivector) -> Result<Multivector> {
    if m.sig() != Signature::SPACE {
        return Err(Error::UnsupportedSignature(m.sig()));
    }
    let b = m.grade_part(2);
    let m0 = m.scalar_part();
    if m0 == 0.0 {
        return Err(Error::Degenerate("motor with zero scalar part".into()));
    }
    let s = (-b.inner(&b)?.scalar_part()).max(0.0).sqrt();
    if s <= 1e-12 * b.max_abs() || b.is_zero() {
        return Err(Error::IdealBivector);
    }
    let p = -b.wedge(&b)?.pseudoscalar_part() / (2.0 * s);
    let b_hat = DualNumber::new(s / (s * s), -p / (s * s)).scale(&b);
    Ok(DualNumber::new((s / m0).atan(), p / m0).scale(&b_hat))
}

/// `√g = normalize(1 + g)` for a normalized motor `g ≠ −1`.
pub fn sqrt_motor(g: &Multivector) -> Result<Multivector> {
    check_euclidean(g.sig())?;
    let one_plus = &Multivector::scalar(g.sig(), 1.0) + g;
    if one_plus.max_abs() <= 1e-12 * g.max_abs().max(1.0) {
        return Err(Error::HalfTurn);
    }
    normalize_motor(&one_plus).map_err(|_| Error::HalfTurn)
}

/// Motor carrying `from` onto `to` (planes, lines of the plane, or lines of
/// space): `√(to · from⁻¹)`. For hyperplanes `from⁻¹ = from`, giving the
/// familiar `√(to·from)`; for lines of space `from² = −1` flips the sign.
pub fn motor_between(from: &Multivector, to: &Multivector) -> Result<Multivector> {
    check_euclidean(from.sig())?;
    let a = norms::normalize_euclidean(from)?;
    let b = norms::normalize_euclidean(to)?;
    let a_sq = norms::square(&a);
    let g = &(&b * &a) * a_sq.signum();
    sqrt_motor(&normalize_motor(&g)?)
}

/// The common plane and point of two intersecting lines of space.
#[derive(Debug, Clone, PartialEq)]
pub struct Intersection {
    pub plane: Multivector,
    pub point: Multivector,
}

/// Grade split of the product of two normalized lines of space,
/// `ΩΣ = cos α + (sin α Π + d cos α Π⊥) + d sin α I`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineProduct {
    pub cos_alpha: f64,
    pub alpha: f64,
    /// Oriented distance along the common normal.
    pub distance: f64,
    /// Normalized common normal; `None` when the lines are parallel.
    pub common_normal: Option<Multivector>,
    pub bivector_part: Multivector,
    /// Coefficient of `I` in the product.
    pub pseudoscalar: f64,
    /// Present when the lines meet (`Ω ∧ Σ = 0`) at a euclidean point.
    pub intersection: Option<Intersection>,
}

/// Decomposes `ΩΣ` into angle, distance and common normal.
///
/// The angle is measured so that `ΩΣ = −1` for equal lines; the returned
/// `cos_alpha` is `⟨ΩΣ⟩₀` taken literally, and `alpha ∈ [0, π]`.
pub fn line_product_decompose(omega: &Multivector, sigma: &Multivector) -> Result<LineProduct> {
    if omega.sig() != Signature::SPACE {
        return Err(Error::UnsupportedSignature(omega.sig()));
    }
    check_grade(omega, 2)?;
    check_grade(sigma, 2)?;
    let o = norms::normalize_euclidean(omega)?;
    let s = norms::normalize_euclidean(sigma)?;
    let prod = &o * &s;
    let cos_alpha = prod.scalar_part();
    let pseudoscalar = prod.pseudoscalar_part();
    let bivector_part = prod.grade_part(2);
    let scale = prod.max_abs();
    let (alpha, distance, common_normal) = if bivector_part.max_abs() <= 1e-12 * scale || norms::is_ideal(&bivector_part) {
        // Parallel lines: ΩΣ = cos α + d' Π⊥ with Π ideal.
        let alpha = cos_alpha.clamp(-1.0, 1.0).acos();
        let d = if bivector_part.is_zero() { 0.0 } else { norms::ideal_magnitude(&bivector_part)? };
        (alpha, d, None)
    } else {
        let axis = axis_decompose(&bivector_part)?;
        let alpha = axis.u.atan2(cos_alpha);
        let d = if alpha.sin().abs() >= alpha.cos().abs() { pseudoscalar / alpha.sin() } else { axis.v / alpha.cos() };
        (alpha, d, Some(axis.axis))
    };
    let meet = &o ^ &s;
    let intersection = match &common_normal {
        Some(normal) if meet.max_abs() <= 1e-10 => {
            let e0 = Multivector::generator(Signature::SPACE, 0);
            let plane = &(&o ^ &e0) & &s;
            let point = &(&(normal ^ &e0) & &o) ^ &s;
            Some(Intersection { plane, point })
        }
        _ => None,
    };
    Ok(LineProduct { cos_alpha, alpha, distance, common_normal, bivector_part, pseudoscalar, intersection })
}

/// Images of `x` under the reflection group generated by mirrors `a` and
/// `b`: all `(ba)^j x (ba)^-j` and `(ba)^j (a x a) (ba)^-j` for `j < k`.
pub fn kaleidoscope(a: &Multivector, b: &Multivector, x: &Multivector, k: usize) -> Vec<Multivector> {
    let r = b * a;
    let mirrored = reflect(a, x);
    let mut out = Vec::with_capacity(2 * k);
    let mut power = Multivector::scalar(a.sig(), 1.0);
    for _ in 0..k {
        let rev = power.reverse();
        out.push(&power * x * &rev);
        out.push(&power * &mirrored * &rev);
        power = &r * &power;
    }
    out
}

/// A normalized even element acting by sandwich.
#[derive(Debug, Clone, PartialEq)]
pub struct Motor(Multivector);

impl Motor {
    /// Normalizes an even element of the plane or space algebra.
    pub fn new(mv: Multivector) -> Result<Motor> {
        if !mv.is_even() {
            return Err(Error::NotVersor);
        }
        normalize_motor(&mv).map(Motor)
    }

    pub fn identity(sig: Signature) -> Result<Motor> {
        check_euclidean(sig)?;
        Ok(Motor(Multivector::scalar(sig, 1.0)))
    }

    pub fn exp(bivector: &Multivector) -> Result<Motor> {
        exp_bivector(bivector).map(Motor)
    }

    pub fn log(&self) -> Result<Multivector> {
        log_motor(&self.0)
    }

    pub fn sqrt(&self) -> Result<Motor> {
        sqrt_motor(&self.0).map(Motor)
    }

    /// `m X m̃`.
    pub fn apply(&self, x: &Multivector) -> Multivector {
        &self.0 * x * &self.0.reverse()
    }

    /// Motor applying `first`, then `self`.
    pub fn after(&self, first: &Motor) -> Motor {
        Motor(&self.0 * &first.0)
    }

    pub fn reverse(&self) -> Motor {
        Motor(self.0.reverse())
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector {
        self.0
    }
}
