use std::ops::{Add, AddAssign, BitAnd, BitOr, BitXor, Div, Mul, Neg, Sub, SubAssign};

use super::blade::{blade_product, reorder_sign};
use super::{Blade, Signature};
use crate::error::{Error, Result};

/// Dense multivector: one coefficient per basis blade, indexed by bitmask.
///
/// The operator sugar (`*` geometric, `^` wedge, `|` inner, `&` join) panics
/// on mismatched signatures; the named methods return an error instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, coeffs: vec![0.0; sig.blade_count()] }
    }

    pub fn scalar(sig: Signature, s: f64) -> Self {
        Self::blade(sig, Blade::SCALAR, s)
    }

    pub fn blade(sig: Signature, blade: Blade, coeff: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.0 as usize] = coeff;
        mv
    }

    /// Basis 1-vector `e_i`.
    pub fn generator(sig: Signature, i: usize) -> Self {
        Self::blade(sig, Blade::generator(i), 1.0)
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, Blade(sig.pseudoscalar_bits()), 1.0)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength { expected: sig.blade_count(), got: coeffs.len() });
        }
        Ok(Multivector { sig, coeffs })
    }

    /// Sum of `coeff * blade` terms; repeated blades accumulate.
    pub fn from_terms(sig: Signature, terms: &[(u32, f64)]) -> Self {
        let mut mv = Self::zero(sig);
        for &(bits, c) in terms {
            mv.coeffs[bits as usize] += c;
        }
        mv
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.0 as usize]
    }

    pub fn set(&mut self, blade: Blade, value: f64) {
        self.coeffs[blade.0 as usize] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficient of the pseudoscalar blade.
    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs[self.sig.pseudoscalar_bits() as usize]
    }

    /// Iterator over the nonzero `(blade, coefficient)` terms.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(i, c)| (Blade(i as u32), *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest componentwise difference.
    pub fn distance_max(&self, other: &Multivector) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.sig == other.sig && self.distance_max(other) <= tol
    }

    /// Grade-`k` part; empty for `k` above the generator count.
    pub fn grade_part(&self, k: usize) -> Multivector {
        let mut out = Self::zero(self.sig);
        for (i, c) in self.coeffs.iter().enumerate() {
            if (i as u32).count_ones() as usize == k {
                out.coeffs[i] = *c;
            }
        }
        out
    }

    /// Sorted list of grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut present = vec![false; self.sig.generators() + 1];
        for (blade, _) in self.terms() {
            present[blade.grade()] = true;
        }
        present.iter().enumerate().filter(|(_, p)| **p).map(|(k, _)| k).collect()
    }

    /// The single grade of a nonzero homogeneous element.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Grade of a homogeneous element, treating tiny off-grade noise relative
    /// to the largest coefficient as zero.
    pub fn dominant_grade(&self, rel_tol: f64) -> Option<usize> {
        let scale = self.max_abs();
        if scale == 0.0 {
            return None;
        }
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.abs() > rel_tol * scale {
                let g = (i as u32).count_ones() as usize;
                match found {
                    None => found = Some(g),
                    Some(h) if h != g => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn is_even(&self) -> bool {
        self.terms().all(|(b, _)| b.grade() % 2 == 0)
    }

    fn map_by_grade(&self, sign: impl Fn(usize) -> f64) -> Multivector {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c * sign((i as u32).count_ones() as usize)).collect();
        Multivector { sig: self.sig, coeffs }
    }

    /// Reversion: grade `k` picks up `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Multivector {
        self.map_by_grade(|k| if (k * k.saturating_sub(1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// Grade involution: grade `k` picks up `(-1)^k`.
    pub fn involute(&self) -> Multivector {
        self.map_by_grade(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(self.sig, other.sig))
        }
    }

    fn bilinear(&self, other: &Multivector, keep: impl Fn(Blade, Blade) -> bool) -> Multivector {
        let mut out = Self::zero(self.sig);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let (x, y) = (Blade(i as u32), Blade(j as u32));
                if !keep(x, y) {
                    continue;
                }
                let (sign, r) = blade_product(&self.sig, x, y);
                if sign != 0.0 {
                    out.coeffs[r.0 as usize] += sign * a * b;
                }
            }
        }
        out
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        Ok(self.bilinear(other, |_, _| true))
    }

    /// Outer product; the meet in the dual algebra.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        Ok(self.bilinear(other, |a, b| a.0 & b.0 == 0))
    }

    /// Inner product: for homogeneous parts of grades `j` and `k`, the grade
    /// `|j - k|` part of their product.
    pub fn inner(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        Ok(self.bilinear(other, |a, b| a.0 & b.0 == a.0 || a.0 & b.0 == b.0))
    }

    /// Commutator product `(XY - YX) / 2`.
    pub fn commutator(&self, other: &Multivector) -> Result<Multivector> {
        let xy = self.geometric_product(other)?;
        let yx = other.geometric_product(self)?;
        Ok((xy - yx) * 0.5)
    }

    /// Poincaré duality `J`: each blade maps to its complement, signed so
    /// that `blade ∧ J(blade) = +I`.
    pub fn poincare_dual(&self) -> Multivector {
        let full = self.sig.pseudoscalar_bits();
        let mut out = Self::zero(self.sig);
        for (blade, c) in self.terms() {
            let comp = full ^ blade.0;
            out.coeffs[comp as usize] = c * reorder_sign(blade.0, comp);
        }
        out
    }

    /// Exact inverse of [`Multivector::poincare_dual`].
    pub fn poincare_undual(&self) -> Multivector {
        let full = self.sig.pseudoscalar_bits();
        let mut out = Self::zero(self.sig);
        for (blade, c) in self.terms() {
            let source = full ^ blade.0;
            out.coeffs[source as usize] = c * reorder_sign(source, blade.0);
        }
        out
    }

    /// Regressive product `X ∨ Y = J⁻¹(J(X) ∧ J(Y))`; the join in the dual algebra.
    pub fn join(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let meet = self.poincare_dual().wedge(&other.poincare_dual())?;
        Ok(meet.poincare_undual())
    }

    /// Exact power by repeated multiplication.
    pub fn powi(&self, n: u32) -> Multivector {
        let mut out = Self::scalar(self.sig, 1.0);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(f64) -> f64) -> Multivector {
        Multivector { sig: self.sig, coeffs: self.coeffs.iter().map(|c| f(*c)).collect() }
    }
}

fn expect<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        expect(self.check_sig(rhs));
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Multivector { sig: self.sig, coeffs }
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        expect(self.check_sig(rhs));
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Multivector { sig: self.sig, coeffs }
    }
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        expect(self.geometric_product(rhs))
    }
}

impl BitXor<&Multivector> for &Multivector {
    type Output = Multivector;
    fn bitxor(self, rhs: &Multivector) -> Multivector {
        expect(self.wedge(rhs))
    }
}

impl BitOr<&Multivector> for &Multivector {
    type Output = Multivector;
    fn bitor(self, rhs: &Multivector) -> Multivector {
        expect(self.inner(rhs))
    }
}

impl BitAnd<&Multivector> for &Multivector {
    type Output = Multivector;
    fn bitand(self, rhs: &Multivector) -> Multivector {
        expect(self.join(rhs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, BitXor bitxor, BitOr bitor, BitAnd bitand);

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        expect(self.check_sig(rhs));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        expect(self.check_sig(rhs));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.map_coeffs(|c| c * rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        &self * rhs
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs * self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &rhs * self
    }
}

impl Div<f64> for &Multivector {
    type Output = Multivector;
    fn div(self, rhs: f64) -> Multivector {
        self.map_coeffs(|c| c / rhs)
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(self, rhs: f64) -> Multivector {
        &self / rhs
    }
}
