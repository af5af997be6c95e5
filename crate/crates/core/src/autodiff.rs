//! Forward-mode automatic differentiation with dual numbers.
//!
//! An [`AdNumber`] is `v + Σ gᵢ εᵢ` with `εᵢεⱼ = 0`. Evaluating any analytic
//! `f` at `x + εᵢ` yields `f(x) + f'(x) εᵢ`, so the coefficients carry the
//! gradient. The nilpotents can be realized as the ideal blades `Eᵢ` of the
//! dual euclidean algebra with `k` euclidean generators; see
//! [`AdNumber::to_multivector`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{reorder_sign, Blade, Multivector, Signature};
use crate::error::{Error, Result};

/// Value plus gradient. An empty gradient stands for a constant and
/// combines with gradients of any length.
#[derive(Debug, Clone, PartialEq)]
pub struct AdNumber {
    pub val: f64,
    pub grads: Vec<f64>,
}

impl AdNumber {
    pub fn constant(val: f64) -> AdNumber {
        AdNumber { val, grads: Vec::new() }
    }

    /// `x + εᵢ` among `k` variables.
    pub fn variable(val: f64, index: usize, k: usize) -> AdNumber {
        let mut grads = vec![0.0; k];
        grads[index] = 1.0;
        AdNumber { val, grads }
    }

    /// Lifts each coordinate of a point to its own variable.
    pub fn variables(point: &[f64]) -> Vec<AdNumber> {
        point.iter().enumerate().map(|(i, &x)| AdNumber::variable(x, i, point.len())).collect()
    }

    /// Partial derivative with respect to variable `i` (zero if absent).
    pub fn grad(&self, i: usize) -> f64 {
        self.grads.get(i).copied().unwrap_or(0.0)
    }

    /// `f(a) + f'(a) Σ aᵢεᵢ`.
    fn chain(&self, value: f64, slope: f64) -> AdNumber {
        AdNumber { val: value, grads: self.grads.iter().map(|g| slope * g).collect() }
    }

    fn zip(&self, other: &AdNumber, f: impl Fn(f64, f64) -> f64) -> Result<Vec<f64>> {
        let (a, b) = (&self.grads, &other.grads);
        match (a.len(), b.len()) {
            (0, _) => Ok(b.iter().map(|&y| f(0.0, y)).collect()),
            (_, 0) => Ok(a.iter().map(|&x| f(x, 0.0)).collect()),
            (m, n) if m == n => Ok(a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()),
            (m, n) => Err(Error::AdDimensionMismatch(m, n)),
        }
    }

    pub fn checked_add(&self, other: &AdNumber) -> Result<AdNumber> {
        Ok(AdNumber { val: self.val + other.val, grads: self.zip(other, |x, y| x + y)? })
    }

    pub fn checked_sub(&self, other: &AdNumber) -> Result<AdNumber> {
        Ok(AdNumber { val: self.val - other.val, grads: self.zip(other, |x, y| x - y)? })
    }

    /// Product rule `ab + Σ (a bᵢ + b aᵢ) εᵢ`.
    pub fn checked_mul(&self, other: &AdNumber) -> Result<AdNumber> {
        let (a, b) = (self.val, other.val);
        Ok(AdNumber { val: a * b, grads: self.zip(other, |x, y| a * y + b * x)? })
    }

    /// Quotient; fails when the divisor has zero value, where the dual
    /// number has no inverse.
    pub fn checked_div(&self, other: &AdNumber) -> Result<AdNumber> {
        let (a, b) = (self.val, other.val);
        if b == 0.0 {
            return Err(Error::AdDivisionByZero);
        }
        Ok(AdNumber { val: a / b, grads: self.zip(other, |x, y| (x * b - a * y) / (b * b))? })
    }

    pub fn recip(&self) -> Result<AdNumber> {
        AdNumber::constant(1.0).checked_div(self)
    }

    pub fn scale(&self, s: f64) -> AdNumber {
        self.chain(self.val * s, s)
    }

    pub fn powi(&self, n: i32) -> AdNumber {
        let slope = if n == 0 { 0.0 } else { f64::from(n) * self.val.powi(n - 1) };
        self.chain(self.val.powi(n), slope)
    }

    /// `xᵖ` for `x > 0`.
    pub fn powf(&self, p: f64) -> Result<AdNumber> {
        if self.val <= 0.0 {
            return Err(Error::AdDomain("powf", self.val));
        }
        Ok(self.chain(self.val.powf(p), p * self.val.powf(p - 1.0)))
    }

    pub fn exp(&self) -> AdNumber {
        let e = self.val.exp();
        self.chain(e, e)
    }

    pub fn ln(&self) -> Result<AdNumber> {
        if self.val <= 0.0 {
            return Err(Error::AdDomain("ln", self.val));
        }
        Ok(self.chain(self.val.ln(), 1.0 / self.val))
    }

    pub fn sqrt(&self) -> Result<AdNumber> {
        if self.val <= 0.0 {
            return Err(Error::AdDomain("sqrt", self.val));
        }
        let r = self.val.sqrt();
        Ok(self.chain(r, 0.5 / r))
    }

    pub fn sin(&self) -> AdNumber {
        self.chain(self.val.sin(), self.val.cos())
    }

    pub fn cos(&self) -> AdNumber {
        self.chain(self.val.cos(), -self.val.sin())
    }

    pub fn tan(&self) -> AdNumber {
        let t = self.val.tan();
        self.chain(t, 1.0 + t * t)
    }

    pub fn atan(&self) -> AdNumber {
        self.chain(self.val.atan(), 1.0 / (1.0 + self.val * self.val))
    }

    pub fn tanh(&self) -> AdNumber {
        let t = self.val.tanh();
        self.chain(t, 1.0 - t * t)
    }

    /// `atan2(self, x)` with total derivative `(x dy − y dx) / (x² + y²)`.
    pub fn atan2(&self, x: &AdNumber) -> Result<AdNumber> {
        let (yv, xv) = (self.val, x.val);
        let r2 = xv * xv + yv * yv;
        if r2 == 0.0 {
            return Err(Error::AdDomain("atan2", 0.0));
        }
        Ok(AdNumber { val: yv.atan2(xv), grads: self.zip(x, |dy, dx| (xv * dy - yv * dx) / r2)? })
    }

    /// Realizes `v + Σ gᵢ εᵢ` as `v + Σ gᵢ Eᵢ` in the dual euclidean algebra
    /// with `k = grads.len()` euclidean generators, where the ideal blades
    /// `Eᵢ` (complements of `eᵢ`) multiply to zero pairwise.
    pub fn to_multivector(&self) -> Result<Multivector> {
        let sig = nilpotent_signature(self.grads.len())?;
        let mut mv = Multivector::scalar(sig, self.val);
        for (i, g) in self.grads.iter().enumerate() {
            let (blade, sign) = ideal_blade(sig, i + 1);
            mv.set(blade, sign * g);
        }
        Ok(mv)
    }

    /// Reads the scalar and `Eᵢ` coefficients back.
    pub fn from_multivector(mv: &Multivector) -> Result<AdNumber> {
        let sig = mv.sig();
        let k = sig.generators() - 1;
        if sig != nilpotent_signature(k)? {
            return Err(Error::UnsupportedSignature(sig));
        }
        let grads = (1..=k)
            .map(|i| {
                let (blade, sign) = ideal_blade(sig, i);
                sign * mv.get(blade)
            })
            .collect();
        Ok(AdNumber { val: mv.scalar_part(), grads })
    }
}

/// `Eᵢ` as a signed blade: the complement of `eᵢ` with `eᵢ ∧ Eᵢ = I`.
pub fn ideal_blade(sig: Signature, i: usize) -> (Blade, f64) {
    let e = Blade::generator(i);
    let blade = Blade(sig.pseudoscalar_bits() ^ e.bits());
    (blade, reorder_sign(e.bits(), blade.bits()))
}

/// Dual euclidean signature with `k` euclidean generators, `k ≥ 1`.
pub fn nilpotent_signature(k: usize) -> Result<Signature> {
    Signature::new(k.max(1), 0, 1, true)
}

impl fmt::Display for AdNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_number(self.val))?;
        for (i, g) in self.grads.iter().enumerate() {
            let sign = if *g < 0.0 { '-' } else { '+' };
            write!(f, " {sign} {}*ε{}", crate::text::format_number(g.abs()), i + 1)?;
        }
        Ok(())
    }
}

impl From<f64> for AdNumber {
    fn from(val: f64) -> AdNumber {
        AdNumber::constant(val)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&AdNumber> for &AdNumber {
            type Output = AdNumber;
            /// Panics when both operands carry gradients of different lengths.
            fn $method(self, rhs: &AdNumber) -> AdNumber {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for AdNumber {
            type Output = AdNumber;
            fn $method(self, rhs: AdNumber) -> AdNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<f64> for AdNumber {
            type Output = AdNumber;
            fn $method(self, rhs: f64) -> AdNumber {
                (&self).$method(&AdNumber::constant(rhs))
            }
        }
        impl $trait<f64> for &AdNumber {
            type Output = AdNumber;
            fn $method(self, rhs: f64) -> AdNumber {
                self.$method(&AdNumber::constant(rhs))
            }
        }
    };
}

binary_op!(Add, add, checked_add);
binary_op!(Sub, sub, checked_sub);
binary_op!(Mul, mul, checked_mul);

impl Neg for AdNumber {
    type Output = AdNumber;
    fn neg(self) -> AdNumber {
        self.scale(-1.0)
    }
}

impl Neg for &AdNumber {
    type Output = AdNumber;
    fn neg(self) -> AdNumber {
        self.scale(-1.0)
    }
}

/// Derivative of a univariate function at `x`.
pub fn derivative(f: impl Fn(&AdNumber) -> Result<AdNumber>, x: f64) -> Result<f64> {
    Ok(f(&AdNumber::variable(x, 0, 1))?.grad(0))
}

/// Value and gradient of a multivariate function at `point`.
pub fn gradient(f: impl Fn(&[AdNumber]) -> Result<AdNumber>, point: &[f64]) -> Result<(f64, Vec<f64>)> {
    let out = f(&AdNumber::variables(point))?;
    let grads = (0..point.len()).map(|i| out.grad(i)).collect();
    Ok((out.val, grads))
}

/// Evaluates a polynomial with coefficients in ascending order by Horner's rule.
pub fn polynomial(coeffs: &[f64], x: &AdNumber) -> AdNumber {
    coeffs.iter().rev().fold(AdNumber::constant(0.0), |acc, &c| &(&acc * x) + c)
}

/// The same polynomial evaluated on multivectors.
pub fn polynomial_mv(coeffs: &[f64], x: &Multivector) -> Multivector {
    coeffs.iter().rev().fold(Multivector::zero(x.sig()), |acc, &c| &(&acc * x) + &Multivector::scalar(x.sig(), c))
}
