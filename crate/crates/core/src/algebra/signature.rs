use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 12;

/// Metric descriptor `(p, m, z)` plus the standard/dual interpretation flag.
///
/// Generators are ordered degenerate first, then positive, then negative, so
/// that in the euclidean algebras `e0` is the ideal generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    m: u8,
    z: u8,
    dual: bool,
}

impl Signature {
    /// Dual algebra of the euclidean plane, P(R*(2,0,1)).
    pub const PLANE: Signature = Signature { p: 2, m: 0, z: 1, dual: true };
    /// Dual algebra of euclidean space, P(R*(3,0,1)).
    pub const SPACE: Signature = Signature { p: 3, m: 0, z: 1, dual: true };
    /// Standard algebra of the sphere, P(R(3,0,0)).
    pub const SPHERE: Signature = Signature { p: 3, m: 0, z: 0, dual: false };

    pub fn new(p: usize, m: usize, z: usize, dual: bool) -> Result<Self> {
        let n = p + m + z;
        if n == 0 || n > MAX_GENERATORS {
            return Err(Error::InvalidSignature(format!("({p},{m},{z}) has {n} generators; supported range is 1..={MAX_GENERATORS}")));
        }
        Ok(Signature { p: p as u8, m: m as u8, z: z as u8, dual })
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn z(&self) -> usize {
        self.z as usize
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Number of generators, `n + 1`.
    pub fn generators(&self) -> usize {
        self.p() + self.m() + self.z()
    }

    /// Modeled dimension `n`.
    pub fn dim(&self) -> usize {
        self.generators() - 1
    }

    /// Number of basis blades, `2^(n+1)`.
    pub fn blade_count(&self) -> usize {
        1 << self.generators()
    }

    /// Bitmask of the pseudoscalar.
    pub fn pseudoscalar_bits(&self) -> u32 {
        (1u32 << self.generators()) - 1
    }

    /// Square of generator `i`.
    pub fn metric(&self, i: usize) -> f64 {
        if i < self.z() {
            0.0
        } else if i < self.z() + self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Same metric with the other interpretation flag.
    pub fn with_dual(self, dual: bool) -> Self {
        Signature { dual, ..self }
    }

    /// True for the dual euclidean algebras P(R*(n,0,1)).
    pub fn is_dual_euclidean(&self) -> bool {
        self.dual && self.z == 1 && self.m == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p <= 9 && self.m <= 9 && self.z <= 9 {
            let prefix = if self.dual { 'd' } else { 'r' };
            write!(f, "{prefix}{}{}{}", self.p, self.m, self.z)
        } else if self.dual {
            write!(f, "custom:{},{},{},dual", self.p, self.m, self.z)
        } else {
            write!(f, "custom:{},{},{}", self.p, self.m, self.z)
        }
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `d201`, `d301`, `r300` (any `d`/`r` plus three digits) and
    /// `custom:p,m,z[,dual]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSignature(s.to_string());
        if let Some(rest) = s.strip_prefix("custom:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if parts.len() != 3 && parts.len() != 4 {
                return Err(bad());
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
            let dual = match parts.get(3) {
                None => false,
                Some(&"dual") => true,
                Some(_) => return Err(bad()),
            };
            return Signature::new(num(parts[0])?, num(parts[1])?, num(parts[2])?, dual);
        }
        let mut chars = s.chars();
        let dual = match chars.next() {
            Some('d') => true,
            Some('r') => false,
            _ => return Err(bad()),
        };
        let digits: Vec<usize> = chars.map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
        if digits.len() != 3 {
            return Err(bad());
        }
        Signature::new(digits[0], digits[1], digits[2], dual)
    }
}
