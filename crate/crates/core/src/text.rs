//! Shared text form for numbers and multivectors.
//!
//! Numbers print with 10 significant digits and `-0` is normalized to `0`.
//! Multivectors print as `c0 + c1*e0 + ... + cK*e0123` in grade-then-index
//! order, omitting zero terms.

use std::fmt;

use crate::algebra::{display_order, Multivector};

const SIGNIFICANT: usize = 10;

/// Formats `x` with 10 significant digits, trimming trailing zeros.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    // Round once through scientific notation so the exponent reflects carries.
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let body = if (-5..15).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{digits}{}", "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        }
    } else if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Text form of a multivector.
pub fn format_multivector(mv: &Multivector) -> String {
    let mut out = String::new();
    for blade in display_order(mv.sig().generators()) {
        let c = mv.get(blade);
        if c == 0.0 {
            continue;
        }
        let magnitude = format_number(c.abs());
        if magnitude == "0" {
            continue;
        }
        let term = if blade.bits() == 0 { magnitude } else { format!("{magnitude}*{}", blade.name()) };
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_multivector(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Blade, Signature};

    #[test]
    fn numbers() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(std::f64::consts::FRAC_1_SQRT_2), "0.7071067812");
        assert_eq!(format_number(123456.0), "123456");
        assert_eq!(format_number(9.99999999999), "10");
        assert_eq!(format_number(1e-7), "1e-7");
        assert_eq!(format_number(-1.5e20), "-1.5e20");
        assert_eq!(format_number(0.000123), "0.000123");
        assert_eq!(format_number(1e-12 * 0.0), "0");
    }

    #[test]
    fn multivectors() {
        let s = Signature::SPACE;
        let mv = Multivector::from_terms(s, &[(0, 0.5), (0b0110, 0.5), (0b1111, -2.0), (0b0001, 1.0)]);
        assert_eq!(mv.to_string(), "0.5 + 1*e0 + 0.5*e12 - 2*e0123");
        assert_eq!(Multivector::zero(s).to_string(), "0");
        assert_eq!(Multivector::scalar(s, -3.0).to_string(), "-3");
        assert_eq!(Multivector::blade(s, Blade(0b1010), -1.0).to_string(), "-1*e13");
    }
}
