use std::fmt;

use super::Signature;

/// Basis blade encoded as a bitmask over the generators; bit `i` set means
/// `e_i` is a factor. Canonical factor order is ascending index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(i: usize) -> Blade {
        Blade(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    /// Canonical name: `1` for the scalar, otherwise `e` followed by the
    /// ascending generator digits (`a`, `b` stand for indices 10 and 11).
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for i in self.indices() {
            s.push(index_char(i));
        }
        s
    }

    /// Parses the factor list of a blade token such as `e021` (without the
    /// leading `e`) into a sign and canonical blade. Returns `None` for
    /// unknown or repeated generators.
    pub fn parse_factors(digits: &str, generators: usize) -> Option<(f64, Blade)> {
        let mut indices = Vec::with_capacity(digits.len());
        for c in digits.chars() {
            let i = char_index(c)?;
            if i >= generators || indices.contains(&i) {
                return None;
            }
            indices.push(i);
        }
        if indices.is_empty() {
            return None;
        }
        // Bubble sort, counting transpositions.
        let mut swaps = 0;
        for i in 0..indices.len() {
            for j in 0..indices.len() - 1 - i {
                if indices[j] > indices[j + 1] {
                    indices.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        let bits = indices.iter().fold(0u32, |acc, &i| acc | (1 << i));
        let sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
        Some((sign, Blade(bits)))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn index_char(i: usize) -> char {
    std::char::from_digit(i as u32, 12).expect("generator index below 12")
}

fn char_index(c: char) -> Option<usize> {
    c.to_digit(12).map(|d| d as usize)
}

/// Sign from reordering the concatenation `a b` into canonical order.
pub fn reorder_sign(a: u32, b: u32) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two basis blades: `(coefficient, blade)`. The
/// coefficient is zero when a degenerate generator repeats.
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (f64, Blade) {
    let mut sign = reorder_sign(a.0, b.0);
    let mut common = a.0 & b.0;
    let mut i = 0;
    while common != 0 {
        if common & 1 != 0 {
            sign *= sig.metric(i);
        }
        common >>= 1;
        i += 1;
    }
    (sign, Blade(a.0 ^ b.0))
}
