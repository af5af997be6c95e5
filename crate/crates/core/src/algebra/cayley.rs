use std::fmt;

use super::blade::{blade_product, reorder_sign};
use super::{Blade, Signature};

/// A named basis element: `sign * blade`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub name: String,
    pub blade: Blade,
    pub sign: f64,
}

/// Ordered, named basis used for tables and blade tokens.
///
/// Grade 1 is `e0..en`; grade `n` (when `n ≥ 2`) is `E0..En` with
/// `e_i ∧ E_i = I`; the top grade is `I`. In four generators the bivectors
/// are named `e01 e02 e03 e23 e31 e12`. Other grades use ascending names.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    sig: Signature,
    elements: Vec<BasisElement>,
}

impl Basis {
    pub fn new(sig: Signature) -> Self {
        let n = sig.generators();
        let full = sig.pseudoscalar_bits();
        let mut elements = Vec::with_capacity(sig.blade_count());
        for grade in 0..=n {
            if grade == 0 {
                elements.push(BasisElement { name: "1".into(), blade: Blade(0), sign: 1.0 });
            } else if grade == n && n >= 2 {
                elements.push(BasisElement { name: "I".into(), blade: Blade(full), sign: 1.0 });
            } else if grade == n - 1 && grade >= 2 {
                for i in 0..n {
                    let comp = full ^ (1 << i);
                    elements.push(BasisElement { name: format!("E{i}"), blade: Blade(comp), sign: reorder_sign(1 << i, comp) });
                }
            } else if grade == 2 && n == 4 {
                for (name, bits, sign) in [
                    ("e01", 0b0011, 1.0),
                    ("e02", 0b0101, 1.0),
                    ("e03", 0b1001, 1.0),
                    ("e23", 0b1100, 1.0),
                    ("e31", 0b1010, -1.0),
                    ("e12", 0b0110, 1.0),
                ] {
                    elements.push(BasisElement { name: name.into(), blade: Blade(bits), sign });
                }
            } else {
                for blade in canonical_blades(n, grade) {
                    elements.push(BasisElement { name: blade.name(), blade, sign: 1.0 });
                }
            }
        }
        Basis { sig, elements }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of the element carrying `blade`.
    pub fn index_of(&self, blade: Blade) -> usize {
        self.elements.iter().position(|e| e.blade == blade).expect("every blade is named")
    }

    /// Looks up a named element (`E1`, `e31`, `I`, ...).
    pub fn by_name(&self, name: &str) -> Option<&BasisElement> {
        self.elements.iter().find(|e| e.name == name)
    }
}

/// Blades of one grade in ascending lexicographic index order.
pub fn canonical_blades(generators: usize, grade: usize) -> Vec<Blade> {
    let mut out: Vec<Blade> = (0..1u32 << generators).filter(|b| b.count_ones() as usize == grade).map(Blade).collect();
    out.sort_by_key(|b| b.indices());
    out
}

/// All blades ordered by grade, then lexicographically.
pub fn display_order(generators: usize) -> Vec<Blade> {
    (0..=generators).flat_map(|k| canonical_blades(generators, k)).collect()
}

/// One cell of a Cayley table: `coeff * basis[index]`, `coeff ∈ {-1, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub coeff: f64,
    pub index: usize,
}

/// Full geometric-product table over a named basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CayleyTable {
    basis: Basis,
    cells: Vec<Vec<Cell>>,
}

impl CayleyTable {
    pub fn new(sig: Signature) -> Self {
        let basis = Basis::new(sig);
        let cells = basis
            .elements()
            .iter()
            .map(|row| {
                basis
                    .elements()
                    .iter()
                    .map(|col| {
                        let (c, blade) = blade_product(&sig, row.blade, col.blade);
                        let index = basis.index_of(blade);
                        let coeff = c * row.sign * col.sign * basis.elements()[index].sign;
                        Cell { coeff, index }
                    })
                    .collect()
            })
            .collect();
        CayleyTable { basis, cells }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[row][col]
    }

    pub fn token(&self, cell: Cell) -> String {
        if cell.coeff == 0.0 {
            return "0".into();
        }
        let name = &self.basis.elements()[cell.index].name;
        if cell.coeff > 0.0 {
            name.clone()
        } else {
            format!("-{name}")
        }
    }

    /// Table as a grid of signed blade tokens.
    pub fn tokens(&self) -> Vec<Vec<String>> {
        self.cells.iter().map(|row| row.iter().map(|c| self.token(*c)).collect()).collect()
    }

    /// Row header names.
    pub fn header(&self) -> Vec<String> {
        self.basis.elements().iter().map(|e| e.name.clone()).collect()
    }
}

impl fmt::Display for CayleyTable {
    /// Plain-text grid in the golden-file format, columns padded.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens = self.tokens();
        let width = tokens.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &tokens {
            let line: Vec<String> = row.iter().map(|t| format!("{t:>width$}")).collect();
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}
