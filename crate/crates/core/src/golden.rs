//! Reference multiplication tables for P(R(3,0,0)) and P(R*(2,0,1)),
//! transcribed by hand and stored as plain-text token grids.

use crate::algebra::{CayleyTable, Signature};

const SPHERE: &str = include_str!("../goldens/r300.txt");
const PLANE: &str = include_str!("../goldens/d201.txt");

/// Parses a token grid, skipping blank lines and `#` comments.
pub fn parse_grid(text: &str) -> Vec<Vec<String>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(|l| l.split_whitespace().map(str::to_string).collect()).collect()
}

/// Embedded reference table for `sig`, if one exists.
pub fn reference_table(sig: Signature) -> Option<Vec<Vec<String>>> {
    if sig == Signature::SPHERE {
        Some(parse_grid(SPHERE))
    } else if sig == Signature::PLANE {
        Some(parse_grid(PLANE))
    } else {
        None
    }
}

/// A cell where the generated table differs from the reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub found: String,
}

/// Compares a generated table against a reference grid cell by cell.
pub fn compare(table: &CayleyTable, reference: &[Vec<String>]) -> Vec<Mismatch> {
    let generated = table.tokens();
    let rows = generated.len().max(reference.len());
    let mut out = Vec::new();
    for r in 0..rows {
        let cols = generated.get(r).map_or(0, Vec::len).max(reference.get(r).map_or(0, Vec::len));
        for c in 0..cols {
            let found = generated.get(r).and_then(|row| row.get(c)).cloned().unwrap_or_default();
            let expected = reference.get(r).and_then(|row| row.get(c)).cloned().unwrap_or_default();
            if found != expected {
                out.push(Mismatch { row: r, col: c, expected, found });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn references_are_eight_by_eight() {
        for sig in [Signature::SPHERE, Signature::PLANE] {
            let grid = reference_table(sig).unwrap();
            assert_eq!(grid.len(), 8);
            assert!(grid.iter().all(|row| row.len() == 8));
        }
        assert!(reference_table(Signature::SPACE).is_none());
    }

    #[test]
    fn generated_tables_match_references() {
        for sig in [Signature::SPHERE, Signature::PLANE] {
            let mismatches = compare(&CayleyTable::new(sig), &reference_table(sig).unwrap());
            assert!(mismatches.is_empty(), "{sig}: {mismatches:?}");
        }
    }

    #[test]
    fn a_flipped_cell_is_reported() {
        let mut grid = reference_table(Signature::PLANE).unwrap();
        grid[5][3] = "e0".into();
        let mismatches = compare(&CayleyTable::new(Signature::PLANE), &grid);
        assert_eq!(mismatches, vec![Mismatch { row: 5, col: 3, expected: "e0".into(), found: "-e0".into() }]);
    }
}
