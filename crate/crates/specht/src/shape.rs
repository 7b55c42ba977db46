//! Hook shapes `(a, 1^b)` and their nodes.

use crate::error::SpechtError;

/// The hook partition `(a, 1^b)`: one row of length `a` and `b` further rows
/// of length one, so `n = a + b` boxes in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    pub a: usize,
    pub b: usize,
}

/// A box of the diagram, 1-based. Valid nodes are `(1, c)` with `c <= a` and
/// `(r, 1)` with `r <= b + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl HookShape {
    pub fn new(a: usize, b: usize) -> Result<HookShape, SpechtError> {
        if a < 1 {
            return Err(SpechtError::BadShape(format!(
                "arm length {a} must be >= 1"
            )));
        }
        Ok(HookShape { a, b })
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// The conjugate hook `(b+1, 1^{a-1})`; conjugation is an involution.
    pub fn conjugate(&self) -> HookShape {
        HookShape {
            a: self.b + 1,
            b: self.a - 1,
        }
    }

    pub fn contains(&self, node: Node) -> bool {
        (node.row == 1 && node.col >= 1 && node.col <= self.a)
            || (node.col == 1 && node.row >= 1 && node.row <= self.b + 1)
    }

    /// Residue of a node for quantum characteristic 2: `(col - row) mod 2`.
    pub fn residue(&self, node: Node) -> u8 {
        (((node.col as i64 - node.row as i64) % 2 + 2) % 2) as u8
    }
}

/// Residue sequence of the column-reading initial tableau of an arbitrary
/// partition (quantum characteristic 2). Only the initial tableau of general
/// shapes is needed; everything else in this crate is hook-specific.
pub fn general_partition_initial_residues(parts: &[usize]) -> Vec<u8> {
    let rows = parts.len();
    let cols = if rows == 0 { 0 } else { parts[0] };
    let n: usize = parts.iter().sum();
    let mut res = vec![0u8; n];
    let mut k = 0usize;
    for c in 1..=cols {
        for (r, len) in parts.iter().enumerate() {
            if *len >= c {
                let row = r + 1;
                res[k] = (((c as i64 - row as i64) % 2 + 2) % 2) as u8;
                k += 1;
            }
        }
    }
    debug_assert_eq!(k, n);
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_is_an_involution() {
        for a in 1..=8 {
            for b in 0..=8 {
                let s = HookShape::new(a, b).unwrap();
                assert_eq!(s.conjugate().conjugate(), s);
                assert_eq!(s.conjugate().n(), s.n());
            }
        }
    }

    #[test]
    fn general_initial_residues_match_worked_example() {
        // lambda = (3,2,1): initial tableau read down columns gives (0,1,0,1,0,0)
        assert_eq!(
            general_partition_initial_residues(&[3, 2, 1]),
            vec![0, 1, 0, 1, 0, 0]
        );
        assert_eq!(general_partition_initial_residues(&[1]), vec![0]);
        assert_eq!(
            general_partition_initial_residues(&[3, 1, 1]),
            vec![0, 1, 0, 1, 0]
        );
    }
}
