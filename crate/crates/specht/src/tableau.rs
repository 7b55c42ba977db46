//! Standard tableaux of hook shape.
//!
//! A standard filling of `(a, 1^b)` is determined by its set of leg entries
//! (the entries of boxes `(2,1) .. (b+1,1)`): entry 1 occupies the corner, the
//! leg entries increase downwards and the rest fill the arm in increasing
//! order. All per-tableau data (residue sequences, permutations, reduced
//! words) is derived from that leg set.

use crate::error::SpechtError;
use crate::shape::{HookShape, Node};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: HookShape,
    /// Strictly increasing leg entries, each in `2..=n`.
    leg: Vec<usize>,
}

impl StandardTableau {
    pub fn new(shape: HookShape, leg: Vec<usize>) -> Result<StandardTableau, SpechtError> {
        if leg.len() != shape.b {
            return Err(SpechtError::BadShape(format!(
                "leg has {} entries, expected {}",
                leg.len(),
                shape.b
            )));
        }
        let n = shape.n();
        let increasing = leg.windows(2).all(|w| w[0] < w[1]);
        if !increasing || leg.iter().any(|&x| x < 2 || x > n) {
            return Err(SpechtError::BadShape(format!(
                "invalid leg entries {leg:?}"
            )));
        }
        Ok(StandardTableau { shape, leg })
    }

    /// The initial tableau: entries written consecutively down the column,
    /// then along the arm.
    pub fn initial(shape: HookShape) -> StandardTableau {
        StandardTableau {
            shape,
            leg: (2..shape.b + 2).collect(),
        }
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn leg(&self) -> &[usize] {
        &self.leg
    }

    /// Arm entries in increasing order, starting with the corner entry 1.
    pub fn arm(&self) -> Vec<usize> {
        let mut out = vec![1];
        out.extend((2..=self.shape.n()).filter(|k| !self.leg.contains(k)));
        out
    }

    pub fn is_initial(&self) -> bool {
        self.leg.iter().enumerate().all(|(i, &l)| l == i + 2)
    }

    /// Node occupied by entry `k`.
    pub fn node_of(&self, k: usize) -> Node {
        debug_assert!(k >= 1 && k <= self.shape.n());
        if k == 1 {
            return Node { row: 1, col: 1 };
        }
        if let Ok(i) = self.leg.binary_search(&k) {
            return Node { row: i + 2, col: 1 };
        }
        let before = (2..k).filter(|x| !self.leg.contains(x)).count();
        Node {
            row: 1,
            col: before + 2,
        }
    }

    pub fn in_leg(&self, k: usize) -> bool {
        self.leg.binary_search(&k).is_ok()
    }

    /// Residue sequence: position `k` holds the residue of the node
    /// containing `k`.
    pub fn residue_sequence(&self) -> Vec<u8> {
        (1..=self.shape.n())
            .map(|k| self.shape.residue(self.node_of(k)))
            .collect()
    }

    /// Swap entries `r` and `r+1`; the result need not be standard (it is,
    /// unless the two entries share a row or column).
    pub fn swap(&self, r: usize) -> StandardTableau {
        let mut leg = self.leg.clone();
        if let Ok(i) = leg.binary_search(&r) {
            if leg.binary_search(&(r + 1)).is_err() {
                leg[i] = r + 1;
            }
        } else if let Ok(i) = leg.binary_search(&(r + 1)) {
            leg[i] = r;
        }
        leg.sort_unstable();
        StandardTableau {
            shape: self.shape,
            leg,
        }
    }

    /// The permutation `w` with `w(initial tableau) = self`, as the image
    /// list `w[j]` for `j = 1..=n` (index 0 unused).
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.shape.n();
        let mut w = vec![0; n + 1];
        w[1] = 1;
        for (i, &l) in self.leg.iter().enumerate() {
            w[i + 2] = l;
        }
        for (m, e) in self.arm().into_iter().skip(1).enumerate() {
            w[self.shape.b + 2 + m] = e;
        }
        w
    }

    /// Lexicographically smallest reduced word of the permutation, produced
    /// by repeatedly peeling the smallest left descent. Entries are the
    /// indices `r` of simple transpositions `s_r`.
    pub fn canonical_word(&self) -> Vec<usize> {
        let n = self.shape.n();
        let mut w = self.permutation();
        let mut inv = vec![0; n + 1];
        for j in 1..=n {
            inv[w[j]] = j;
        }
        let mut word = Vec::new();
        loop {
            let mut found = false;
            for i in 1..n {
                if inv[i] > inv[i + 1] {
                    word.push(i);
                    let (pi, pi1) = (inv[i], inv[i + 1]);
                    w[pi] = i + 1;
                    w[pi1] = i;
                    inv.swap(i, i + 1);
                    found = true;
                    break;
                }
            }
            if !found {
                break;
            }
        }
        word
    }

    /// Coxeter length of the permutation (number of inversions).
    pub fn length(&self) -> usize {
        let w = self.permutation();
        let n = self.shape.n();
        let mut count = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Plain text grid: one line per row of the diagram.
    pub fn to_grid_string(&self) -> String {
        let arm = self.arm();
        let mut lines = vec![arm
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")];
        for l in &self.leg {
            lines.push(l.to_string());
        }
        lines.join("\n")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": [self.shape.a, self.shape.b],
            "leg": self.leg,
            "arm": self.arm(),
        })
    }

    pub fn from_json(v: &Value) -> Result<StandardTableau, SpechtError> {
        let bad = |m: &str| SpechtError::Parse(format!("tableau json: {m}"));
        let a = v["shape"][0].as_u64().ok_or_else(|| bad("shape"))? as usize;
        let b = v["shape"][1].as_u64().ok_or_else(|| bad("shape"))? as usize;
        let leg = v["leg"]
            .as_array()
            .ok_or_else(|| bad("leg"))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| bad("leg entry"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        StandardTableau::new(HookShape::new(a, b)?, leg)
    }
}

/// All standard tableaux of the shape, ordered by leg-entry set
/// lexicographically. There are exactly `binomial(n-1, b)` of them.
pub fn enumerate_standard(shape: HookShape) -> Vec<StandardTableau> {
    let n = shape.n();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        n: usize,
        b: usize,
        cur: &mut Vec<usize>,
        shape: HookShape,
        out: &mut Vec<StandardTableau>,
    ) {
        if cur.len() == b {
            out.push(StandardTableau {
                shape,
                leg: cur.clone(),
            });
            return;
        }
        let need = b - cur.len();
        for x in start..=(n - need + 1) {
            cur.push(x);
            rec(x + 1, n, b, cur, shape, out);
            cur.pop();
        }
    }
    rec(2, n, shape.b, &mut cur, shape, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_tableau_layout() {
        // (7,1^6): column 1 holds 1..7, row 1 continues 8..13
        let t = StandardTableau::initial(HookShape::new(7, 6).unwrap());
        assert_eq!(t.leg(), &[2, 3, 4, 5, 6, 7]);
        assert_eq!(t.arm(), vec![1, 8, 9, 10, 11, 12, 13]);
        // degenerate single row
        let t = StandardTableau::initial(HookShape::new(4, 0).unwrap());
        assert_eq!(t.arm(), vec![1, 2, 3, 4]);
        // (3,1^2)
        let t = StandardTableau::initial(HookShape::new(3, 2).unwrap());
        assert_eq!(t.leg(), &[2, 3]);
        assert_eq!(t.arm(), vec![1, 4, 5]);
    }

    #[test]
    fn residue_sequences() {
        let shape = HookShape::new(3, 2).unwrap();
        let t = StandardTableau::initial(shape);
        assert_eq!(t.residue_sequence(), vec![0, 1, 0, 1, 0]);
        let one = StandardTableau::initial(HookShape::new(1, 0).unwrap());
        assert_eq!(one.residue_sequence(), vec![0]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let shape = HookShape::new(3, 2).unwrap();
        let all = enumerate_standard(shape);
        assert_eq!(all.len(), 6);
        // deterministic lex order on leg sets
        let legs: Vec<_> = all.iter().map(|t| t.leg().to_vec()).collect();
        let mut sorted = legs.clone();
        sorted.sort();
        assert_eq!(legs, sorted);
        assert_eq!(enumerate_standard(HookShape::new(5, 0).unwrap()).len(), 1);
        assert_eq!(enumerate_standard(HookShape::new(2, 1).unwrap()).len(), 2);
        // hook-length count for a larger window
        for n in 1..=14 {
            for b in 0..n {
                let a = n - b;
                let all = enumerate_standard(HookShape::new(a, b).unwrap());
                assert_eq!(all.len(), binomial(n - 1, b));
            }
        }
    }

    #[test]
    fn canonical_word_examples() {
        // (3,1^2), leg {2,5}: w = s_4 s_3
        let shape = HookShape::new(3, 2).unwrap();
        let t = StandardTableau::new(shape, vec![2, 5]).unwrap();
        assert_eq!(t.canonical_word(), vec![4, 3]);
        assert_eq!(t.length(), 2);
        let init = StandardTableau::initial(shape);
        assert!(init.canonical_word().is_empty());
    }

    #[test]
    fn word_rebuilds_tableau_and_length_matches() {
        for (a, b) in [(3, 2), (4, 3), (5, 2), (2, 4)] {
            let shape = HookShape::new(a, b).unwrap();
            for t in enumerate_standard(shape) {
                let word = t.canonical_word();
                assert_eq!(word.len(), t.length());
                // apply the word (left to right = top of the word applied last)
                let mut cur = StandardTableau::initial(shape);
                for &r in word.iter().rev() {
                    cur = cur.swap(r);
                }
                assert_eq!(cur, t);
            }
        }
    }

    #[test]
    fn grid_and_json_round_trip() {
        let shape = HookShape::new(3, 2).unwrap();
        let t = StandardTableau::new(shape, vec![2, 5]).unwrap();
        assert_eq!(t.to_grid_string(), "1 3 4\n2\n5");
        let j = t.to_json();
        assert_eq!(StandardTableau::from_json(&j).unwrap(), t);
    }
}
