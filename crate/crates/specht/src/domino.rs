//! Domino tableaux and their normal forms.
//!
//! For `b` even, a standard hook tableau whose residue sequence matches the
//! initial one keeps every pair `(2i, 2i+1)` in adjacent boxes, so the filling
//! decomposes into dominoes. Such tableaux are encoded by the number `d` of
//! displaced leg dominoes together with the odd indices `j_1 < ... < j_d`
//! describing where they sit; that code doubles as the chain word
//! `Psi(j_1 -> b+3-2d) ... Psi(j_d -> b+1)` expressing the basis vector.

use crate::error::SpechtError;
use crate::shape::HookShape;
use crate::tableau::{enumerate_standard, StandardTableau};

/// Normal-form code for a domino tableau: `d` displaced leg dominoes at odd
/// positions `js`. Valid codes satisfy `b+1-2(d-v) <= j_v <= n-2-2(d-v)` with
/// the `j_v` odd and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoNormalForm {
    pub d: usize,
    pub js: Vec<usize>,
}

impl DominoNormalForm {
    /// Descending chains `(hi, lo)` of the normal-form word for shape `(a,1^b)`:
    /// the v-th chain is `Psi(j_v) Psi(j_v - 2) ... Psi(b+3-2d+2(v-1))`.
    pub fn chains(&self, shape: HookShape) -> Vec<(usize, usize)> {
        (0..self.d)
            .map(|v| (self.js[v], shape.b + 3 - 2 * self.d + 2 * v))
            .collect()
    }

    /// Number of `Psi` factors in the normal form.
    pub fn psi_factor_count(&self, shape: HookShape) -> usize {
        self.chains(shape)
            .iter()
            .map(|(hi, lo)| (hi - lo) / 2 + 1)
            .sum()
    }

    /// The generator word of the normal form: each `Psi_j` expands to
    /// `psi_j psi_{j+1} psi_{j-1} psi_j`.
    pub fn psi_word(&self, shape: HookShape) -> Vec<usize> {
        let mut out = Vec::new();
        for (hi, lo) in self.chains(shape) {
            let mut x = hi;
            loop {
                out.extend_from_slice(&[x, x + 1, x - 1, x]);
                if x == lo {
                    break;
                }
                x -= 2;
            }
        }
        out
    }
}

/// True exactly when the residue sequence matches the initial tableau's.
/// For `b` even this is the same as every pair `(2i, 2i+1)` being adjacent.
pub fn is_domino(t: &StandardTableau) -> bool {
    t.residue_sequence() == StandardTableau::initial(t.shape()).residue_sequence()
}

/// The adjacency characterization, used as an independent cross-check of
/// [`is_domino`] when `b` is even.
pub fn all_pairs_adjacent(t: &StandardTableau) -> bool {
    let n = t.shape().n();
    for i in 1..n.div_ceil(2) {
        let p = t.node_of(2 * i);
        let q = t.node_of(2 * i + 1);
        let row_adj = p.row == q.row && q.col == p.col + 1;
        let col_adj = p.col == q.col && q.row == p.row + 1;
        if !row_adj && !col_adj {
            return false;
        }
    }
    true
}

/// Number of `Psi` factors of the tableau's normal form; defined for domino
/// tableaux with `b` even.
pub fn chain_length(t: &StandardTableau) -> usize {
    normal_form(t)
        .expect("chain_length of a non-domino tableau")
        .psi_factor_count(t.shape())
}

/// Normal-form code of a domino tableau. Errors on non-domino input or odd `b`.
pub fn normal_form(t: &StandardTableau) -> Result<DominoNormalForm, SpechtError> {
    let shape = t.shape();
    if shape.b % 2 != 0 {
        return Err(SpechtError::Precondition(
            "normal form needs even leg length".into(),
        ));
    }
    if !is_domino(t) {
        return Err(SpechtError::Precondition(format!(
            "tableau with leg {:?} is not a domino tableau",
            t.leg()
        )));
    }
    let leg = t.leg();
    let b = shape.b;
    for k in 0..b / 2 {
        if (leg[2 * k], leg[2 * k + 1]) != (2 * k + 2, 2 * k + 3) {
            let d = b / 2 - k;
            let js = (k..b / 2).map(|m| leg[2 * m + 1] - 2).collect();
            return Ok(DominoNormalForm { d, js });
        }
    }
    Ok(DominoNormalForm { d: 0, js: vec![] })
}

/// Rebuild the tableau from its normal-form code.
pub fn tableau_from_normal_form(
    shape: HookShape,
    nf: &DominoNormalForm,
) -> Result<StandardTableau, SpechtError> {
    if shape.b % 2 != 0 {
        return Err(SpechtError::Precondition(
            "normal form needs even leg length".into(),
        ));
    }
    if nf.js.len() != nf.d {
        return Err(SpechtError::Precondition(
            "code length disagrees with d".into(),
        ));
    }
    let b = shape.b;
    let n = shape.n();
    if nf.d > b / 2 {
        return Err(SpechtError::Precondition(format!(
            "d = {} exceeds b/2",
            nf.d
        )));
    }
    for v in 0..nf.d {
        let j = nf.js[v];
        let lo = b + 1 - 2 * (nf.d - v - 1) - 2;
        let hi = n - 2 - 2 * (nf.d - v - 1);
        if j % 2 == 0 || j < lo || j > hi || (v > 0 && nf.js[v - 1] >= j) {
            return Err(SpechtError::Precondition(format!(
                "invalid code {:?}",
                nf.js
            )));
        }
    }
    let mut leg: Vec<usize> = (2..b + 2 - 2 * nf.d).collect();
    for &j in &nf.js {
        leg.push(j + 1);
        leg.push(j + 2);
    }
    leg.sort_unstable();
    StandardTableau::new(shape, leg)
}

/// The tableau whose leg dominoes are `{[2,3], ..., [b,b+1], [j-1,j]}` minus
/// `[i-1,i]`, for odd `3 <= i <= b+1 < j <= n`.
pub fn make_tij(shape: HookShape, i: usize, j: usize) -> Result<StandardTableau, SpechtError> {
    let (b, n) = (shape.b, shape.n());
    if b % 2 != 0 || i % 2 == 0 || j % 2 == 0 || i < 3 || i > b + 1 || j <= b + 1 || j > n {
        return Err(SpechtError::Precondition(format!(
            "invalid domino move ({i}, {j})"
        )));
    }
    let mut leg = Vec::new();
    for k in 1..=b / 2 {
        if 2 * k + 1 != i {
            leg.push(2 * k);
            leg.push(2 * k + 1);
        }
    }
    leg.push(j - 1);
    leg.push(j);
    leg.sort_unstable();
    StandardTableau::new(shape, leg)
}

/// Domino tableaux in the order used for triangularity: increasing chain
/// length, ties broken lexicographically on the code `js`.
pub fn enumerate_domino(shape: HookShape) -> Vec<StandardTableau> {
    let mut doms: Vec<StandardTableau> = enumerate_standard(shape)
        .into_iter()
        .filter(is_domino)
        .collect();
    if shape.b % 2 == 0 {
        doms.sort_by_key(|t| {
            let nf = normal_form(t).expect("domino tableau has a normal form");
            (nf.psi_factor_count(shape), nf.js)
        });
    }
    doms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::binomial;

    #[test]
    fn domino_detection() {
        let shape = HookShape::new(5, 4).unwrap();
        let init = StandardTableau::initial(shape);
        assert!(is_domino(&init));
        // T_{5,9} has leg (2,3,8,9)
        let t59 = StandardTableau::new(shape, vec![2, 3, 8, 9]).unwrap();
        assert!(is_domino(&t59));
        let shape32 = HookShape::new(3, 2).unwrap();
        let bad = StandardTableau::new(shape32, vec![2, 5]).unwrap();
        assert!(!is_domino(&bad));
    }

    #[test]
    fn residue_filter_equals_adjacency_for_even_leg() {
        for (a, b) in [(3, 2), (5, 4), (4, 2), (2, 4), (7, 2)] {
            let shape = HookShape::new(a, b).unwrap();
            for t in enumerate_standard(shape) {
                assert_eq!(is_domino(&t), all_pairs_adjacent(&t), "leg {:?}", t.leg());
            }
        }
    }

    #[test]
    fn enumerate_domino_counts() {
        // (3,1^2): exactly legs {2,3} and {4,5}
        let shape = HookShape::new(3, 2).unwrap();
        let doms = enumerate_domino(shape);
        assert_eq!(doms.len(), 2);
        assert_eq!(doms[0].leg(), &[2, 3]);
        assert_eq!(doms[1].leg(), &[4, 5]);
        assert_eq!(enumerate_domino(HookShape::new(6, 0).unwrap()).len(), 1);
        // b even, n odd: count is binomial((n-1)/2, b/2)
        for (a, b) in [(3, 2), (5, 2), (5, 4), (3, 4), (7, 4)] {
            let shape = HookShape::new(a, b).unwrap();
            let n = shape.n();
            assert_eq!(enumerate_domino(shape).len(), binomial((n - 1) / 2, b / 2));
        }
    }

    #[test]
    fn enumerate_domino_includes_the_four_moves() {
        let shape = HookShape::new(5, 4).unwrap();
        let doms = enumerate_domino(shape);
        for (i, j) in [(3, 7), (3, 9), (5, 7), (5, 9)] {
            let t = make_tij(shape, i, j).unwrap();
            assert!(doms.contains(&t), "T_{{{i},{j}}} missing");
        }
    }

    #[test]
    fn normal_form_worked_example() {
        // (7,1^6), leg (2,3,8,9,12,13): d = 2, js = (7, 11)
        let shape = HookShape::new(7, 6).unwrap();
        let t = StandardTableau::new(shape, vec![2, 3, 8, 9, 12, 13]).unwrap();
        let nf = normal_form(&t).unwrap();
        assert_eq!((nf.d, nf.js.clone()), (2, vec![7, 11]));
        assert_eq!(tableau_from_normal_form(shape, &nf).unwrap(), t);
        // initial tableau: d = 0
        let nf0 = normal_form(&StandardTableau::initial(shape)).unwrap();
        assert_eq!((nf0.d, nf0.js.len()), (0, 0));
    }

    #[test]
    fn normal_form_round_trips_everywhere() {
        for (a, b) in [(3, 2), (5, 4), (3, 4), (5, 2), (1, 2), (3, 6)] {
            let shape = HookShape::new(a, b).unwrap();
            for t in enumerate_domino(shape) {
                let nf = normal_form(&t).unwrap();
                assert_eq!(tableau_from_normal_form(shape, &nf).unwrap(), t);
            }
        }
    }

    #[test]
    fn normal_form_rejects_non_domino() {
        let shape = HookShape::new(3, 2).unwrap();
        let t = StandardTableau::new(shape, vec![2, 5]).unwrap();
        assert!(normal_form(&t).is_err());
    }

    #[test]
    fn tij_examples() {
        let shape = HookShape::new(5, 4).unwrap();
        assert_eq!(make_tij(shape, 5, 9).unwrap().leg(), &[2, 3, 8, 9]);
        assert_eq!(make_tij(shape, 3, 7).unwrap().leg(), &[4, 5, 6, 7]);
        let shape32 = HookShape::new(3, 2).unwrap();
        assert_eq!(make_tij(shape32, 3, 5).unwrap().leg(), &[4, 5]);
        assert!(make_tij(shape, 4, 9).is_err());
        assert!(make_tij(shape, 3, 11).is_err());
    }

    #[test]
    fn canonical_word_matches_chain_word_up_to_commutation() {
        // the canonical reduced word of T_{5,9} and the chain word of its
        // normal form are reduced words of the same permutation
        let shape = HookShape::new(5, 4).unwrap();
        let t = make_tij(shape, 5, 9).unwrap();
        let canonical = t.canonical_word();
        let chain = normal_form(&t).unwrap().psi_word(shape);
        assert_eq!(canonical.len(), chain.len());
        let apply = |word: &[usize]| {
            let mut cur = StandardTableau::initial(shape);
            for &r in word.iter().rev() {
                cur = cur.swap(r);
            }
            cur
        };
        assert_eq!(apply(&canonical), t);
        assert_eq!(apply(&chain), t);
    }

    #[test]
    fn tij_normal_form_is_the_up_down_chain_pair() {
        // normal form of T_{i,j} consists of the singleton chains at
        // i, i+2, ..., b-1 followed by the descending chain (j-2 -> b+1)
        let shape = HookShape::new(5, 4).unwrap();
        let t = make_tij(shape, 5, 9).unwrap();
        let nf = normal_form(&t).unwrap();
        assert_eq!(nf.chains(shape), vec![(7, 5)]);
        let t = make_tij(shape, 3, 7).unwrap();
        let nf = normal_form(&t).unwrap();
        assert_eq!(nf.chains(shape), vec![(3, 3), (5, 5)]);
    }
}
