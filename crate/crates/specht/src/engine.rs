//! The generic reduction engine for hook Specht modules at quantum
//! characteristic 2.
//!
//! The module is presented by a cyclic generator `z` subject to
//! `e(i) z = delta(i, i_initial) z`, `y_k z = 0`, `psi_j z = 0` for
//! `j != b+1`, and the single word relation `psi_1 psi_2 ... psi_{b+1} z = 0`.
//! Its basis is `v_T = psi_{w_T} z` over standard tableaux `T`.
//!
//! The engine stores, for every generator and every basis vector, the exact
//! expansion of `generator . v_T` in the basis. These tables are filled
//! bottom-up by Coxeter length of `w_T`:
//!
//! * `e(i) v_T` threads the idempotent through the reduced word, giving
//!   `delta(i, i_T) v_T`;
//! * `y_k v_T` peels the first letter of the canonical word and pushes the
//!   `y` to the right with the six `y`-`psi` relations until it dies on `z`;
//! * `psi_r v_T` splits on where `r` and `r+1` sit in `T`: a leg-to-arm swap
//!   is again a basis vector, an arm-to-leg swap triggers the quadratic
//!   relation, and a same-row or same-column pair is straightened by pushing
//!   `psi_r` through the run decomposition of `w_T`, transmuting across braid
//!   relations whose correction terms are strictly shorter words.
//!
//! Every correction word spawned during straightening is at least two letters
//! shorter than the word being rewritten, so the fill terminates; a
//! configurable step cap guards the recursion anyway and reports the
//! offending word if it ever fires.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::SpechtError;
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::shape::HookShape;
use crate::tableau::{enumerate_standard, StandardTableau};

/// Default cap on elementary rewrite steps per reduction.
pub const DEFAULT_STEP_CAP: u64 = 10_000_000;

/// An abstract generator of the algebra acting on the module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `e(i)` for a residue sequence `i` over `{0,1}`.
    Idempotent(Vec<u8>),
    /// `y_k`, `1 <= k <= n`.
    Y(usize),
    /// `psi_r`, `1 <= r <= n-1`.
    Psi(usize),
}

/// A word of generators, applied to `z` from right to left.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn psis(indices: &[usize]) -> GeneratorWord {
        GeneratorWord(indices.iter().map(|&r| Generator::Psi(r)).collect())
    }
}

/// A finite linear combination of basis vectors, keyed by basis index inside
/// a fixed [`SpechtModule`]. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModuleElement {
    pub(crate) terms: BTreeMap<usize, Scalar>,
}

impl ModuleElement {
    pub fn zero() -> ModuleElement {
        ModuleElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, idx: usize) -> Option<&Scalar> {
        self.terms.get(&idx)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, idx: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(|| c.field().zero());
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleElement, c: &Scalar) {
        for (idx, v) in other.iter() {
            self.add_term(idx, &v.mul(c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleElement {
        let mut out = ModuleElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (idx, v) in other.iter() {
            out.add_term(idx, &v.neg());
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
enum Letter {
    P(usize),
    Yk(usize),
}

/// The Specht module of a hook shape over a fixed ground field, with every
/// single-generator action on the standard basis precomputed exactly.
pub struct SpechtModule {
    shape: HookShape,
    field: FieldSpec,
    basis: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
    residues: Vec<Vec<u8>>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    initial_idx: usize,
    /// `y_tab[k-1][t]` = expansion of `y_k v_t`.
    y_tab: Vec<Vec<ModuleElement>>,
    /// `psi_tab[r-1][t]` = expansion of `psi_r v_t`.
    psi_tab: Vec<Vec<ModuleElement>>,
    /// Realized residue sequences and the basis indices in each class.
    classes: Vec<(Vec<u8>, Vec<usize>)>,
    step_cap: u64,
}

impl SpechtModule {
    pub fn new(shape: HookShape, field: FieldSpec) -> Result<SpechtModule, SpechtError> {
        SpechtModule::with_step_cap(shape, field, DEFAULT_STEP_CAP)
    }

    pub fn with_step_cap(
        shape: HookShape,
        field: FieldSpec,
        step_cap: u64,
    ) -> Result<SpechtModule, SpechtError> {
        let basis = enumerate_standard(shape);
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.leg().to_vec(), i))
            .collect();
        let residues: Vec<Vec<u8>> = basis.iter().map(|t| t.residue_sequence()).collect();
        let words: Vec<Vec<usize>> = basis.iter().map(|t| t.canonical_word()).collect();
        let lengths: Vec<usize> = words.iter().map(|w| w.len()).collect();
        let initial_idx = index[StandardTableau::initial(shape).leg()];

        let mut class_map: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
        for (i, r) in residues.iter().enumerate() {
            class_map.entry(r.clone()).or_default().push(i);
        }
        let classes = class_map.into_iter().collect();

        let n = shape.n();
        let dim = basis.len();
        let mut module = SpechtModule {
            shape,
            field,
            basis,
            index,
            residues,
            words,
            lengths,
            initial_idx,
            y_tab: vec![vec![ModuleElement::zero(); dim]; n],
            psi_tab: vec![vec![ModuleElement::zero(); dim]; n.saturating_sub(1)],
            classes,
            step_cap,
        };
        module.fill_tables()?;
        Ok(module)
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn tableau(&self, idx: usize) -> &StandardTableau {
        &self.basis[idx]
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t.leg()).copied()
    }

    pub fn residue_sequence_of(&self, idx: usize) -> &[u8] {
        &self.residues[idx]
    }

    /// Realized residue sequences with the basis indices in each class.
    pub fn residue_classes(&self) -> &[(Vec<u8>, Vec<usize>)] {
        &self.classes
    }

    /// The cyclic generator `z = v_{T_initial}` as a module element.
    pub fn z(&self) -> ModuleElement {
        self.basis_vector(self.initial_idx)
    }

    pub fn initial_index(&self) -> usize {
        self.initial_idx
    }

    pub fn basis_vector(&self, idx: usize) -> ModuleElement {
        let mut out = ModuleElement::zero();
        out.add_term(idx, &self.field.one());
        out
    }

    // ----- table construction -----

    fn fill_tables(&mut self) -> Result<(), SpechtError> {
        let mut order: Vec<usize> = (0..self.basis.len()).collect();
        order.sort_by_key(|&i| self.lengths[i]);
        let n = self.shape.n();
        let mut steps: u64 = 0;
        for &idx in &order {
            for k in 1..=n {
                let e = self.compute_y(k, idx, &mut steps)?;
                self.y_tab[k - 1][idx] = e;
            }
            for r in 1..n {
                let e = self.compute_psi(r, idx, &mut steps)?;
                self.psi_tab[r - 1][idx] = e;
            }
        }
        Ok(())
    }

    fn bump(&self, steps: &mut u64, what: &str) -> Result<(), SpechtError> {
        *steps += 1;
        if *steps > self.step_cap {
            return Err(SpechtError::StepCap(what.to_string()));
        }
        Ok(())
    }

    fn compute_y(
        &self,
        k: usize,
        idx: usize,
        steps: &mut u64,
    ) -> Result<ModuleElement, SpechtError> {
        self.bump(steps, "y table fill")?;
        if self.lengths[idx] == 0 {
            return Ok(ModuleElement::zero());
        }
        let c = self.words[idx][0];
        let peeled = self.basis[idx].swap(c);
        let tp = self.index[peeled.leg()];
        debug_assert!(self.lengths[tp] + 1 == self.lengths[idx]);
        let res = &self.residues[tp];
        let same = res[c - 1] == res[c];
        let mut out = if k != c && k != c + 1 {
            self.apply_psi_elem(c, &self.y_tab[k - 1][tp], steps)?
        } else if k == c {
            // y_c psi_c e(i) = psi_c y_{c+1} e(i) - [i_c = i_{c+1}] e(i)
            let mut e = self.apply_psi_elem(c, &self.y_tab[c][tp], steps)?;
            if same {
                e.add_term(tp, &self.field.from_i64(-1));
            }
            e
        } else {
            // y_{c+1} psi_c e(i) = psi_c y_c e(i) + [i_c = i_{c+1}] e(i)
            let mut e = self.apply_psi_elem(c, &self.y_tab[c - 1][tp], steps)?;
            if same {
                e.add_term(tp, &self.field.one());
            }
            e
        };
        prune(&mut out);
        Ok(out)
    }

    fn compute_psi(
        &self,
        r: usize,
        idx: usize,
        steps: &mut u64,
    ) -> Result<ModuleElement, SpechtError> {
        self.bump(steps, "psi table fill")?;
        let t = &self.basis[idx];
        let p = t.node_of(r);
        let q = t.node_of(r + 1);
        if p.row == q.row || p.col == q.col {
            // same row or column: psi_1 lands in a vanishing idempotent block
            if r == 1 {
                return Ok(ModuleElement::zero());
            }
            return self.cascade_adjacent(r, idx, steps);
        }
        if p.col == 1 && q.row == 1 {
            // r in the leg, r+1 in the arm: ascent onto another basis vector
            let u = t.swap(r);
            let ui = self.index[u.leg()];
            return Ok(self.basis_vector(ui));
        }
        // r in the arm, r+1 in the leg: v_T = psi_r v_U, apply the quadratic relation
        let u = t.swap(r);
        let ui = self.index[u.leg()];
        debug_assert!(self.lengths[ui] + 1 == self.lengths[idx]);
        let res = &self.residues[ui];
        if res[r - 1] == res[r] {
            return Ok(ModuleElement::zero());
        }
        // psi_r^2 e(i) = -(y_r - y_{r+1})^2 e(i)
        let yr = &self.y_tab[r - 1][ui];
        let yr1 = &self.y_tab[r][ui];
        let mut out = ModuleElement::zero();
        out.add_scaled(&self.apply_y_elem(r, yr, steps)?, &self.field.from_i64(-1));
        out.add_scaled(&self.apply_y_elem(r, yr1, steps)?, &self.field.from_i64(2));
        out.add_scaled(
            &self.apply_y_elem(r + 1, yr1, steps)?,
            &self.field.from_i64(-1),
        );
        prune(&mut out);
        Ok(out)
    }

    /// Straighten `psi_r v_T` when `r` and `r+1` are adjacent in `T`, by
    /// pushing `psi_r` through the run decomposition of `w_T`. The surviving
    /// terms are braid corrections, each a strictly shorter word.
    fn cascade_adjacent(
        &self,
        r: usize,
        idx: usize,
        steps: &mut u64,
    ) -> Result<ModuleElement, SpechtError> {
        let t = &self.basis[idx];
        let leg = t.leg();
        let b = self.shape.b;
        // run m (1-based) moves leg entry l_m into place: letters l_m-1 down to m+1
        let runs: Vec<Vec<usize>> = leg
            .iter()
            .enumerate()
            .map(|(i0, &l)| ((i0 + 2)..l).rev().collect())
            .collect();
        let flatten = |rs: &[Vec<usize>]| -> Vec<usize> { rs.iter().flatten().copied().collect() };
        let mut terms: Vec<(i64, Vec<Letter>)> = Vec::new();

        if t.in_leg(r) {
            // r = l_k and r+1 = l_{k+1}: interleave the two runs into pairs
            // (r-1, r)(r-2, r-1)...(k+1, k+2) and telescope braid moves down.
            let k0 = leg.binary_search(&r).expect("leg membership checked");
            debug_assert!(leg.get(k0 + 1) == Some(&(r + 1)));
            let prefix_runs = flatten(&runs[..k0]);
            let tail_runs = flatten(&runs[k0 + 2..]);
            let low = k0 + 2;
            let mut lvl = r;
            while lvl > low {
                let mut suffix = Vec::new();
                let mut u = lvl - 1;
                while u > low {
                    suffix.push(u - 1);
                    suffix.push(u);
                    u -= 1;
                }
                suffix.extend_from_slice(&tail_runs);
                let i3 = self.twisted_residues(&suffix, [lvl - 1, lvl, lvl + 1]);
                if i3[0] != i3[1] && i3[1] != i3[2] {
                    let mut prefix = prefix_runs.clone();
                    let mut u = r;
                    while u > lvl {
                        prefix.push(u - 1);
                        prefix.push(u);
                        u -= 1;
                    }
                    for (cf, ky) in [(-1i64, lvl - 1), (2, lvl), (-1, lvl + 1)] {
                        let mut word: Vec<Letter> = prefix.iter().map(|&x| Letter::P(x)).collect();
                        word.push(Letter::Yk(ky));
                        word.extend(suffix.iter().map(|&x| Letter::P(x)));
                        terms.push((cf, word));
                    }
                }
                lvl -= 2;
            }
        } else {
            // r and r+1 in the arm: psi_r transmutes upward through each
            // interacting run, leaving one braid correction per run.
            let kk = leg.iter().filter(|&&l| l < r).count();
            let mut x = r;
            for m0 in kk..b {
                let l = leg[m0];
                let m1 = m0 + 1;
                if x >= l + 1 || x + 1 <= m1 {
                    continue;
                }
                if !(m1 + 1 <= x && x <= l - 2) {
                    return Err(SpechtError::StepCap(format!(
                        "unexpected straightening state psi_{r} on leg {leg:?}"
                    )));
                }
                let mut suffix: Vec<usize> = ((m1 + 1)..x).rev().collect();
                suffix.extend(flatten(&runs[m0 + 1..]));
                let i3 = self.twisted_residues(&suffix, [x, x + 1, x + 2]);
                if i3[0] != i3[1] && i3[1] != i3[2] {
                    let mut prefix = flatten(&runs[..m0]);
                    prefix.extend(((x + 2)..l).rev());
                    for (cf, ky) in [(1i64, x), (-2, x + 1), (1, x + 2)] {
                        let mut word: Vec<Letter> = prefix.iter().map(|&p| Letter::P(p)).collect();
                        word.push(Letter::Yk(ky));
                        word.extend(suffix.iter().map(|&p| Letter::P(p)));
                        terms.push((cf, word));
                    }
                }
                x += 1;
            }
            if x == b + 1 {
                return Err(SpechtError::StepCap(format!(
                    "unexpected terminal letter psi_{x} on leg {leg:?}"
                )));
            }
        }

        let mut out = ModuleElement::zero();
        for (cf, word) in terms {
            let v = self.eval_letters(&word, steps)?;
            out.add_scaled(&v, &self.field.from_i64(cf));
        }
        prune(&mut out);
        Ok(out)
    }

    /// Residue sequence of `word . z` at the given 1-based positions.
    fn twisted_residues(&self, word: &[usize], positions: [usize; 3]) -> [u8; 3] {
        let mut seq = self.residues[self.initial_idx].clone();
        for &u in word.iter().rev() {
            seq.swap(u - 1, u);
        }
        [
            seq[positions[0] - 1],
            seq[positions[1] - 1],
            seq[positions[2] - 1],
        ]
    }

    fn eval_letters(&self, word: &[Letter], steps: &mut u64) -> Result<ModuleElement, SpechtError> {
        let mut elem = self.z();
        for letter in word.iter().rev() {
            elem = match letter {
                Letter::P(r) => self.apply_psi_elem(*r, &elem, steps)?,
                Letter::Yk(k) => self.apply_y_elem(*k, &elem, steps)?,
            };
            if elem.is_zero() {
                return Ok(elem);
            }
        }
        Ok(elem)
    }

    fn apply_psi_elem(
        &self,
        r: usize,
        elem: &ModuleElement,
        steps: &mut u64,
    ) -> Result<ModuleElement, SpechtError> {
        let mut out = ModuleElement::zero();
        for (idx, c) in elem.iter() {
            self.bump(steps, "psi application")?;
            out.add_scaled(&self.psi_tab[r - 1][idx], c);
        }
        prune(&mut out);
        Ok(out)
    }

    fn apply_y_elem(
        &self,
        k: usize,
        elem: &ModuleElement,
        steps: &mut u64,
    ) -> Result<ModuleElement, SpechtError> {
        let mut out = ModuleElement::zero();
        for (idx, c) in elem.iter() {
            self.bump(steps, "y application")?;
            out.add_scaled(&self.y_tab[k - 1][idx], c);
        }
        prune(&mut out);
        Ok(out)
    }

    // ----- public actions -----

    /// `psi_r v_t` for a single basis vector.
    pub fn psi_basis(&self, r: usize, idx: usize) -> &ModuleElement {
        &self.psi_tab[r - 1][idx]
    }

    /// `y_k v_t` for a single basis vector.
    pub fn y_basis(&self, k: usize, idx: usize) -> &ModuleElement {
        &self.y_tab[k - 1][idx]
    }

    fn check_generator(&self, g: &Generator) -> Result<(), SpechtError> {
        let n = self.shape.n();
        match g {
            Generator::Y(k) if *k >= 1 && *k <= n => Ok(()),
            Generator::Psi(r) if *r >= 1 && *r < n => Ok(()),
            Generator::Idempotent(i) if i.len() == n && i.iter().all(|&x| x < 2) => Ok(()),
            _ => Err(SpechtError::BadIndex(format!("{g:?} for n = {n}"))),
        }
    }

    /// Apply one generator to an element, linearly.
    pub fn act(&self, g: &Generator, elem: &ModuleElement) -> Result<ModuleElement, SpechtError> {
        self.check_generator(g)?;
        let mut steps = 0u64;
        match g {
            Generator::Y(k) => self.apply_y_elem(*k, elem, &mut steps),
            Generator::Psi(r) => self.apply_psi_elem(*r, elem, &mut steps),
            Generator::Idempotent(i) => {
                let mut out = ModuleElement::zero();
                for (idx, c) in elem.iter() {
                    if &self.residues[idx] == i {
                        out.add_term(idx, c);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Reduce a generator word applied to `z` into the basis.
    pub fn reduce(&self, word: &GeneratorWord) -> Result<ModuleElement, SpechtError> {
        self.reduce_on(word, &self.z())
    }

    /// Reduce a generator word applied to an arbitrary element.
    pub fn reduce_on(
        &self,
        word: &GeneratorWord,
        start: &ModuleElement,
    ) -> Result<ModuleElement, SpechtError> {
        let mut elem = start.clone();
        for g in word.0.iter().rev() {
            elem = self.act(g, &elem)?;
            if elem.is_zero() {
                break;
            }
        }
        Ok(elem)
    }

    /// Exact matrix of a generator in the standard basis order: column `t`
    /// holds the coordinates of `g . v_t`.
    pub fn action_matrix(&self, g: &Generator) -> Result<Matrix, SpechtError> {
        self.check_generator(g)?;
        let dim = self.dim();
        let mut m = Matrix::zero(dim, dim, self.field);
        for col in 0..dim {
            let img = self.act(g, &self.basis_vector(col))?;
            for (row, c) in img.iter() {
                m.set(row, col, c.clone());
            }
        }
        Ok(m)
    }

    /// Matrix of a generator word (rightmost generator applied first).
    pub fn word_matrix(&self, word: &GeneratorWord) -> Result<Matrix, SpechtError> {
        let dim = self.dim();
        let mut m = Matrix::zero(dim, dim, self.field);
        for col in 0..dim {
            let img = self.reduce_on(word, &self.basis_vector(col))?;
            for (row, c) in img.iter() {
                m.set(row, col, c.clone());
            }
        }
        Ok(m)
    }

    /// Parse a generator name as used by the command line: `psiN`, `yN`,
    /// `e_lambda`, or `e:BITS`.
    pub fn parse_generator(&self, name: &str) -> Result<Generator, SpechtError> {
        let bad = || SpechtError::Parse(format!("unknown generator name {name:?}"));
        if name == "e_lambda" {
            return Ok(Generator::Idempotent(
                self.residues[self.initial_idx].clone(),
            ));
        }
        if let Some(bits) = name.strip_prefix("e:") {
            let seq: Vec<u8> = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(0u8),
                    '1' => Ok(1u8),
                    _ => Err(bad()),
                })
                .collect::<Result<_, _>>()?;
            return Ok(Generator::Idempotent(seq));
        }
        if let Some(k) = name.strip_prefix("psi") {
            return k.parse().map(Generator::Psi).map_err(|_| bad());
        }
        if let Some(k) = name.strip_prefix('y') {
            return k.parse().map(Generator::Y).map_err(|_| bad());
        }
        Err(bad())
    }

    /// Serialize an element as `{terms: [{tableau, coeff}]}`.
    pub fn element_to_json(&self, elem: &ModuleElement) -> Value {
        let terms: Vec<Value> = elem
            .iter()
            .map(|(idx, c)| {
                json!({
                    "tableau": self.basis[idx].to_json(),
                    "coeff": c.to_display_string(),
                })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn element_from_json(&self, v: &Value) -> Result<ModuleElement, SpechtError> {
        let bad = |m: &str| SpechtError::Parse(format!("element json: {m}"));
        let mut out = ModuleElement::zero();
        for term in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let t = StandardTableau::from_json(&term["tableau"])?;
            let idx = self
                .index_of(&t)
                .ok_or_else(|| bad("tableau not in basis"))?;
            let c = Scalar::parse(
                term["coeff"].as_str().ok_or_else(|| bad("coeff"))?,
                self.field,
            )?;
            out.add_term(idx, &c);
        }
        Ok(out)
    }
}

fn prune(elem: &mut ModuleElement) {
    elem.terms.retain(|_, v| !v.is_zero());
}

// All tables are immutable after construction, so a module can be queried
// from any number of threads.
const _: fn() = || {
    fn assert_sync<T: Send + Sync>() {}
    assert_sync::<SpechtModule>();
};

/// Convenience wrapper: reduce a word over a fresh module.
pub fn reduce(
    shape: HookShape,
    word: &GeneratorWord,
    field: FieldSpec,
) -> Result<ModuleElement, SpechtError> {
    SpechtModule::new(shape, field)?.reduce(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::binomial;

    fn module(a: usize, b: usize) -> SpechtModule {
        SpechtModule::new(HookShape::new(a, b).unwrap(), FieldSpec::Rational).unwrap()
    }

    #[test]
    fn specht_relations_on_z() {
        for (a, b) in [(3, 2), (4, 2), (2, 3), (5, 0), (1, 4)] {
            let m = module(a, b);
            let n = m.shape().n();
            let z = m.z();
            for k in 1..=n {
                assert!(m.act(&Generator::Y(k), &z).unwrap().is_zero(), "y_{k} z");
            }
            for j in 1..n {
                let img = m.act(&Generator::Psi(j), &z).unwrap();
                if j == b + 1 && b >= 1 {
                    assert_eq!(img.support_len(), 1, "psi_{{b+1}} z is a basis vector");
                } else {
                    assert!(img.is_zero(), "psi_{j} z");
                }
            }
            // Garnir word
            if b + 1 <= n - 1 {
                let word: Vec<usize> = (1..=b + 1).collect();
                let img = m.reduce(&GeneratorWord::psis(&word)).unwrap();
                assert!(img.is_zero(), "garnir word on ({a},1^{b})");
            }
        }
    }

    #[test]
    fn worked_reductions() {
        let m = module(3, 2);
        // psi_1 z = 0
        assert!(m.reduce(&GeneratorWord::psis(&[1])).unwrap().is_zero());
        // e(i_lambda) z = z
        let e = Generator::Idempotent(vec![0, 1, 0, 1, 0]);
        assert_eq!(m.reduce(&GeneratorWord(vec![e])).unwrap(), m.z());
        // psi_3 z = v_T with T = leg {2,4}
        let img = m.reduce(&GeneratorWord::psis(&[3])).unwrap();
        let t = StandardTableau::new(m.shape(), vec![2, 4]).unwrap();
        assert_eq!(img, m.basis_vector(m.index_of(&t).unwrap()));
        // psi_3 psi_3 z = 0 (quadratic relation sends it to y-terms that die)
        assert!(m.reduce(&GeneratorWord::psis(&[3, 3])).unwrap().is_zero());
    }

    #[test]
    fn basis_faithfulness() {
        // reducing the canonical word of each tableau returns that basis vector
        for (a, b) in [(3, 2), (4, 3), (2, 4), (5, 2)] {
            let m = module(a, b);
            for idx in 0..m.dim() {
                let word = GeneratorWord::psis(&m.tableau(idx).canonical_word());
                assert_eq!(
                    m.reduce(&word).unwrap(),
                    m.basis_vector(idx),
                    "tableau {idx}"
                );
            }
            assert_eq!(m.dim(), binomial(m.shape().n() - 1, b));
        }
    }

    #[test]
    fn idempotent_matrices_partition_identity() {
        let m = module(3, 2);
        let dim = m.dim();
        let mut sum = Matrix::zero(dim, dim, m.field());
        for (seq, _) in m.residue_classes() {
            let e = m
                .action_matrix(&Generator::Idempotent(seq.clone()))
                .unwrap();
            // idempotent and diagonal
            assert_eq!(e.mul(&e), e);
            sum = sum.add(&e);
        }
        assert_eq!(sum, Matrix::identity(dim, m.field()));
        // e(i_lambda) has rank = number of domino tableaux = 2
        let e = m
            .action_matrix(&Generator::Idempotent(vec![0, 1, 0, 1, 0]))
            .unwrap();
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn y1_matrix_is_zero() {
        let m = module(4, 2);
        assert!(m.action_matrix(&Generator::Y(1)).unwrap().is_zero());
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        let m = module(3, 2);
        assert!(m.act(&Generator::Psi(5), &m.z()).is_err());
        assert!(m.act(&Generator::Y(6), &m.z()).is_err());
        assert!(m.act(&Generator::Idempotent(vec![0, 1]), &m.z()).is_err());
    }

    #[test]
    fn element_json_round_trip() {
        let m = module(3, 2);
        let mut elem = m.z();
        elem.add_scaled(&m.basis_vector(3), &m.field().from_i64(-7));
        let j = m.element_to_json(&elem);
        assert_eq!(m.element_from_json(&j).unwrap(), elem);
    }

    #[test]
    fn reduction_is_linear() {
        let m = module(3, 2);
        let word = GeneratorWord::psis(&[3, 2]);
        let c = m.field().from_i64(5);
        let mut combo = m.basis_vector(1).scale(&c);
        combo.add_scaled(&m.basis_vector(4), &m.field().one());
        let direct = m.reduce_on(&word, &combo).unwrap();
        let mut split = m.reduce_on(&word, &m.basis_vector(1)).unwrap().scale(&c);
        split.add_scaled(
            &m.reduce_on(&word, &m.basis_vector(4)).unwrap(),
            &m.field().one(),
        );
        assert_eq!(direct, split);
    }

    #[test]
    fn engine_builds_over_characteristic_two() {
        // the presentation is characteristic-independent; only the
        // eigenvalue analysis forbids 2
        let m = SpechtModule::new(HookShape::new(3, 2).unwrap(), FieldSpec::Prime(2)).unwrap();
        assert_eq!(m.dim(), 6);
        assert!(m
            .reduce(&GeneratorWord::psis(&[1, 2, 3]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn step_cap_reports_a_diagnostic() {
        let err =
            SpechtModule::with_step_cap(HookShape::new(4, 3).unwrap(), FieldSpec::Rational, 3)
                .err()
                .expect("tiny cap must fire");
        assert!(matches!(err, SpechtError::StepCap(_)));
    }

    #[test]
    fn generator_names() {
        let m = module(3, 2);
        assert_eq!(m.parse_generator("psi3").unwrap(), Generator::Psi(3));
        assert_eq!(m.parse_generator("y2").unwrap(), Generator::Y(2));
        assert_eq!(
            m.parse_generator("e_lambda").unwrap(),
            Generator::Idempotent(vec![0, 1, 0, 1, 0])
        );
        assert_eq!(
            m.parse_generator("e:01100").unwrap(),
            Generator::Idempotent(vec![0, 1, 1, 0, 0])
        );
        assert!(m.parse_generator("q7").is_err());
    }
}
