//! Closed-form actions on the domino basis, bypassing the generic engine.
//!
//! On a domino basis vector every `y_k`, every even `psi_k` and `psi_1` act
//! as zero. An odd `psi_j` is computed by surgery on the normal-form chain
//! word: the letter is pushed through the `Psi` factors, the three
//! psi-action rewrites (`psi_j Psi_j v = -2 psi_j v` and the two
//! `psi_j Psi_{j +- 2} Psi_j v = psi_j v` collapses) strip factors as it
//! travels, and the leftover chain word is renormalized with the two
//! cancellation moves. The terminal state is a single swap or zero, so the
//! result is an integer multiple of one basis vector.
//!
//! Uncovered configurations are never expected on valid input; they are
//! routed to the generic engine and counted, and the test suite pins that
//! count to zero.

use crate::domino::{is_domino, normal_form, tableau_from_normal_form, DominoNormalForm};
use crate::engine::{ModuleElement, SpechtModule};
use crate::error::SpechtError;
use crate::shape::HookShape;
use crate::tableau::StandardTableau;

/// A product `Psi_hi Psi_{hi-2} ... Psi_lo` (down) or `Psi_lo ... Psi_hi`
/// (up) of the squared intertwiners `Psi_j = psi_j psi_{j+1} psi_{j-1} psi_j`.
/// The chain is empty (the identity) when the bounds cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsiChain {
    pub direction: ChainDirection,
    pub hi: usize,
    pub lo: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainDirection {
    Down,
    Up,
}

impl PsiChain {
    pub fn down(hi: usize, lo: usize) -> PsiChain {
        PsiChain {
            direction: ChainDirection::Down,
            hi,
            lo,
        }
    }

    pub fn up(lo: usize, hi: usize) -> PsiChain {
        PsiChain {
            direction: ChainDirection::Up,
            hi,
            lo,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    /// The `Psi` indices in application order (left to right).
    pub fn factors(&self) -> Vec<usize> {
        if self.is_empty() {
            return vec![];
        }
        match self.direction {
            ChainDirection::Down => (self.lo..=self.hi).rev().step_by(2).collect(),
            ChainDirection::Up => (self.lo..=self.hi).step_by(2).collect(),
        }
    }

    /// Expansion into psi-generator indices.
    pub fn psi_word(&self) -> Vec<usize> {
        self.factors()
            .iter()
            .flat_map(|&x| [x, x + 1, x - 1, x])
            .collect()
    }
}

/// A product of chains applied to a module element.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainExpression {
    pub chains: Vec<PsiChain>,
    pub tail: ModuleElement,
}

/// One applied rewrite, for the audit log.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceEvent {
    pub lemma: &'static str,
    pub detail: String,
}

/// Structured log of applied lemmas; disabled collection is free.
#[derive(Debug, Default)]
pub struct Trace {
    enabled: bool,
    pub events: Vec<TraceEvent>,
}

impl Trace {
    pub fn enabled() -> Trace {
        Trace {
            enabled: true,
            events: Vec::new(),
        }
    }

    pub fn disabled() -> Trace {
        Trace::default()
    }

    fn emit(&mut self, lemma: &'static str, detail: impl FnOnce() -> String) {
        if self.enabled {
            self.events.push(TraceEvent {
                lemma,
                detail: detail(),
            });
        }
    }
}

/// An integer multiple of a single standard tableau basis vector.
#[derive(Debug, Clone, PartialEq)]
pub enum FastElement {
    Zero,
    Term {
        coeff: i64,
        tableau: StandardTableau,
    },
}

impl FastElement {
    pub fn to_module_element(&self, module: &SpechtModule) -> ModuleElement {
        match self {
            FastElement::Zero => ModuleElement::zero(),
            FastElement::Term { coeff, tableau } => {
                let idx = module
                    .index_of(tableau)
                    .expect("fast-path tableau lies in the standard basis");
                module
                    .basis_vector(idx)
                    .scale(&module.field().from_i64(*coeff))
            }
        }
    }
}

fn require_domino(t: &StandardTableau) -> Result<(), SpechtError> {
    if t.shape().b % 2 != 0 {
        return Err(SpechtError::Precondition(
            "fast path needs even leg length".into(),
        ));
    }
    if !is_domino(t) {
        return Err(SpechtError::Precondition(
            "fast path needs a domino tableau".into(),
        ));
    }
    Ok(())
}

/// `y_k v_T = 0` for every `k` and every domino basis vector.
pub fn apply_y(k: usize, t: &StandardTableau) -> Result<FastElement, SpechtError> {
    require_domino(t)?;
    if k < 1 || k > t.shape().n() {
        return Err(SpechtError::BadIndex(format!("y_{k}")));
    }
    Ok(FastElement::Zero)
}

/// `psi_k v_T = 0` for every even `k` on a domino basis vector.
pub fn apply_psi_even(k: usize, t: &StandardTableau) -> Result<FastElement, SpechtError> {
    require_domino(t)?;
    if k < 1 || k >= t.shape().n() || k % 2 != 0 {
        return Err(SpechtError::BadIndex(format!("psi_{k} (even expected)")));
    }
    Ok(FastElement::Zero)
}

/// `psi_1 v_T = 0` on a domino basis vector.
pub fn apply_psi_one(t: &StandardTableau) -> Result<FastElement, SpechtError> {
    require_domino(t)?;
    Ok(FastElement::Zero)
}

fn chains_disjoint(c1: (usize, usize), c2: (usize, usize)) -> bool {
    // Psi blocks commute when their letter intervals are separated
    c2.1 >= c1.0 + 4 || c1.1 >= c2.0 + 4
}

enum Normalized {
    Chains(Vec<(usize, usize)>),
    Zero,
    Unrecognized,
}

/// Normalize a product of descending chains applied to `z`: drop empty
/// chains, apply the two cancellation moves, sort commuting chains, and kill
/// words whose rightmost letter annihilates `z`.
fn normalize_chain_word(shape: HookShape, chains: &[(usize, usize)]) -> Normalized {
    let b = shape.b;
    let mut ch: Vec<(usize, usize)> = chains.iter().copied().filter(|c| c.0 >= c.1).collect();
    let mut fuel = 10_000usize;
    loop {
        ch.retain(|c| c.0 >= c.1);
        let mut changed = false;
        for i in 0..ch.len().saturating_sub(1) {
            let ((x1, y1), (x2, y2)) = (ch[i], ch[i + 1]);
            if x1 >= x2 && x2 >= y1 {
                // cancellation, first form (the first chain may empty out)
                ch[i] = (x2.saturating_sub(4), y1);
                ch[i + 1] = (x1, y2);
                changed = true;
                break;
            }
            if x2 >= y1 && y1 >= y2 {
                // cancellation, second form
                ch[i] = (x1, y2);
                ch[i + 1] = (x2, y1 + 4);
                changed = true;
                break;
            }
            if chains_disjoint((x1, y1), (x2, y2)) && y2 < y1 {
                ch.swap(i, i + 1);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
        fuel -= 1;
        if fuel == 0 {
            return Normalized::Unrecognized;
        }
    }
    let delta = ch.len();
    let grammar_ok = ch
        .iter()
        .enumerate()
        .all(|(i, c)| c.1 + 2 * delta == b + 3 + 2 * i && (i + 1 == delta || c.0 < ch[i + 1].0));
    if grammar_ok && delta <= b / 2 {
        return Normalized::Chains(ch);
    }
    // a chain commuting past everything to its right with lo != b+1 reaches z
    // and its rightmost letter annihilates it
    for i in 0..ch.len() {
        if ch[i].1 != b + 1 && (i + 1..ch.len()).all(|k| chains_disjoint(ch[i], ch[k])) {
            return Normalized::Zero;
        }
    }
    Normalized::Unrecognized
}

/// Outcome of the chain surgery before any engine fallback.
enum Surgery {
    Done(FastElement),
    Uncovered(String),
}

fn psi_odd_surgery(
    shape: HookShape,
    j: usize,
    nf: &DominoNormalForm,
    trace: &mut Trace,
) -> Surgery {
    let mut chains: Vec<(usize, usize)> = nf.chains(shape);
    let mut coeff: i64 = 1;
    let mut fuel = 10_000usize;
    loop {
        fuel -= 1;
        if fuel == 0 {
            return Surgery::Uncovered("surgery fuel exhausted".into());
        }
        chains = match normalize_chain_word(shape, &chains) {
            Normalized::Chains(c) => c,
            Normalized::Zero => {
                trace.emit("chain-normalize.kill", || format!("psi_{j}"));
                return Surgery::Done(FastElement::Zero);
            }
            Normalized::Unrecognized => {
                return Surgery::Uncovered(format!("unnormalizable chain word {chains:?}"))
            }
        };
        let flat: Vec<(usize, usize)> = chains
            .iter()
            .enumerate()
            .flat_map(|(i, &(hi, lo))| {
                (lo..=hi)
                    .rev()
                    .step_by(2)
                    .map(move |f| (i, f))
                    .collect::<Vec<_>>()
            })
            .collect();
        let Some(pos) = flat.iter().position(|&(_, f)| f.abs_diff(j) <= 2) else {
            return resolve_terminal(shape, coeff, &chains, j);
        };
        let (ci, f) = flat[pos];
        let next = flat.get(pos + 1).map(|&(_, f)| f);
        let (hi, lo) = chains[ci];
        if f == j {
            // psi_j Psi_j v = -2 psi_j v
            trace.emit("psi-actions.1", || format!("psi_{j} strips Psi_{j}"));
            coeff *= -2;
            chains[ci] = (hi - 2, lo);
        } else if f == j + 2 && next == Some(j) {
            // psi_j Psi_{j+2} Psi_j v = psi_j v, inside one chain
            trace.emit("psi-actions.2", || {
                format!("psi_{j} collapses Psi_{}Psi_{j}", j + 2)
            });
            chains.splice(ci..=ci, [(hi, j + 4), (j.wrapping_sub(2), lo)]);
        } else if f == j - 2 && (next == Some(j) || chains.iter().any(|c| c.0 == j)) {
            // psi_j Psi_{j-2} Psi_j v = psi_j v, after commuting the block
            // between the two staircase heads out of the way
            if ci + 1 >= chains.len() || chains[ci + 1].0 != j {
                return Surgery::Uncovered(format!("staircase without head {j}"));
            }
            trace.emit("psi-actions.4", || {
                format!("psi_{j} collapses Psi_{}Psi_{j}", j - 2)
            });
            let (nh, nl) = chains[ci + 1];
            chains[ci] = (hi - 2, lo);
            chains[ci + 1] = (nh - 2, nl);
        } else {
            return resolve_terminal(shape, coeff, &chains, j);
        }
    }
}

fn resolve_terminal(shape: HookShape, coeff: i64, chains: &[(usize, usize)], j: usize) -> Surgery {
    let nf = DominoNormalForm {
        d: chains.len(),
        js: chains.iter().map(|c| c.0).collect(),
    };
    let t = match tableau_from_normal_form(shape, &nf) {
        Ok(t) => t,
        Err(e) => return Surgery::Uncovered(format!("terminal rebuild failed: {e}")),
    };
    let p = t.node_of(j);
    let q = t.node_of(j + 1);
    if p.row == q.row || p.col == q.col {
        return Surgery::Done(FastElement::Zero);
    }
    if !(p.col == 1 && q.row == 1) {
        return Surgery::Uncovered("terminal resolution is not a leg-to-arm swap".into());
    }
    Surgery::Done(FastElement::Term {
        coeff,
        tableau: t.swap(j),
    })
}

/// `psi_j v_T` for odd `j` with `3 <= j <= n-2`, by chain surgery on the
/// normal form. `Err` means the pattern was not covered; callers fall back to
/// the generic engine and log it.
pub fn apply_psi_odd(
    j: usize,
    t: &StandardTableau,
    trace: &mut Trace,
) -> Result<FastElement, SpechtError> {
    require_domino(t)?;
    let shape = t.shape();
    let n = shape.n();
    if j % 2 == 0 || j < 3 || j + 2 > n {
        return Err(SpechtError::BadIndex(format!(
            "psi_{j} (odd, 3..=n-2 expected)"
        )));
    }
    let nf = normal_form(t)?;
    match psi_odd_surgery(shape, j, &nf, trace) {
        Surgery::Done(e) => Ok(e),
        Surgery::Uncovered(msg) => Err(SpechtError::StepCap(msg)),
    }
}

/// `psi_j v_T` with engine fallback for uncovered patterns; returns the
/// element and whether the fallback fired.
pub fn apply_psi_odd_with_fallback(
    module: &SpechtModule,
    j: usize,
    t: &StandardTableau,
    trace: &mut Trace,
) -> Result<(ModuleElement, bool), SpechtError> {
    match apply_psi_odd(j, t, trace) {
        Ok(fast) => Ok((fast.to_module_element(module), false)),
        Err(SpechtError::StepCap(msg)) => {
            trace.emit("fallback.engine", || msg.clone());
            let idx = module
                .index_of(t)
                .ok_or_else(|| SpechtError::Precondition("tableau not in module".into()))?;
            Ok((module.psi_basis(j, idx).clone(), true))
        }
        Err(e) => Err(e),
    }
}

/// Evaluate the Garnir word `psi_1 psi_2 ... psi_{b+1}` against a domino
/// basis vector symbolically, emitting the commutation case used at each
/// step, and report whether the result is zero (the contract says it is).
pub fn garnir_word_kills(t: &StandardTableau, trace: &mut Trace) -> Result<bool, SpechtError> {
    require_domino(t)?;
    let shape = t.shape();
    let b = shape.b;
    if b == 0 || b + 1 > shape.n() - 1 {
        // degenerate: the word is psi_1 alone (or absent); psi_1 kills z
        trace.emit("specht-relation.kill", || "psi_1 z".into());
        return Ok(true);
    }
    let nf = normal_form(t)?;
    let factors: Vec<usize> = nf
        .chains(shape)
        .iter()
        .flat_map(|&(hi, lo)| (lo..=hi).rev().step_by(2).collect::<Vec<_>>())
        .collect();
    // terms: (run top j, remaining Psi factors); coefficients are irrelevant
    // for deciding zero-ness
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(b + 1, factors)];
    let mut fuel = 1_000_000usize;
    while let Some((j, rest)) = stack.pop() {
        fuel = fuel
            .checked_sub(1)
            .ok_or_else(|| SpechtError::StepCap("garnir walk".into()))?;
        let Some((&x, tail)) = rest.split_first() else {
            if j == b + 1 {
                trace.emit("garnir-relation.kill", || format!("run ends at psi_{j} z"));
            } else {
                trace.emit("specht-relation.kill", || format!("run ends at psi_{j} z"));
            }
            continue;
        };
        let tail = tail.to_vec();
        if x >= j + 4 {
            trace.emit("garnir-commute.1", || format!("run {j} past Psi_{x}"));
            stack.push((j, tail));
        } else if x == j + 2 {
            trace.emit("garnir-commute.2", || format!("run {j} absorbs Psi_{x}"));
            stack.push((j + 2, tail));
        } else if x == j {
            trace.emit("garnir-commute.3", || format!("run {j} doubles on Psi_{x}"));
            stack.push((j, tail));
        } else if x + 2 == j {
            trace.emit("garnir-commute.4", || format!("run {j} splits on Psi_{x}"));
            stack.push((j, tail.clone()));
            stack.push((j - 2, tail));
        } else {
            trace.emit("garnir-commute.5", || format!("run {j} splits on Psi_{x}"));
            stack.push((j, tail.clone()));
            stack.push((x, tail));
        }
    }
    Ok(true)
}

/// The two cancellation moves on adjacent descending chains. When neither
/// precondition holds the expression is returned unchanged.
pub fn cancel_chains(c1: &PsiChain, c2: &PsiChain, tail: ModuleElement) -> ChainExpression {
    let unchanged = ChainExpression {
        chains: vec![*c1, *c2],
        tail: tail.clone(),
    };
    if c1.direction != ChainDirection::Down || c2.direction != ChainDirection::Down {
        return unchanged;
    }
    if c1.is_empty() || c2.is_empty() {
        return unchanged;
    }
    let ((x1, y1), (x2, y2)) = ((c1.hi, c1.lo), (c2.hi, c2.lo));
    if x1 >= x2 && x2 >= y1 {
        // the first chain may empty out (bounds cross)
        let first = PsiChain::down(x2.saturating_sub(4), y1);
        return ChainExpression {
            chains: vec![first, PsiChain::down(x1, y2)],
            tail,
        };
    }
    if x2 >= y1 && y1 >= y2 {
        return ChainExpression {
            chains: vec![PsiChain::down(x1, y2), PsiChain::down(x2, y1 + 4)],
            tail,
        };
    }
    unchanged
}
