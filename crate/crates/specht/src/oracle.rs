//! Brute-force verification layer.
//!
//! Everything here goes through the generic engine only; agreement with the
//! closed-form domino actions elsewhere in the crate is evidence, not
//! circularity. Each suite checks its identities on every basis vector,
//! which is equivalent to the corresponding exact matrix identity, and
//! reports one named pass/fail line with a minimal witness on failure.

use std::time::Instant;

use serde_json::{json, Value};

use crate::domino::{enumerate_domino, normal_form};
use crate::endomorphism::{diagonal_prediction_for, formula_eigenvalues, spectrum, EndomorphismF};
use crate::engine::{Generator, GeneratorWord, ModuleElement, SpechtModule};
use crate::error::SpechtError;
use crate::matrix::poly_eval;
use crate::scalar::FieldSpec;
use crate::shape::HookShape;
use crate::tableau::binomial;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Minimal witness on failure: an offending word or matrix coordinate.
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub shape: (usize, usize),
    pub characteristic: u64,
    pub checks: Vec<Check>,
    pub runtime_ms: u128,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": [self.shape.0, self.shape.1],
            "char": self.characteristic,
            "pass": self.all_pass(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "runtime_ms": self.runtime_ms,
        })
    }

    pub fn from_json(v: &Value) -> Result<VerificationReport, SpechtError> {
        let bad = |m: &str| SpechtError::Parse(format!("report json: {m}"));
        let checks = v["checks"]
            .as_array()
            .ok_or_else(|| bad("checks"))?
            .iter()
            .map(|c| {
                Ok(Check {
                    name: c["name"].as_str().ok_or_else(|| bad("name"))?.to_string(),
                    pass: c["pass"].as_bool().ok_or_else(|| bad("pass"))?,
                    witness: c["witness"].as_str().map(|s| s.to_string()),
                })
            })
            .collect::<Result<Vec<_>, SpechtError>>()?;
        Ok(VerificationReport {
            shape: (
                v["shape"][0].as_u64().ok_or_else(|| bad("shape"))? as usize,
                v["shape"][1].as_u64().ok_or_else(|| bad("shape"))? as usize,
            ),
            characteristic: v["char"].as_u64().ok_or_else(|| bad("char"))?,
            checks,
            runtime_ms: v["runtime_ms"].as_u64().unwrap_or(0) as u128,
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "shape ({},1^{}) char {}\n",
            self.shape.0, self.shape.1, self.characteristic
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<44} {}{}\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.witness
                    .as_deref()
                    .map(|w| format!("  [{w}]"))
                    .unwrap_or_default()
            ));
        }
        out
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn new() -> Collector {
        Collector { checks: Vec::new() }
    }

    fn record(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness,
        });
    }

    /// Record a check that holds on every basis vector, with the first
    /// failing vector as witness.
    fn all<I: IntoIterator<Item = Option<String>>>(&mut self, name: &str, witnesses: I) {
        let first = witnesses.into_iter().flatten().next();
        self.record(name, first.is_none(), first);
    }
}

fn elem_eq(a: &ModuleElement, b: &ModuleElement) -> bool {
    a == b
}

/// Check every defining relation of the algebra presentation, the Specht
/// relations on the cyclic generator, and the dimension count.
pub fn verify_presentation(
    shape: HookShape,
    field: FieldSpec,
    cap: usize,
) -> Result<VerificationReport, SpechtError> {
    let n = shape.n();
    if n > cap {
        return Err(SpechtError::Precondition(format!(
            "n = {n} exceeds cap {cap}"
        )));
    }
    let start = Instant::now();
    let m = SpechtModule::new(shape, field)?;
    let mut col = Collector::new();
    let dim = m.dim();

    col.record(
        "dimension = binomial(n-1, b)",
        dim == binomial(n - 1, shape.b),
        (dim != binomial(n - 1, shape.b)).then(|| format!("dim = {dim}")),
    );

    // y_1 = 0 and no realized residue sequence starts with 1
    col.all(
        "y_1 = 0",
        (0..dim).map(|t| (!m.y_basis(1, t).is_zero()).then(|| format!("v_{t}"))),
    );
    col.record(
        "e(i) = 0 when i_1 = 1",
        m.residue_classes().iter().all(|(seq, _)| seq[0] == 0),
        None,
    );

    // block behaviour: y preserves the residue class, psi twists it
    col.all(
        "y_r e(i) = e(i) y_r",
        (0..dim)
            .flat_map(|t| (1..=n).map(move |k| (k, t)))
            .map(|(k, t)| {
                let img = m.y_basis(k, t);
                let res = m.residue_sequence_of(t).to_vec();
                img.iter()
                    .find(|(u, _)| m.residue_sequence_of(*u) != res)
                    .map(|(u, _)| format!("y_{k} v_{t} hits class of v_{u}"))
            }),
    );
    col.all(
        "psi_r e(i) = e(s_r i) psi_r",
        (0..dim)
            .flat_map(|t| (1..n).map(move |r| (r, t)))
            .map(|(r, t)| {
                let img = m.psi_basis(r, t);
                let mut twisted = m.residue_sequence_of(t).to_vec();
                twisted.swap(r - 1, r);
                img.iter()
                    .find(|(u, _)| m.residue_sequence_of(*u) != twisted)
                    .map(|(u, _)| format!("psi_{r} v_{t} hits class of v_{u}"))
            }),
    );

    // commuting families
    col.all(
        "y_s y_r = y_r y_s",
        (0..dim)
            .flat_map(|t| (1..=n).flat_map(move |s| ((s + 1)..=n).map(move |r| (s, r, t))))
            .map(|(s, r, t)| {
                let a = m.act(&Generator::Y(s), m.y_basis(r, t)).ok()?;
                let b = m.act(&Generator::Y(r), m.y_basis(s, t)).ok()?;
                (!elem_eq(&a, &b)).then(|| format!("y_{s} y_{r} v_{t}"))
            }),
    );
    col.all(
        "y_s psi_r = psi_r y_s (s != r, r+1)",
        (0..dim)
            .flat_map(|t| (1..n).flat_map(move |r| (1..=n).map(move |s| (s, r, t))))
            .filter(|(s, r, _)| s != r && *s != r + 1)
            .map(|(s, r, t)| {
                let a = m.act(&Generator::Y(s), m.psi_basis(r, t)).ok()?;
                let b = m.act(&Generator::Psi(r), m.y_basis(s, t)).ok()?;
                (!elem_eq(&a, &b)).then(|| format!("y_{s} psi_{r} v_{t}"))
            }),
    );
    col.all(
        "psi_s psi_r = psi_r psi_s (|s-r| >= 2)",
        (0..dim)
            .flat_map(|t| (1..n).flat_map(move |r| ((r + 2)..n).map(move |s| (s, r, t))))
            .map(|(s, r, t)| {
                let a = m.act(&Generator::Psi(s), m.psi_basis(r, t)).ok()?;
                let b = m.act(&Generator::Psi(r), m.psi_basis(s, t)).ok()?;
                (!elem_eq(&a, &b)).then(|| format!("psi_{s} psi_{r} v_{t}"))
            }),
    );

    // the four dot-crossing relations, conditioned on the residues at v_t
    col.all(
        "y_r psi_r e(i) and y_{r+1} psi_r e(i)",
        (0..dim)
            .flat_map(|t| (1..n).map(move |r| (r, t)))
            .map(|(r, t)| {
                let res = m.residue_sequence_of(t);
                let same = res[r - 1] == res[r];
                let one = m.field().one();
                // y_r psi_r = psi_r y_{r+1} - [i_r = i_{r+1}]
                let lhs = m.act(&Generator::Y(r), m.psi_basis(r, t)).ok()?;
                let mut rhs = m.act(&Generator::Psi(r), m.y_basis(r + 1, t)).ok()?;
                if same {
                    rhs.add_scaled(&m.basis_vector(t), &one.neg());
                }
                if !elem_eq(&lhs, &rhs) {
                    return Some(format!("y_{r} psi_{r} v_{t}"));
                }
                // y_{r+1} psi_r = psi_r y_r + [i_r = i_{r+1}]
                let lhs = m.act(&Generator::Y(r + 1), m.psi_basis(r, t)).ok()?;
                let mut rhs = m.act(&Generator::Psi(r), m.y_basis(r, t)).ok()?;
                if same {
                    rhs.add_scaled(&m.basis_vector(t), &one);
                }
                (!elem_eq(&lhs, &rhs)).then(|| format!("y_{}, psi_{r} v_{t}", r + 1))
            }),
    );

    // quadratic relation
    col.all(
        "psi_r^2 e(i)",
        (0..dim)
            .flat_map(|t| (1..n).map(move |r| (r, t)))
            .map(|(r, t)| {
                let res = m.residue_sequence_of(t);
                let lhs = m.act(&Generator::Psi(r), m.psi_basis(r, t)).ok()?;
                let rhs = if res[r - 1] == res[r] {
                    ModuleElement::zero()
                } else {
                    // -(y_r - y_{r+1})^2 v_t
                    let f = m.field();
                    let yr = m.y_basis(r, t);
                    let yr1 = m.y_basis(r + 1, t);
                    let mut out = ModuleElement::zero();
                    out.add_scaled(&m.act(&Generator::Y(r), yr).ok()?, &f.from_i64(-1));
                    out.add_scaled(&m.act(&Generator::Y(r), yr1).ok()?, &f.from_i64(2));
                    out.add_scaled(&m.act(&Generator::Y(r + 1), yr1).ok()?, &f.from_i64(-1));
                    out
                };
                (!elem_eq(&lhs, &rhs)).then(|| format!("psi_{r}^2 v_{t}"))
            }),
    );

    // braid relation
    col.all(
        "psi_r psi_{r+1} psi_r e(i)",
        (0..dim)
            .flat_map(|t| (1..n.saturating_sub(1)).map(move |r| (r, t)))
            .map(|(r, t)| {
                let res = m.residue_sequence_of(t);
                let lhs = m
                    .reduce_on(&GeneratorWord::psis(&[r, r + 1, r]), &m.basis_vector(t))
                    .ok()?;
                let mut rhs = m
                    .reduce_on(&GeneratorWord::psis(&[r + 1, r, r + 1]), &m.basis_vector(t))
                    .ok()?;
                if res[r - 1] != res[r] && res[r] != res[r + 1] {
                    let f = m.field();
                    rhs.add_scaled(m.y_basis(r, t), &f.one());
                    rhs.add_scaled(m.y_basis(r + 1, t), &f.from_i64(-2));
                    rhs.add_scaled(m.y_basis(r + 2, t), &f.one());
                }
                (!elem_eq(&lhs, &rhs)).then(|| format!("braid at {r} on v_{t}"))
            }),
    );

    // idempotent family: orthogonal idempotents summing to the identity
    col.record(
        "e(i) e(j) = delta e(i), sum e(i) = 1",
        m.residue_classes()
            .iter()
            .map(|(_, class)| class.len())
            .sum::<usize>()
            == dim,
        None,
    );

    // Specht relations on z
    let z = m.z();
    col.all(
        "y_k z = 0",
        (1..=n).map(|k| {
            let img = m.act(&Generator::Y(k), &z).ok()?;
            (!img.is_zero()).then(|| format!("y_{k} z"))
        }),
    );
    col.all(
        "psi_j z = 0 for j != b+1",
        (1..n).filter(|&j| j != shape.b + 1).map(|j| {
            let img = m.act(&Generator::Psi(j), &z).ok()?;
            (!img.is_zero()).then(|| format!("psi_{j} z"))
        }),
    );
    if shape.b >= 1 && shape.b + 1 <= n - 1 {
        let word: Vec<usize> = (1..=shape.b + 1).collect();
        let img = m.reduce(&GeneratorWord::psis(&word))?;
        col.record(
            "garnir word kills z",
            img.is_zero(),
            (!img.is_zero()).then(|| "psi_1..psi_{b+1} z".into()),
        );
        let img = m.act(&Generator::Psi(shape.b + 1), &z)?;
        col.record(
            "psi_{b+1} z is a basis vector",
            img.support_len() == 1,
            None,
        );
    }

    // basis faithfulness: the canonical word of each tableau reproduces it
    col.all(
        "reduce(word(T)) = v_T",
        (0..dim).map(|t| {
            let word = GeneratorWord::psis(&m.tableau(t).canonical_word());
            match m.reduce(&word) {
                Ok(v) => (!elem_eq(&v, &m.basis_vector(t))).then(|| format!("v_{t}")),
                Err(e) => Some(format!("v_{t}: {e}")),
            }
        }),
    );

    Ok(VerificationReport {
        shape: (shape.a, shape.b),
        characteristic: field.characteristic(),
        checks: col.checks,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Check the domino-basis identities on every domino vector through engine
/// action tables: annihilation by every `y_k`, every even `psi_k` and
/// `psi_1`, the five psi-action rewrites, and the Garnir word.
pub fn verify_domino_actions(
    shape: HookShape,
    cap: usize,
) -> Result<VerificationReport, SpechtError> {
    let n = shape.n();
    if n > cap {
        return Err(SpechtError::Precondition(format!(
            "n = {n} exceeds cap {cap}"
        )));
    }
    if shape.b % 2 != 0 || n % 2 == 0 {
        return Err(SpechtError::Precondition(
            "domino identities need even leg and odd size".into(),
        ));
    }
    let start = Instant::now();
    let m = SpechtModule::new(shape, FieldSpec::Rational)?;
    let doms: Vec<usize> = enumerate_domino(shape)
        .iter()
        .map(|t| m.index_of(t).expect("domino in basis"))
        .collect();
    let mut col = Collector::new();

    col.all(
        "y_k v_T = 0 on dominoes",
        doms.iter()
            .flat_map(|&t| (1..=n).map(move |k| (k, t)))
            .map(|(k, t)| (!m.y_basis(k, t).is_zero()).then(|| format!("y_{k} v_{t}"))),
    );
    col.all(
        "psi_k v_T = 0 for even k",
        doms.iter()
            .flat_map(|&t| (2..n).step_by(2).map(move |k| (k, t)))
            .map(|(k, t)| (!m.psi_basis(k, t).is_zero()).then(|| format!("psi_{k} v_{t}"))),
    );
    if n >= 2 {
        col.all(
            "psi_1 v_T = 0",
            doms.iter()
                .map(|&t| (!m.psi_basis(1, t).is_zero()).then(|| format!("psi_1 v_{t}"))),
        );
    }

    let psi_block = |j: usize| -> Vec<usize> { vec![j, j + 1, j - 1, j] };
    let odd_js: Vec<usize> = (3..n.saturating_sub(1)).step_by(2).collect();

    col.all(
        "psi_j Psi_j v = -2 psi_j v",
        doms.iter()
            .flat_map(|&t| odd_js.iter().map(move |&j| (j, t)))
            .map(|(j, t)| {
                let base = m.basis_vector(t);
                let lhs = {
                    let mut w = vec![j];
                    w.extend(psi_block(j));
                    m.reduce_on(&GeneratorWord::psis(&w), &base).ok()?
                };
                let rhs = m.psi_basis(j, t).scale(&m.field().from_i64(-2));
                (!elem_eq(&lhs, &rhs)).then(|| format!("j={j} v_{t}"))
            }),
    );
    col.all(
        "psi_j Psi_{j+2} Psi_j v = psi_j v",
        doms.iter()
            .flat_map(|&t| odd_js.iter().map(move |&j| (j, t)))
            .filter(|(j, _)| j + 2 <= n - 2)
            .map(|(j, t)| {
                let mut w = vec![j];
                w.extend(psi_block(j + 2));
                w.extend(psi_block(j));
                let lhs = m
                    .reduce_on(&GeneratorWord::psis(&w), &m.basis_vector(t))
                    .ok()?;
                (!elem_eq(&lhs, m.psi_basis(j, t))).then(|| format!("j={j} v_{t}"))
            }),
    );
    col.all(
        "Psi_j psi_{j+2} v = 0",
        doms.iter()
            .flat_map(|&t| odd_js.iter().map(move |&j| (j, t)))
            .filter(|(j, _)| j + 2 <= n - 1)
            .map(|(j, t)| {
                let mut w = psi_block(j);
                w.push(j + 2);
                let img = m
                    .reduce_on(&GeneratorWord::psis(&w), &m.basis_vector(t))
                    .ok()?;
                (!img.is_zero()).then(|| format!("j={j} v_{t}"))
            }),
    );
    col.all(
        "psi_j Psi_{j-2} Psi_j v = psi_j v",
        doms.iter()
            .flat_map(|&t| odd_js.iter().map(move |&j| (j, t)))
            .filter(|(j, _)| *j >= 5)
            .map(|(j, t)| {
                let mut w = vec![j];
                w.extend(psi_block(j - 2));
                w.extend(psi_block(j));
                let lhs = m
                    .reduce_on(&GeneratorWord::psis(&w), &m.basis_vector(t))
                    .ok()?;
                (!elem_eq(&lhs, m.psi_basis(j, t))).then(|| format!("j={j} v_{t}"))
            }),
    );
    col.all(
        "Psi_j psi_{j-2} v = 0",
        doms.iter()
            .flat_map(|&t| odd_js.iter().map(move |&j| (j, t)))
            .filter(|(j, _)| *j >= 5)
            .map(|(j, t)| {
                let mut w = psi_block(j);
                w.push(j - 2);
                let img = m
                    .reduce_on(&GeneratorWord::psis(&w), &m.basis_vector(t))
                    .ok()?;
                (!img.is_zero()).then(|| format!("j={j} v_{t}"))
            }),
    );

    if shape.b >= 1 && shape.b + 1 <= n - 1 {
        let garnir: Vec<usize> = (1..=shape.b + 1).collect();
        col.all(
            "psi_1..psi_{b+1} v_T = 0",
            doms.iter().map(|&t| {
                let img = m
                    .reduce_on(&GeneratorWord::psis(&garnir), &m.basis_vector(t))
                    .ok()?;
                (!img.is_zero()).then(|| format!("v_{t}"))
            }),
        );
    }

    // the normal form of every domino tableau evaluates back to it
    col.all(
        "normal-form word reproduces v_T",
        doms.iter().map(|&t| {
            let nf = normal_form(m.tableau(t)).ok()?;
            let word = GeneratorWord::psis(&nf.psi_word(shape));
            match m.reduce(&word) {
                Ok(v) => (!elem_eq(&v, &m.basis_vector(t))).then(|| format!("v_{t}")),
                Err(e) => Some(format!("v_{t}: {e}")),
            }
        }),
    );

    Ok(VerificationReport {
        shape: (shape.a, shape.b),
        characteristic: 0,
        checks: col.checks,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Rebuild the endomorphism from scratch and check commutation with every
/// generator, triangularity with the predicted diagonal, the eigenvalue
/// formula, the `b = 2` square relation, and consistency with the verdict.
pub fn verify_endomorphism(
    shape: HookShape,
    field: FieldSpec,
    cap: usize,
) -> Result<VerificationReport, SpechtError> {
    let n = shape.n();
    if n > cap {
        return Err(SpechtError::Precondition(format!(
            "n = {n} exceeds cap {cap}"
        )));
    }
    if shape.a % 2 == 0 || shape.b % 2 != 0 {
        return Err(SpechtError::Precondition(
            "need odd arm and even leg".into(),
        ));
    }
    if field.characteristic() == 2 {
        return Err(SpechtError::Precondition("need characteristic != 2".into()));
    }
    let start = Instant::now();
    let m = SpechtModule::new(shape, field)?;
    let mut col = Collector::new();
    let f = EndomorphismF::build(&m)?;
    col.record("f(z) annihilated by the required psi_k", true, None);

    let full = f.full_matrix()?;
    col.all("f commutes with every generator", {
        let mut gens: Vec<(String, Generator)> = Vec::new();
        for k in 1..=n {
            gens.push((format!("y_{k}"), Generator::Y(k)));
        }
        for r in 1..n {
            gens.push((format!("psi_{r}"), Generator::Psi(r)));
        }
        for (seq, _) in m.residue_classes() {
            gens.push((format!("e({seq:?})"), Generator::Idempotent(seq.clone())));
        }
        gens.into_iter().map(|(name, g)| {
            let gm = m.action_matrix(&g).ok()?;
            (!full.commutes_with(&gm)).then(|| name)
        })
    });

    let (restricted, indices) = f.restricted_matrix()?;
    col.record(
        "restricted matrix lower triangular",
        restricted.is_lower_triangular(),
        None,
    );
    let mut diag_ok = None;
    let predicted = diagonal_prediction_for(&m)?;
    for (pos, &idx) in indices.iter().enumerate() {
        let want = predicted
            .iter()
            .find(|(i, _)| *i == idx)
            .map(|(_, s)| s.clone())
            .unwrap();
        if restricted.at(pos, pos) != &want {
            diag_ok = Some(format!("diagonal at basis index {idx}"));
            break;
        }
    }
    col.record(
        "diagonal matches combinatorial prediction",
        diag_ok.is_none(),
        diag_ok,
    );

    let spec = spectrum(&m)?;
    col.record(
        "restricted matrix triangular (spectrum)",
        spec.triangular,
        None,
    );
    if shape.b < shape.a {
        col.record(
            "eigenvalue set matches -(d/2)(n-2d+1)",
            spec.matches_formula,
            (!spec.matches_formula).then(|| {
                format!(
                    "formula {:?}",
                    formula_eigenvalues(shape, field)
                        .iter()
                        .map(|s| s.to_display_string())
                        .collect::<Vec<_>>()
                )
            }),
        );
    }
    // the characteristic polynomial of the full matrix vanishes on each eigenvalue
    let poly = full.charpoly();
    col.all(
        "charpoly vanishes on the spectrum",
        spec.eigenvalues.iter().map(|(x, _)| {
            let v = poly_eval(&poly, x, &field);
            (!v.is_zero()).then(|| format!("{}", x))
        }),
    );
    // triangular diagonal cross-check: every restricted diagonal value is a
    // field eigenvalue of the full matrix
    col.all(
        "restricted diagonal lies in the spectrum",
        restricted.diagonal().iter().map(|d| {
            (!spec.eigenvalues.iter().any(|(x, _)| x == d)).then(|| d.to_display_string())
        }),
    );

    if shape.b == 2 {
        let rep = crate::endomorphism::end_algebra_b2(&m)?;
        col.record("f^2 = -(r+1) f", rep.f_squared_relation_holds, None);
        let target = (n - 1) / 2;
        if field.characteristic() != 0 && target as u64 % field.characteristic() == 0 {
            col.record(
                "only trivial idempotents when char | (n-1)/2",
                rep.only_trivial_idempotents,
                None,
            );
        }
    }

    // verdict consistency: two distinct eigenvalues exactly when decomposable
    let verdict = crate::endomorphism::decide(shape.a, shape.b, field.characteristic())?;
    let distinct = spec.eigenvalues.len();
    col.record(
        "spectral witness agrees with the verdict",
        (distinct >= 2) == verdict.decomposable,
        Some(format!(
            "{distinct} distinct values, verdict {:?}",
            verdict.decomposable
        )),
    );

    Ok(VerificationReport {
        shape: (shape.a, shape.b),
        characteristic: field.characteristic(),
        checks: col.checks,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Integer matrices over characteristic 0 reduce entrywise mod `p` to the
/// matrices computed natively over `F_p`.
pub fn verify_cross_field(
    shape: HookShape,
    primes: &[u64],
    cap: usize,
) -> Result<VerificationReport, SpechtError> {
    let n = shape.n();
    if n > cap {
        return Err(SpechtError::Precondition(format!(
            "n = {n} exceeds cap {cap}"
        )));
    }
    let start = Instant::now();
    let m0 = SpechtModule::new(shape, FieldSpec::Rational)?;
    let mut col = Collector::new();
    for &p in primes {
        let mp = SpechtModule::new(shape, FieldSpec::Prime(p))?;
        let mut gens: Vec<Generator> = Vec::new();
        for k in 1..=n {
            gens.push(Generator::Y(k));
        }
        for r in 1..n {
            gens.push(Generator::Psi(r));
        }
        let mut witness = None;
        'outer: for g in &gens {
            let a = m0.action_matrix(g)?;
            let b = mp.action_matrix(g)?;
            for r in 0..a.rows {
                for c in 0..a.cols {
                    let reduced = if a.at(r, c).is_zero() {
                        FieldSpec::Prime(p).zero()
                    } else {
                        a.at(r, c).reduce_mod(p)
                    };
                    if &reduced != b.at(r, c) {
                        witness = Some(format!("{g:?} entry ({r},{c}) mod {p}"));
                        break 'outer;
                    }
                }
            }
        }
        col.record(
            &format!("integer matrices reduce mod {p}"),
            witness.is_none(),
            witness,
        );
    }
    Ok(VerificationReport {
        shape: (shape.a, shape.b),
        characteristic: 0,
        checks: col.checks,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_suite_small_shapes() {
        for (a, b, c) in [
            (3usize, 2usize, 0u64),
            (2, 1, 5),
            (4, 0, 0),
            (2, 3, 3),
            (1, 4, 0),
        ] {
            let shape = HookShape::new(a, b).unwrap();
            let field = FieldSpec::from_characteristic(c).unwrap();
            let rep = verify_presentation(shape, field, 11).unwrap();
            assert!(rep.all_pass(), "({a},1^{b}) char {c}:\n{}", rep.to_table());
        }
    }

    #[test]
    fn presentation_respects_cap() {
        let shape = HookShape::new(9, 4).unwrap();
        assert!(verify_presentation(shape, FieldSpec::Rational, 11).is_err());
    }

    #[test]
    fn domino_suite_small_shapes() {
        for (a, b) in [(3, 2), (5, 4), (5, 2)] {
            let shape = HookShape::new(a, b).unwrap();
            let rep = verify_domino_actions(shape, 13).unwrap();
            assert!(rep.all_pass(), "({a},1^{b}):\n{}", rep.to_table());
        }
        // parity preconditions
        assert!(verify_domino_actions(HookShape::new(4, 2).unwrap(), 13).is_err());
        assert!(verify_domino_actions(HookShape::new(3, 3).unwrap(), 13).is_err());
    }

    #[test]
    fn endomorphism_suite_small_shapes() {
        for (a, b, c) in [(5, 4, 0), (3, 2, 5), (5, 2, 3)] {
            let shape = HookShape::new(a, b).unwrap();
            let field = FieldSpec::from_characteristic(c).unwrap();
            let rep = verify_endomorphism(shape, field, 11).unwrap();
            assert!(rep.all_pass(), "({a},1^{b}) char {c}:\n{}", rep.to_table());
        }
        assert!(
            verify_endomorphism(HookShape::new(4, 2).unwrap(), FieldSpec::Rational, 11).is_err()
        );
        assert!(
            verify_endomorphism(HookShape::new(3, 2).unwrap(), FieldSpec::Prime(2), 11).is_err()
        );
    }

    #[test]
    fn cross_field_small_shape() {
        let rep = verify_cross_field(HookShape::new(3, 2).unwrap(), &[3, 5], 9).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_table());
    }

    #[test]
    fn report_json_round_trip() {
        let rep =
            verify_presentation(HookShape::new(2, 1).unwrap(), FieldSpec::Rational, 11).unwrap();
        let j = rep.to_json();
        assert_eq!(j["pass"], true);
        assert!(j["checks"].as_array().unwrap().len() > 5);
        let back = VerificationReport::from_json(&j).unwrap();
        assert_eq!(back.shape, rep.shape);
        assert_eq!(back.characteristic, rep.characteristic);
        assert_eq!(back.checks.len(), rep.checks.len());
        assert!(back.all_pass());
    }
}
