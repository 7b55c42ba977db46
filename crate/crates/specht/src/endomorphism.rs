//! The distinguished endomorphism `f` of `S_(a,1^b)` for `a` odd, `b` even,
//! its triangular matrix on the domino block, the spectrum, generalized
//! eigenspaces, the rank-two endomorphism algebra at `b = 2`, and the final
//! decomposability decision over any field characteristic.

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::domino::{enumerate_domino, make_tij, normal_form, DominoNormalForm};
use crate::engine::{GeneratorWord, ModuleElement, SpechtModule};
use crate::error::SpechtError;
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::shape::HookShape;

/// The endomorphism determined by its value on the cyclic generator:
/// `f(z) = sum ((i-1)/2) ((n+2-j)/2) v_{T_{i,j}}` over odd `i in [3, b+1]`
/// and odd `j in [b+3, n]`.
pub struct EndomorphismF<'m> {
    module: &'m SpechtModule,
    image_of_z: ModuleElement,
}

/// Eigenvalue data of `f` over the chosen field.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Distinct field eigenvalues with multiplicities in the characteristic
    /// polynomial of the full matrix.
    pub eigenvalues: Vec<(Scalar, usize)>,
    /// Whether the restricted matrix is lower triangular in the domino order.
    pub triangular: bool,
    /// Name of the basis order backing the triangularity witness.
    pub basis_order: &'static str,
    /// Whether the eigenvalue set matches the closed formula
    /// `-(d/2)(n-2d+1)`, `d = 0..b/2` (expected exactly when `b < a`).
    pub matches_formula: bool,
}

/// Decomposability verdict for a shape over a field characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub a: usize,
    pub b: usize,
    pub characteristic: u64,
    pub decomposable: bool,
    pub rule: &'static str,
}

impl<'m> EndomorphismF<'m> {
    /// Construct `f`; requires `a` odd, `b` even and characteristic != 2.
    pub fn build(module: &'m SpechtModule) -> Result<EndomorphismF<'m>, SpechtError> {
        let shape = module.shape();
        let (a, b, n) = (shape.a, shape.b, shape.n());
        if a % 2 == 0 || b % 2 != 0 {
            return Err(SpechtError::Precondition(format!(
                "endomorphism needs odd arm and even leg, got ({a},1^{b})"
            )));
        }
        if module.field().characteristic() == 2 {
            return Err(SpechtError::Precondition(
                "eigenvalue analysis needs characteristic != 2".into(),
            ));
        }
        let field = module.field();
        let mut image = ModuleElement::zero();
        let mut i = 3;
        while i <= b + 1 {
            let mut j = b + 3;
            while j <= n {
                let t = make_tij(shape, i, j)?;
                let idx = module.index_of(&t).expect("T_{i,j} is standard");
                let coeff = field
                    .from_i64(((i - 1) / 2) as i64)
                    .mul(&field.from_i64(((n + 2 - j) / 2) as i64));
                image.add_term(idx, &coeff);
                j += 2;
            }
            i += 2;
        }
        let f = EndomorphismF {
            module,
            image_of_z: image,
        };
        f.check_annihilation()?;
        Ok(f)
    }

    /// `psi_k f(z) = 0` for all odd `k != b+1` with `3 <= k <= n-2`, which is
    /// exactly what makes `z -> f(z)` extend to a module map.
    fn check_annihilation(&self) -> Result<(), SpechtError> {
        let shape = self.module.shape();
        let (b, n) = (shape.b, shape.n());
        let mut k = 3;
        while k + 2 <= n {
            if k != b + 1 {
                let img = self
                    .module
                    .reduce_on(&GeneratorWord::psis(&[k]), &self.image_of_z)?;
                if !img.is_zero() {
                    return Err(SpechtError::Precondition(format!(
                        "psi_{k} does not annihilate f(z)"
                    )));
                }
            }
            k += 2;
        }
        Ok(())
    }

    pub fn image_of_z(&self) -> &ModuleElement {
        &self.image_of_z
    }

    pub fn module(&self) -> &SpechtModule {
        self.module
    }

    /// `f(v_T) = psi_{w_T} f(z)`, by linearity over any element.
    pub fn apply(&self, elem: &ModuleElement) -> Result<ModuleElement, SpechtError> {
        let mut out = ModuleElement::zero();
        for (idx, c) in elem.iter() {
            let word = GeneratorWord::psis(&self.module.tableau(idx).canonical_word());
            let img = self.module.reduce_on(&word, &self.image_of_z)?;
            out.add_scaled(&img, c);
        }
        Ok(out)
    }

    /// Full matrix of `f` in the standard basis order.
    pub fn full_matrix(&self) -> Result<Matrix, SpechtError> {
        let dim = self.module.dim();
        let mut m = Matrix::zero(dim, dim, self.module.field());
        for col in 0..dim {
            let img = self.apply(&self.module.basis_vector(col))?;
            for (row, c) in img.iter() {
                m.set(row, col, c.clone());
            }
        }
        Ok(m)
    }

    /// Matrix of `f` restricted to the domino block, rows and columns in the
    /// `(chain length, code)` order; lower triangular by construction of the
    /// order.
    pub fn restricted_matrix(&self) -> Result<(Matrix, Vec<usize>), SpechtError> {
        let doms = enumerate_domino(self.module.shape());
        let indices: Vec<usize> = doms
            .iter()
            .map(|t| self.module.index_of(t).expect("domino in basis"))
            .collect();
        let mut m = Matrix::zero(indices.len(), indices.len(), self.module.field());
        for (col, &idx) in indices.iter().enumerate() {
            let img = self.apply(&self.module.basis_vector(idx))?;
            for (row, &ridx) in indices.iter().enumerate() {
                if let Some(c) = img.coeff(ridx) {
                    m.set(row, col, c.clone());
                }
            }
        }
        Ok((m, indices))
    }
}

/// Predicted diagonal coefficient of `f(v_T)` at `v_T`, evaluated purely
/// combinatorially from the normal form `(d, js)`: a pair `(i, j)` feeds the
/// diagonal exactly under one of three window conditions.
pub fn predicted_diagonal(shape: HookShape, nf: &DominoNormalForm, field: FieldSpec) -> Scalar {
    let (b, n) = (shape.b, shape.n());
    let d = nf.d;
    let ge = |j_v: usize, bound: i64| j_v as i64 >= bound;
    let mut total = field.zero();
    let mut i = 3usize;
    while i <= b + 1 {
        let mut j = b + 3;
        while j <= n {
            let coeff = field
                .from_i64(((i - 1) / 2) as i64)
                .mul(&field.from_i64(((n + 2 - j) / 2) as i64));
            let all = |off: i64| {
                (1..=d).all(|v| ge(nf.js[v - 1], j as i64 - off - 4 * (d as i64 - v as i64)))
            };
            if (i + j == 2 * b + 6 && i + 2 * d >= b + 3 && all(4))
                || (i + j == 2 * b + 2 && i + 2 * d >= b + 1 && all(2))
            {
                total = total.add(&coeff);
            } else if i + j == 2 * b + 4 && i + 2 * d >= b + 3 && all(2) {
                total = total.add(&coeff.scale_i64(-2));
            }
            j += 2;
        }
        i += 2;
    }
    total
}

/// The closed-form eigenvalue list `-(d/2)(n-2d+1)` for `d = 0..b/2`, as
/// field elements (reduced mod `p` in positive characteristic).
pub fn formula_eigenvalues(shape: HookShape, field: FieldSpec) -> Vec<Scalar> {
    let n = shape.n() as i64;
    // -(d/2)(n-2d+1) is an integer: n odd makes n-2d+1 even
    (0..=(shape.b / 2) as i64)
        .map(|d| field.from_i64(-(d * (n - 2 * d + 1)) / 2))
        .collect()
}

/// Spectrum of `f` over the module's field: triangular diagonal plus a full
/// characteristic-polynomial verification with exhaustive root search.
pub fn spectrum(module: &SpechtModule) -> Result<Spectrum, SpechtError> {
    let f = EndomorphismF::build(module)?;
    let (restricted, _) = f.restricted_matrix()?;
    let triangular = restricted.is_lower_triangular();
    let full = f.full_matrix()?;
    let eigenvalues = full.field_eigenvalues()?;
    let shape = module.shape();
    let mut formula: Vec<Scalar> = formula_eigenvalues(shape, module.field());
    formula.sort_by_key(|s| s.to_display_string());
    formula.dedup();
    let mut got: Vec<Scalar> = eigenvalues.iter().map(|(s, _)| s.clone()).collect();
    got.sort_by_key(|s| s.to_display_string());
    let matches_formula = formula == got;
    Ok(Spectrum {
        eigenvalues,
        triangular,
        basis_order: "chain length, then code",
        matches_formula,
    })
}

/// Generalized eigenspace dimensions of `f`: for each field eigenvalue `x`,
/// the kernel of `(f - xI)^dim`, computed by iterating until the kernel
/// stabilizes (which yields the same subspace).
pub fn generalized_eigenspaces(
    module: &SpechtModule,
) -> Result<Vec<(Scalar, usize, Vec<Vec<Scalar>>)>, SpechtError> {
    let f = EndomorphismF::build(module)?;
    let full = f.full_matrix()?;
    let eigen = full.field_eigenvalues()?;
    let dim = module.dim();
    let field = module.field();
    let mut out = Vec::new();
    for (x, _) in eigen {
        let shifted = full.sub(&Matrix::identity(dim, field).scale(&x));
        let mut power = shifted.clone();
        let mut kernel = power.kernel_basis();
        for _ in 0..dim {
            let next = power.mul(&shifted);
            let next_kernel = next.kernel_basis();
            if next_kernel.len() == kernel.len() {
                break;
            }
            power = next;
            kernel = next_kernel;
        }
        out.push((x, kernel.len(), kernel));
    }
    Ok(out)
}

/// Report on `End(S_(a,1^2))`: the basis `{I, f}`, the relation
/// `f^2 = -(r+1) f`, and the idempotent solutions of `alpha I + beta f`.
#[derive(Debug, Clone)]
pub struct EndAlgebraReport {
    pub r: usize,
    pub f_squared_relation_holds: bool,
    /// All `(alpha, beta)` with `(alpha I + beta f)^2 = alpha I + beta f`.
    pub idempotents: Vec<(Scalar, Scalar)>,
    pub only_trivial_idempotents: bool,
}

/// Analysis of the two-dimensional endomorphism algebra for `b = 2`.
pub fn end_algebra_b2(module: &SpechtModule) -> Result<EndAlgebraReport, SpechtError> {
    let shape = module.shape();
    if shape.b != 2 {
        return Err(SpechtError::Precondition(format!(
            "endomorphism algebra analysis needs b = 2, got b = {}",
            shape.b
        )));
    }
    let r = (shape.a - 1) / 2;
    let f = EndomorphismF::build(module)?;
    let fm = f.full_matrix()?;
    let field = module.field();
    let relation = fm.mul(&fm).add(&fm.scale(&field.from_i64(r as i64 + 1)));
    let f_squared_relation_holds = relation.is_zero();

    // (alpha I + beta f)^2 = alpha^2 I + (2 alpha beta - (r+1) beta^2) f since
    // f^2 = -(r+1) f and {I, f} is a basis; idempotency reads
    // alpha^2 = alpha and 2 alpha beta - (r+1) beta^2 = beta.
    let mut idempotents = Vec::new();
    let rp1 = field.from_i64(r as i64 + 1);
    match field {
        FieldSpec::Prime(p) => {
            for av in 0..p {
                for bv in 0..p {
                    let alpha = Scalar::Fp { p, v: av };
                    let beta = Scalar::Fp { p, v: bv };
                    if is_idempotent_pair(&alpha, &beta, &rp1, &field) {
                        idempotents.push((alpha, beta));
                    }
                }
            }
        }
        FieldSpec::Rational => {
            // alpha in {0, 1}; beta = 0 or, when r+1 != 0, the two roots of
            // (r+1) beta = 2 alpha - 1
            for ai in [0i64, 1] {
                let alpha = field.from_i64(ai);
                let zero = field.zero();
                if is_idempotent_pair(&alpha, &zero, &rp1, &field) {
                    idempotents.push((alpha.clone(), zero));
                }
                if !rp1.is_zero() {
                    let beta = field.from_i64(2 * ai - 1).div(&rp1);
                    if is_idempotent_pair(&alpha, &beta, &rp1, &field) {
                        idempotents.push((alpha, beta));
                    }
                }
            }
        }
    }
    let only_trivial = idempotents
        .iter()
        .all(|(a, b)| b.is_zero() && (a.is_zero() || *a == field.one()));
    Ok(EndAlgebraReport {
        r,
        f_squared_relation_holds,
        idempotents,
        only_trivial_idempotents: only_trivial,
    })
}

fn is_idempotent_pair(alpha: &Scalar, beta: &Scalar, rp1: &Scalar, field: &FieldSpec) -> bool {
    let two = field.from_i64(2);
    alpha.mul(alpha) == *alpha && two.mul(alpha).mul(beta).sub(&rp1.mul(beta).mul(beta)) == *beta
}

/// Decomposability of `S_(a,1^b)` over characteristic `c` (0 or a prime).
///
/// The shape is first conjugation-normalized to leg <= arm - 1 (the verdict
/// is conjugation invariant, the classifying formulas are stated on that
/// side). Then: even `n` and 2-regular shapes are indecomposable; in
/// characteristic 2 the binary congruence `a - 1 = b (mod 2^L)` with
/// `2^{L-1} <= b < 2^L` decides; otherwise the module decomposes exactly
/// when `b >= 4`, or `b` is 2 or 3 with the characteristic not dividing
/// `ceil(a/2)`.
pub fn decide(a: usize, b: usize, characteristic: u64) -> Result<Verdict, SpechtError> {
    if a < 1 {
        return Err(SpechtError::BadShape(
            "arm length must be at least 1".into(),
        ));
    }
    if characteristic != 0 && !crate::scalar::is_prime(characteristic) {
        return Err(SpechtError::BadField(format!(
            "{characteristic} is not prime"
        )));
    }
    let n = a + b;
    // conjugation-normalize: leg at most arm-1
    let (na, nb) = if b > a - 1 { (b + 1, a - 1) } else { (a, b) };
    let (decomposable, rule) = if n % 2 == 0 {
        (false, "n_even")
    } else if nb <= 1 {
        (false, "two_regular")
    } else if characteristic == 2 {
        // binary congruence on the normalized shape
        let mut ell = 1u32;
        while (1usize << ell) <= nb {
            ell += 1;
        }
        let modulus = 1usize << ell;
        let congruent = (na - 1) % modulus == nb % modulus;
        (!congruent, "char2_binary_congruence")
    } else {
        let target = na.div_ceil(2) as u64;
        let divides = characteristic != 0 && target % characteristic == 0;
        if nb == 2 || nb == 3 {
            (!divides, "leg_two_or_three_divisibility")
        } else {
            (true, "leg_at_least_four")
        }
    };
    Ok(Verdict {
        a,
        b,
        characteristic,
        decomposable,
        rule,
    })
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "shape": [self.a, self.b],
            "char": self.characteristic,
            "decomposable": self.decomposable,
            "rule": self.rule,
        })
    }

    pub fn from_json(v: &Value) -> Result<Verdict, SpechtError> {
        let bad = |m: &str| SpechtError::Parse(format!("verdict json: {m}"));
        let rule_str = v["rule"].as_str().ok_or_else(|| bad("rule"))?;
        let rule = [
            "n_even",
            "two_regular",
            "char2_binary_congruence",
            "leg_two_or_three_divisibility",
            "leg_at_least_four",
        ]
        .into_iter()
        .find(|r| *r == rule_str)
        .ok_or_else(|| bad("unknown rule"))?;
        Ok(Verdict {
            a: v["shape"][0].as_u64().ok_or_else(|| bad("shape"))? as usize,
            b: v["shape"][1].as_u64().ok_or_else(|| bad("shape"))? as usize,
            characteristic: v["char"].as_u64().ok_or_else(|| bad("char"))?,
            decomposable: v["decomposable"]
                .as_bool()
                .ok_or_else(|| bad("decomposable"))?,
            rule,
        })
    }
}

/// Spectrum + eigenspace JSON as exposed by the command line.
pub fn spectrum_to_json(
    shape: HookShape,
    characteristic: u64,
    verdict: &Verdict,
    spec: &Spectrum,
    eigenspace_dims: &[usize],
) -> Value {
    json!({
        "shape": [shape.a, shape.b],
        "char": characteristic,
        "decomposable": verdict.decomposable,
        "rule": verdict.rule,
        "eigenvalues": spec
            .eigenvalues
            .iter()
            .map(|(s, m)| json!({"value": s.to_display_string(), "multiplicity": m}))
            .collect::<Vec<_>>(),
        "eigenspace_dims": eigenspace_dims,
        "triangular": spec.triangular,
        "matches_formula": spec.matches_formula,
    })
}

/// Integer eigenvalue list for display: integers in characteristic 0 and
/// canonical residues `0..p-1` otherwise.
pub fn eigenvalue_display(s: &Scalar) -> String {
    match s {
        Scalar::Rat(r) => {
            debug_assert!(num::traits::One::is_one(r.denom()));
            r.numer().to_string()
        }
        Scalar::Fp { v, .. } => v.to_string(),
    }
}

/// Diagonal multiset of the restricted matrix must reproduce the predicted
/// coefficients; exposed for the oracle.
pub fn diagonal_prediction_for(module: &SpechtModule) -> Result<Vec<(usize, Scalar)>, SpechtError> {
    let shape = module.shape();
    let doms = enumerate_domino(shape);
    doms.iter()
        .map(|t| {
            let nf = normal_form(t)?;
            let idx = module.index_of(t).expect("domino in basis");
            Ok((idx, predicted_diagonal(shape, &nf, module.field())))
        })
        .collect()
}

/// `ceil(a/2)` as a big integer, the divisibility target of the final rule.
pub fn divisibility_target(a: usize) -> BigInt {
    BigInt::from(a.div_ceil(2))
}
