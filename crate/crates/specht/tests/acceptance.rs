//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! per sub-check. Everything is exact; no tolerances appear anywhere.

use specht::domino::{enumerate_domino, make_tij, normal_form};
use specht::endomorphism::decide;
use specht::endomorphism::{end_algebra_b2, spectrum, EndomorphismF};
use specht::engine::SpechtModule;
use specht::hook_actions::{apply_psi_odd_with_fallback, Trace};
use specht::oracle::{
    verify_cross_field, verify_domino_actions, verify_endomorphism, verify_presentation,
};
use specht::scalar::{FieldSpec, Scalar};
use specht::shape::HookShape;

fn line(name: &str, pass: bool) {
    println!("{} {name}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{name}");
}

/// Criterion 1: for every hook shape with n <= 11 and characteristics
/// {0, 3, 5, 7}, all algebra relations and the Specht relations hold as
/// exact matrix identities and the dimension is binomial(n-1, b).
#[test]
fn criterion_1_presentation_suite() {
    for n in 1..=11usize {
        for b in 0..n {
            let a = n - b;
            let shape = HookShape::new(a, b).unwrap();
            for c in [0u64, 3, 5, 7] {
                let field = FieldSpec::from_characteristic(c).unwrap();
                let rep = verify_presentation(shape, field, 11).unwrap();
                line(
                    &format!("presentation ({a},1^{b}) char {c}"),
                    rep.all_pass(),
                );
                if !rep.all_pass() {
                    println!("{}", rep.to_table());
                }
            }
        }
    }
}

/// Criterion 2: the domino-basis identities hold on every domino vector of
/// the six listed shapes, and the closed-form fast path reproduces the
/// engine with zero fallbacks.
#[test]
fn criterion_2_domino_action_suite() {
    for (a, b) in [(3usize, 2usize), (5, 4), (7, 6), (5, 2), (7, 4), (9, 2)] {
        let shape = HookShape::new(a, b).unwrap();
        let rep = verify_domino_actions(shape, 13).unwrap();
        if !rep.all_pass() {
            println!("{}", rep.to_table());
        }
        line(
            &format!("domino-basis identities ({a},1^{b})"),
            rep.all_pass(),
        );

        // fast path against the engine, counting fallbacks
        let m = SpechtModule::new(shape, FieldSpec::Rational).unwrap();
        let mut fallbacks = 0usize;
        let mut mismatches = 0usize;
        for t in enumerate_domino(shape) {
            let idx = m.index_of(&t).unwrap();
            let mut tr = Trace::disabled();
            for j in (3..shape.n() - 1).step_by(2) {
                let (fast, fell_back) = apply_psi_odd_with_fallback(&m, j, &t, &mut tr).unwrap();
                if fell_back {
                    fallbacks += 1;
                }
                if &fast != m.psi_basis(j, idx) {
                    mismatches += 1;
                }
            }
        }
        line(
            &format!("fast path agrees, zero fallbacks ({a},1^{b})"),
            fallbacks == 0 && mismatches == 0,
        );
    }
}

/// Criterion 3: for (5,1^4) over characteristic 0 the endomorphism image has
/// the exact coefficients {T_{3,7}: 2, T_{3,9}: 1, T_{5,7}: 4, T_{5,9}: 2},
/// the restricted matrix is lower triangular, and its diagonal multiset has
/// eigenvalue set {0, -4, -6}.
#[test]
fn criterion_3_endomorphism_reproduction() {
    let shape = HookShape::new(5, 4).unwrap();
    let m = SpechtModule::new(shape, FieldSpec::Rational).unwrap();
    let f = EndomorphismF::build(&m).unwrap();

    let expected = [
        ((3usize, 7usize), 2i64),
        ((3, 9), 1),
        ((5, 7), 4),
        ((5, 9), 2),
    ];
    let mut coeffs_ok = f.image_of_z().support_len() == expected.len();
    for ((i, j), c) in expected {
        let idx = m.index_of(&make_tij(shape, i, j).unwrap()).unwrap();
        coeffs_ok &= f.image_of_z().coeff(idx) == Some(&m.field().from_i64(c));
    }
    line("f(z) coefficients on (5,1^4)", coeffs_ok);

    let (restricted, _) = f.restricted_matrix().unwrap();
    line(
        "restricted matrix lower triangular",
        restricted.is_lower_triangular(),
    );

    let mut diag_values: Vec<String> = restricted
        .diagonal()
        .iter()
        .map(|s| s.to_display_string())
        .collect();
    diag_values.sort();
    diag_values.dedup();
    let mut want: Vec<String> = [0i64, -4, -6]
        .iter()
        .map(|v| m.field().from_i64(*v).to_display_string())
        .collect();
    want.sort();
    line(
        "diagonal multiset reduces to {0, -4, -6}",
        diag_values == want,
    );

    let spec = spectrum(&m).unwrap();
    let mut eig: Vec<String> = spec
        .eigenvalues
        .iter()
        .map(|(s, _)| s.to_display_string())
        .collect();
    eig.sort();
    line(
        "full spectrum equals {0, -4, -6}",
        eig == want && spec.matches_formula,
    );
}

/// Criterion 4: for a in {3, 5, 7, 9}, f^2 = -(r+1) f exactly; over every
/// odd prime dividing (n-1)/2 the only idempotent combinations
/// alpha I + beta f are 0 and I.
#[test]
fn criterion_4_b2_algebra() {
    for a in [3usize, 5, 7, 9] {
        let shape = HookShape::new(a, 2).unwrap();
        let n = shape.n();
        let m = SpechtModule::new(shape, FieldSpec::Rational).unwrap();
        let rep = end_algebra_b2(&m).unwrap();
        line(
            &format!("f^2 = -(r+1) f on ({a},1^2)"),
            rep.f_squared_relation_holds,
        );

        let target = ((n - 1) / 2) as u64;
        for p in [3u64, 5, 7] {
            if target % p != 0 {
                continue;
            }
            let mp = SpechtModule::new(shape, FieldSpec::Prime(p)).unwrap();
            let repp = end_algebra_b2(&mp).unwrap();
            line(
                &format!("only trivial idempotents on ({a},1^2) mod {p}"),
                repp.f_squared_relation_holds
                    && repp.only_trivial_idempotents
                    && repp.idempotents.len() == 2,
            );
        }
    }
}

/// Criterion 5: over the grid 1 <= a <= 10, 0 <= b <= 8 and characteristics
/// {0, 2, 3, 5} the decision is invariant under conjugation and under the
/// branching shift, and inside the n <= 11 window with n odd, b even and
/// characteristic != 2 it agrees with the spectral witness.
#[test]
fn criterion_5_classification_table() {
    let mut conjugation_ok = true;
    let mut branching_ok = true;
    for a in 1..=10usize {
        for b in 0..=8usize {
            for c in [0u64, 2, 3, 5] {
                let v = decide(a, b, c).unwrap();
                let conj = decide(b + 1, a - 1, c).unwrap();
                conjugation_ok &= v.decomposable == conj.decomposable;
                if a % 2 == 1 && b % 2 == 0 {
                    let up = decide(a + 1, b + 1, c).unwrap();
                    branching_ok &= v.decomposable == up.decomposable;
                }
            }
        }
    }
    line("decision invariant under conjugation", conjugation_ok);
    line("decision invariant under branching shift", branching_ok);

    for n in (3..=11usize).step_by(2) {
        for b in (0..n).step_by(2) {
            let a = n - b;
            if a % 2 == 0 {
                continue;
            }
            let shape = HookShape::new(a, b).unwrap();
            for c in [0u64, 3, 5] {
                let field = FieldSpec::from_characteristic(c).unwrap();
                let m = SpechtModule::new(shape, field).unwrap();
                let f = EndomorphismF::build(&m).unwrap();
                let (restricted, _) = f.restricted_matrix().unwrap();
                assert!(restricted.is_lower_triangular());
                let mut distinct: Vec<Scalar> = restricted.diagonal();
                distinct.sort_by_key(|s| s.to_display_string());
                distinct.dedup();
                let verdict = decide(a, b, c).unwrap();
                line(
                    &format!("spectral witness ({a},1^{b}) char {c}"),
                    (distinct.len() >= 2) == verdict.decomposable,
                );
            }
        }
    }
}

/// Criterion 6: integer matrices computed over characteristic 0 reduce mod p
/// to the native characteristic-p matrices for p in {3, 5, 7}, entrywise,
/// for every shape with n <= 9.
#[test]
fn criterion_6_cross_field_coherence() {
    for n in 1..=9usize {
        for b in 0..n {
            let a = n - b;
            let shape = HookShape::new(a, b).unwrap();
            let rep = verify_cross_field(shape, &[3, 5, 7], 9).unwrap();
            if !rep.all_pass() {
                println!("{}", rep.to_table());
            }
            line(
                &format!("cross-field coherence ({a},1^{b})"),
                rep.all_pass(),
            );
        }
    }
}

/// The endomorphism oracle runs green on representative shapes (exercises the
/// full rebuild-from-scratch path used by the command line `verify`).
#[test]
fn oracle_endomorphism_representative_shapes() {
    for (a, b, c) in [
        (5usize, 4usize, 0u64),
        (3, 2, 5),
        (5, 2, 3),
        (9, 2, 0),
        (7, 4, 7),
    ] {
        let shape = HookShape::new(a, b).unwrap();
        let field = FieldSpec::from_characteristic(c).unwrap();
        let rep = verify_endomorphism(shape, field, 11).unwrap();
        if !rep.all_pass() {
            println!("{}", rep.to_table());
        }
        line(
            &format!("endomorphism oracle ({a},1^{b}) char {c}"),
            rep.all_pass(),
        );
    }
}
