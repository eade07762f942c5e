mod common;

use common::{constant_metrics, rational_matrix};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use ricci_soliton::exactmath::{int, Field, Matrix, Rational};
use ricci_soliton::liealg::{
    center_dim, classify_structure, derivation_basis, derivation_constraint_matrix, is_derivation, jacobi_residual,
    LieAlgebra, StructureClass,
};

/// Brute force: D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] for all i < j.
fn oracle(a: &LieAlgebra, d: &Matrix<Rational>) -> bool {
    let n = a.dim();
    let col = |i: usize| (0..n).map(|r| d[(r, i)].clone()).collect::<Vec<_>>();
    let unit = |i: usize| (0..n).map(|r| if r == i { int(1) } else { int(0) }).collect::<Vec<_>>();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = d.mul_vec(&a.bracket(&unit(i), &unit(j))).unwrap();
            let x = a.bracket(&col(i), &unit(j));
            let y = a.bracket(&unit(i), &col(j));
            let rhs: Vec<Rational> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn in_span(basis: &[Matrix<Rational>], d: &Matrix<Rational>) -> bool {
    let n = d.rows();
    let cols = basis.len();
    let a = Matrix::from_fn(n * n, cols, |r, c| basis[c][(r % n, r / n)].clone());
    let b: Vec<Rational> = (0..n * n).map(|r| d[(r % n, r / n)].clone()).collect();
    matches!(a.solve(&b).unwrap(), ricci_soliton::exactmath::SolveOutcome::Solved { .. })
}

fn algebras() -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<_> = constant_metrics(6)
        .into_iter()
        .map(|(id, m)| (id, m.algebra().clone()))
        .collect();
    out.push(("abelian:3".into(), LieAlgebra::new(3, &[]).unwrap()));
    out
}

#[test]
fn derivation_checks_agree_with_brute_force() {
    for (id, a) in algebras() {
        let n = a.dim();
        let basis = derivation_basis(&a).basis;
        let mut runner = TestRunner::new(ProptestConfig::with_cases(100));
        // random matrices: almost never derivations
        runner
            .run(&rational_matrix(n, n), |d| {
                let expected = oracle(&a, &d);
                prop_assert_eq!(is_derivation(&a, &d).unwrap(), expected, "{}", id);
                prop_assert_eq!(in_span(&basis, &d), expected, "{}", id);
                Ok(())
            })
            .unwrap();
        // random combinations of the basis: always derivations
        let k = basis.len();
        let mut runner = TestRunner::new(ProptestConfig::with_cases(100));
        runner
            .run(&proptest::collection::vec(common::small_rational(), k), |coeffs| {
                let d = basis
                    .iter()
                    .zip(&coeffs)
                    .fold(Matrix::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c)).unwrap());
                prop_assert!(oracle(&a, &d), "{}", id);
                prop_assert!(is_derivation(&a, &d).unwrap(), "{}", id);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn inner_derivations_bound_the_dimension() {
    for (id, a) in algebras() {
        let n = a.dim();
        let der = derivation_basis(&a);
        assert!(der.dim() >= n - center_dim(&a), "{id}");
        for i in 0..n {
            assert!(is_derivation(&a, &a.ad(i)).unwrap(), "{id}: ad_{i}");
        }
        let c = derivation_constraint_matrix(&a);
        assert_eq!(c.cols(), n * n);
        assert_eq!(c.rank() + der.dim(), n * n, "{id}");
    }
}

#[test]
fn catalog_algebras_satisfy_jacobi() {
    for (id, a) in algebras() {
        assert!(jacobi_residual(&a).iter().all(Field::is_zero), "{id}");
    }
}

#[test]
fn known_derivation_dimensions_and_classes() {
    let dims: Vec<(String, usize, StructureClass)> = algebras()
        .into_iter()
        .map(|(id, a)| (id, derivation_basis(&a).dim(), classify_structure(&a)))
        .collect();
    let find = |id: &str| dims.iter().find(|(i, _, _)| i == id).unwrap().clone();
    // h_3: gl(2) on the plane plus two maps into the center
    assert_eq!(find("h3:g1").1, 6);
    assert_eq!(find("h3:g1").2, StructureClass::Nilpotent);
    assert_eq!(find("e2").1, 4);
    assert_eq!(find("e2").2, StructureClass::Solvable);
    assert_eq!(find("e11").1, 4);
    assert_eq!(find("abelian:3").1, 9);
    assert_eq!(find("abelian:3").2, StructureClass::Abelian);
    assert_eq!(find("oscillator:m=1,eps=0").2, StructureClass::Solvable);
    // Heisenberg of dimension 2n+1: sp(2n) + scaling + maps into the center
    for n in 1..=2usize {
        let expected = n * (2 * n + 1) + 1 + 2 * n;
        assert_eq!(find(&format!("heisenberg:n={n}")).1, expected);
    }
}
