mod common;

use common::{change_metric_basis, constant_metrics, h3_g1, invertible_matrix};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use ricci_soliton::exactmath::{int, rat, Field, Matrix, ParamScalar, Rational};
use ricci_soliton::geometry::{curvature_tensor, levi_civita, ricci, signature, MetricLieAlgebra};
use ricci_soliton::liealg::{Bracket, LieAlgebra};

fn param(m: &Matrix<Rational>) -> Matrix<ParamScalar> {
    Matrix::from_rational(m)
}

/// Random symmetric nondegenerate metrics `P^T diag(+-1) P` on `a`.
fn random_metric(a: &LieAlgebra) -> impl Strategy<Value = MetricLieAlgebra> {
    let a = a.clone();
    let n = a.dim();
    (invertible_matrix(n), proptest::collection::vec(prop::bool::ANY, n)).prop_map(move |(p, signs)| {
        let d = Matrix::diagonal(signs.iter().map(|s| if *s { int(1) } else { int(-1) }).collect());
        let g = p.transpose().mul(&d).unwrap().mul(&p).unwrap();
        MetricLieAlgebra::with_rational_metric(a.clone(), &g).unwrap()
    })
}

#[test]
fn curvature_identities_on_random_metrics() {
    let algebras: Vec<(String, LieAlgebra)> = constant_metrics(4)
        .into_iter()
        .map(|(id, m)| (id, m.algebra().clone()))
        .collect();
    for (id, a) in algebras {
        let mut runner = TestRunner::new(ProptestConfig::with_cases(12));
        runner
            .run(&random_metric(&a), |m| {
                let conn = levi_civita(&m);
                prop_assert!(conn.is_torsion_free(m.algebra()), "{}", id);
                prop_assert!(conn.is_metric_compatible(m.metric()), "{}", id);
                let r = curvature_tensor(&m);
                prop_assert!(r.is_antisymmetric(), "{}", id);
                prop_assert!(r.satisfies_bianchi(), "{}", id);
                prop_assert!(r.has_lowered_symmetries(m.metric()), "{}", id);
                let data = ricci(&m);
                prop_assert_eq!(&r.contract(), &data.ric, "{}", id);
                prop_assert!(data.ric.is_symmetric(), "{}", id);
                // g(rc X, Y) = Ric(X, Y)
                prop_assert_eq!(&m.metric().mul(&data.op).unwrap(), &data.ric, "{}", id);
                prop_assert_eq!(&data.op.trace(), &data.scalar, "{}", id);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn scaling_equivariance() {
    for (id, m) in constant_metrics(7) {
        let base = ricci(&m);
        for s in [int(2), int(-3), rat(1, 5)] {
            let scaled = m.scaled(&s).unwrap();
            let data = ricci(&scaled);
            let inv = ParamScalar::from_rational(int(1) / &s);
            assert_eq!(data.ric, base.ric, "{id} s = {s}");
            assert_eq!(data.op, base.op.scale(&inv), "{id} s = {s}");
            assert_eq!(data.scalar, base.scalar.mul(&inv), "{id} s = {s}");
            assert_eq!(levi_civita(&scaled), levi_civita(&m), "{id} s = {s}");
        }
    }
}

#[test]
fn basis_change_equivariance() {
    for (id, m) in constant_metrics(4) {
        let n = m.dim();
        let data = ricci(&m);
        let mut runner = TestRunner::new(ProptestConfig::with_cases(8));
        runner
            .run(&invertible_matrix(n), |p| {
                let m2 = change_metric_basis(&m, &p);
                let d2 = ricci(&m2);
                let pp = param(&p);
                let expected = pp.transpose().mul(&data.ric).unwrap().mul(&pp).unwrap();
                prop_assert_eq!(&d2.ric, &expected, "{}", id);
                prop_assert_eq!(&d2.scalar, &data.scalar, "{}", id);
                prop_assert_eq!(signature(&m2), signature(&m), "{}", id);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn negated_structure_constants_keep_curvature() {
    // x -> -x maps [,] to -[,]; curvature and Ricci are unchanged
    let m = h3_g1();
    let neg = LieAlgebra::new(3, &[Bracket::new(1, 2, vec![(0, int(-1))])]).unwrap();
    let m2 = MetricLieAlgebra::new(neg, m.metric().clone(), None).unwrap();
    assert_eq!(ricci(&m2), ricci(&m));
    assert_eq!(curvature_tensor(&m2), curvature_tensor(&m));
    let c1 = levi_civita(&m);
    let c2 = levi_civita(&m2);
    for i in 0..3 {
        for j in 0..3 {
            let neg: Vec<ParamScalar> = c1.covariant(i, j).iter().map(Field::neg).collect();
            assert_eq!(c2.covariant(i, j), neg.as_slice());
        }
    }
}
