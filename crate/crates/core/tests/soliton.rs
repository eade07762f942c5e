mod common;

use common::{change_metric_basis, constant_metrics, invertible_matrix};
use proptest::test_runner::{Config, TestRunner};
use ricci_soliton::exactmath::{int, rat, Rational};
use ricci_soliton::soliton::{is_consistent, soliton_system, solve_algebraic_soliton, verify_ricci_soliton_identity};

fn solitons() -> Vec<(String, ricci_soliton::geometry::MetricLieAlgebra)> {
    constant_metrics(12)
        .into_iter()
        .filter(|(_, m)| solve_algebraic_soliton(m).unwrap().is_some())
        .collect()
}

#[test]
fn non_abelian_systems_have_full_column_rank() {
    for (id, m) in constant_metrics(12) {
        let (a, _, basis) = soliton_system(&m).unwrap();
        assert_eq!(a.rank(), basis.len() + 1, "{id}");
        if let Some(s) = solve_algebraic_soliton(&m).unwrap() {
            assert!(s.unique, "{id}");
            assert!(is_consistent(&m, &s).unwrap(), "{id}");
            assert!(verify_ricci_soliton_identity(&m, &s).unwrap(), "{id}");
        }
    }
}

#[test]
fn solver_scaling_equivariance() {
    for (id, m) in solitons() {
        let s0 = solve_algebraic_soliton(&m).unwrap().unwrap();
        for s in [int(2), int(-1), rat(1, 3)] {
            let scaled = m.scaled(&s).unwrap();
            let got = solve_algebraic_soliton(&scaled).unwrap().unwrap();
            let inv: Rational = int(1) / &s;
            assert_eq!(got.c, &s0.c * &inv, "{id} s = {s}");
            assert_eq!(got.d, s0.d.scale(&inv), "{id} s = {s}");
        }
    }
}

#[test]
fn solver_basis_change_equivariance() {
    for (id, m) in solitons().into_iter().filter(|(_, m)| m.dim() <= 4) {
        let s0 = solve_algebraic_soliton(&m).unwrap().unwrap();
        let mut runner = TestRunner::new(Config::with_cases(8));
        runner
            .run(&invertible_matrix(m.dim()), |p| {
                let m2 = change_metric_basis(&m, &p);
                let got = solve_algebraic_soliton(&m2).unwrap().unwrap();
                let expected_d = p.inverse().unwrap().mul(&s0.d).unwrap().mul(&p).unwrap();
                proptest::prop_assert_eq!(&got.c, &s0.c, "{}", id);
                proptest::prop_assert_eq!(&got.d, &expected_d, "{}", id);
                proptest::prop_assert_eq!(got.class, s0.class, "{}", id);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn negated_brackets_give_the_same_soliton() {
    use ricci_soliton::geometry::MetricLieAlgebra;
    use ricci_soliton::liealg::{Bracket, LieAlgebra};
    let m = common::h3_g1();
    let neg = LieAlgebra::new(3, &[Bracket::new(1, 2, vec![(0, int(-1))])]).unwrap();
    let m2 = MetricLieAlgebra::new(neg, m.metric().clone(), None).unwrap();
    assert_eq!(solve_algebraic_soliton(&m2).unwrap(), solve_algebraic_soliton(&m).unwrap());
}
