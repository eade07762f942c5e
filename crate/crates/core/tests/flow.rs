mod common;

use common::{constant_metrics, h3_g1};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use ricci_soliton::catalog::{self, H3Metric};
use ricci_soliton::exactmath::{rational_from_f64, rational_to_f64, Matrix, ParamScalar};
use ricci_soliton::extension::{build_solvable_extension, einstein_parameter_solve};
use ricci_soliton::flow::{integrate, integrate_each, ricci_float, soliton_residual, FloatMetricState};
use ricci_soliton::geometry::{ricci, MetricLieAlgebra};
use ricci_soliton::liealg::derivation_basis;
use ricci_soliton::soliton::solve_algebraic_soliton;

fn to_f64(m: &Matrix<ParamScalar>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        rational_to_f64(&m[(r, c)].as_rational().expect("parameter-free"))
    })
}

fn state(m: &MetricLieAlgebra) -> FloatMetricState {
    FloatMetricState::new(m.algebra().clone(), to_f64(m.metric())).unwrap()
}

fn rel_err(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).amax() / b.amax().max(1.0)
}

/// Exact flow of `g_1`: `a1 = u^(-1/3)`, `a2 = u^(1/3)`, `a3 = -u^(1/3)`, `u = 1 - 3t`.
fn h3_g1_exact(t: f64) -> DMatrix<f64> {
    let u: f64 = 1.0 - 3.0 * t;
    DMatrix::from_diagonal(&DVector::from_vec(vec![u.powf(-1.0 / 3.0), u.cbrt(), -u.cbrt()]))
}

#[test]
fn float_ricci_matches_exact_on_catalog() {
    for (id, m) in constant_metrics(usize::MAX) {
        let exact = to_f64(&ricci(&m).ric);
        let float = ricci_float(m.algebra(), &to_f64(m.metric())).unwrap();
        assert!(rel_err(&float, &exact) < 1e-10, "{id}: {float} vs {exact}");
    }
}

#[test]
fn e2_float_ricci_value() {
    let m = catalog::euclidean_motion().unwrap();
    let ric = ricci_float(m.algebra(), &to_f64(m.metric())).unwrap();
    let exact = to_f64(&ricci(&m).ric);
    assert!((ric[(0, 0)] - exact[(0, 0)]).abs() < 1e-12);
    assert!((ric[(0, 0)] - 2.0).abs() < 1e-12, "{ric}");
}

#[test]
fn einstein_extension_scales_linearly() {
    let base = catalog::heisenberg(1).unwrap();
    let sol = solve_algebraic_soliton(&base).unwrap().unwrap();
    let ext = build_solvable_extension(&base, &sol.d, "h").unwrap();
    let solve = einstein_parameter_solve(&ext).unwrap();
    let (h, lambda) = solve.solutions.first().cloned().expect("an Einstein parameter");
    assert_eq!(h, ricci_soliton::exactmath::int(-4));
    let g0 = to_f64(&ext.result.metric().eval(&h).unwrap().map(|x| ParamScalar::from_rational(x.clone())));
    let s = FloatMetricState::new(ext.result.algebra().clone(), g0.clone()).unwrap();
    let end = integrate(&s, 0.1, 1e-3).unwrap().pop().unwrap();
    let factor = 1.0 - 2.0 * rational_to_f64(&lambda) * 0.1;
    assert!((factor - 0.7).abs() < 1e-15);
    assert!((&end.g - &g0 * factor).amax() < 1e-8, "{}", end.g);
}

#[test]
fn flat_metric_does_not_move() {
    let m = catalog::h3_metric(H3Metric::G3).unwrap();
    let s = state(&m);
    let end = integrate(&s, 0.1, 1e-3).unwrap().pop().unwrap();
    assert!((&end.g - &s.g).amax() < 1e-12);
}

#[test]
fn rk4_is_fourth_order_on_h3_g1() {
    let s = state(&h3_g1());
    let exact = h3_g1_exact(0.1);
    let err = |dt: f64| (&integrate(&s, 0.1, dt).unwrap().pop().unwrap().g - &exact).amax();
    let ratio = err(0.01) / err(0.005);
    assert!((12.0..=20.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn h3_g1_stays_a_soliton() {
    let m = h3_g1();
    let basis = derivation_basis(m.algebra());
    let mut worst: f64 = 0.0;
    integrate_each(&state(&m), 0.1, 1e-4, |s| {
        worst = worst.max(soliton_residual(s, &basis).unwrap());
    })
    .unwrap();
    assert!(worst < 1e-6, "{worst}");
}

#[test]
fn oscillator_null_residual() {
    let m = catalog::lookup("oscillator:m=1,eps=0").unwrap().metric;
    assert!(solve_algebraic_soliton(&m).unwrap().is_some());
    let r = soliton_residual(&state(&m), &derivation_basis(m.algebra())).unwrap();
    assert!(r < 1e-12, "{r}");
}

#[test]
fn symmetry_is_preserved() {
    for (id, m) in constant_metrics(6) {
        match integrate(&state(&m), 0.05, 1e-3) {
            Ok(traj) => assert!(traj.iter().all(|s| s.asymmetry() < 1e-12), "{id}"),
            Err(e) => panic!("{id}: {e}"),
        }
    }
}

#[test]
fn float_residual_agrees_with_exact_solver() {
    let base = h3_g1();
    let g = to_f64(base.metric());
    let basis = derivation_basis(base.algebra());
    let sym = proptest::collection::vec(-0.3f64..0.3, 6);
    let mut runner = TestRunner::new(ProptestConfig::with_cases(40));
    runner
        .run(&sym, |p| {
            let mut pert = g.clone();
            let idx = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
            for ((r, c), v) in idx.iter().zip(&p) {
                pert[(*r, *c)] += v;
                if r != c {
                    pert[(*c, *r)] += v;
                }
            }
            let exact_g = Matrix::from_fn(3, 3, |r, c| rational_from_f64(pert[(r, c)], 64));
            let Ok(m) = MetricLieAlgebra::with_rational_metric(base.algebra().clone(), &exact_g) else {
                return Ok(());
            };
            if to_f64(m.metric()).determinant().abs() < 1e-3 {
                return Ok(());
            }
            let exact = solve_algebraic_soliton(&m).unwrap().is_some();
            let r = soliton_residual(&state(&m), &basis).unwrap();
            prop_assert_eq!(r < 1e-9, exact, "residual {}", r);
            Ok(())
        })
        .unwrap();
}
