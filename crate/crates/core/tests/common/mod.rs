#![allow(dead_code)]

use proptest::prelude::*;
use ricci_soliton::catalog::{self, H3Metric};
use ricci_soliton::exactmath::{int, rat, Matrix, Rational};
use ricci_soliton::geometry::MetricLieAlgebra;
use ricci_soliton::liealg::{Bracket, LieAlgebra};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn rational_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(small_rational(), rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
}

/// Invertible matrices with small entries: unit lower times unit upper
/// triangular, times a nonzero diagonal.
pub fn invertible_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    let entries = proptest::collection::vec(-2i64..=2, n * n);
    let diag = proptest::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3)], n);
    (entries.clone(), entries, diag).prop_map(move |(l, u, d)| {
        let lower = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Greater => int(l[r * n + c]),
            std::cmp::Ordering::Equal => int(1),
            std::cmp::Ordering::Less => int(0),
        });
        let upper = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Less => int(u[r * n + c]),
            std::cmp::Ordering::Equal => int(d[r]),
            std::cmp::Ordering::Greater => int(0),
        });
        lower.mul(&upper).unwrap()
    })
}

/// Parameter-free metric catalog entries of dimension at most `max_dim`.
pub fn constant_metrics(max_dim: usize) -> Vec<(String, MetricLieAlgebra)> {
    catalog::default_entries()
        .into_iter()
        .map(|id| (id.to_string(), catalog::build(&id).unwrap().metric))
        .filter(|(_, m)| m.is_parameter_free() && m.dim() <= max_dim)
        .collect()
}

pub fn h3_g1() -> MetricLieAlgebra {
    catalog::h3_metric(H3Metric::G1).unwrap()
}

/// Structure constants of `a` in the basis `e'_i = sum_p P[p][i] e_p`.
pub fn change_basis(a: &LieAlgebra, p: &Matrix<Rational>) -> LieAlgebra {
    let n = a.dim();
    let pinv = p.inverse().unwrap();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let x: Vec<Rational> = (0..n).map(|r| p[(r, i)].clone()).collect();
            let y: Vec<Rational> = (0..n).map(|r| p[(r, j)].clone()).collect();
            let z = a.bracket(&x, &y);
            let out: Vec<(usize, Rational)> = (0..n)
                .map(|k| {
                    let v = (0..n).fold(int(0), |acc, r| acc + &pinv[(k, r)] * &z[r]);
                    (k, v)
                })
                .filter(|(_, v)| *v != int(0))
                .collect();
            if !out.is_empty() {
                brackets.push(Bracket::new(i, j, out));
            }
        }
    }
    LieAlgebra::new(n, &brackets).unwrap()
}

/// The metric `P^T g P` on the algebra in the new basis.
pub fn change_metric_basis(m: &MetricLieAlgebra, p: &Matrix<Rational>) -> MetricLieAlgebra {
    let g = m.rational_metric().unwrap();
    let g2 = p.transpose().mul(&g).unwrap().mul(p).unwrap();
    MetricLieAlgebra::with_rational_metric(change_basis(m.algebra(), p), &g2).unwrap()
}
