//! Algebraic Ricci solitons: `rc = c Id + D` with `D` a derivation.

use crate::exactmath::{Field, Matrix, Rational, SolveOutcome};
use crate::geometry::{ricci, GeometryError, MetricLieAlgebra};
use crate::liealg::{derivation_basis, is_derivation, LieError};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolitonError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("derivation is {rows}x{cols}, metric has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
    Einstein,
    RicciFlat,
}

impl fmt::Display for SolitonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolitonClass::Shrinking => "shrinking",
            SolitonClass::Steady => "steady",
            SolitonClass::Expanding => "expanding",
            SolitonClass::Einstein => "einstein",
            SolitonClass::RicciFlat => "ricci_flat",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolitonSolution {
    pub c: Rational,
    pub d: Matrix<Rational>,
    pub class: SolitonClass,
    pub unique: bool,
}

/// Einstein when `d = 0` (Ricci-flat if also `c = 0`), otherwise by the sign
/// of `c`.
pub fn classify_soliton(c: &Rational, d: &Matrix<Rational>) -> SolitonClass {
    use num_traits::Signed;
    if d.is_zero() {
        if c.is_zero() {
            SolitonClass::RicciFlat
        } else {
            SolitonClass::Einstein
        }
    } else if c.is_positive() {
        SolitonClass::Shrinking
    } else if c.is_zero() {
        SolitonClass::Steady
    } else {
        SolitonClass::Expanding
    }
}

/// Linear system `c vec(I) + sum_k a_k vec(B_k) = vec(rc)` with unknowns
/// ordered `(c, a_1, ..., a_m)`. Returns the coefficient matrix, the
/// right-hand side and the derivation basis used.
pub fn soliton_system(
    m: &MetricLieAlgebra,
) -> Result<(Matrix<Rational>, Vec<Rational>, Vec<Matrix<Rational>>), SolitonError> {
    m.rational_metric()?;
    let n = m.dim();
    let rc = ricci(m).op.to_rational().map_err(|_| GeometryError::Parameterized)?;
    let basis = derivation_basis(m.algebra()).basis;
    let id = Matrix::<Rational>::identity(n);
    let a = Matrix::from_fn(n * n, basis.len() + 1, |r, col| {
        let (p, q) = (r % n, r / n);
        if col == 0 {
            id[(p, q)].clone()
        } else {
            basis[col - 1][(p, q)].clone()
        }
    });
    let b = (0..n * n).map(|r| rc[(r % n, r / n)].clone()).collect();
    Ok((a, b, basis))
}

/// Solve the algebraic soliton equation; `None` when no `(c, D)` exists.
pub fn solve_algebraic_soliton(m: &MetricLieAlgebra) -> Result<Option<SolitonSolution>, SolitonError> {
    let (a, b, basis) = soliton_system(m)?;
    let n = m.dim();
    match a.solve(&b).expect("consistent shapes") {
        SolveOutcome::Inconsistent => Ok(None),
        SolveOutcome::Solved { x, unique } => {
            let c = x[0].clone();
            let d = basis
                .iter()
                .zip(&x[1..])
                .fold(Matrix::zeros(n, n), |acc, (bk, ak)| {
                    acc.add(&bk.scale(ak)).expect("same shape")
                });
            let class = classify_soliton(&c, &d);
            Ok(Some(SolitonSolution { c, d, class, unique }))
        }
    }
}

/// `L_ij = (1/2)(g(De_i, e_j) + g(e_i, De_j))`, i.e. `(D^T g + g D) / 2`.
pub fn lie_derivative_form(
    m: &MetricLieAlgebra,
    d: &Matrix<Rational>,
) -> Result<Matrix<Rational>, SolitonError> {
    let g = m.rational_metric()?;
    if d.rows() != m.dim() || d.cols() != m.dim() {
        return Err(SolitonError::DimensionMismatch {
            rows: d.rows(),
            cols: d.cols(),
            dim: m.dim(),
        });
    }
    let sum = d
        .transpose()
        .mul(&g)
        .and_then(|x| x.add(&g.mul(d)?))
        .expect("square");
    Ok(sum.scale(&Rational::new(1.into(), 2.into())))
}

/// `Ric = c g + L_{X_D} g` exactly.
pub fn verify_ricci_soliton_identity(
    m: &MetricLieAlgebra,
    s: &SolitonSolution,
) -> Result<bool, SolitonError> {
    let g = m.rational_metric()?;
    let ric = ricci(m).ric.to_rational().map_err(|_| GeometryError::Parameterized)?;
    let rhs = g.scale(&s.c).add(&lie_derivative_form(m, &s.d)?).expect("square");
    Ok(ric == rhs)
}

/// `rc - c Id` is a derivation.
pub fn is_consistent(m: &MetricLieAlgebra, s: &SolitonSolution) -> Result<bool, SolitonError> {
    let rc = ricci(m).op.to_rational().map_err(|_| GeometryError::Parameterized)?;
    let n = m.dim();
    let d = rc
        .sub(&Matrix::<Rational>::identity(n).scale(&s.c))
        .expect("square");
    Ok(d == s.d && is_derivation(m.algebra(), &d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::liealg::{Bracket, LieAlgebra};

    fn h3_g1() -> MetricLieAlgebra {
        let a = LieAlgebra::new(3, &[Bracket::new(1, 2, vec![(0, int(1))])]).unwrap();
        MetricLieAlgebra::with_rational_metric(a, &Matrix::diagonal(vec![int(1), int(1), int(-1)]))
            .unwrap()
    }

    #[test]
    fn heisenberg_g1_soliton() {
        let m = h3_g1();
        let s = solve_algebraic_soliton(&m).unwrap().unwrap();
        assert_eq!(s.c, rat(3, 2));
        assert_eq!(s.d, Matrix::diagonal(vec![int(-2), int(-1), int(-1)]));
        assert_eq!(s.class, SolitonClass::Shrinking);
        assert!(s.unique);
        assert!(verify_ricci_soliton_identity(&m, &s).unwrap());
        assert!(is_consistent(&m, &s).unwrap());
        let mut bad = s.clone();
        bad.c = rat(1, 2);
        assert!(!verify_ricci_soliton_identity(&m, &bad).unwrap());
    }

    #[test]
    fn lie_derivative_examples() {
        let m = h3_g1();
        let d = Matrix::diagonal(vec![int(-2), int(-1), int(-1)]);
        assert_eq!(
            lie_derivative_form(&m, &d).unwrap(),
            Matrix::diagonal(vec![int(-2), int(-1), int(1)])
        );
        assert!(lie_derivative_form(&m, &Matrix::zeros(3, 3)).unwrap().is_zero());
        assert!(lie_derivative_form(&m, &Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn classification() {
        let d = Matrix::diagonal(vec![int(-2), int(-1), int(-1)]);
        assert_eq!(classify_soliton(&rat(3, 2), &d), SolitonClass::Shrinking);
        assert_eq!(classify_soliton(&int(0), &d), SolitonClass::Steady);
        assert_eq!(classify_soliton(&int(-1), &d), SolitonClass::Expanding);
        assert_eq!(classify_soliton(&int(2), &Matrix::zeros(3, 3)), SolitonClass::Einstein);
        assert_eq!(classify_soliton(&int(0), &Matrix::zeros(3, 3)), SolitonClass::RicciFlat);
    }

    #[test]
    fn abelian_gives_zero_non_unique() {
        let a = LieAlgebra::new(2, &[]).unwrap();
        let m = MetricLieAlgebra::with_rational_metric(a, &Matrix::diagonal(vec![int(1), int(-1)]))
            .unwrap();
        let s = solve_algebraic_soliton(&m).unwrap().unwrap();
        assert_eq!(s.c, int(0));
        assert!(s.d.is_zero());
        assert!(!s.unique);
        assert_eq!(s.class, SolitonClass::RicciFlat);
    }
}
