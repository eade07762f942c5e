//! Left-invariant Ricci flow `dg/dt = -2 Ric(g)` in floating point.
//!
//! The algebra stays exact; only the metric is a float matrix. Steps are
//! classical fixed-step RK4.

use crate::exactmath::rational_to_f64;
use crate::liealg::{DerivationBasis, LieAlgebra};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use std::io::Write;

/// Integration stops when `|det g|` drops below this.
pub const DEGENERACY_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FlowError {
    #[error("metric is nearly degenerate at t = {t} (|det g| = {det:e})")]
    NearDegenerate { t: f64, det: f64 },
    #[error("metric is {rows}x{cols}, algebra has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },
    #[error("need dt > 0 and t_end > t (dt = {dt}, t = {t}, t_end = {t_end})")]
    BadStep { t: f64, t_end: f64, dt: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloatMetricState {
    pub algebra: LieAlgebra,
    pub g: DMatrix<f64>,
    pub t: f64,
}

impl FloatMetricState {
    pub fn new(algebra: LieAlgebra, g: DMatrix<f64>) -> Result<Self, FlowError> {
        check_shape(&algebra, &g)?;
        Ok(FloatMetricState { algebra, g, t: 0.0 })
    }

    /// Largest `|g_ij - g_ji|`.
    pub fn asymmetry(&self) -> f64 {
        (&self.g - self.g.transpose()).amax()
    }
}

fn check_shape(a: &LieAlgebra, g: &DMatrix<f64>) -> Result<(), FlowError> {
    if g.nrows() != a.dim() || g.ncols() != a.dim() {
        return Err(FlowError::DimensionMismatch {
            rows: g.nrows(),
            cols: g.ncols(),
            dim: a.dim(),
        });
    }
    Ok(())
}

/// Structure constants as floats, same `(i*n + j)*n + k` layout.
pub fn structure_constants_f64(a: &LieAlgebra) -> Vec<f64> {
    a.structure_constants().iter().map(rational_to_f64).collect()
}

pub fn ricci_float(a: &LieAlgebra, g: &DMatrix<f64>) -> Result<DMatrix<f64>, FlowError> {
    ricci_with(a.dim(), &structure_constants_f64(a), g, f64::NAN)
}

fn ricci_with(n: usize, c: &[f64], g: &DMatrix<f64>, t: f64) -> Result<DMatrix<f64>, FlowError> {
    if g.nrows() != n || g.ncols() != n {
        return Err(FlowError::DimensionMismatch {
            rows: g.nrows(),
            cols: g.ncols(),
            dim: n,
        });
    }
    let det = g.determinant();
    if det.abs() < DEGENERACY_THRESHOLD || !det.is_finite() {
        return Err(FlowError::NearDegenerate { t, det });
    }
    let ginv = g
        .clone()
        .try_inverse()
        .ok_or(FlowError::NearDegenerate { t, det })?;
    let cc = |i: usize, j: usize, k: usize| c[(i * n + j) * n + k];

    // koszul[(i*n + j)*n + l] = 2 g(nabla_i e_j, e_l)
    let mut koszul = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut s = 0.0;
                for k in 0..n {
                    s += cc(i, j, k) * g[(k, l)] - cc(j, l, k) * g[(k, i)] + cc(l, i, k) * g[(k, j)];
                }
                koszul[(i * n + j) * n + l] = s;
            }
        }
    }
    let mut gamma = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let mut s = 0.0;
                for l in 0..n {
                    s += ginv[(m, l)] * koszul[(i * n + j) * n + l];
                }
                gamma[(i * n + j) * n + m] = 0.5 * s;
            }
        }
    }
    let gm = |i: usize, j: usize, k: usize| gamma[(i * n + j) * n + k];

    // Ric_jk = sum_i R^i_ijk
    let mut ric = DMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let mut s = 0.0;
            for i in 0..n {
                for m in 0..n {
                    s += gm(j, k, m) * gm(i, m, i) - gm(i, k, m) * gm(j, m, i) - cc(i, j, m) * gm(m, k, i);
                }
            }
            ric[(j, k)] = s;
        }
    }
    Ok(ric)
}

/// Fixed-step RK4 from `state.t` to `t_end`. The step is shrunk so that a
/// whole number of steps covers the interval; the returned trajectory
/// starts with `state` and holds one entry per step.
pub fn integrate(state: &FloatMetricState, t_end: f64, dt: f64) -> Result<Vec<FloatMetricState>, FlowError> {
    let mut out = vec![state.clone()];
    let end = integrate_each(state, t_end, dt, |s| out.push(s.clone()));
    end.map(|_| out)
}

/// Like [`integrate`] but hands each new state to `visit` instead of
/// collecting them; returns the final state.
pub fn integrate_each(
    state: &FloatMetricState,
    t_end: f64,
    dt: f64,
    mut visit: impl FnMut(&FloatMetricState),
) -> Result<FloatMetricState, FlowError> {
    let span = t_end - state.t;
    if !(dt > 0.0) || !(span > 0.0) {
        return Err(FlowError::BadStep {
            t: state.t,
            t_end,
            dt,
        });
    }
    check_shape(&state.algebra, &state.g)?;
    let n = state.algebra.dim();
    let c = structure_constants_f64(&state.algebra);
    let steps = (span / dt - 1e-9).ceil().max(1.0) as usize;
    let h = span / steps as f64;
    let rhs = |g: &DMatrix<f64>, t: f64| ricci_with(n, &c, g, t).map(|r| r * -2.0);

    let mut cur = state.clone();
    for step in 1..=steps {
        let t = cur.t;
        let g = &cur.g;
        let k1 = rhs(g, t)?;
        let k2 = rhs(&(g + &k1 * (h / 2.0)), t + h / 2.0)?;
        let k3 = rhs(&(g + &k2 * (h / 2.0)), t + h / 2.0)?;
        let k4 = rhs(&(g + &k3 * h), t + h)?;
        let mut next = g + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        // symmetrize rounding noise
        next = (&next + next.transpose()) * 0.5;
        let t_next = if step == steps { t_end } else { state.t + step as f64 * h };
        let det = next.determinant();
        if det.abs() < DEGENERACY_THRESHOLD || !det.is_finite() {
            return Err(FlowError::NearDegenerate { t: t_next, det });
        }
        cur = FloatMetricState {
            algebra: cur.algebra,
            g: next,
            t: t_next,
        };
        visit(&cur);
    }
    Ok(cur)
}

/// Float copies of the derivation basis, for repeated residual fits.
pub fn basis_f64(basis: &DerivationBasis) -> Vec<DMatrix<f64>> {
    basis
        .basis
        .iter()
        .map(|b| DMatrix::from_fn(b.rows(), b.cols(), |r, c| rational_to_f64(&b[(r, c)])))
        .collect()
}

/// Frobenius norm of the least-squares misfit of
/// `rc = c I + sum_k a_k B_k` over the derivation basis.
pub fn soliton_residual(state: &FloatMetricState, basis: &DerivationBasis) -> Result<f64, FlowError> {
    soliton_residual_with(state, &basis_f64(basis))
}

pub fn soliton_residual_with(state: &FloatMetricState, basis: &[DMatrix<f64>]) -> Result<f64, FlowError> {
    let n = state.algebra.dim();
    let ric = ricci_with(n, &structure_constants_f64(&state.algebra), &state.g, state.t)?;
    let ginv = state
        .g
        .clone()
        .try_inverse()
        .ok_or(FlowError::NearDegenerate {
            t: state.t,
            det: state.g.determinant(),
        })?;
    let rc = ginv * ric;
    let cols = basis.len() + 1;
    let a = DMatrix::from_fn(n * n, cols, |r, col| {
        let (p, q) = (r / n, r % n);
        if col == 0 {
            if p == q {
                1.0
            } else {
                0.0
            }
        } else {
            basis[col - 1][(p, q)]
        }
    });
    let b = DVector::from_fn(n * n, |r, _| rc[(r / n, r % n)]);
    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(&b, 1e-12)
        .expect("both singular vector sets were computed");
    Ok((a * x - b).norm())
}

#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryRecord {
    pub t: f64,
    pub g: Vec<f64>,
    pub residual: f64,
}

impl TrajectoryRecord {
    pub fn new(state: &FloatMetricState, residual: f64) -> Self {
        let n = state.g.nrows();
        TrajectoryRecord {
            t: state.t,
            g: (0..n * n).map(|r| state.g[(r / n, r % n)]).collect(),
            residual,
        }
    }
}

/// One JSON object per line: `{"t":..,"g":[row-major],"residual":..}`.
pub fn write_json_lines<W: Write>(out: &mut W, records: &[TrajectoryRecord]) -> std::io::Result<()> {
    for rec in records {
        serde_json::to_writer(&mut *out, rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
