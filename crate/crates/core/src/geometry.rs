//! Left-invariant metrics on Lie algebras and their curvature.
//!
//! Conventions:
//! - `nabla_{e_i} e_j = sum_k G^k_ij e_k` from the Koszul formula
//!   `2g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
//! - `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`,
//!   stored as `R(e_i,e_j)e_k = sum_l R^l_ijk e_l`.
//! - `Ric(e_j,e_k) = sum_i R^i_ijk`, Ricci operator `rc = g^-1 Ric`, scalar
//!   curvature `trace(rc)`.

use crate::exactmath::{Field, Matrix, ParamScalar, Rational};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("metric is {rows}x{cols}, algebra has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },
    #[error("metric is not symmetric at ({}, {})", .0 + 1, .1 + 1)]
    NotSymmetric(usize, usize),
    #[error("metric is degenerate (determinant vanishes identically)")]
    Degenerate,
    #[error("metric depends on a parameter but none is named")]
    UnnamedParameter,
    #[error("operation requires a parameter-free metric")]
    Parameterized,
    #[error("parameter value {0} makes the metric singular or undefined")]
    BadParameterValue(String),
}

/// A Lie algebra with a constant symmetric nondegenerate metric `g_ij`,
/// possibly depending on one named parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    metric: Matrix<ParamScalar>,
    param: Option<String>,
}

impl MetricLieAlgebra {
    pub fn new(
        algebra: LieAlgebra,
        metric: Matrix<ParamScalar>,
        param: Option<String>,
    ) -> Result<Self, GeometryError> {
        let n = algebra.dim();
        if metric.rows() != n || metric.cols() != n {
            return Err(GeometryError::DimensionMismatch {
                rows: metric.rows(),
                cols: metric.cols(),
                dim: n,
            });
        }
        for r in 0..n {
            for c in r + 1..n {
                if metric[(r, c)] != metric[(c, r)] {
                    return Err(GeometryError::NotSymmetric(r, c));
                }
            }
        }
        if param.is_none() && !metric.is_constant() {
            return Err(GeometryError::UnnamedParameter);
        }
        if metric.det().expect("square").is_zero() {
            return Err(GeometryError::Degenerate);
        }
        // a parameter that never occurs is dropped so reports stay clean
        let param = param.filter(|_| !metric.is_constant());
        Ok(MetricLieAlgebra {
            algebra,
            metric,
            param,
        })
    }

    /// Convenience constructor for parameter-free metrics.
    pub fn with_rational_metric(
        algebra: LieAlgebra,
        metric: &Matrix<Rational>,
    ) -> Result<Self, GeometryError> {
        Self::new(algebra, Matrix::from_rational(metric), None)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &Matrix<ParamScalar> {
        &self.metric
    }

    pub fn param(&self) -> Option<&str> {
        self.param.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_parameter_free(&self) -> bool {
        self.param.is_none()
    }

    /// The metric as a rational matrix; fails if it depends on the parameter.
    pub fn rational_metric(&self) -> Result<Matrix<Rational>, GeometryError> {
        self.metric.to_rational().map_err(|_| GeometryError::Parameterized)
    }

    /// Substitute `value` for the parameter.
    pub fn instantiate(&self, value: &Rational) -> Result<Self, GeometryError> {
        if self.param.is_none() {
            return Ok(self.clone());
        }
        let g = self
            .metric
            .eval(value)
            .ok_or_else(|| GeometryError::BadParameterValue(value.to_string()))?;
        Self::with_rational_metric(self.algebra.clone(), &g)
            .map_err(|_| GeometryError::BadParameterValue(value.to_string()))
    }

    /// Same algebra, metric multiplied by `s`.
    pub fn scaled(&self, s: &Rational) -> Result<Self, GeometryError> {
        let s = ParamScalar::from_rational(s.clone());
        Self::new(self.algebra.clone(), self.metric.scale(&s), self.param.clone())
    }

    fn constants(&self) -> Vec<ParamScalar> {
        self.algebra
            .structure_constants()
            .iter()
            .map(|c| ParamScalar::from_rational(c.clone()))
            .collect()
    }

    fn inverse_metric(&self) -> Matrix<ParamScalar> {
        self.metric.inverse().expect("nondegenerate by construction")
    }
}

/// Christoffel-type coefficients of the Levi-Civita connection.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    n: usize,
    // gamma[(i * n + j) * n + k] = G^k_ij
    gamma: Vec<ParamScalar>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `G^k_ij`, the `e_k` component of `nabla_{e_i} e_j`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &ParamScalar {
        &self.gamma[(i * self.n + j) * self.n + k]
    }

    /// Components of `nabla_{e_i} e_j`.
    pub fn covariant(&self, i: usize, j: usize) -> &[ParamScalar] {
        let base = (i * self.n + j) * self.n;
        &self.gamma[base..base + self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Field::is_zero)
    }

    /// `G^k_ij - G^k_ji = C^k_ij` for every index triple.
    pub fn is_torsion_free(&self, a: &LieAlgebra) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.coeff(i, j, k).sub(self.coeff(j, i, k))
                        == ParamScalar::from_rational(a.structure_constant(i, j, k).clone())
                })
            })
        })
    }

    /// For each `i`, `g * G_i` is skew, with `(G_i)^k_j = G^k_ij`.
    pub fn is_metric_compatible(&self, g: &Matrix<ParamScalar>) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let gi = Matrix::from_fn(n, n, |l, j| {
                (0..n).fold(ParamScalar::zero(), |acc, k| {
                    acc.add(&g[(l, k)].mul(self.coeff(i, j, k)))
                })
            });
            (0..n).all(|l| (l..n).all(|j| gi[(l, j)].add(&gi[(j, l)]).is_zero()))
        })
    }
}

pub fn levi_civita(m: &MetricLieAlgebra) -> Connection {
    let n = m.dim();
    let g = &m.metric;
    let ginv = m.inverse_metric();
    let c = m.constants();
    let cc = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let half = ParamScalar::from_rational(Rational::new(1.into(), 2.into()));
    let mut gamma = vec![ParamScalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            // koszul[l] = g([e_i,e_j],e_l) - g([e_j,e_l],e_i) + g([e_l,e_i],e_j)
            let koszul: Vec<ParamScalar> = (0..n)
                .map(|l| {
                    let mut acc = ParamScalar::zero();
                    for k in 0..n {
                        let terms = [
                            (cc(i, j, k), &g[(k, l)], false),
                            (cc(j, l, k), &g[(k, i)], true),
                            (cc(l, i, k), &g[(k, j)], false),
                        ];
                        for (cst, gv, negate) in terms {
                            if cst.is_zero() || gv.is_zero() {
                                continue;
                            }
                            let t = cst.mul(gv);
                            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
                        }
                    }
                    acc
                })
                .collect();
            if koszul.iter().all(Field::is_zero) {
                continue;
            }
            for k in 0..n {
                let mut acc = ParamScalar::zero();
                for (l, kv) in koszul.iter().enumerate() {
                    if !kv.is_zero() && !ginv[(k, l)].is_zero() {
                        acc = acc.add(&ginv[(k, l)].mul(kv));
                    }
                }
                gamma[(i * n + j) * n + k] = acc.mul(&half);
            }
        }
    }
    Connection { n, gamma }
}

/// `R^l_ijk` laid out as `r[((i * n + j) * n + k) * n + l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTensor {
    n: usize,
    r: Vec<ParamScalar>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `R^l_ijk`, the `e_l` component of `R(e_i, e_j) e_k`.
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &ParamScalar {
        &self.r[((i * self.n + j) * self.n + k) * self.n + l]
    }

    /// Components of `R(e_i, e_j) e_k`.
    pub fn apply(&self, i: usize, j: usize, k: usize) -> &[ParamScalar] {
        let base = ((i * self.n + j) * self.n + k) * self.n;
        &self.r[base..base + self.n]
    }

    pub fn components(&self) -> &[ParamScalar] {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Field::is_zero)
    }

    /// `Ric(e_j, e_k) = sum_i R^i_ijk`.
    pub fn contract(&self) -> Matrix<ParamScalar> {
        let n = self.n;
        Matrix::from_fn(n, n, |j, k| {
            (0..n).fold(ParamScalar::zero(), |acc, i| acc.add(self.component(i, j, k, i)))
        })
    }

    fn lowered(&self, g: &Matrix<ParamScalar>, i: usize, j: usize, k: usize, m: usize) -> ParamScalar {
        (0..self.n).fold(ParamScalar::zero(), |acc, l| {
            let r = self.component(i, j, k, l);
            if r.is_zero() || g[(l, m)].is_zero() {
                acc
            } else {
                acc.add(&r.mul(&g[(l, m)]))
            }
        })
    }

    /// `R^l_ijk = -R^l_jik`.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (0..n).all(|l| self.component(i, j, k, l).add(self.component(j, i, k, l)).is_zero())
                })
            })
        })
    }

    /// `R^l_ijk + R^l_jki + R^l_kij = 0`.
    pub fn satisfies_bianchi(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (0..n).all(|l| {
                        self.component(i, j, k, l)
                            .add(self.component(j, k, i, l))
                            .add(self.component(k, i, j, l))
                            .is_zero()
                    })
                })
            })
        })
    }

    /// Lowered tensor `g(R(e_i,e_j)e_k, e_m)` is skew in `(k, m)` and
    /// symmetric under `(ij) <-> (km)`.
    pub fn has_lowered_symmetries(&self, g: &Matrix<ParamScalar>) -> bool {
        let n = self.n;
        let mut low = vec![ParamScalar::zero(); n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        low[((i * n + j) * n + k) * n + m] = self.lowered(g, i, j, k, m);
                    }
                }
            }
        }
        let at = |i: usize, j: usize, k: usize, m: usize| &low[((i * n + j) * n + k) * n + m];
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (0..n).all(|m| at(i, j, k, m).add(at(i, j, m, k)).is_zero() && at(i, j, k, m) == at(k, m, i, j))
                })
            })
        })
    }
}

pub fn curvature_tensor(m: &MetricLieAlgebra) -> CurvatureTensor {
    let n = m.dim();
    let conn = levi_civita(m);
    let c = m.constants();
    let mut r = vec![ParamScalar::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut out = vec![ParamScalar::zero(); n];
                for p in 0..n {
                    // nabla_i (G^p_jk e_p) - nabla_j (G^p_ik e_p) - C^p_ij nabla_p e_k
                    let a = conn.coeff(j, k, p);
                    let b = conn.coeff(i, k, p);
                    let cst = &c[(i * n + j) * n + p];
                    for (l, o) in out.iter_mut().enumerate() {
                        if !a.is_zero() && !conn.coeff(i, p, l).is_zero() {
                            *o = o.add(&a.mul(conn.coeff(i, p, l)));
                        }
                        if !b.is_zero() && !conn.coeff(j, p, l).is_zero() {
                            *o = o.sub(&b.mul(conn.coeff(j, p, l)));
                        }
                        if !cst.is_zero() && !conn.coeff(p, k, l).is_zero() {
                            *o = o.sub(&cst.mul(conn.coeff(p, k, l)));
                        }
                    }
                }
                let base = ((i * n + j) * n + k) * n;
                r[base..base + n].clone_from_slice(&out);
            }
        }
    }
    CurvatureTensor { n, r }
}

/// Ricci tensor computed directly from the connection, without forming the
/// full curvature tensor.
pub fn ricci_tensor(m: &MetricLieAlgebra) -> Matrix<ParamScalar> {
    let n = m.dim();
    let conn = levi_civita(m);
    let c = m.constants();
    // trace of nabla_p: sum_i G^i_ip
    let traces: Vec<ParamScalar> = (0..n)
        .map(|p| (0..n).fold(ParamScalar::zero(), |acc, i| acc.add(conn.coeff(i, p, i))))
        .collect();
    Matrix::from_fn(n, n, |j, k| {
        let mut acc = ParamScalar::zero();
        for p in 0..n {
            let a = conn.coeff(j, k, p);
            if !a.is_zero() && !traces[p].is_zero() {
                acc = acc.add(&a.mul(&traces[p]));
            }
            for i in 0..n {
                let b = conn.coeff(i, k, p);
                if !b.is_zero() && !conn.coeff(j, p, i).is_zero() {
                    acc = acc.sub(&b.mul(conn.coeff(j, p, i)));
                }
                let cst = &c[(i * n + j) * n + p];
                if !cst.is_zero() && !conn.coeff(p, k, i).is_zero() {
                    acc = acc.sub(&cst.mul(conn.coeff(p, k, i)));
                }
            }
        }
        acc
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RicciData {
    pub ric: Matrix<ParamScalar>,
    /// `rc = g^-1 Ric`
    pub op: Matrix<ParamScalar>,
    pub scalar: ParamScalar,
}

pub fn ricci(m: &MetricLieAlgebra) -> RicciData {
    let ric = ricci_tensor(m);
    let op = m.inverse_metric().mul(&ric).expect("square");
    let scalar = op.trace();
    RicciData { ric, op, scalar }
}

pub fn ricci_operator(m: &MetricLieAlgebra) -> Matrix<ParamScalar> {
    ricci(m).op
}

pub fn scalar_curvature(m: &MetricLieAlgebra) -> ParamScalar {
    ricci(m).scalar
}

/// `Some(lambda)` with `Ric = lambda g`, else `None`. Ricci-flat gives zero.
pub fn einstein_constant(m: &MetricLieAlgebra) -> Result<Option<Rational>, GeometryError> {
    let g = m.rational_metric()?;
    let ric = ricci_tensor(m)
        .to_rational()
        .map_err(|_| GeometryError::Parameterized)?;
    let n = m.dim();
    let (r, c) = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .find(|&(r, c)| !g[(r, c)].is_zero())
        .expect("nondegenerate metric has a nonzero entry");
    let lambda = &ric[(r, c)] / &g[(r, c)];
    let matches = ric == g.scale(&lambda);
    Ok(matches.then_some(lambda))
}

pub fn is_flat(m: &MetricLieAlgebra) -> bool {
    curvature_tensor(m).is_zero()
}

/// Signature of a metric, counted as (positive, negative) directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Signature {
    pub fn is_lorentzian(&self) -> bool {
        self.negative == 1
    }
}

/// Signature by diagonalization under congruence. A parameterized metric is
/// evaluated at the first of a few fixed sample points where it is
/// nondegenerate; the answer is informational only.
pub fn signature(m: &MetricLieAlgebra) -> Signature {
    let g = if m.is_parameter_free() {
        m.rational_metric().expect("parameter-free")
    } else {
        let samples = [(7, 3), (-11, 5), (13, 2), (-3, 7), (29, 11)];
        samples
            .iter()
            .find_map(|&(p, q)| {
                let t = Rational::new(p.into(), q.into());
                m.metric.eval(&t).filter(|g| !g.det().expect("square").is_zero())
            })
            .expect("nondegenerate at some sample point")
    };
    congruence_signature(&g)
}

fn congruence_signature(g: &Matrix<Rational>) -> Signature {
    let n = g.rows();
    let mut a = g.clone();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
    };
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // e_k <- e_k + e_j makes the diagonal entry 2 a_kj
                add_sym(&mut a, k, j);
            } else {
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot.is_zero() {
            continue;
        }
        if num_traits::Signed::is_positive(&pivot) {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for r in k + 1..n {
            if a[(r, k)].is_zero() {
                continue;
            }
            let f = &a[(r, k)] / &pivot;
            for c in k..n {
                let d = &f * &a[(k, c)];
                a[(r, c)] = &a[(r, c)] - &d;
            }
            for rr in k..n {
                let d = &f * &a[(rr, k)];
                a[(rr, r)] = &a[(rr, r)] - &d;
            }
        }
    }
    sig
}

fn swap_sym(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

fn add_sym(a: &mut Matrix<Rational>, k: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = &a[(k, c)] + &a[(j, c)];
        a[(k, c)] = v;
    }
    for r in 0..n {
        let v = &a[(r, k)] + &a[(r, j)];
        a[(r, k)] = v;
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::liealg::Bracket;

    fn h3() -> LieAlgebra {
        LieAlgebra::new(3, &[Bracket::new(1, 2, vec![(0, int(1))])]).unwrap()
    }

    fn diag(v: &[i64]) -> Matrix<Rational> {
        Matrix::diagonal(v.iter().map(|&x| int(x)).collect())
    }

    fn ps(r: Rational) -> ParamScalar {
        ParamScalar::from_rational(r)
    }

    #[test]
    fn heisenberg_g1_connection_and_ricci() {
        let m = MetricLieAlgebra::with_rational_metric(h3(), &diag(&[1, 1, -1])).unwrap();
        assert!(signature(&m).is_lorentzian());
        let conn = levi_civita(&m);
        let half = ps(rat(1, 2));
        assert_eq!(conn.covariant(1, 2), &[half.clone(), ps(int(0)), ps(int(0))]);
        assert_eq!(conn.covariant(2, 1), &[half.neg(), ps(int(0)), ps(int(0))]);
        assert_eq!(conn.covariant(0, 1), &[ps(int(0)), ps(int(0)), half.clone()]);
        let data = ricci(&m);
        assert_eq!(data.ric.to_rational().unwrap(), Matrix::diagonal(vec![rat(-1, 2), rat(1, 2), rat(-1, 2)]));
        assert_eq!(data.op.to_rational().unwrap(), Matrix::diagonal(vec![rat(-1, 2), rat(1, 2), rat(1, 2)]));
        assert_eq!(data.scalar, rat(1, 2));
        assert_eq!(einstein_constant(&m).unwrap(), None);
        assert!(!is_flat(&m));
    }

    #[test]
    fn g3_frame_form_is_flat() {
        let g = Matrix::from_rows(vec![
            vec![int(0), int(1), int(0)],
            vec![int(1), int(-1), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        let m = MetricLieAlgebra::with_rational_metric(h3(), &g).unwrap();
        assert_eq!(g.det().unwrap(), int(-1));
        assert!(signature(&m).is_lorentzian());
        assert!(is_flat(&m));
        assert_eq!(einstein_constant(&m).unwrap(), Some(int(0)));
    }

    #[test]
    fn abelian_is_flat() {
        let a = LieAlgebra::new(3, &[]).unwrap();
        let g = Matrix::from_rows(vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(-1), int(0)],
            vec![int(0), int(0), int(5)],
        ])
        .unwrap();
        let m = MetricLieAlgebra::with_rational_metric(a, &g).unwrap();
        assert!(levi_civita(&m).is_zero());
        assert!(is_flat(&m));
    }

    #[test]
    fn metric_validation() {
        let g = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(1)]]).unwrap();
        let a = LieAlgebra::new(2, &[]).unwrap();
        assert_eq!(
            MetricLieAlgebra::with_rational_metric(a.clone(), &g).unwrap_err(),
            GeometryError::NotSymmetric(0, 1)
        );
        let zero_row = diag(&[0, 1]);
        assert_eq!(
            MetricLieAlgebra::with_rational_metric(a.clone(), &zero_row).unwrap_err(),
            GeometryError::Degenerate
        );
        assert!(MetricLieAlgebra::with_rational_metric(a, &diag(&[1, 1, 1])).is_err());
    }

    #[test]
    fn direct_ricci_matches_contraction() {
        let m = MetricLieAlgebra::with_rational_metric(h3(), &diag(&[1, 1, -1])).unwrap();
        assert_eq!(ricci_tensor(&m), curvature_tensor(&m).contract());
    }

    #[test]
    fn parameterized_metric_signature_and_instantiation() {
        let h = ParamScalar::param();
        let one = ParamScalar::one();
        let g = Matrix::diagonal(vec![h, one.clone(), one.clone(), one.neg()]);
        let m = MetricLieAlgebra::new(LieAlgebra::new(4, &[]).unwrap(), g, Some("h".into())).unwrap();
        assert_eq!(m.param(), Some("h"));
        assert!(m.instantiate(&int(0)).is_err());
        let at = m.instantiate(&int(-4)).unwrap();
        assert_eq!(signature(&at), Signature { positive: 2, negative: 2 });
    }
}
