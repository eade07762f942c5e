//! Metric solvable extensions `R H + g` and their Einstein parameters.
//!
//! The extended basis is `(H, e_1, ..., e_n)`: `[H, e_i] = D e_i`, base
//! brackets unchanged, `g~(H, H) = h`, `g~(H, e_i) = 0`, `g~ = g` on the base.

use crate::exactmath::{poly_rational_roots, Field, Matrix, ParamScalar, Poly, Rational};
use crate::geometry::{einstein_constant, ricci_tensor, GeometryError, MetricLieAlgebra};
use crate::liealg::{is_derivation, Bracket, LieAlgebra, LieError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExtensionError {
    #[error("matrix is not a derivation of the base algebra")]
    NotADerivation,
    #[error("extended brackets violate Jacobi: {0}")]
    JacobiViolation(LieError),
    #[error("base metric must be parameter-free")]
    ParameterizedBase,
    #[error("parameter occurs outside g(H, H)")]
    ParameterOutsideExtension,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionSpec {
    pub base: MetricLieAlgebra,
    pub d: Matrix<Rational>,
    pub param: String,
    pub result: MetricLieAlgebra,
}

pub fn build_solvable_extension(
    base: &MetricLieAlgebra,
    d: &Matrix<Rational>,
    param: &str,
) -> Result<ExtensionSpec, ExtensionError> {
    let g = base
        .rational_metric()
        .map_err(|_| ExtensionError::ParameterizedBase)?;
    if !is_derivation(base.algebra(), d)? {
        return Err(ExtensionError::NotADerivation);
    }
    let a = base.algebra();
    let n = a.dim();
    let mut brackets: Vec<Bracket> = a
        .brackets()
        .into_iter()
        .map(|b| Bracket::new(b.i + 1, b.j + 1, b.out.into_iter().map(|(k, v)| (k + 1, v)).collect()))
        .collect();
    for i in 0..n {
        let out: Vec<_> = (0..n)
            .filter(|&p| !d[(p, i)].is_zero())
            .map(|p| (p + 1, d[(p, i)].clone()))
            .collect();
        if !out.is_empty() {
            brackets.push(Bracket::new(0, i + 1, out));
        }
    }
    let mut names = vec![extension_name(a.names())];
    names.extend(a.names().iter().cloned());
    let algebra = LieAlgebra::with_names(names, &brackets).map_err(ExtensionError::JacobiViolation)?;
    let metric = Matrix::from_fn(n + 1, n + 1, |r, c| match (r, c) {
        (0, 0) => ParamScalar::param(),
        (0, _) | (_, 0) => ParamScalar::zero(),
        _ => ParamScalar::from_rational(g[(r - 1, c - 1)].clone()),
    });
    let result = MetricLieAlgebra::new(algebra, metric, Some(param.to_string()))?;
    Ok(ExtensionSpec {
        base: base.clone(),
        d: d.clone(),
        param: param.to_string(),
        result,
    })
}

fn extension_name(existing: &[String]) -> String {
    let mut name = "H".to_string();
    while existing.contains(&name) {
        name.push('\'');
    }
    name
}

/// Outcome of the Einstein-parameter search.
#[derive(Debug, Clone, PartialEq)]
pub struct EinsteinSolve {
    /// Symbolic Ricci tensor of the extension.
    pub ricci: Matrix<ParamScalar>,
    /// `Ric(H, H) / g~(H, H)`.
    pub lambda: ParamScalar,
    /// Nonzero entries of `Ric - lambda g~` on and above the diagonal.
    pub residuals: Vec<((usize, usize), ParamScalar)>,
    /// Rational `(h, lambda)` pairs making the extension Einstein.
    pub solutions: Vec<(Rational, Rational)>,
    /// True when the residual vanishes for every admissible `h`.
    pub identically_einstein: bool,
    /// Part of the common residual factor with no rational roots, if any;
    /// its roots are Einstein parameters not reported in `solutions`.
    pub irrational_factor: Option<Poly>,
}

pub fn einstein_parameter_solve(ext: &ExtensionSpec) -> Result<EinsteinSolve, ExtensionError> {
    einstein_parameter_solve_metric(&ext.result)
}

/// Same search for any metric whose only parameter is `g(e_0, e_0)`, e.g. an
/// extension read back from a file.
pub fn einstein_parameter_solve_metric(m: &MetricLieAlgebra) -> Result<EinsteinSolve, ExtensionError> {
    let g = m.metric();
    let n = m.dim();
    for r in 0..n {
        for c in 0..n {
            if (r, c) != (0, 0) && !g[(r, c)].is_constant() {
                return Err(ExtensionError::ParameterOutsideExtension);
            }
        }
    }
    let ric = ricci_tensor(m);
    let lambda = ric[(0, 0)].div(&g[(0, 0)]).expect("g(H,H) is nonzero");
    let mut residuals = Vec::new();
    for r in 0..n {
        for c in r..n {
            let res = ric[(r, c)].sub(&lambda.mul(&g[(r, c)]));
            if !res.is_zero() {
                residuals.push(((r, c), res));
            }
        }
    }
    if residuals.is_empty() {
        return Ok(EinsteinSolve {
            ricci: ric,
            lambda,
            residuals,
            solutions: Vec::new(),
            identically_einstein: true,
            irrational_factor: None,
        });
    }
    let common = residuals
        .iter()
        .fold(Poly::zero(), |acc, (_, r)| acc.gcd(r.numerator()));
    let mut solutions = Vec::new();
    let mut irrational_factor = None;
    if !common.is_constant() {
        let mut roots = poly_rational_roots(&common).expect("nonzero");
        let mut rest = common.clone();
        for r in &roots {
            let linear = Poly::from_coeffs(vec![-r.clone(), <Rational as Field>::one()]);
            rest = rest.div_rem(&linear).0;
        }
        if !rest.is_constant() {
            irrational_factor = Some(rest.monic());
        }
        roots.dedup();
        for h in roots {
            let Ok(at) = m.instantiate(&h) else {
                continue;
            };
            let Some(lam) = lambda.eval(&h) else {
                continue;
            };
            if einstein_constant(&at)? == Some(lam.clone()) {
                solutions.push((h, lam));
            }
        }
    }
    Ok(EinsteinSolve {
        ricci: ric,
        lambda,
        residuals,
        solutions,
        identically_einstein: false,
        irrational_factor,
    })
}
