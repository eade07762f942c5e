//! Lie algebras given by structure constants.
//!
//! Brackets are stored densely as `C^k_ij` with `[e_i, e_j] = sum_k C^k_ij e_k`.
//! Indices are zero-based throughout the library; files and reports use
//! one-based indices.

use crate::exactmath::{Field, Matrix, Rational};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LieError {
    #[error("Jacobi identity fails on (e{}, e{}, e{}): residual {residual:?}", .triple.0 + 1, .triple.1 + 1, .triple.2 + 1)]
    JacobiViolation {
        triple: (usize, usize, usize),
        residual: Vec<String>,
    },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [e{}, e{}] given more than once", .0 + 1, .1 + 1)]
    DuplicateBracket(usize, usize),
    #[error("bracket [e{n}, e{n}] must vanish", n = .0 + 1)]
    SelfBracket(usize),
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("expected {expected} basis names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, algebra has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },
}

/// One bracket `[e_i, e_j] = sum (k, coeff) e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub out: Vec<(usize, Rational)>,
}

impl Bracket {
    pub fn new(i: usize, j: usize, out: Vec<(usize, Rational)>) -> Self {
        Bracket { i, j, out }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    // c[(i * dim + j) * dim + k] = C^k_ij
    c: Vec<Rational>,
}

impl LieAlgebra {
    /// Builds the algebra, filling in antisymmetry and verifying Jacobi.
    pub fn new(dim: usize, brackets: &[Bracket]) -> Result<Self, LieError> {
        let names = (1..=dim).map(|i| format!("e{i}")).collect();
        Self::with_names(names, brackets)
    }

    pub fn with_names(names: Vec<String>, brackets: &[Bracket]) -> Result<Self, LieError> {
        let dim = names.len();
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        let mut c = vec![<Rational as Field>::zero(); dim * dim * dim];
        let mut seen = std::collections::HashSet::new();
        let check = |index: usize| {
            if index >= dim {
                Err(LieError::IndexOutOfRange { index, dim })
            } else {
                Ok(())
            }
        };
        for b in brackets {
            check(b.i)?;
            check(b.j)?;
            for (k, _) in &b.out {
                check(*k)?;
            }
            if b.i == b.j {
                if b.out.iter().all(|(_, v)| v.is_zero()) {
                    continue;
                }
                return Err(LieError::SelfBracket(b.i));
            }
            if !seen.insert((b.i.min(b.j), b.i.max(b.j))) {
                return Err(LieError::DuplicateBracket(b.i.min(b.j), b.i.max(b.j)));
            }
            for (k, v) in &b.out {
                let fwd = (b.i * dim + b.j) * dim + k;
                let rev = (b.j * dim + b.i) * dim + k;
                c[fwd] = c[fwd].add(v);
                c[rev] = c[rev].sub(v);
            }
        }
        let algebra = LieAlgebra { dim, names, c };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// Same structure constants, new basis labels.
    pub fn renamed(mut self, names: Vec<String>) -> Result<Self, LieError> {
        if names.len() != self.dim {
            return Err(LieError::NameCount {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `C^k_ij`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Field::is_zero)
    }

    /// The nonzero brackets with `i < j`, for reporting.
    pub fn brackets(&self) -> Vec<Bracket> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<_> = (0..n)
                    .filter_map(|k| {
                        let v = self.structure_constant(i, j, k);
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect();
                if !terms.is_empty() {
                    out.push(Bracket::new(i, j, terms));
                }
            }
        }
        out
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![<Rational as Field>::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix<Rational> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.structure_constant(i, j, k).clone())
    }

    fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![<Rational as Field>::zero(); self.dim];
        v[i] = <Rational as Field>::one();
        v
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let residual = jacobi_residual(self);
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let base = ((i * n + j) * n + k) * n;
                    let r = &residual[base..base + n];
                    if r.iter().any(|v| !v.is_zero()) {
                        return Err(LieError::JacobiViolation {
                            triple: (i, j, k),
                            residual: r.iter().map(ToString::to_string).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_square(&self, d: &Matrix<Rational>) -> Result<(), LieError> {
        if d.rows() != self.dim || d.cols() != self.dim {
            return Err(LieError::DimensionMismatch {
                rows: d.rows(),
                cols: d.cols(),
                dim: self.dim,
            });
        }
        Ok(())
    }
}

/// Jacobi residual, laid out as `r[((i * n + j) * n + k) * n + m]`: component
/// `m` of `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
pub fn jacobi_residual(a: &LieAlgebra) -> Vec<Rational> {
    let n = a.dim;
    let mut r = vec![<Rational as Field>::zero(); n * n * n * n];
    let cyc = |x: usize, y: usize, z: usize, m: usize| -> Rational {
        // component m of [e_x, [e_y, e_z]]
        (0..n).fold(<Rational as Field>::zero(), |acc, p| {
            let c1 = a.structure_constant(y, z, p);
            if c1.is_zero() {
                return acc;
            }
            acc + c1 * a.structure_constant(x, p, m)
        })
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    r[((i * n + j) * n + k) * n + m] =
                        cyc(i, j, k, m) + cyc(j, k, i, m) + cyc(k, i, j, m);
                }
            }
        }
    }
    r
}

/// Constraint matrix `M` with `M * vec(D) = 0` exactly when `D` is a
/// derivation. Rows are `(m, (i, j))` in lexicographic order with `i < j`;
/// `vec(D)` stacks the columns of `D`.
pub fn derivation_constraint_matrix(a: &LieAlgebra) -> Matrix<Rational> {
    let n = a.dim;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut m = Matrix::<Rational>::zeros(n * pairs.len(), n * n);
    let col = |p: usize, q: usize| q * n + p; // entry D[p][q]
    for out in 0..n {
        for (pi, &(i, j)) in pairs.iter().enumerate() {
            let row = out * pairs.len() + pi;
            // D[e_i, e_j]: sum_k C^k_ij D[out][k]
            for k in 0..n {
                let c = a.structure_constant(i, j, k);
                if !c.is_zero() {
                    m[(row, col(out, k))] = m[(row, col(out, k))].add(c);
                }
            }
            // - [D e_i, e_j]: - sum_p D[p][i] C^out_pj
            // - [e_i, D e_j]: - sum_p D[p][j] C^out_ip
            for p in 0..n {
                let c = a.structure_constant(p, j, out);
                if !c.is_zero() {
                    m[(row, col(p, i))] = m[(row, col(p, i))].sub(c);
                }
                let c = a.structure_constant(i, p, out);
                if !c.is_zero() {
                    m[(row, col(p, j))] = m[(row, col(p, j))].sub(c);
                }
            }
        }
    }
    m
}

/// Basis of `Der(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationBasis {
    pub basis: Vec<Matrix<Rational>>,
}

impl DerivationBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn derivation_basis(a: &LieAlgebra) -> DerivationBasis {
    let n = a.dim;
    let basis = derivation_constraint_matrix(a)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |p, q| v[q * n + p].clone()))
        .collect();
    DerivationBasis { basis }
}

/// `D[X, Y] = [DX, Y] + [X, DY]` on all basis pairs.
pub fn is_derivation(a: &LieAlgebra, d: &Matrix<Rational>) -> Result<bool, LieError> {
    a.check_square(d)?;
    let n = a.dim;
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|q| (0..n).map(|p| d[(p, q)].clone()).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d
                .mul_vec(&a.bracket(&a.basis_vector(i), &a.basis_vector(j)))
                .expect("square");
            let r1 = a.bracket(&cols[i], &a.basis_vector(j));
            let r2 = a.bracket(&a.basis_vector(i), &cols[j]);
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| *l != x + y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClass {
    Abelian,
    Nilpotent,
    Solvable,
    NonSolvable,
}

impl std::fmt::Display for StructureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StructureClass::Abelian => "abelian",
            StructureClass::Nilpotent => "nilpotent",
            StructureClass::Solvable => "solvable",
            StructureClass::NonSolvable => "non-solvable",
        })
    }
}

/// Row-reduced basis of the span of `vectors`.
fn span(vectors: Vec<Vec<Rational>>, n: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_fn(vectors.len(), n, |r, c| vectors[r][c].clone());
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|r| red.row(r).to_vec()).collect()
}

fn bracket_span(a: &LieAlgebra, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            let b = a.bracket(x, y);
            if b.iter().any(|v| !v.is_zero()) {
                out.push(b);
            }
        }
    }
    span(out, a.dim)
}

/// Most specific of abelian, nilpotent, solvable, non-solvable, from the
/// lower central and derived series.
pub fn classify_structure(a: &LieAlgebra) -> StructureClass {
    if a.is_abelian() {
        return StructureClass::Abelian;
    }
    let n = a.dim;
    let full: Vec<Vec<Rational>> = (0..n).map(|i| a.basis_vector(i)).collect();

    let mut lower = full.clone();
    loop {
        let next = bracket_span(a, &full, &lower);
        if next.is_empty() {
            return StructureClass::Nilpotent;
        }
        if next.len() == lower.len() {
            break;
        }
        lower = next;
    }

    let mut derived = full;
    loop {
        let next = bracket_span(a, &derived, &derived);
        if next.is_empty() {
            return StructureClass::Solvable;
        }
        if next.len() == derived.len() {
            return StructureClass::NonSolvable;
        }
        derived = next;
    }
}

/// Dimension of the center.
pub fn center_dim(a: &LieAlgebra) -> usize {
    // X central iff ad(e_i) X = 0 for all i; stack the ad matrices
    let n = a.dim;
    let stacked = Matrix::from_fn(n * n, n, |r, c| a.ad(r / n)[(r % n, c)].clone());
    n - stacked.rank()
}
