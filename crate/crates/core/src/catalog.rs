//! Named example algebras and the expected results attached to them.
//!
//! Every entry can be rebuilt from its id string, e.g. `heisenberg:n=3`,
//! `h3:g1`, `oscillator:m=2,eps=0`, `e2`, `e11` or
//! `remark44:a=1,at=1,b=0,c=0,k=0,lambda=2`. The expectations are data: a
//! label, a short citation of the published claim, and a check evaluated by
//! [`verify`].

use crate::exactmath::{int, parse_rational, rat, Field, Matrix, ParamScalar, Rational};
use crate::extension::{build_solvable_extension, einstein_parameter_solve, EinsteinSolve, ExtensionError, ExtensionSpec};
use crate::geometry::{curvature_tensor, einstein_constant, is_flat, levi_civita, ricci, GeometryError, MetricLieAlgebra, RicciData};
use crate::liealg::{classify_structure, Bracket, LieAlgebra, LieError, StructureClass};
use crate::soliton::{solve_algebraic_soliton, verify_ricci_soliton_identity, SolitonClass, SolitonError, SolitonSolution};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog id '{0}'")]
    UnknownId(String),
    #[error("bad catalog id '{id}': {reason}")]
    BadArgument { id: String, reason: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Soliton(#[from] SolitonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H3Metric {
    G1,
    G2,
    G3,
}

/// Parameters of the Remark-style five-dimensional oscillator extension.
#[derive(Debug, Clone, PartialEq)]
pub struct Remark44Params {
    pub a: Rational,
    pub a_tilde: Rational,
    pub b: Rational,
    pub c: Rational,
    pub k: Rational,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CatalogId {
    Heisenberg { n: usize },
    H3(H3Metric),
    Oscillator { m: usize, lambdas: Vec<Rational>, eps: Rational },
    EuclideanMotion,
    MinkowskiMotion,
    Remark44(Remark44Params),
}

fn default_lambdas(m: usize) -> Vec<Rational> {
    (1..=m as i64).map(int).collect()
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Heisenberg { n } => write!(f, "heisenberg:n={n}"),
            CatalogId::H3(g) => write!(
                f,
                "h3:{}",
                match g {
                    H3Metric::G1 => "g1",
                    H3Metric::G2 => "g2",
                    H3Metric::G3 => "g3",
                }
            ),
            CatalogId::Oscillator { m, lambdas, eps } => {
                write!(f, "oscillator:m={m},eps={eps}")?;
                if *lambdas != default_lambdas(*m) {
                    let l: Vec<String> = lambdas.iter().map(ToString::to_string).collect();
                    write!(f, ",lambdas={}", l.join(";"))?;
                }
                Ok(())
            }
            CatalogId::EuclideanMotion => write!(f, "e2"),
            CatalogId::MinkowskiMotion => write!(f, "e11"),
            CatalogId::Remark44(p) => write!(
                f,
                "remark44:a={},at={},b={},c={},k={},lambda={}",
                p.a, p.a_tilde, p.b, p.c, p.k, p.lambda
            ),
        }
    }
}

impl FromStr for CatalogId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let bad = |reason: &str| CatalogError::BadArgument {
            id: s.to_string(),
            reason: reason.to_string(),
        };
        let mut args = std::collections::BTreeMap::new();
        let pairs = if kind == "h3" { "" } else { rest };
        for part in pairs.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            if args.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(bad("repeated key"));
            }
        }
        let take = |args: &mut std::collections::BTreeMap<String, String>, key: &str| args.remove(key);
        let rational = |v: &str| parse_rational(v).ok_or_else(|| bad(&format!("'{v}' is not a rational")));
        let id = match kind {
            "heisenberg" => {
                let n = take(&mut args, "n").ok_or_else(|| bad("missing n"))?;
                let n: usize = n.parse().map_err(|_| bad("n must be a positive integer"))?;
                CatalogId::Heisenberg { n }
            }
            "h3" => {
                let g = match rest {
                    "g1" => H3Metric::G1,
                    "g2" => H3Metric::G2,
                    "g3" => H3Metric::G3,
                    _ => return Err(bad("expected g1, g2 or g3")),
                };
                return Ok(CatalogId::H3(g));
            }
            "oscillator" => {
                let m = take(&mut args, "m").ok_or_else(|| bad("missing m"))?;
                let m: usize = m.parse().map_err(|_| bad("m must be a positive integer"))?;
                let eps = match take(&mut args, "eps") {
                    Some(v) => rational(&v)?,
                    None => int(0),
                };
                let lambdas = match take(&mut args, "lambdas") {
                    Some(v) => v.split(';').map(|x| rational(x)).collect::<Result<_, _>>()?,
                    None => default_lambdas(m),
                };
                CatalogId::Oscillator { m, lambdas, eps }
            }
            "e2" => CatalogId::EuclideanMotion,
            "e11" => CatalogId::MinkowskiMotion,
            "remark44" => {
                let mut get = |key: &str| -> Result<Rational, CatalogError> {
                    match take(&mut args, key) {
                        Some(v) => rational(&v),
                        None => Err(bad(&format!("missing {key}"))),
                    }
                };
                CatalogId::Remark44(Remark44Params {
                    a: get("a")?,
                    a_tilde: get("at")?,
                    b: get("b")?,
                    c: get("c")?,
                    k: get("k")?,
                    lambda: get("lambda")?,
                })
            }
            _ => return Err(CatalogError::UnknownId(s.to_string())),
        };
        if let Some(k) = args.keys().next() {
            return Err(bad(&format!("unexpected key '{k}'")));
        }
        Ok(id)
    }
}

/// A constructed catalog entry. For extension entries `metric` is the
/// extended (parameterized) metric and `extension` holds the full spec.
#[derive(Debug, Clone)]
pub struct CatalogItem {
    pub id: CatalogId,
    pub metric: MetricLieAlgebra,
    pub extension: Option<ExtensionSpec>,
}

pub fn build(id: &CatalogId) -> Result<CatalogItem, CatalogError> {
    let (metric, extension) = match id {
        CatalogId::Heisenberg { n } => (heisenberg(*n)?, None),
        CatalogId::H3(g) => (h3_metric(*g)?, None),
        CatalogId::Oscillator { m, lambdas, eps } => (oscillator(*m, lambdas, eps)?, None),
        CatalogId::EuclideanMotion => (euclidean_motion()?, None),
        CatalogId::MinkowskiMotion => (minkowski_motion()?, None),
        CatalogId::Remark44(p) => {
            let ext = remark44_extension(p, "h")?;
            (ext.result.clone(), Some(ext))
        }
    };
    Ok(CatalogItem {
        id: id.clone(),
        metric,
        extension,
    })
}

pub fn lookup(id: &str) -> Result<CatalogItem, CatalogError> {
    build(&id.parse()?)
}

fn names(prefix: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn rational_diag(v: Vec<Rational>) -> Matrix<Rational> {
    Matrix::diagonal(v)
}

/// Heisenberg algebra of dimension `2n + 1`: `[F_i, F_{i+n}] = F_N`, with the
/// Lorentzian metric `diag(1, ..., 1, -1)`.
pub fn heisenberg(n: usize) -> Result<MetricLieAlgebra, CatalogError> {
    if n < 1 {
        return Err(CatalogError::BadArgument {
            id: format!("heisenberg:n={n}"),
            reason: "n must be at least 1".into(),
        });
    }
    let dim = 2 * n + 1;
    let brackets: Vec<Bracket> = (0..n)
        .map(|i| Bracket::new(i, i + n, vec![(dim - 1, int(1))]))
        .collect();
    let a = LieAlgebra::with_names(names("F", 1..=dim), &brackets)?;
    let mut g = vec![int(1); dim];
    g[dim - 1] = int(-1);
    Ok(MetricLieAlgebra::with_rational_metric(a, &rational_diag(g))?)
}

fn h3_frame() -> Result<LieAlgebra, CatalogError> {
    Ok(LieAlgebra::with_names(
        names("F", 1..=3),
        &[Bracket::new(1, 2, vec![(0, int(1))])],
    )?)
}

/// The three Lorentzian metric types on the three-dimensional Heisenberg
/// algebra, in left-invariant frames. `g2` uses the basis of
/// [`heisenberg`] with `n = 1` (center last and timelike).
pub fn h3_metric(which: H3Metric) -> Result<MetricLieAlgebra, CatalogError> {
    match which {
        H3Metric::G1 => Ok(MetricLieAlgebra::with_rational_metric(
            h3_frame()?,
            &rational_diag(vec![int(1), int(1), int(-1)]),
        )?),
        H3Metric::G2 => heisenberg(1),
        H3Metric::G3 => {
            // (θ³)² − (θ²)² + 2θ¹θ² in the frame where [F2, F3] = F1
            let g = Matrix::from_rows(vec![
                vec![int(0), int(1), int(0)],
                vec![int(1), int(-1), int(0)],
                vec![int(0), int(0), int(1)],
            ])
            .expect("3x3");
            Ok(MetricLieAlgebra::with_rational_metric(h3_frame()?, &g)?)
        }
    }
}

/// Oscillator algebra on `(P, X_1..X_m, Y_1..Y_m, Q)` with
/// `[X_i, Y_i] = P`, `[Q, X_j] = λ_j Y_j`, `[Q, Y_j] = -λ_j X_j`.
///
/// Metric: `g(P,P) = ε`, `g(P,Q) = 1`, `g(X_i,X_i) = g(Y_i,Y_i) = 1`, and
/// `g(Q,Q) = ε` except for `ε = ±1` where that block would be singular and
/// `g(Q,Q) = 0` is used. Connection and Ricci tensor do not depend on
/// `g(Q,Q)`.
pub fn oscillator(m: usize, lambdas: &[Rational], eps: &Rational) -> Result<MetricLieAlgebra, CatalogError> {
    let qq = if (eps * eps).is_one() { int(0) } else { eps.clone() };
    oscillator_with_qq(m, lambdas, eps, &qq)
}

/// [`oscillator`] with an explicit `g(Q, Q)`.
pub fn oscillator_with_qq(
    m: usize,
    lambdas: &[Rational],
    eps: &Rational,
    qq: &Rational,
) -> Result<MetricLieAlgebra, CatalogError> {
    let id = || format!("oscillator:m={m},eps={eps}");
    if m < 1 {
        return Err(CatalogError::BadArgument {
            id: id(),
            reason: "m must be at least 1".into(),
        });
    }
    if lambdas.len() != m {
        return Err(CatalogError::BadArgument {
            id: id(),
            reason: format!("expected {m} frequencies, found {}", lambdas.len()),
        });
    }
    if lambdas.iter().any(|l| !num_traits::Signed::is_positive(l)) {
        return Err(CatalogError::BadArgument {
            id: id(),
            reason: "frequencies must be positive".into(),
        });
    }
    let dim = 2 * m + 2;
    let (p, q) = (0, dim - 1);
    let x = |j: usize| 1 + j;
    let y = |j: usize| 1 + m + j;
    let mut brackets = Vec::new();
    for j in 0..m {
        brackets.push(Bracket::new(x(j), y(j), vec![(p, int(1))]));
        brackets.push(Bracket::new(q, x(j), vec![(y(j), lambdas[j].clone())]));
        brackets.push(Bracket::new(q, y(j), vec![(x(j), -lambdas[j].clone())]));
    }
    let mut labels = vec!["P".to_string()];
    labels.extend(names("X", 1..=m));
    labels.extend(names("Y", 1..=m));
    labels.push("Q".into());
    let a = LieAlgebra::with_names(labels, &brackets)?;
    let mut g = Matrix::<Rational>::identity(dim);
    g[(p, p)] = eps.clone();
    g[(q, q)] = qq.clone();
    g[(p, q)] = int(1);
    g[(q, p)] = int(1);
    Ok(MetricLieAlgebra::with_rational_metric(a, &g)?)
}

/// E(2): `[F1, F2] = F3`, `[F3, F1] = F2`, metric `diag(1, 1, -1)`.
pub fn euclidean_motion() -> Result<MetricLieAlgebra, CatalogError> {
    let a = LieAlgebra::with_names(
        names("F", 1..=3),
        &[
            Bracket::new(0, 1, vec![(2, int(1))]),
            Bracket::new(2, 0, vec![(1, int(1))]),
        ],
    )?;
    Ok(MetricLieAlgebra::with_rational_metric(a, &rational_diag(vec![int(1), int(1), int(-1)]))?)
}

/// E(1,1): `[F1, F2] = F3`, `[F3, F1] = -F2`, metric `diag(-1, 1, 1)`.
pub fn minkowski_motion() -> Result<MetricLieAlgebra, CatalogError> {
    let a = LieAlgebra::with_names(
        names("F", 1..=3),
        &[
            Bracket::new(0, 1, vec![(2, int(1))]),
            Bracket::new(2, 0, vec![(1, int(-1))]),
        ],
    )?;
    Ok(MetricLieAlgebra::with_rational_metric(a, &rational_diag(vec![int(-1), int(1), int(1)]))?)
}

/// Derivation of the `m = 1` oscillator algebra on `(P, X, Y, Q)`:
/// `DP = 2bP`, `DX = aP + bX + cY`, `DY = ãP - cX + bY`,
/// `DQ = kP - λaX - λãY`.
pub fn remark44_derivation(p: &Remark44Params) -> Matrix<Rational> {
    let mut d = Matrix::<Rational>::zeros(4, 4);
    let (ip, ix, iy, iq) = (0, 1, 2, 3);
    d[(ip, ip)] = int(2) * &p.b;
    d[(ip, ix)] = p.a.clone();
    d[(ix, ix)] = p.b.clone();
    d[(iy, ix)] = p.c.clone();
    d[(ip, iy)] = p.a_tilde.clone();
    d[(ix, iy)] = -p.c.clone();
    d[(iy, iy)] = p.b.clone();
    d[(ip, iq)] = p.k.clone();
    d[(ix, iq)] = -(&p.lambda * &p.a);
    d[(iy, iq)] = -(&p.lambda * &p.a_tilde);
    d
}

/// Five-dimensional extension of the `m = 1`, `ε = 0` oscillator by
/// [`remark44_derivation`], with `g(H, H)` the parameter.
pub fn remark44_extension(p: &Remark44Params, param: &str) -> Result<ExtensionSpec, CatalogError> {
    let base = oscillator(1, std::slice::from_ref(&p.lambda), &int(0))?;
    Ok(build_solvable_extension(&base, &remark44_derivation(p), param)?)
}

/// Entries exercised by `verify-all`, sorted by id.
pub fn default_entries() -> Vec<CatalogId> {
    let mut ids: Vec<CatalogId> = (1..=5).map(|n| CatalogId::Heisenberg { n }).collect();
    ids.extend([H3Metric::G1, H3Metric::G2, H3Metric::G3].map(CatalogId::H3));
    for (m, eps) in [(1, int(0)), (2, int(0)), (1, int(1)), (1, int(-1)), (1, rat(1, 2))] {
        ids.push(CatalogId::Oscillator {
            m,
            lambdas: default_lambdas(m),
            eps,
        });
    }
    ids.push(CatalogId::EuclideanMotion);
    ids.push(CatalogId::MinkowskiMotion);
    ids.push(CatalogId::Remark44(Remark44Params {
        a: int(0),
        a_tilde: int(0),
        b: int(1),
        c: int(0),
        k: int(1),
        lambda: int(1),
    }));
    ids.push(CatalogId::Remark44(Remark44Params {
        a: int(1),
        a_tilde: int(1),
        b: int(0),
        c: int(0),
        k: int(0),
        lambda: int(2),
    }));
    ids.sort_by_key(|id| id.to_string());
    ids
}

/// What a single expectation asserts.
#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    /// Listed `nabla_{e_i} e_j` values; every other entry vanishes.
    Connection(Vec<((usize, usize), Vec<Rational>)>),
    Ricci(Matrix<Rational>),
    RicciOperator(Matrix<Rational>),
    Structure(StructureClass),
    Soliton {
        c: Rational,
        d: Matrix<Rational>,
        class: SolitonClass,
    },
    /// Trace of the soliton derivation.
    SolitonTrace(Rational),
    NoSoliton,
    /// `Ric = c g + L_{X_D} g` for the solved soliton.
    SolitonIdentity,
    Flat,
    EinsteinConstant(Option<Rational>),
    /// Extension by `derivation` (the solved soliton derivation when
    /// `None`), parameter `param`.
    ExtensionSolutions {
        param: &'static str,
        derivation: Option<Matrix<Rational>>,
        solutions: Vec<(Rational, Rational)>,
    },
    /// Informational: a published value compared with the engine but not
    /// asserted.
    Claim {
        quantity: Quantity,
        claimed: Rational,
    },
    /// Listed Ricci entries (i <= j) of the extension, as scalar expressions
    /// in the extension parameter; every other entry vanishes.
    ExtensionRicci {
        param: &'static str,
        entries: Vec<((usize, usize), String)>,
    },
    /// Listed components of `R(e_i, e_j) e_k` on the extension.
    ExtensionCurvature {
        param: &'static str,
        entries: Vec<((usize, usize, usize), Vec<Rational>)>,
    },
    /// Informational: the engine's own Einstein verdict for an extension
    /// entry. Never fails once computed.
    EinsteinVerdict,
}

/// A single diagonal quantity named by a [`Check::Claim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Ricci(usize),
    RicciOperator(usize),
    SolitonC,
    SolitonD(usize),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Ricci(i) => write!(f, "Ric[{0}][{0}]", i + 1),
            Quantity::RicciOperator(i) => write!(f, "rc[{0}][{0}]", i + 1),
            Quantity::SolitonC => write!(f, "c"),
            Quantity::SolitonD(i) => write!(f, "D[{0}][{0}]", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expectation {
    pub label: &'static str,
    pub citation: &'static str,
    pub check: Check,
}

fn expect(label: &'static str, citation: &'static str, check: Check) -> Expectation {
    Expectation {
        label,
        citation,
        check,
    }
}

fn unit(dim: usize, i: usize, v: Rational) -> Vec<Rational> {
    let mut out = vec![int(0); dim];
    out[i] = v;
    out
}

pub fn expectations(id: &CatalogId) -> Vec<Expectation> {
    match id {
        CatalogId::Heisenberg { n } => heisenberg_expectations(*n),
        CatalogId::H3(H3Metric::G1) => h3_g1_expectations(),
        CatalogId::H3(H3Metric::G2) => vec![
            expect("structure", "H_3 metrics g_1, g_2 are nilsolitons", Check::Structure(StructureClass::Nilpotent)),
            expect(
                "soliton",
                "H_3: g_2 is a shrinking nilsoliton, c = 2n - 1/2 at n = 1",
                Check::Soliton {
                    c: rat(3, 2),
                    d: rational_diag(vec![int(-1), int(-1), int(-2)]),
                    class: SolitonClass::Shrinking,
                },
            ),
            expect("einstein", "H_3: g_2 is not Einstein (corrected claim)", Check::EinsteinConstant(None)),
            expect("ricci-soliton-identity", "algebraic Ricci solitons are Ricci solitons", Check::SolitonIdentity),
        ],
        CatalogId::H3(H3Metric::G3) => vec![
            expect("flat", "H_3: g_3 is flat (Nomizu)", Check::Flat),
            expect("einstein", "flat implies Ricci-flat", Check::EinsteinConstant(Some(int(0)))),
            expect("ricci", "flat implies Ricci-flat", Check::Ricci(Matrix::zeros(3, 3))),
        ],
        CatalogId::Oscillator { m, lambdas, eps } => oscillator_expectations(*m, lambdas, eps),
        CatalogId::EuclideanMotion => motion_expectations(int(2)),
        CatalogId::MinkowskiMotion => motion_expectations(int(-2)),
        CatalogId::Remark44(_) => vec![
            expect(
                "derivation",
                "oscillator extension by a derivation (m = 1)",
                Check::Structure(StructureClass::Solvable),
            ),
            expect("einstein-verdict", "oscillator extension Einstein conditions (engine verdict)", Check::EinsteinVerdict),
        ],
    }
}

fn heisenberg_expectations(n: usize) -> Vec<Expectation> {
    let dim = 2 * n + 1;
    let nn = int(n as i64);
    let time = &nn / int(2);
    // engine closed forms; the published n-dependent values agree at n = 1
    let space = rat(1, 2);
    let d_space = -(&nn + int(1)) / int(2);
    let c = (&nn + int(2)) / int(2);
    let mut ric = vec![space.clone(); dim];
    ric[dim - 1] = time.clone();
    let mut rc = vec![space; dim];
    rc[dim - 1] = -time.clone();
    let mut d = vec![d_space.clone(); dim];
    d[dim - 1] = int(2) * &d_space;
    let lambda = &nn / int(2) + int(1);

    let b = (int(1) - int(5) * &nn) / int(4);
    let mut d_published = vec![b.clone(); dim];
    d_published[dim - 1] = int(2) * &b;
    let published_space = (int(3) * &nn - int(1)) / int(4);
    let published_c = int(2) * &nn - rat(1, 2);
    vec![
        expect("structure", "Heisenberg algebra is nilpotent", Check::Structure(StructureClass::Nilpotent)),
        expect(
            "ricci",
            "Heisenberg g_2: Ric(F_N,F_N) = n/2; spacelike entries 1/2",
            Check::Ricci(rational_diag(ric)),
        ),
        expect(
            "ricci-operator",
            "Heisenberg g_2: Ricci operator diag(1/2 I, -n/2)",
            Check::RicciOperator(rational_diag(rc)),
        ),
        expect(
            "soliton",
            "Heisenberg g_2 is a nilsoliton: c = (n+2)/2, D^i_i = -(n+1)/2",
            Check::Soliton {
                c,
                d: rational_diag(d.clone()),
                class: SolitonClass::Shrinking,
            },
        ),
        expect("ricci-soliton-identity", "algebraic Ricci solitons are Ricci solitons", Check::SolitonIdentity),
        expect(
            "claim-ricci",
            "Heisenberg g_2: published Ric(F_i,F_i) = 3n/4 - 1/4",
            Check::Claim {
                quantity: Quantity::Ricci(0),
                claimed: published_space.clone(),
            },
        ),
        expect(
            "claim-ricci-operator",
            "Heisenberg g_2: published rc = diag((3n-1)/4 I, -n/2)",
            Check::Claim {
                quantity: Quantity::RicciOperator(0),
                claimed: published_space,
            },
        ),
        expect(
            "claim-soliton-c",
            "Heisenberg g_2: published c = 2n - 1/2",
            Check::Claim {
                quantity: Quantity::SolitonC,
                claimed: published_c,
            },
        ),
        expect(
            "claim-soliton-d",
            "Heisenberg g_2: published D^i_i = -5n/4 + 1/4",
            Check::Claim {
                quantity: Quantity::SolitonD(0),
                claimed: b.clone(),
            },
        ),
        expect(
            "extension-einstein",
            "Heisenberg extension by D = diag(b I, 2b), b = -5n/4 + 1/4: Einstein iff a = -4b^2, constant n/2 + 1",
            Check::ExtensionSolutions {
                param: "a",
                derivation: Some(rational_diag(d_published)),
                solutions: vec![(int(-4) * &b * &b, lambda.clone())],
            },
        ),
        expect(
            "extension-einstein-soliton",
            "Heisenberg extension by the soliton derivation: Einstein iff a = -4b^2, constant n/2 + 1",
            Check::ExtensionSolutions {
                param: "a",
                derivation: None,
                solutions: vec![(int(-4) * &d_space * &d_space, lambda)],
            },
        ),
    ]
}

fn h3_g1_expectations() -> Vec<Expectation> {
    let h = rat(1, 2);
    let e = |i: usize, s: Rational| unit(3, i, s);
    vec![
        expect("structure", "H_3 metrics g_1, g_2 are nilsolitons", Check::Structure(StructureClass::Nilpotent)),
        expect(
            "connection",
            "H_3 g_1: Levi-Civita connection table",
            Check::Connection(vec![
                ((0, 1), e(2, h.clone())),
                ((0, 2), e(1, h.clone())),
                ((1, 0), e(2, h.clone())),
                ((1, 2), e(0, h.clone())),
                ((2, 0), e(1, h.clone())),
                ((2, 1), e(0, -h.clone())),
            ]),
        ),
        expect(
            "ricci",
            "H_3 g_1: Ric(F1,F1) = -1/2, Ric(F2,F2) = 1/2, Ric(F3,F3) = -1/2",
            Check::Ricci(rational_diag(vec![rat(-1, 2), rat(1, 2), rat(-1, 2)])),
        ),
        expect(
            "ricci-operator",
            "H_3 g_1: Ricci operator (1/2) diag(-1, 1, 1)",
            Check::RicciOperator(rational_diag(vec![rat(-1, 2), rat(1, 2), rat(1, 2)])),
        ),
        expect("einstein", "H_3: g_1 is not Einstein", Check::EinsteinConstant(None)),
        expect(
            "soliton",
            "H_3 g_1 nilsoliton: c = 3/2, a^2_2 = a^3_3 = -1; shrinking",
            Check::Soliton {
                c: rat(3, 2),
                d: rational_diag(vec![int(-2), int(-1), int(-1)]),
                class: SolitonClass::Shrinking,
            },
        ),
        expect("ricci-soliton-identity", "algebraic Ricci solitons are Ricci solitons", Check::SolitonIdentity),
        expect(
            "extension-ricci",
            "H_3 g_1 extension: Ric(H,H) = -6, Ric(F1,F1) = -8/h - 1/2, Ric(F2,F2) = -Ric(F3,F3) = -4/h + 1/2",
            Check::ExtensionRicci {
                param: "h",
                entries: vec![
                    ((0, 0), "-6".into()),
                    ((1, 1), "-8/h - 1/2".into()),
                    ((2, 2), "-4/h + 1/2".into()),
                    ((3, 3), "4/h - 1/2".into()),
                ],
            },
        ),
        expect(
            "extension-einstein",
            "H_3 g_1 extension Einstein iff h = -4, constant 3/2",
            Check::ExtensionSolutions {
                param: "h",
                derivation: None,
                solutions: vec![(int(-4), rat(3, 2))],
            },
        ),
    ]
}

fn oscillator_expectations(m: usize, lambdas: &[Rational], eps: &Rational) -> Vec<Expectation> {
    let dim = 2 * m + 2;
    let (p, q) = (0, dim - 1);
    let x = |j: usize| 1 + j;
    let y = |j: usize| 1 + m + j;
    let mm = int(m as i64);
    let half = rat(1, 2);

    let mut conn = Vec::new();
    for j in 0..m {
        let shift = &lambdas[j] - &half;
        if !eps.is_zero() {
            conn.push(((p, x(j)), unit(dim, y(j), -(eps * &half))));
            conn.push(((x(j), p), unit(dim, y(j), -(eps * &half))));
            conn.push(((p, y(j)), unit(dim, x(j), eps * &half)));
            conn.push(((y(j), p), unit(dim, x(j), eps * &half)));
        }
        conn.push(((x(j), q), unit(dim, y(j), -half.clone())));
        conn.push(((y(j), q), unit(dim, x(j), half.clone())));
        if !shift.is_zero() {
            conn.push(((q, x(j)), unit(dim, y(j), shift.clone())));
            conn.push(((q, y(j)), unit(dim, x(j), -shift)));
        }
        conn.push(((x(j), y(j)), unit(dim, p, half.clone())));
        conn.push(((y(j), x(j)), unit(dim, p, -half.clone())));
    }

    let mut ric = Matrix::<Rational>::zeros(dim, dim);
    ric[(p, p)] = eps * eps * &mm / int(2);
    ric[(p, q)] = eps * &mm / int(2);
    ric[(q, p)] = eps * &mm / int(2);
    ric[(q, q)] = &mm / int(2);
    for j in 0..m {
        ric[(x(j), x(j))] = -(eps / int(2));
        ric[(y(j), y(j))] = -(eps / int(2));
    }
    let mut rc = Matrix::<Rational>::zeros(dim, dim);
    rc[(p, p)] = eps * &mm / int(2);
    rc[(p, q)] = &mm / int(2);
    for j in 0..m {
        rc[(x(j), x(j))] = -(eps / int(2));
        rc[(y(j), y(j))] = -(eps / int(2));
    }

    let mut out = vec![
        expect(
            "structure",
            "oscillator algebra is solvable and not nilpotent",
            Check::Structure(StructureClass::Solvable),
        ),
        expect("connection", "oscillator g_eps: Levi-Civita connection table", Check::Connection(conn)),
        expect("ricci", "oscillator g_eps: Ricci tensor list", Check::Ricci(ric)),
        expect("ricci-operator", "oscillator g_eps: Ricci operator", Check::RicciOperator(rc)),
    ];
    if eps.is_zero() {
        let mut d = Matrix::<Rational>::zeros(dim, dim);
        d[(p, q)] = &mm / int(2);
        // extension basis is (H, P, X.., Y.., Q)
        let (ep, eq) = (p + 1, q + 1);
        let mut curv = Vec::new();
        let ext_dim = dim + 1;
        for j in 0..m {
            let (ex, ey) = (x(j) + 1, y(j) + 1);
            curv.push(((ex, eq, eq), unit(ext_dim, ex, rat(1, 4))));
            curv.push(((ey, eq, eq), unit(ext_dim, ey, rat(1, 4))));
            curv.push(((eq, ex, ex), unit(ext_dim, ep, rat(1, 4))));
            curv.push(((eq, ey, ey), unit(ext_dim, ep, rat(1, 4))));
        }
        out.extend([
            expect(
                "soliton",
                "oscillator: g_0 is a steady solvsoliton, mu = m/2",
                Check::Soliton {
                    c: int(0),
                    d,
                    class: SolitonClass::Steady,
                },
            ),
            expect("soliton-trace", "solvsoliton with c = 0 and tr D = 0", Check::SolitonTrace(int(0))),
            expect("ricci-soliton-identity", "algebraic Ricci solitons are Ricci solitons", Check::SolitonIdentity),
            expect(
                "extension-ricci",
                "oscillator extension: Ricci vanishes except Ric(Q,Q) = m/2",
                Check::ExtensionRicci {
                    param: "h",
                    entries: vec![((eq, eq), (&mm / int(2)).to_string())],
                },
            ),
            expect(
                "extension-curvature",
                "oscillator extension: R(X_i,Q)Q = X_i/4, R(Q,X_i)X_i = P/4",
                Check::ExtensionCurvature {
                    param: "h",
                    entries: curv,
                },
            ),
            expect(
                "extension-einstein",
                "oscillator extension is not Einstein",
                Check::ExtensionSolutions {
                    param: "h",
                    derivation: None,
                    solutions: vec![],
                },
            ),
        ]);
    } else {
        out.push(expect(
            "no-soliton",
            "oscillator: soliton equation forces eps = c = 0",
            Check::NoSoliton,
        ));
    }
    out
}

fn motion_expectations(ric11: Rational) -> Vec<Expectation> {
    let (e2, cite_ric, cite_ext) = if ric11 == int(2) {
        (
            true,
            "E(2): Ricci vanishes except Ric(F1,F1) = 2",
            "E(2) extension Einstein iff h = -4, constant 2",
        )
    } else {
        (
            false,
            "E(1,1): Ricci vanishes except Ric(F1,F1) = -2",
            "E(1,1) extension Einstein iff h = -4, constant 2",
        )
    };
    let mut ric = Matrix::<Rational>::zeros(3, 3);
    ric[(0, 0)] = ric11;
    let mut rc = Matrix::<Rational>::zeros(3, 3);
    rc[(0, 0)] = int(2);
    let mut out = vec![
        expect("structure", "rigid-motion algebras are solvable", Check::Structure(StructureClass::Solvable)),
        expect("ricci", cite_ric, Check::Ricci(ric)),
        expect("ricci-operator", "Ricci operator diag(2, 0, 0)", Check::RicciOperator(rc)),
        expect(
            "soliton",
            "solvsoliton: c = 2, a^2_2 = a^3_3 = -2",
            Check::Soliton {
                c: int(2),
                d: rational_diag(vec![int(0), int(-2), int(-2)]),
                class: SolitonClass::Shrinking,
            },
        ),
        expect("ricci-soliton-identity", "algebraic Ricci solitons are Ricci solitons", Check::SolitonIdentity),
        expect(
            "extension-einstein",
            cite_ext,
            Check::ExtensionSolutions {
                param: "h",
                derivation: None,
                solutions: vec![(int(-4), int(2))],
            },
        ),
    ];
    if !e2 {
        out.push(expect(
            "extension-ricci",
            "E(1,1) extension: Ric(H,H) = -8, Ric(F1,F1) = -2, Ric(F2,F2) = Ric(F3,F3) = -8/h",
            Check::ExtensionRicci {
                param: "h",
                entries: vec![
                    ((0, 0), "-8".into()),
                    ((1, 1), "-2".into()),
                    ((2, 2), "-8/h".into()),
                    ((3, 3), "-8/h".into()),
                ],
            },
        ));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: String,
    pub label: &'static str,
    pub citation: &'static str,
    pub status: Status,
    pub detail: String,
}

/// Lazily computed results shared by the expectations of one entry.
type ExtensionKey = (&'static str, Option<Matrix<Rational>>);
type ExtensionCacheEntry = (ExtensionKey, Result<(ExtensionSpec, EinsteinSolve), CatalogError>);

struct Computed<'a> {
    item: &'a CatalogItem,
    ricci: OnceCell<RicciData>,
    soliton: OnceCell<Result<Option<SolitonSolution>, SolitonError>>,
    extensions: std::cell::RefCell<Vec<ExtensionCacheEntry>>,
}

impl<'a> Computed<'a> {
    fn ricci(&self) -> &RicciData {
        self.ricci.get_or_init(|| ricci(&self.item.metric))
    }

    fn soliton(&self) -> Result<Option<&SolitonSolution>, CatalogError> {
        match self.soliton.get_or_init(|| solve_algebraic_soliton(&self.item.metric)) {
            Ok(s) => Ok(s.as_ref()),
            Err(e) => Err(e.clone().into()),
        }
    }

    fn extension(&self, param: &'static str) -> Result<(ExtensionSpec, EinsteinSolve), CatalogError> {
        self.extension_by(param, None)
    }

    fn extension_by(
        &self,
        param: &'static str,
        derivation: Option<&Matrix<Rational>>,
    ) -> Result<(ExtensionSpec, EinsteinSolve), CatalogError> {
        let key = (param, derivation.cloned());
        if let Some((_, r)) = self.extensions.borrow().iter().find(|(k, _)| *k == key) {
            return r.clone();
        }
        let result = (|| {
            let ext = match (&self.item.extension, derivation) {
                (_, Some(d)) => build_solvable_extension(&self.item.metric, d, param)?,
                (Some(ext), None) => ext.clone(),
                (None, None) => {
                    let s = self.soliton()?.ok_or_else(|| CatalogError::BadArgument {
                        id: self.item.id.to_string(),
                        reason: "no soliton derivation to extend by".into(),
                    })?;
                    build_solvable_extension(&self.item.metric, &s.d, param)?
                }
            };
            let solve = einstein_parameter_solve(&ext)?;
            Ok((ext, solve))
        })();
        self.extensions.borrow_mut().push((key, result.clone()));
        result
    }
}

fn fmt_matrix(m: &Matrix<Rational>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_solutions(s: &[(Rational, Rational)], param: &str) -> String {
    if s.is_empty() {
        return "none".into();
    }
    s.iter()
        .map(|(h, l)| format!("{param} = {h}, lambda = {l}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn evaluate(check: &Check, ctx: &Computed<'_>) -> Result<(Status, String), CatalogError> {
    let m = &ctx.item.metric;
    let pass = |ok: bool, detail: String| (if ok { Status::Pass } else { Status::Fail }, detail);
    Ok(match check {
        Check::Connection(entries) => {
            let conn = levi_civita(m);
            let n = m.dim();
            let mut ok = true;
            for i in 0..n {
                for j in 0..n {
                    let expected: Vec<ParamScalar> = entries
                        .iter()
                        .find(|(idx, _)| *idx == (i, j))
                        .map(|(_, v)| v.iter().cloned().map(ParamScalar::from).collect())
                        .unwrap_or_else(|| vec![ParamScalar::zero(); n]);
                    ok &= conn.covariant(i, j) == expected.as_slice();
                }
            }
            pass(ok, format!("{} nonzero entries", entries.len()))
        }
        Check::Ricci(expected) => {
            let got = ctx.ricci().ric.to_rational().map_err(|_| GeometryError::Parameterized)?;
            pass(&got == expected, fmt_matrix(&got))
        }
        Check::RicciOperator(expected) => {
            let got = ctx.ricci().op.to_rational().map_err(|_| GeometryError::Parameterized)?;
            pass(&got == expected, fmt_matrix(&got))
        }
        Check::Structure(expected) => {
            let got = classify_structure(m.algebra());
            pass(got == *expected, got.to_string())
        }
        Check::Soliton { c, d, class } => match ctx.soliton()? {
            Some(s) => pass(
                &s.c == c && &s.d == d && s.class == *class && s.unique,
                format!("c = {}, D = {}, {}", s.c, fmt_matrix(&s.d), s.class),
            ),
            None => pass(false, "none".into()),
        },
        Check::SolitonTrace(expected) => match ctx.soliton()? {
            Some(s) => pass(&s.d.trace() == expected, format!("tr D = {}", s.d.trace())),
            None => pass(false, "none".into()),
        },
        Check::NoSoliton => match ctx.soliton()? {
            Some(s) => pass(false, format!("c = {}", s.c)),
            None => pass(true, "none".into()),
        },
        Check::SolitonIdentity => match ctx.soliton()? {
            Some(s) => {
                let ok = verify_ricci_soliton_identity(m, s)?;
                pass(ok, format!("Ric = {} g + L_X g", s.c))
            }
            None => pass(false, "none".into()),
        },
        Check::Flat => {
            let flat = is_flat(m);
            pass(flat, if flat { "flat".into() } else { "curved".into() })
        }
        Check::EinsteinConstant(expected) => {
            let got = einstein_constant(m)?;
            let detail = got.as_ref().map_or("not Einstein".into(), |l| format!("lambda = {l}"));
            pass(&got == expected, detail)
        }
        Check::ExtensionSolutions {
            param,
            derivation,
            solutions,
        } => {
            let (_, solve) = ctx.extension_by(param, derivation.as_ref())?;
            pass(&solve.solutions == solutions, fmt_solutions(&solve.solutions, param))
        }
        Check::ExtensionRicci { param, entries } => {
            let (ext, solve) = ctx.extension(param)?;
            let n = ext.result.dim();
            let mut ok = true;
            for r in 0..n {
                for c in r..n {
                    let expected = match entries.iter().find(|(idx, _)| *idx == (r, c)) {
                        Some((_, text)) => crate::exactmath::parse_scalar(text, Some(param))
                            .expect("catalog expression parses"),
                        None => ParamScalar::zero(),
                    };
                    ok &= solve.ricci[(r, c)] == expected;
                }
            }
            let listed: Vec<String> = entries
                .iter()
                .map(|((r, c), _)| format!("{}", solve.ricci[(*r, *c)].to_expr(param)))
                .collect();
            pass(ok, listed.join(", "))
        }
        Check::ExtensionCurvature { param, entries } => {
            let (ext, _) = ctx.extension(param)?;
            let r = curvature_tensor(&ext.result);
            let ok = entries.iter().all(|((i, j, k), v)| {
                let expected: Vec<ParamScalar> = v.iter().cloned().map(ParamScalar::from).collect();
                r.apply(*i, *j, *k) == expected.as_slice()
            });
            pass(ok, format!("{} components", entries.len()))
        }
        Check::Claim { quantity, claimed } => {
            let got = match quantity {
                Quantity::Ricci(i) => Some(ctx.ricci().ric[(*i, *i)].clone()),
                Quantity::RicciOperator(i) => Some(ctx.ricci().op[(*i, *i)].clone()),
                Quantity::SolitonC => ctx.soliton()?.map(|s| s.c.clone().into()),
                Quantity::SolitonD(i) => ctx.soliton()?.map(|s| s.d[(*i, *i)].clone().into()),
            };
            let got = got.and_then(|v| v.as_rational());
            let detail = match &got {
                Some(v) if v == claimed => format!("{quantity}: published {claimed}, engine agrees"),
                Some(v) => format!("{quantity}: published {claimed}, engine {v}"),
                None => format!("{quantity}: published {claimed}, engine has no value"),
            };
            (Status::Note, detail)
        }
        Check::EinsteinVerdict => {
            let (ext, solve) = ctx.extension("h")?;
            let detail = if solve.identically_einstein {
                "Einstein for every admissible h".to_string()
            } else {
                let mut s = format!("solutions: {}", fmt_solutions(&solve.solutions, &ext.param));
                if let Some(f) = &solve.irrational_factor {
                    s.push_str(&format!("; irrational roots of {}", f.to_expr(&ext.param)));
                }
                s
            };
            (Status::Note, detail)
        }
    })
}

/// Rebuild an entry and evaluate every expectation attached to it.
pub fn verify(id: &CatalogId) -> Vec<Outcome> {
    let key = id.to_string();
    let item = match build(id) {
        Ok(item) => item,
        Err(e) => {
            return vec![Outcome {
                id: key,
                label: "build",
                citation: "catalog constructor",
                status: Status::Fail,
                detail: e.to_string(),
            }]
        }
    };
    let ctx = Computed {
        item: &item,
        ricci: OnceCell::new(),
        soliton: OnceCell::new(),
        extensions: Default::default(),
    };
    expectations(id)
        .into_iter()
        .map(|e| {
            let (status, detail) = evaluate(&e.check, &ctx).unwrap_or_else(|err| (Status::Fail, err.to_string()));
            Outcome {
                id: key.clone(),
                label: e.label,
                citation: e.citation,
                status,
                detail,
            }
        })
        .collect()
}
