//! `rsoliton`: load a metric Lie algebra from a file or the catalog and run
//! one stage of the curvature/soliton pipeline on it.

pub mod document;

use clap::{Args, Parser, Subcommand, ValueEnum};
use document::{parse_matrix, InputDocument};
use rayon::prelude::*;
use ricci_soliton::catalog::{self, CatalogId, Outcome, Status};
use ricci_soliton::exactmath::{parse_rational, Matrix, ParamScalar, Rational};
use ricci_soliton::extension::{build_solvable_extension, einstein_parameter_solve_metric, EinsteinSolve};
use ricci_soliton::flow::{self, FloatMetricState, TrajectoryRecord};
use ricci_soliton::geometry::{self, curvature_tensor, levi_civita, ricci, MetricLieAlgebra};
use ricci_soliton::liealg::{classify_structure, derivation_basis};
use ricci_soliton::soliton::solve_algebraic_soliton;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "rsoliton", version, about = "Exact curvature and Ricci solitons of left-invariant metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an input and print its basic invariants.
    Validate(Common),
    /// Levi-Civita connection table.
    Connection(Common),
    /// Nonzero components R(e_i, e_j) e_k.
    Curvature(Common),
    /// Ricci tensor, Ricci operator and scalar curvature.
    Ricci(Common),
    /// Basis of the derivation algebra.
    Derivations(Common),
    /// Solve rc = c I + D with D a derivation.
    Soliton(Common),
    /// Metric solvable extension, written as an input document.
    Extend(ExtendArgs),
    /// Parameter values making an extension Einstein.
    EinsteinSolve(ExtendArgs),
    /// Integrate the Ricci flow and emit JSON lines {t, g, residual}.
    Flow(FlowArgs),
    /// Catalog ids and their expectations.
    CatalogList(ListArgs),
    /// Check every catalog expectation.
    VerifyAll(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Input document (JSON).
    #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
    pub input: Option<PathBuf>,
    /// Catalog id, e.g. h3:g1.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Substitute a value for the metric parameter, e.g. h=-4.
    #[arg(long, value_parser = parse_param)]
    pub param: Option<(String, Rational)>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtendBy {
    Soliton,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub common: Common,
    /// Extend by the derivation of the solved soliton.
    #[arg(long, value_enum, conflicts_with = "derivation")]
    pub extend: Option<ExtendBy>,
    /// Extend by the derivation in this file (rows of scalar strings).
    #[arg(long)]
    pub derivation: Option<PathBuf>,
    /// Name of the g(H, H) parameter.
    #[arg(long, default_value = "h")]
    pub ext_param: String,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0.1)]
    pub t_end: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub dt: f64,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Only this catalog entry.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Omit the timestamp header.
    #[arg(long)]
    pub no_header: bool,
    #[command(flatten)]
    pub output: Output,
}

fn parse_param(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=RATIONAL")?;
    let value = parse_rational(value.trim()).ok_or_else(|| format!("'{}' is not a rational", value.trim()))?;
    Ok((name.trim().to_string(), value))
}

/// Errors that end a command. All map to exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Document {
        path: String,
        source: document::DocumentError,
    },
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Run with the given arguments (including the program name). Returns the
/// exit status: 0 success, 1 failed expectations, 2 input errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, code, out)) => match emit(&report, out.as_ref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn emit(report: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, report)?,
        None => stdout.write_all(report.as_bytes())?,
    }
    Ok(())
}

/// Metric to work on, and its label for report headers.
struct Source {
    label: String,
    metric: MetricLieAlgebra,
}

fn load(common: &Common) -> Result<Source, CliError> {
    let (label, metric) = match (&common.input, &common.catalog) {
        (Some(path), _) => {
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: shown.clone(),
                source,
            })?;
            let doc = |source| CliError::Document {
                path: shown.clone(),
                source,
            };
            let m = InputDocument::from_json(&text).and_then(|d| d.to_metric()).map_err(doc)?;
            (shown.clone(), m)
        }
        (None, Some(id)) => {
            let item = catalog::lookup(id).map_err(input_err)?;
            (item.id.to_string(), item.metric)
        }
        (None, None) => return Err(CliError::Input("one of --input or --catalog is required".into())),
    };
    let metric = match &common.param {
        None => metric,
        Some((name, value)) => match metric.param() {
            Some(p) if p == name => metric.instantiate(value).map_err(|e| input_err(format!("{name} = {value}: {e}")))?,
            Some(p) => return Err(CliError::Input(format!("unknown parameter '{name}' (the metric uses '{p}')"))),
            None => return Err(CliError::Input(format!("unknown parameter '{name}' (the metric has none)"))),
        },
    };
    Ok(Source { label, metric })
}

fn require_constant(src: &Source) -> Result<(), CliError> {
    match src.metric.param() {
        Some(p) => Err(CliError::Input(format!(
            "metric depends on '{p}'; pass --param {p}=VALUE"
        ))),
        None => Ok(()),
    }
}

fn expr(s: &ParamScalar, m: &MetricLieAlgebra) -> String {
    s.to_expr(m.param().unwrap_or("h"))
}

fn flat(m: &Matrix<Rational>) -> Vec<String> {
    m.data().iter().map(ToString::to_string).collect()
}

fn flat_expr(x: &Matrix<ParamScalar>, m: &MetricLieAlgebra) -> Vec<String> {
    x.data().iter().map(|s| expr(s, m)).collect()
}

fn rows_text(entries: &[String], n: usize) -> String {
    entries
        .chunks(n)
        .map(|r| format!("  [{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report serializes");
    s.push('\n');
    s
}

/// Linear combination `sum v_k e_k` as text.
fn combination(values: &[String], names: &[String]) -> String {
    let terms: Vec<String> = values
        .iter()
        .zip(names)
        .filter(|(v, _)| v.as_str() != "0")
        .map(|(v, name)| match v.as_str() {
            "1" => name.clone(),
            "-1" => format!("-{name}"),
            v if v.contains(['+', ' ']) || v[1..].contains('-') => format!("({v}) {name}"),
            v => format!("{v} {name}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

type Executed = (String, i32, Option<PathBuf>);

fn execute(cmd: &Command) -> Result<Executed, CliError> {
    match cmd {
        Command::Validate(c) => common(c, validate),
        Command::Connection(c) => common(c, connection),
        Command::Curvature(c) => common(c, curvature),
        Command::Ricci(c) => common(c, ricci_report),
        Command::Derivations(c) => common(c, derivations),
        Command::Soliton(c) => common(c, soliton),
        Command::Extend(a) => Ok((extend(a)?, 0, a.common.output.out.clone())),
        Command::EinsteinSolve(a) => Ok((einstein_solve(a)?, 0, a.common.output.out.clone())),
        Command::Flow(a) => Ok((flow_report(a)?, 0, a.common.output.out.clone())),
        Command::CatalogList(a) => Ok((catalog_list(a.output.format), 0, a.output.out.clone())),
        Command::VerifyAll(a) => {
            let (report, code) = verify_all(a)?;
            Ok((report, code, a.output.out.clone()))
        }
    }
}

fn common(c: &Common, f: fn(&Source, Format) -> Result<String, CliError>) -> Result<Executed, CliError> {
    let src = load(c)?;
    Ok((f(&src, c.output.format)?, 0, c.output.out.clone()))
}

#[derive(Serialize)]
struct SignatureJson {
    positive: usize,
    negative: usize,
}

#[derive(Serialize)]
struct ValidateJson {
    source: String,
    dim: usize,
    basis: Vec<String>,
    parameter: Option<String>,
    structure: String,
    signature: SignatureJson,
}

fn validate(src: &Source, format: Format) -> Result<String, CliError> {
    let m = &src.metric;
    let sig = geometry::signature(m);
    let report = ValidateJson {
        source: src.label.clone(),
        dim: m.dim(),
        basis: m.algebra().names().to_vec(),
        parameter: m.param().map(str::to_string),
        structure: classify_structure(m.algebra()).to_string(),
        signature: SignatureJson {
            positive: sig.positive,
            negative: sig.negative,
        },
    };
    Ok(match format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut s = format!(
                "{}: valid, dimension {}, basis {}\nstructure: {}\nsignature: ({}, {})",
                report.source,
                report.dim,
                report.basis.join(" "),
                report.structure,
                sig.positive,
                sig.negative
            );
            if let Some(p) = &report.parameter {
                s.push_str(&format!("\nparameter: {p}"));
            }
            s.push('\n');
            s
        }
    })
}

#[derive(Serialize)]
struct ConnectionJson {
    basis: Vec<String>,
    nabla: Vec<Vec<Vec<String>>>,
}

fn connection(src: &Source, format: Format) -> Result<String, CliError> {
    let m = &src.metric;
    let conn = levi_civita(m);
    let n = m.dim();
    let names = m.algebra().names();
    let nabla: Vec<Vec<Vec<String>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| conn.covariant(i, j).iter().map(|s| expr(s, m)).collect())
                .collect()
        })
        .collect();
    Ok(match format {
        Format::Json => json_line(&ConnectionJson {
            basis: names.to_vec(),
            nabla,
        }),
        Format::Text => {
            let mut s = String::new();
            for (i, row) in nabla.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let c = combination(v, names);
                    if c != "0" {
                        s.push_str(&format!("nabla_{} {} = {}\n", names[i], names[j], c));
                    }
                }
            }
            if s.is_empty() {
                s.push_str("connection vanishes\n");
            }
            s
        }
    })
}

#[derive(Serialize)]
struct CurvatureEntry {
    i: usize,
    j: usize,
    k: usize,
    value: Vec<String>,
}

#[derive(Serialize)]
struct CurvatureJson {
    basis: Vec<String>,
    flat: bool,
    nonzero: Vec<CurvatureEntry>,
}

fn curvature(src: &Source, format: Format) -> Result<String, CliError> {
    let m = &src.metric;
    let r = curvature_tensor(m);
    let n = m.dim();
    let names = m.algebra().names();
    let mut nonzero = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = r.apply(i, j, k);
                if v.iter().any(|x| !ricci_soliton::exactmath::Field::is_zero(x)) {
                    nonzero.push(CurvatureEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        value: v.iter().map(|x| expr(x, m)).collect(),
                    });
                }
            }
        }
    }
    Ok(match format {
        Format::Json => json_line(&CurvatureJson {
            basis: names.to_vec(),
            flat: nonzero.is_empty(),
            nonzero,
        }),
        Format::Text => {
            if nonzero.is_empty() {
                "flat: every curvature component vanishes\n".into()
            } else {
                nonzero
                    .iter()
                    .map(|e| {
                        format!(
                            "R({}, {}) {} = {}\n",
                            names[e.i - 1],
                            names[e.j - 1],
                            names[e.k - 1],
                            combination(&e.value, names)
                        )
                    })
                    .collect()
            }
        }
    })
}

#[derive(Serialize)]
struct RicciJson {
    ric: Vec<String>,
    rc: Vec<String>,
    scalar: String,
}

fn ricci_report(src: &Source, format: Format) -> Result<String, CliError> {
    let m = &src.metric;
    let data = ricci(m);
    let report = RicciJson {
        ric: flat_expr(&data.ric, m),
        rc: flat_expr(&data.op, m),
        scalar: expr(&data.scalar, m),
    };
    Ok(match format {
        Format::Json => json_line(&report),
        Format::Text => format!(
            "Ric =\n{}\nrc =\n{}\nscalar = {}\n",
            rows_text(&report.ric, m.dim()),
            rows_text(&report.rc, m.dim()),
            report.scalar
        ),
    })
}

#[derive(Serialize)]
struct DerivationsJson {
    dim: usize,
    basis: Vec<Vec<String>>,
}

fn derivations(src: &Source, format: Format) -> Result<String, CliError> {
    let n = src.metric.dim();
    let basis = derivation_basis(src.metric.algebra());
    let report = DerivationsJson {
        dim: basis.dim(),
        basis: basis.basis.iter().map(flat).collect(),
    };
    Ok(match format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut s = format!("dim Der = {}\n", report.dim);
            for (k, b) in report.basis.iter().enumerate() {
                s.push_str(&format!("B{} =\n{}\n", k + 1, rows_text(b, n)));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct SolitonJson {
    c: String,
    #[serde(rename = "D")]
    d: Vec<String>,
    class: String,
}

fn soliton(src: &Source, format: Format) -> Result<String, CliError> {
    require_constant(src)?;
    let sol = solve_algebraic_soliton(&src.metric).map_err(input_err)?;
    let report = sol.map(|s| SolitonJson {
        c: s.c.to_string(),
        d: flat(&s.d),
        class: s.class.to_string(),
    });
    Ok(match (format, report) {
        (Format::Json, r) => json_line(&r),
        (Format::Text, None) => "none\n".into(),
        (Format::Text, Some(r)) => format!(
            "c = {}\nD =\n{}\nclass = {}\n",
            r.c,
            rows_text(&r.d, src.metric.dim()),
            r.class
        ),
    })
}

/// The metric to solve on: the extension requested by `--extend` or
/// `--derivation`, or the loaded metric itself.
fn extended(a: &ExtendArgs, src: &Source) -> Result<Option<MetricLieAlgebra>, CliError> {
    let d = match (&a.extend, &a.derivation) {
        (Some(ExtendBy::Soliton), _) => {
            require_constant(src)?;
            let s = solve_algebraic_soliton(&src.metric)
                .map_err(input_err)?
                .ok_or_else(|| CliError::Input(format!("{} has no algebraic soliton to extend by", src.label)))?;
            s.d
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.display().to_string(),
                source,
            })?;
            parse_matrix(&text, src.metric.dim()).map_err(|source| CliError::Document {
                path: path.display().to_string(),
                source,
            })?
        }
        (None, None) => return Ok(None),
    };
    let ext = build_solvable_extension(&src.metric, &d, &a.ext_param).map_err(input_err)?;
    Ok(Some(ext.result))
}

fn extend(a: &ExtendArgs) -> Result<String, CliError> {
    let src = load(&a.common)?;
    let m = extended(a, &src)?
        .ok_or_else(|| CliError::Input("extend needs --extend soliton or --derivation FILE".into()))?;
    let doc = InputDocument::from_metric(&format!("{} extension", src.label), &m);
    Ok(match a.common.output.format {
        Format::Json => {
            let mut s = doc.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let names = m.algebra().names();
            let mut s = format!("{}: extension with g({1}, {1}) = {2}\n", src.label, names[0], a.ext_param);
            for b in m.algebra().brackets() {
                let v: Vec<String> = (0..m.dim())
                    .map(|k| {
                        b.out
                            .iter()
                            .find(|(kk, _)| *kk == k)
                            .map_or("0".to_string(), |(_, x)| x.to_string())
                    })
                    .collect();
                s.push_str(&format!("[{}, {}] = {}\n", names[b.i], names[b.j], combination(&v, names)));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct ResidualJson {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct SolutionJson {
    value: String,
    lambda: String,
}

#[derive(Serialize)]
struct EinsteinJson {
    parameter: String,
    lambda: String,
    residuals: Vec<ResidualJson>,
    solutions: Vec<SolutionJson>,
    identically_einstein: bool,
    irrational_factor: Option<String>,
}

fn einstein_solve(a: &ExtendArgs) -> Result<String, CliError> {
    let src = load(&a.common)?;
    let m = extended(a, &src)?.unwrap_or_else(|| src.metric.clone());
    let param = m
        .param()
        .ok_or_else(|| {
            CliError::Input("einstein-solve needs a metric with a g(H, H) parameter; use --extend soliton".into())
        })?
        .to_string();
    let solve: EinsteinSolve = einstein_parameter_solve_metric(&m).map_err(input_err)?;
    let report = EinsteinJson {
        parameter: param.clone(),
        lambda: solve.lambda.to_expr(&param),
        residuals: solve
            .residuals
            .iter()
            .map(|((i, j), v)| ResidualJson {
                i: i + 1,
                j: j + 1,
                value: v.to_expr(&param),
            })
            .collect(),
        solutions: solve
            .solutions
            .iter()
            .map(|(h, l)| SolutionJson {
                value: h.to_string(),
                lambda: l.to_string(),
            })
            .collect(),
        identically_einstein: solve.identically_einstein,
        irrational_factor: solve.irrational_factor.as_ref().map(|f| f.to_expr(&param)),
    };
    Ok(match a.common.output.format {
        Format::Json => json_line(&report),
        Format::Text => {
            let mut s = String::new();
            if report.identically_einstein {
                s.push_str(&format!("Einstein for every admissible {param}, lambda = {}\n", report.lambda));
            } else if report.solutions.is_empty() {
                s.push_str("no rational Einstein parameter\n");
            }
            for sol in &report.solutions {
                s.push_str(&format!("{param} = {}, lambda = {}\n", sol.value, sol.lambda));
            }
            if let Some(f) = &report.irrational_factor {
                s.push_str(&format!("further Einstein parameters among the irrational roots of {f}\n"));
            }
            s
        }
    })
}

fn flow_report(a: &FlowArgs) -> Result<String, CliError> {
    let src = load(&a.common)?;
    require_constant(&src)?;
    let m = &src.metric;
    let g = m.rational_metric().map_err(input_err)?;
    let n = m.dim();
    let g0 = nalgebra_matrix(&g, n);
    let state = FloatMetricState::new(m.algebra().clone(), g0).map_err(input_err)?;
    let basis = flow::basis_f64(&derivation_basis(m.algebra()));
    let mut records = Vec::new();
    let mut failure = None;
    let mut record = |s: &FloatMetricState| match flow::soliton_residual_with(s, &basis) {
        Ok(r) => records.push(TrajectoryRecord::new(s, r)),
        Err(e) => failure = Some(e),
    };
    record(&state);
    let end = flow::integrate_each(&state, a.t_end, a.dt, &mut record);
    if let Some(e) = failure {
        return Err(input_err(e));
    }
    end.map_err(input_err)?;
    Ok(match a.common.output.format {
        Format::Json => {
            let mut buf = Vec::new();
            flow::write_json_lines(&mut buf, &records).expect("writing to memory");
            String::from_utf8(buf).expect("JSON is UTF-8")
        }
        Format::Text => records
            .iter()
            .map(|r| format!("t = {:.6}  residual = {:.3e}  g = {:?}\n", r.t, r.residual, r.g))
            .collect(),
    })
}

fn nalgebra_matrix(g: &Matrix<Rational>, n: usize) -> nalgebra::DMatrix<f64> {
    nalgebra::DMatrix::from_fn(n, n, |r, c| ricci_soliton::exactmath::rational_to_f64(&g[(r, c)]))
}

#[derive(Serialize)]
struct ExpectationJson {
    label: &'static str,
    citation: &'static str,
}

#[derive(Serialize)]
struct EntryJson {
    id: String,
    expectations: Vec<ExpectationJson>,
}

fn catalog_list(format: Format) -> String {
    let entries: Vec<EntryJson> = catalog::default_entries()
        .iter()
        .map(|id| EntryJson {
            id: id.to_string(),
            expectations: catalog::expectations(id)
                .into_iter()
                .map(|e| ExpectationJson {
                    label: e.label,
                    citation: e.citation,
                })
                .collect(),
        })
        .collect();
    match format {
        Format::Json => json_line(&entries),
        Format::Text => {
            let mut s = String::from("| id | check | claim |\n|---|---|---|\n");
            for e in &entries {
                for x in &e.expectations {
                    s.push_str(&format!("| {} | {} | {} |\n", e.id, x.label, x.citation));
                }
            }
            s
        }
    }
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    id: &'a str,
    label: &'a str,
    citation: &'a str,
    status: String,
    detail: &'a str,
}

fn verify_all(a: &VerifyArgs) -> Result<(String, i32), CliError> {
    let ids: Vec<CatalogId> = match &a.catalog {
        Some(id) => vec![id.parse().map_err(input_err)?],
        None => catalog::default_entries(),
    };
    let outcomes: Vec<Outcome> = ids.par_iter().flat_map_iter(catalog::verify).collect();
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    let notes = outcomes.len() - failed - passed;
    let report = match a.output.format {
        Format::Json => json_line(
            &outcomes
                .iter()
                .map(|o| OutcomeJson {
                    id: &o.id,
                    label: o.label,
                    citation: o.citation,
                    status: o.status.to_string(),
                    detail: &o.detail,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            if !a.no_header {
                let secs = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                s.push_str(&format!("# rsoliton verify-all, unix time {secs}\n"));
            }
            for o in &outcomes {
                s.push_str(&format!(
                    "{} {} {} [{}] => {}\n",
                    o.status, o.id, o.label, o.citation, o.detail
                ));
            }
            s.push_str(&format!("{passed} passed, {failed} failed, {notes} notes\n"));
            s
        }
    };
    Ok((report, if failed == 0 { 0 } else { 1 }))
}
