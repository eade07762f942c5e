//! JSON input documents. Indices are 1-based in files.

use ricci_soliton::exactmath::{parse_scalar, Field, Matrix, ParamScalar, Rational};
use ricci_soliton::geometry::{GeometryError, MetricLieAlgebra};
use ricci_soliton::liealg::{Bracket, LieAlgebra, LieError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub parameters: Vec<String>,
    /// Optional basis labels; `e1..en` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub out: BTreeMap<usize, String>,
}

fn compact<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("document serializes")
}

/// A document problem with the place it occurred.
#[derive(Debug, Clone, PartialEq)]
pub struct DocumentError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for DocumentError {}

fn err(location: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError {
        location: location.into(),
        message: message.into(),
    }
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| {
            err(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
            )
        })
    }

    /// Pretty JSON with one bracket and one metric row per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        s.push_str(&format!("  \"name\": {},\n", compact(&self.name)));
        s.push_str(&format!("  \"dim\": {},\n", self.dim));
        s.push_str(&format!("  \"parameters\": {},\n", compact(&self.parameters)));
        if let Some(b) = &self.basis {
            s.push_str(&format!("  \"basis\": {},\n", compact(b)));
        }
        let list = |items: Vec<String>| {
            if items.is_empty() {
                "[]".to_string()
            } else {
                format!("[\n    {}\n  ]", items.join(",\n    "))
            }
        };
        s.push_str(&format!(
            "  \"brackets\": {},\n",
            list(self.brackets.iter().map(|b| compact(b)).collect())
        ));
        s.push_str(&format!(
            "  \"metric\": {}\n}}",
            list(self.metric.iter().map(|r| compact(r)).collect())
        ));
        s
    }

    /// Validate and build the metric Lie algebra.
    pub fn to_metric(&self) -> Result<MetricLieAlgebra, DocumentError> {
        let n = self.dim;
        if n == 0 {
            return Err(err("dim", "dimension must be positive"));
        }
        if self.parameters.len() > 1 {
            return Err(err("parameters", "at most one parameter is supported"));
        }
        let param = self.parameters.first().map(String::as_str);
        if let Some(p) = param {
            let ok = p.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(err("parameters[0]", format!("'{p}' is not an identifier")));
            }
        }
        let names = match &self.basis {
            Some(b) if b.len() != n => {
                return Err(err("basis", format!("expected {n} names, found {}", b.len())));
            }
            Some(b) => b.clone(),
            None => (1..=n).map(|i| format!("e{i}")).collect(),
        };
        let index = |loc: &str, v: usize| {
            if (1..=n).contains(&v) {
                Ok(v - 1)
            } else {
                Err(err(loc, format!("index {v} out of range 1..={n} (indices are 1-based)")))
            }
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        let mut seen = std::collections::BTreeSet::new();
        for (b, entry) in self.brackets.iter().enumerate() {
            let loc = format!("brackets[{b}]");
            let i = index(&format!("{loc}.i"), entry.i)?;
            let j = index(&format!("{loc}.j"), entry.j)?;
            if i == j {
                return Err(err(loc, "bracket of a basis vector with itself"));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(err(loc, format!("bracket [{}, {}] given twice", entry.i, entry.j)));
            }
            let mut out = Vec::new();
            for (k, text) in &entry.out {
                let kloc = format!("{loc}.out[\"{k}\"]");
                let k = index(&kloc, *k)?;
                let v = parse_scalar(text, None).map_err(|e| err(&kloc, e.to_string()))?;
                let v = v.as_rational().expect("parameter-free expression");
                if !v.is_zero() {
                    out.push((k, v));
                }
            }
            brackets.push(Bracket::new(i, j, out));
        }
        let algebra = LieAlgebra::with_names(names, &brackets).map_err(|e| match e {
            LieError::JacobiViolation { .. } => err("brackets", e.to_string()),
            other => err("brackets", other.to_string()),
        })?;

        if self.metric.len() != n {
            return Err(err("metric", format!("expected {n} rows, found {}", self.metric.len())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in self.metric.iter().enumerate() {
            if row.len() != n {
                return Err(err(
                    format!("metric row {}", r + 1),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            for (c, text) in row.iter().enumerate() {
                let v = parse_scalar(text, param)
                    .map_err(|e| err(format!("metric[{}][{}]", r + 1, c + 1), e.to_string()))?;
                entries.push(v);
            }
        }
        let g = Matrix::new(n, n, entries).expect("n x n entries");
        MetricLieAlgebra::new(algebra, g, param.map(str::to_string)).map_err(|e| match e {
            GeometryError::NotSymmetric(r, c) => err(
                format!("metric[{}][{}]", r + 1, c + 1),
                "metric is not symmetric",
            ),
            other => err("metric", other.to_string()),
        })
    }

    /// Document describing `m`; the inverse of [`InputDocument::to_metric`].
    pub fn from_metric(name: &str, m: &MetricLieAlgebra) -> Self {
        let a = m.algebra();
        let n = a.dim();
        let param = m.param().unwrap_or("h");
        let brackets = a
            .brackets()
            .into_iter()
            .map(|b| BracketEntry {
                i: b.i + 1,
                j: b.j + 1,
                out: b.out.into_iter().map(|(k, v)| (k + 1, v.to_string())).collect(),
            })
            .collect();
        let metric = (0..n)
            .map(|r| (0..n).map(|c| m.metric()[(r, c)].to_expr(param)).collect())
            .collect();
        let default_names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        InputDocument {
            name: name.to_string(),
            dim: n,
            parameters: m.param().map(|p| vec![p.to_string()]).unwrap_or_default(),
            basis: (a.names() != default_names.as_slice()).then(|| a.names().to_vec()),
            brackets,
            metric,
        }
    }
}

/// Parse a `--derivation` document: `n` rows of `n` scalar strings.
pub fn parse_matrix(text: &str, n: usize) -> Result<Matrix<Rational>, DocumentError> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text)
        .map_err(|e| err(format!("line {}, column {}", e.line(), e.column()), "expected an array of rows of strings"))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(err("derivation", format!("expected a {n}x{n} matrix")));
    }
    let mut data = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        for (c, text) in row.iter().enumerate() {
            let v: ParamScalar =
                parse_scalar(text, None).map_err(|e| err(format!("derivation[{}][{}]", r + 1, c + 1), e.to_string()))?;
            data.push(v.as_rational().expect("parameter-free expression"));
        }
    }
    Ok(Matrix::new(n, n, data).expect("n x n entries"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const E2: &str = r#"{
        "name": "E(2)",
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "out": {"3": "1"}},
            {"i": 3, "j": 1, "out": {"2": "1"}}
        ],
        "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]]
    }"#;

    #[test]
    fn loads_and_round_trips() {
        let doc = InputDocument::from_json(E2).unwrap();
        let m = doc.to_metric().unwrap();
        assert_eq!(m.dim(), 3);
        let back = InputDocument::from_metric("E(2)", &m);
        assert_eq!(back.to_metric().unwrap(), m);
        let again = InputDocument::from_json(&back.to_json()).unwrap();
        assert_eq!(again, back);
    }

    #[test]
    fn zero_index_is_rejected() {
        let text = E2.replace("\"i\": 1, \"j\": 2", "\"i\": 0, \"j\": 2");
        let e = InputDocument::from_json(&text).unwrap().to_metric().unwrap_err();
        assert_eq!(e.location, "brackets[0].i");
        assert!(e.message.contains("1-based"));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = InputDocument::from_json("{\n  \"name\": \"x\",\n  \"dim\": }").unwrap_err();
        assert_eq!(e.location, "line 3, column 10");
        let e = InputDocument::from_json(&E2.replace("\"1\", \"0\", \"0\"]", "\"1/0\", \"0\", \"0\"]"))
            .unwrap()
            .to_metric()
            .unwrap_err();
        assert_eq!(e.location, "metric[1][1]");
    }

    #[test]
    fn asymmetric_and_degenerate_metrics() {
        let asym = E2.replace("[\"0\", \"1\", \"0\"]", "[\"2\", \"1\", \"0\"]");
        let e = InputDocument::from_json(&asym).unwrap().to_metric().unwrap_err();
        assert!(e.location.starts_with("metric["), "{e}");
        let degenerate = E2.replace("\"-1\"", "\"0\"");
        let e = InputDocument::from_json(&degenerate).unwrap().to_metric().unwrap_err();
        assert_eq!(e.location, "metric");
    }

    #[test]
    fn jacobi_violation_reported() {
        let text = r#"{"name": "bad", "dim": 3,
            "brackets": [{"i": 1, "j": 2, "out": {"1": "1"}}, {"i": 2, "j": 3, "out": {"2": "1"}}],
            "metric": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#;
        let e = InputDocument::from_json(text).unwrap().to_metric().unwrap_err();
        assert_eq!(e.location, "brackets");
        assert!(e.message.to_lowercase().contains("jacobi"), "{e}");
    }
}
