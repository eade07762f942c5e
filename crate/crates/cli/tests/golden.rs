mod common;

use common::{file_stem, golden_dir, regen, run};
use ricci_soliton::catalog;
use ricci_soliton::exactmath::parse_scalar;

/// (command, extra args) pairs checked against golden files for every entry.
const REPORTS: &[(&str, &[&str])] = &[
    ("ricci", &[]),
    ("connection", &[]),
    ("derivations", &[]),
    ("soliton", &[]),
];

fn check_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if regen() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch: {}", path.display());
}

fn is_constant(id: &str) -> bool {
    !id.starts_with("remark44")
}

#[test]
fn exact_reports_match_golden_files() {
    for id in catalog::default_entries() {
        let id = id.to_string();
        for (cmd, extra) in REPORTS {
            if *cmd == "soliton" && !is_constant(&id) {
                continue;
            }
            let mut args = vec![*cmd, "--catalog", &id, "--format", "json"];
            args.extend_from_slice(extra);
            let (code, out, err) = run(&args);
            assert_eq!(code, 0, "{cmd} {id}: {err}");
            check_golden(&format!("{cmd}__{}.json", file_stem(&id)), &out);
        }
    }
}

#[test]
fn einstein_reports_match_golden_files() {
    for id in ["h3:g1", "e2", "e11", "heisenberg:n=2", "oscillator:m=1,eps=0"] {
        let (code, out, err) = run(&["einstein-solve", "--catalog", id, "--extend", "soliton", "--format", "json"]);
        assert_eq!(code, 0, "{id}: {err}");
        check_golden(&format!("einstein-solve__{}.json", file_stem(id)), &out);
    }
    for id in catalog::default_entries().iter().map(ToString::to_string).filter(|id| !is_constant(id)) {
        let (code, out, err) = run(&["einstein-solve", "--catalog", &id, "--format", "json"]);
        assert_eq!(code, 0, "{id}: {err}");
        check_golden(&format!("einstein-solve__{}.json", file_stem(&id)), &out);
    }
}

#[test]
fn verify_all_matches_golden_and_is_byte_stable() {
    let first = run(&["verify-all", "--no-header"]);
    let second = run(&["verify-all", "--no-header"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
    check_golden("verify-all.txt", &first.1);
    let json = run(&["verify-all", "--format", "json"]);
    assert_eq!(json.1, run(&["verify-all", "--format", "json"]).1);
    check_golden("verify-all.json", &json.1);
}

#[test]
fn reported_scalars_round_trip() {
    for id in catalog::default_entries() {
        let item = catalog::build(&id).unwrap();
        let param = item.metric.param().map(str::to_string);
        let (_, out, _) = run(&["ricci", "--catalog", &id.to_string(), "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let data = ricci_soliton::geometry::ricci(&item.metric);
        for (key, matrix) in [("ric", &data.ric), ("rc", &data.op)] {
            let parsed: Vec<_> = v[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|s| parse_scalar(s.as_str().unwrap(), param.as_deref()).unwrap())
                .collect();
            assert_eq!(parsed.as_slice(), matrix.data(), "{id} {key}");
        }
        let scalar = parse_scalar(v["scalar"].as_str().unwrap(), param.as_deref()).unwrap();
        assert_eq!(scalar, data.scalar);
    }
}

#[test]
fn extension_document_round_trips() {
    for id in ["h3:g1", "e2", "oscillator:m=2,eps=0"] {
        let (code, doc, err) = run(&["extend", "--catalog", id, "--extend", "soliton", "--format", "json"]);
        assert_eq!(code, 0, "{err}");
        let path = std::env::temp_dir().join(format!("rsoliton-ext-{}-{}.json", std::process::id(), file_stem(id)));
        std::fs::write(&path, &doc).unwrap();
        let from_file = run(&["einstein-solve", "--input", path.to_str().unwrap(), "--format", "json"]);
        let direct = run(&["einstein-solve", "--catalog", id, "--extend", "soliton", "--format", "json"]);
        std::fs::remove_file(&path).unwrap();
        assert_eq!(from_file.1, direct.1, "{id}");
    }
}
