#![allow(dead_code)]

use std::path::PathBuf;

/// Set to regenerate fixture and golden files instead of comparing.
pub const REGEN_VAR: &str = "RSOLITON_REGEN";

pub fn regen() -> bool {
    std::env::var_os(REGEN_VAR).is_some()
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures_dir() -> PathBuf {
    crate_dir().join("fixtures")
}

pub fn golden_dir() -> PathBuf {
    crate_dir().join("tests").join("golden")
}

/// `oscillator:m=1,eps=1/2` -> `oscillator_m1_eps1-2`
pub fn file_stem(id: &str) -> String {
    id.replace(':', "_")
        .replace(',', "_")
        .replace('=', "")
        .replace(['/', ';'], "-")
}

/// Run the CLI in-process; returns (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rsoliton").chain(args.iter().copied());
    let code = ricci_soliton_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
