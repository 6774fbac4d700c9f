//! Helpers shared by the golden-file tests and the acceptance suite.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use orbifold_cli::document::OrbifoldDocument;
use orbifold_core::corpus;

/// Entries with checked-in documents and golden outputs.
pub const GOLDEN_ENTRIES: [&str; 6] = ["m1", "s1", "teardrop3", "d3_t12", "d3_t24", "mirror_ball"];

/// Subcommands whose output is pinned, as (file tag, arguments before the input path).
pub const GOLDEN_COMMANDS: [(&str, &[&str]); 3] = [("chi", &["chi"]), ("stratify", &["stratify"]), ("verify", &["verify", "--mode", "all"])];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn input_path(name: &str) -> PathBuf {
    golden_dir().join("inputs").join(format!("{name}.json"))
}

pub fn golden_path(name: &str, tag: &str) -> PathBuf {
    golden_dir().join(format!("{name}.{tag}.txt"))
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_orbifold"))
        .args(args)
        .output()
        .expect("the binary runs");
    Outcome {
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 output"),
        code: out.status.code().expect("exited normally"),
    }
}

/// Captured stdout followed by the exit status, as stored in golden files.
pub fn transcript(args: &[&str]) -> String {
    let o = run(args);
    format!("{}exit: {}\n", o.stdout, o.code)
}

pub fn fresh_document(name: &str) -> String {
    OrbifoldDocument::from_entry(&corpus::entry(name).expect("golden entry exists")).to_json()
}

/// Compares every golden input and transcript; returns the mismatches.
/// With `ORBIFOLD_UPDATE_GOLDEN` set, rewrites the files instead.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("ORBIFOLD_UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    let mut compare = |path: PathBuf, actual: String| {
        if update {
            std::fs::write(&path, &actual).expect("golden file is writable");
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(actual.as_str()) {
            bad.push(path.display().to_string());
        }
    };
    for name in GOLDEN_ENTRIES {
        compare(input_path(name), fresh_document(name));
        let input = input_path(name);
        let input = input.to_str().expect("utf-8 path");
        for (tag, args) in GOLDEN_COMMANDS {
            let mut full: Vec<&str> = args.to_vec();
            full.push(input);
            compare(golden_path(name, tag), transcript(&full));
        }
    }
    bad
}
