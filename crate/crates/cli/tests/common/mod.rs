//! Golden scenario runner shared by the golden and acceptance targets.
//!
//! Each directory under `tests/golden` (except `fixtures`) is one scenario:
//!
//! - `args`: one argument per line, run from `tests/golden` with `NO_COLOR=1`.
//!   `$TMP` expands to a fresh temporary directory.
//! - `code`: the expected exit code. Never rewritten by blessing.
//! - `stdout`, `stderr`: expected bytes, with the temporary directory shown as `$TMP`.
//! - `written` (optional): a file name under `$TMP` whose bytes must equal `written.expected`.
//!
//! Setting `AICD_BLESS=1` rewrites the expected output files from the actual run.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn scenarios() -> Vec<PathBuf> {
    let mut dirs: Vec<PathBuf> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.is_dir() && p.file_name().is_some_and(|n| n != "fixtures"))
        .collect();
    dirs.sort();
    dirs
}

fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap_or_default()
}

/// Runs one scenario. Returns a description of every mismatch.
pub fn check_scenario(dir: &Path, bless: bool) -> Result<(), String> {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let tmp_text = tmp.path().to_string_lossy().into_owned();
    let args: Vec<String> = read(&dir.join("args"))
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| l.replace("$TMP", &tmp_text))
        .collect();
    let expected_code: i32 = read(&dir.join("code"))
        .trim()
        .parse()
        .map_err(|_| format!("{}: missing or bad code file", dir.display()))?;

    let output = Command::new(env!("CARGO_BIN_EXE_aicd"))
        .args(&args)
        .current_dir(golden_dir())
        .env("NO_COLOR", "1")
        .output()
        .map_err(|e| e.to_string())?;
    let normalize = |bytes: &[u8]| String::from_utf8_lossy(bytes).replace(&tmp_text, "$TMP");
    let mut actual = vec![
        ("stdout".to_string(), normalize(&output.stdout)),
        ("stderr".to_string(), normalize(&output.stderr)),
    ];
    let written = read(&dir.join("written"));
    let written = written.trim();
    if !written.is_empty() {
        let bytes = fs::read(tmp.path().join(written)).unwrap_or_default();
        actual.push(("written.expected".to_string(), normalize(&bytes)));
    }

    let mut problems = Vec::new();
    let code = output.status.code().unwrap_or(-1);
    if code != expected_code {
        problems.push(format!("exit code {code}, expected {expected_code}"));
    }
    for (file, text) in &actual {
        let path = dir.join(file);
        if bless {
            fs::write(&path, text).map_err(|e| e.to_string())?;
        } else if read(&path) != *text {
            problems.push(format!(
                "{file} differs:\n--- actual ---\n{text}--- expected ---\n{}",
                read(&path)
            ));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("\n"))
    }
}

pub fn blessing() -> bool {
    std::env::var_os("AICD_BLESS").is_some()
}
