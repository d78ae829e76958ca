//! The `hqd` command line: `build`, `verify`, `export-dot` and `oracle`.
//!
//! Exit codes: 0 success, 1 verification failure (or no decomposition found
//! by the oracle), 2 usage or parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::certfile::{from_json, to_dot, to_json, to_text, LabelStyle};
use crate::decomposition::PartitionedDecomposition;
use crate::drivers::{decompose, DecompositionRequest};
use crate::error::{Error, Result};
use crate::oracle::brute_force_decompose;
use crate::verify::{check_certificate, Check, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hqd", version, about = "Partitionable cycle decompositions of even hypercubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    Integer,
    Binary,
}

impl From<Labels> for LabelStyle {
    fn from(l: Labels) -> Self {
        match l {
            Labels::Integer => LabelStyle::Integer,
            Labels::Binary => LabelStyle::Binary,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a decomposition of Q_n into cycles of length 2^i.
    Build {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long, value_enum, default_value = "integer")]
        labels: Labels,
    },
    /// Check a certificate file.
    Verify {
        path: PathBuf,
        #[arg(long)]
        expect_n: Option<u32>,
        #[arg(long)]
        expect_length: Option<usize>,
    },
    /// Render a certificate as a Graphviz graph.
    ExportDot {
        input: PathBuf,
        /// Output file; standard output when omitted.
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "integer")]
        labels: Labels,
    },
    /// Exhaustive search on a small cube (at most 64 edges).
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Build { n, i, out: path, format, labels } => cmd_build(n, i, path.as_deref(), format, labels.into(), out, err),
        Command::Verify { path, expect_n, expect_length } => cmd_verify(&path, expect_n, expect_length, out, err),
        Command::ExportDot { input, output, labels } => cmd_export_dot(&input, output.as_deref(), labels.into(), out, err),
        Command::Oracle { n, i, out: path } => cmd_oracle(n, i, path.as_deref(), out, err),
    }
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(d: &PartitionedDecomposition, format: OutputFormat, labels: LabelStyle) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => to_json(d, labels)?,
        OutputFormat::Dot => to_dot(d, labels),
        OutputFormat::Text => to_text(d, labels),
    })
}

/// Builds, self-checks and writes a certificate with every cycle in
/// canonical rotation.
pub fn cmd_build(
    n: u32,
    i: u32,
    path: Option<&Path>,
    format: OutputFormat,
    labels: LabelStyle,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let req = match DecompositionRequest::new(n, i) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let d = match decompose(req) {
        Ok(d) => d.canonicalized(),
        Err(e) => {
            let _ = writeln!(err, "error: construction failed: {e}");
            return EXIT_FAIL;
        }
    };
    let report = check_certificate(&d);
    if !report.ok() {
        let _ = write!(err, "internal verification failed:\n{report}");
        return EXIT_FAIL;
    }
    match render(&d, format, labels).and_then(|text| emit(path, &text, out)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn load(path: &Path) -> Result<PartitionedDecomposition> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

/// Runs all checks plus the optional expectations.
pub fn verify_with_expectations(
    d: &PartitionedDecomposition,
    expect_n: Option<u32>,
    expect_length: Option<usize>,
) -> VerificationReport {
    let mut report = check_certificate(d);
    if let Some(n) = expect_n.filter(|&n| n != d.host().get()) {
        report.push(Check::Expectation, format!("certificate is for Q_{}, expected Q_{n}", d.host().get()));
    }
    if let Some(l) = expect_length.filter(|&l| l != d.cycle_length()) {
        report.push(Check::Expectation, format!("cycle length {}, expected {l}", d.cycle_length()));
    }
    report
}

pub fn cmd_verify(
    path: &Path,
    expect_n: Option<u32>,
    expect_length: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let d = match load(path) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let report = verify_with_expectations(&d, expect_n, expect_length);
    if report.ok() {
        let _ = writeln!(
            out,
            "ok: Q_{} into {} cycles of length {} in {} partition sets",
            d.host().get(),
            d.num_cycles(),
            d.cycle_length(),
            d.num_sets()
        );
        EXIT_OK
    } else {
        let _ = write!(out, "{report}");
        EXIT_FAIL
    }
}

pub fn cmd_export_dot(
    input: &Path,
    output: Option<&Path>,
    labels: LabelStyle,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let d = match load(input) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let report = check_certificate(&d);
    if !report.ok() {
        let _ = write!(err, "{report}");
        return EXIT_FAIL;
    }
    match emit(output, &to_dot(&d, labels), out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

pub fn cmd_oracle(n: u32, i: u32, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match brute_force_decompose(n, i) {
        Ok(Some(d)) => match to_json(&d.canonicalized(), LabelStyle::Integer).and_then(|t| emit(path, &t, out)) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAIL
            }
        },
        Ok(None) => {
            let _ = writeln!(err, "no partitionable decomposition of Q_{n} into {}-cycles exists", 1u64 << i);
            EXIT_FAIL
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = match Cli::try_parse_from(std::iter::once("hqd").chain(args.iter().copied())) {
            Ok(c) => c,
            Err(e) => return (e.exit_code(), String::new(), e.to_string()),
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn build_to_stdout() {
        let (code, out, _) = run_args(&["build", "--n", "4", "--i", "3"]);
        assert_eq!(code, 0);
        let d = from_json(&out).unwrap();
        assert_eq!((d.num_cycles(), d.cycle_length()), (4, 8));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["build", "--n", "3", "--i", "2"]).0, 2);
        assert_eq!(run_args(&["build", "--n", "4"]).0, 2);
        assert_eq!(run_args(&["build", "--n", "4", "--i", "3", "--format", "xml"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["oracle", "--n", "6", "--i", "3"]).0, 2);
    }

    #[test]
    fn verify_and_expectations() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("q4.json");
        let ps = p.to_str().unwrap();
        assert_eq!(run_args(&["build", "--n", "4", "--i", "3", "--out", ps]).0, 0);
        assert_eq!(run_args(&["verify", ps]).0, 0);
        assert_eq!(run_args(&["verify", ps, "--expect-n", "4", "--expect-length", "8"]).0, 0);
        let (code, out, _) = run_args(&["verify", ps, "--expect-length", "16"]);
        assert_eq!(code, 1);
        assert!(out.contains("expectation"));
        let missing = dir.path().join("missing.json");
        assert_eq!(run_args(&["verify", missing.to_str().unwrap()]).0, 2);
    }

    #[test]
    fn export_dot_counts() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("q4.json");
        let ps = p.to_str().unwrap();
        run_args(&["build", "--n", "4", "--i", "3", "--out", ps]);
        let (code, dot, _) = run_args(&["export-dot", ps]);
        assert_eq!(code, 0);
        assert_eq!(dot.matches(" -- ").count(), 32);
        let empty = dir.path().join("empty.json");
        fs::write(&empty, r#"{"format":"hqd-cert-v1","n":4,"cycle_length":8,"cycles":[]}"#).unwrap();
        assert_eq!(run_args(&["export-dot", empty.to_str().unwrap()]).0, 2);
    }

    #[test]
    fn oracle_found_and_not_found() {
        let (code, out, _) = run_args(&["oracle", "--n", "4", "--i", "2"]);
        assert_eq!(code, 0);
        assert_eq!(from_json(&out).unwrap().num_cycles(), 8);
        assert_eq!(run_args(&["oracle", "--n", "3", "--i", "2"]).0, 1);
    }
}
