//! The `gehrhart` command line tool.
//!
//! Every subcommand reads a JSON matroid description
//! `{"name": .., "d": .., "n": .., "matrix": [[..]]}` and prints one JSON
//! object with sorted keys on standard output. Exit codes: 0 success, 1 a
//! `verify` check failed, 2 bad input, a size guard, or a non-unimodular
//! matrix.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use gehrhart::gehrhart::{ehr_poly, ehr_power_form, graded_count, interior_series, series};
use gehrhart::harmonic::{degree1_dim, gorenstein_classify, palindrome_check, segre_generators, BINOMIAL_NOTE};
use gehrhart::matroid::{tutte, Realization};
use gehrhart::verify::run_suite;
use gehrhart::RealizedMatroid;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Debug, Parser)]
#[command(name = "gehrhart", version, about = "Graded Ehrhart theory of unimodular zonotopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tutte polynomial as [x_exp, y_exp, coeff] triples.
    Tutte { file: PathBuf },
    /// Graded lattice point count of the m-th dilate.
    Qcount {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        interior: bool,
    },
    /// Graded Ehrhart polynomial in powers of t and in the q-binomial basis.
    Ehrpoly { file: PathBuf },
    /// Numerator and order of the graded Ehrhart series.
    Series {
        file: PathBuf,
        #[arg(long)]
        interior: bool,
    },
    /// Linear generators of the harmonic algebra presentation.
    Presentation { file: PathBuf },
    /// Gorenstein verdict and palindromicity of the series numerator.
    Gorenstein { file: PathBuf },
    /// Run every cross-oracle check.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
    },
}

/// A parsed input document.
#[derive(Debug, Clone)]
pub struct MatroidInput {
    pub name: Option<String>,
    pub matroid: RealizedMatroid,
}

/// Parses and validates the input document.
pub fn parse_input(text: &str) -> Result<MatroidInput, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let obj = doc.as_object().ok_or("input must be a JSON object")?;
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err("`name` must be a string".into()),
    };
    let dim = |key: &str| -> Result<usize, String> {
        obj.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| format!("`{key}` must be a non-negative integer"))
    };
    let (d, n) = (dim("d")?, dim("n")?);
    let rows = obj.get("matrix").and_then(Value::as_array).ok_or("`matrix` must be an array of rows")?;
    let mut matrix = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| format!("matrix row {} is not an array", i + 1))?;
        let entries = row
            .iter()
            .map(|v| parse_entry(v).ok_or_else(|| format!("matrix entry in row {} is not an integer: {v}", i + 1)))
            .collect::<Result<Vec<BigInt>, String>>()?;
        matrix.push(entries);
    }
    let realization = Realization::new(d, n, matrix).map_err(|e| e.to_string())?;
    let matroid = RealizedMatroid::from_realization(realization).map_err(|e| e.to_string())?;
    Ok(MatroidInput { name, matroid })
}

fn parse_entry(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Runs the tool on `argv` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, code)) => {
            let _ = writeln!(out, "{}", Value::Object(report));
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn load(file: &PathBuf) -> Result<MatroidInput, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_input(&text)
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("value types serialize infallibly")
}

fn execute(cmd: &Command) -> Result<(Map<String, Value>, i32), String> {
    let mut report = Map::new();
    let mut code = 0;
    let (command, file) = match cmd {
        Command::Tutte { file } => ("tutte", file),
        Command::Qcount { file, .. } => ("qcount", file),
        Command::Ehrpoly { file } => ("ehrpoly", file),
        Command::Series { file, .. } => ("series", file),
        Command::Presentation { file } => ("presentation", file),
        Command::Gorenstein { file } => ("gorenstein", file),
        Command::Verify { file, .. } => ("verify", file),
    };
    let input = load(file)?;
    let m = &input.matroid;
    report.insert("command".into(), json!(command));
    if let Some(name) = &input.name {
        report.insert("name".into(), json!(name));
    }
    let e = |e: gehrhart::Error| e.to_string();
    match cmd {
        Command::Tutte { .. } => {
            report.insert("tutte".into(), to_json(&tutte(m)));
        }
        Command::Qcount { m: k, interior, .. } => {
            let c = graded_count(m, *k, *interior).map_err(e)?;
            report.insert("m".into(), json!(k));
            report.insert("interior".into(), json!(interior));
            report.insert("qcount".into(), to_json(&c.value));
        }
        Command::Ehrpoly { .. } => {
            report.insert("power_form".into(), to_json(&ehr_power_form(m).map_err(e)?));
            report.insert("basis".into(), to_json(ehr_poly(m).map_err(e)?.basis_coeffs()));
        }
        Command::Series { interior, .. } => {
            let s = if *interior { interior_series(m) } else { series(m) }.map_err(e)?;
            report.insert("interior".into(), json!(interior));
            report.insert("numerator".into(), to_json(s.numerator()));
            report.insert("order".into(), json!(s.order()));
        }
        Command::Presentation { .. } => {
            let gens = segre_generators(m).map_err(e)?;
            report.insert("linear_generators".into(), json!(gens.linear_lines()));
            report.insert("binomials".into(), json!(BINOMIAL_NOTE));
            report.insert("degree1_dim".into(), json!(degree1_dim(m).map_err(e)?));
        }
        Command::Gorenstein { .. } => {
            let v = gorenstein_classify(m);
            let palindrome = if v.verdict.is_gorenstein() {
                m.require_unimodular().map_err(e)?;
                json!(palindrome_check(m).map_err(e)?)
            } else {
                Value::Null
            };
            let witness = v.witness.map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>());
            report.insert("verdict".into(), json!(v.verdict.as_str()));
            report.insert("palindrome".into(), palindrome);
            report.insert("witness".into(), json!(witness));
        }
        Command::Verify { m_max, .. } => {
            let checks = run_suite(m, *m_max).map_err(e)?;
            let all = checks.iter().all(|c| c.passed);
            code = i32::from(!all);
            report.insert("m_max".into(), json!(m_max));
            report.insert("checks".into(), to_json(&checks));
            report.insert("status".into(), json!(if all { "pass" } else { "fail" }));
        }
    }
    Ok((report, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_strings_and_ints() {
        let inp = parse_input(r#"{"name":"hex","d":2,"n":3,"matrix":[[1,0,"1"],[0,1," 1"]]}"#).unwrap();
        assert_eq!(inp.name.as_deref(), Some("hex"));
        assert_eq!(inp.matroid.n(), 3);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_input(r#"{"d":2,"n":3,"matrix":[[1,0,1]]}"#).is_err());
        assert!(parse_input(r#"{"d":1,"n":2,"matrix":[[1,0,1]]}"#).is_err());
        assert!(parse_input(r#"{"d":1,"n":1,"matrix":[[1.5]]}"#).is_err());
        assert!(parse_input(r#"[1]"#).is_err());
        assert!(parse_input(r#"{"d":1,"n":2,"matrix":[[0,0]]}"#).is_err());
    }

    #[test]
    fn empty_matroid_input() {
        let inp = parse_input(r#"{"d":0,"n":0,"matrix":[]}"#).unwrap();
        assert_eq!(inp.matroid.n(), 0);
    }
}
