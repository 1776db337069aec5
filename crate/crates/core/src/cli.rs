//! Command-line front end. Every subcommand has a `cmd_*` function returning
//! a serializable value so the output can be tested without a process.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use serde::Serialize;

use crate::algebra::{AlgebraElement, Rational};
use crate::config::{Limits, MAX_N_ENV};
use crate::polynomial::TracePolynomial;
use crate::tableaux::{enumerate_syt_with, YoungTableau};
use crate::tensor::TensorOperator;
use crate::verify::{run_verification, Kind, Suite, VerificationRun, VerifyOptions};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hy", version, about = "Exact conventional and Hermitian Young projectors")]
pub struct Cli {
    /// Largest supported number of boxes.
    #[arg(long, global = true, env = MAX_N_ENV)]
    pub max_n: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    Conventional,
    Hermitian,
}

impl From<OperatorKind> for Kind {
    fn from(k: OperatorKind) -> Kind {
        match k {
            OperatorKind::Conventional => Kind::Conventional,
            OperatorKind::Hermitian => Kind::Hermitian,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the standard Young tableaux with n boxes.
    Tableaux {
        #[arg(long)]
        n: usize,
    },
    /// Print a Young operator as a group-algebra element.
    Operator {
        /// Tableau as "123/45" or as JSON.
        tableau: String,
        #[arg(long, value_enum, default_value = "hermitian")]
        kind: OperatorKind,
        /// Dump the realized N^n × N^n matrix instead.
        #[arg(long = "matrix-N", value_name = "N")]
        matrix_dim: Option<usize>,
    },
    /// Dimension table f_T(N), |T| and f_T(N)/|T| for every tableau.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long = "N", value_name = "N", required = true)]
        dims: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Trace polynomial of a Young operator.
    Trace {
        tableau: String,
        #[arg(long, value_enum, default_value = "hermitian")]
        kind: OperatorKind,
        /// Also evaluate at these N.
        #[arg(long = "N", value_name = "N")]
        dims: Vec<usize>,
    },
    /// Run verification suites; exit code 0 iff every check passes.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "N", value_name = "N")]
        dims: Vec<usize>,
        #[arg(long = "suite", value_name = "SUITE")]
        suites: Vec<String>,
        #[arg(long, value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
}

pub fn parse_tableau(s: &str) -> Result<YoungTableau> {
    let t: YoungTableau = s.parse()?;
    if !t.is_standard() {
        return Err(Error::NonStandard(t.to_string()));
    }
    Ok(t)
}

pub fn cmd_tableaux(n: usize, limits: &Limits) -> Result<Vec<YoungTableau>> {
    enumerate_syt_with(n, limits)
}

pub fn cmd_operator(t: &YoungTableau, kind: OperatorKind, limits: &Limits) -> Result<AlgebraElement> {
    limits.check_n(t.n())?;
    Kind::from(kind).build(t)
}

#[derive(Debug, Clone, Serialize)]
pub struct DimsRow {
    pub tableau: String,
    pub f: String,
    pub hook: String,
    pub dim: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimsTable {
    pub n: usize,
    #[serde(rename = "N")]
    pub dim: usize,
    pub rows: Vec<DimsRow>,
    pub total: String,
    pub expected_total: String,
    pub consistent: bool,
}

pub fn cmd_dims(n: usize, dim: usize, limits: &Limits) -> Result<DimsTable> {
    let syt = enumerate_syt_with(n, limits)?;
    let mut total = BigUint::from(0u32);
    let rows = syt
        .iter()
        .map(|t| {
            let shape = t.shape();
            let d = shape.dimension(dim as u64);
            total += &d;
            DimsRow {
                tableau: t.to_string(),
                f: shape.dimension_polynomial().eval(&BigInt::from(dim)).to_string(),
                hook: shape.hook_product().to_string(),
                dim: d.to_string(),
            }
        })
        .collect();
    let expected = BigUint::from(dim).pow(n as u32);
    Ok(DimsTable {
        n,
        dim,
        rows,
        consistent: total == expected,
        total: total.to_string(),
        expected_total: expected.to_string(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceOutput {
    pub tableau: String,
    pub polynomial: TracePolynomial,
    pub values: Vec<(usize, String)>,
}

pub fn cmd_trace(t: &YoungTableau, kind: OperatorKind, dims: &[usize], limits: &Limits) -> Result<TraceOutput> {
    let polynomial = cmd_operator(t, kind, limits)?.trace_polynomial();
    let values = dims
        .iter()
        .map(|&d| (d, polynomial.eval(&Rational::from_integer(BigInt::from(d))).to_string()))
        .collect();
    Ok(TraceOutput {
        tableau: t.to_string(),
        polynomial,
        values,
    })
}

pub fn cmd_verify(n: usize, dims: &[usize], suites: &[String], limits: &Limits) -> Result<VerificationRun> {
    limits.check_n(n)?;
    let suites = if suites.is_empty() {
        Suite::defaults(n, limits)
    } else {
        suites.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>>>()?
    };
    let opts = VerifyOptions {
        n,
        dims: if dims.is_empty() { vec![2, 3] } else { dims.to_vec() },
        suites,
        limits: *limits,
    };
    run_verification(&opts)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn render_dims(out: &mut dyn Write, table: &DimsTable) -> std::io::Result<()> {
    writeln!(out, "n = {}, N = {}", table.n, table.dim)?;
    writeln!(out, "{:<12} {:>12} {:>8} {:>10}", "tableau", "f_T(N)", "|T|", "dim")?;
    for r in &table.rows {
        writeln!(out, "{:<12} {:>12} {:>8} {:>10}", r.tableau, r.f, r.hook, r.dim)?;
    }
    let mark = if table.consistent { "ok" } else { "MISMATCH" };
    writeln!(out, "sum = {} (N^n = {}) {mark}", table.total, table.expected_total)
}

fn render_run(out: &mut dyn Write, run: &VerificationRun) -> std::io::Result<()> {
    for r in &run.reports {
        let status = if r.all_passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<28} n={} {:>5}/{:<5} {:>10.1} ms",
            r.suite, r.n, r.summary.passed, r.summary.total, r.wall_time_ms
        )?;
        for c in r.failures() {
            let witness = c
                .witness
                .as_ref()
                .map(|w| serde_json::to_string(w).unwrap_or_default())
                .unwrap_or_default();
            writeln!(out, "  FAIL {} [{}] {witness}", c.id, c.anchor)?;
        }
    }
    Ok(())
}

/// Executes a parsed command line, returning the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let mut limits = Limits::default();
    if let Some(max_n) = cli.max_n {
        limits = limits.with_max_n(max_n);
    }
    let io = |e: std::io::Error| Error::Parse(format!("output error: {e}"));
    match &cli.command {
        Command::Tableaux { n } => {
            json_line(out, &cmd_tableaux(*n, &limits)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Operator {
            tableau,
            kind,
            matrix_dim,
        } => {
            let op = cmd_operator(&parse_tableau(tableau)?, *kind, &limits)?;
            match matrix_dim {
                Some(dim) => json_line(out, &TensorOperator::realize_with(&op, *dim, &limits)?),
                None => json_line(out, &op),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Dims { n, dims, json } => {
            let mut code = EXIT_OK;
            for &dim in dims {
                let table = cmd_dims(*n, dim, &limits)?;
                if !table.consistent {
                    code = EXIT_CHECK_FAILED;
                }
                if *json {
                    json_line(out, &table)
                } else {
                    render_dims(out, &table)
                }
                .map_err(io)?;
            }
            Ok(code)
        }
        Command::Trace { tableau, kind, dims } => {
            json_line(out, &cmd_trace(&parse_tableau(tableau)?, *kind, dims, &limits)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            dims,
            suites,
            json_out,
        } => {
            let run = cmd_verify(*n, dims, suites, &limits)?;
            render_run(out, &run).map_err(io)?;
            if let Some(path) = json_out {
                let text = serde_json::to_string_pretty(&run).map_err(|e| Error::Parse(e.to_string()))?;
                std::fs::write(path, text + "\n").map_err(io)?;
            }
            Ok(if run.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("hy").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(&cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn tableaux_command() {
        let (code, out) = run_args(&["tableaux", "--n", "3"]);
        assert_eq!(code, 0);
        let list: Vec<YoungTableau> = serde_json::from_str(&out).unwrap();
        assert_eq!(list.len(), 4);
        let (_, out) = run_args(&["tableaux", "--n", "1"]);
        assert_eq!(out.trim(), r#"[{"shape":[1],"rows":[[1]]}]"#);
        assert_eq!(cmd_tableaux(5, &Limits::default()).unwrap().len(), 26);
        assert!(cmd_tableaux(8, &Limits::default()).is_err());
        assert_eq!(cmd_tableaux(8, &Limits::default().with_max_n(8)).unwrap().len(), 764);
    }

    #[test]
    fn operator_command() {
        let (_, out) = run_args(&["operator", "12", "--kind", "conventional"]);
        assert_eq!(
            out.trim(),
            r#"{"n":2,"terms":[{"perm":[1,2],"coeff":"1/2"},{"perm":[2,1],"coeff":"1/2"}]}"#
        );
        let (_, out) = run_args(&["operator", "12/3", "--kind", "hermitian"]);
        let p: AlgebraElement = serde_json::from_str(&out).unwrap();
        let perms: Vec<_> = p.terms().map(|(q, _)| q.clone()).collect();
        let inverted: std::collections::BTreeSet<_> = perms.iter().map(|q| q.inverse()).collect();
        assert_eq!(perms.into_iter().collect::<std::collections::BTreeSet<_>>(), inverted);
        let (_, out) = run_args(&["operator", "123/45", "--kind", "conventional"]);
        let y: AlgebraElement = serde_json::from_str(&out).unwrap();
        assert_eq!(y, crate::young_operator(&"123/45".parse().unwrap()).unwrap());
        let (_, out) = run_args(&["operator", "1/2", "--matrix-N", "2"]);
        assert_eq!(out.trim(), r#"{"n":2,"N":2,"entries":[[1,1,"1/2"],[1,2,"-1/2"],[2,1,"-1/2"],[2,2,"1/2"]]}"#);
    }

    #[test]
    fn operator_errors() {
        let cli = Cli::try_parse_from(["hy", "operator", "21"]).unwrap();
        assert!(matches!(run(&cli, &mut Vec::new()), Err(Error::NonStandard(_))));
        let cli = Cli::try_parse_from(["hy", "operator", "1x"]).unwrap();
        assert!(matches!(run(&cli, &mut Vec::new()), Err(Error::Parse(_))));
    }

    #[test]
    fn dims_command() {
        let t = cmd_dims(3, 3, &Limits::default()).unwrap();
        let dims: Vec<&str> = t.rows.iter().map(|r| r.dim.as_str()).collect();
        assert_eq!(dims, vec!["10", "8", "1", "8"]);
        assert_eq!(t.total, "27");
        let t = cmd_dims(2, 1, &Limits::default()).unwrap();
        let dims: Vec<&str> = t.rows.iter().map(|r| r.dim.as_str()).collect();
        assert_eq!(dims, vec!["1", "0"]);
        let t = cmd_dims(5, 3, &Limits::default()).unwrap();
        assert!(t.consistent);
        assert_eq!(t.total, "243");
        let (code, out) = run_args(&["dims", "--n", "3", "--N", "3", "--N", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("sum = 27 (N^n = 27) ok") && out.contains("sum = 8 (N^n = 8) ok"));
    }

    #[test]
    fn trace_command() {
        let t = parse_tableau("12/3").unwrap();
        let tr = cmd_trace(&t, OperatorKind::Conventional, &[3], &Limits::default()).unwrap();
        assert_eq!(tr.polynomial, t.shape().dimension_ratio());
        assert_eq!(tr.values, vec![(3, "8".to_string())]);
        let (_, out) = run_args(&["trace", "12/3", "--kind", "hermitian"]);
        assert!(out.starts_with(r#"{"tableau":"12/3","polynomial":{"coeffs":{"0":"0","1":"-1/3","3":"1/3"}}"#));
    }

    #[test]
    fn verify_command() {
        let (code, out) = run_args(&["verify", "--n", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let (code, out) = run_args(&["verify", "--n", "5", "--suite", "conventional-transversality"]);
        assert_eq!(code, EXIT_CHECK_FAILED);
        assert!(out.contains(r#""left":"123/45","right":"135/24""#), "{out}");
        let cli = Cli::try_parse_from(["hy", "verify", "--n", "3", "--suite", "nope"]).unwrap();
        assert_eq!(run(&cli, &mut Vec::new()), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn verify_json_out() {
        let dir = std::env::temp_dir().join(format!("hy-verify-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("report.json");
        let (code, _) = run_args(&[
            "verify", "--n", "3", "--N", "2", "--suite", "tensor", "--json-out", path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["reports"][0]["suite"], "tensor");
        assert_eq!(v["reports"][0]["summary"]["failed"], 0);
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn max_n_override() {
        let cli = Cli::try_parse_from(["hy", "--max-n", "3", "tableaux", "--n", "4"]).unwrap();
        assert!(matches!(run(&cli, &mut Vec::new()), Err(Error::OutOfRange { n: 4, max: 3 })));
    }
}
