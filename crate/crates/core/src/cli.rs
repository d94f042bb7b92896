//! Command-line front end. [`run`] is pure apart from reading input files:
//! it returns the exit code and both output streams instead of printing.
//!
//! Exit codes: 0 success, 1 validation failure, 2 undefined invariant,
//! 3 parse or usage error, 4 budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::calculus::{
    accessibility_edge_bound, fixed_subgroup_complexity_bound, rank_gradient_graph, torsion_free_edge_bound,
    InvariantReport, Value,
};
use crate::decompose::{amalgam_finite_index, free_product_finite_index, hnn_finite_index};
use crate::descriptor::Norm;
use crate::error::Error;
use crate::graph::{GraphOfGroups, Severity};
use crate::oracle::{build_group, enumerate_subgroups, hom_count_surface, mednykh_eval, Budget};
use crate::rational::Rational;
use crate::{gogfile, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_UNDEFINED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "gogchi", version, about = "Exact invariants of graphs of groups with finite edge groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print omega, rg, b1l2, vb and vc of a graph of groups
    Invariants { file: PathBuf },
    /// Free-product decomposition of a guaranteed finite-index subgroup
    Decompose {
        #[command(subcommand)]
        op: DecomposeOp,
    },
    /// Count homomorphisms from a surface group by irrep dimensions
    Mednykh {
        group: String,
        genus: u64,
        /// Also count by exhausting tuples
        #[arg(long)]
        brute_force: bool,
    },
    /// List the subgroups of A * B of index at most --max-index
    EnumerateSubgroups {
        a: String,
        b: String,
        #[arg(long)]
        max_index: usize,
        /// Raise the permutation-degree budget (default 7)
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run oracle cross-check suites
    Verify {
        /// One of: mednykh, kurosh, rank-gradient, decomposition-chi, dihedral-count
        #[arg(long)]
        suite: Option<String>,
        /// Permutation-degree budget (default 9)
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Accessibility and fixed-subgroup bounds for a minimal graph
    Bounds {
        file: PathBuf,
        /// Override the largest finite subgroup order of the graph
        #[arg(long)]
        norm: Option<u64>,
        /// Index of a characteristic torsion-free subgroup N
        #[arg(long, requires = "fix_omega")]
        fix_index: Option<u64>,
        /// omega(N) for that subgroup
        #[arg(long, requires = "fix_index", allow_hyphen_values = true, value_parser = parse_rational)]
        fix_omega: Option<Rational>,
    },
}

#[derive(Debug, Subcommand)]
enum DecomposeOp {
    /// Index-s subgroup of G1 * G2 from subgroups of index m and n
    FreeProduct { m: u64, n: u64, s: u64 },
    /// Index-k subgroup of an HNN extension over a group of order c
    Hnn { k: u64, c: u64 },
    /// Subgroup of an amalgam over a group of order c
    Amalgam { n1: u64, n2: u64, c: u64 },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|_| format!("expected p/q or an integer, got {s:?}"))
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, stdout: String, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout, stderr: format!("error: {msg}\n") }
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_) | Error::Inconsistent(_) => EXIT_VALIDATION,
        Error::Undefined { .. } => EXIT_UNDEFINED,
        Error::BudgetExceeded(_) | Error::Overflow(_) => EXIT_BUDGET,
        _ => EXIT_PARSE,
    }
}

/// Runs the CLI on `args`, where `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut out = String::new();
    let mut err = String::new();
    match dispatch(cli.command, &mut out, &mut err) {
        Ok(code) => Outcome { code, stdout: out, stderr: err },
        Err(e) => {
            let mut o = Outcome::fail(exit_code(&e), out, &e);
            o.stderr.insert_str(0, &err);
            o
        }
    }
}

fn load(path: &PathBuf, err: &mut String) -> crate::Result<GraphOfGroups> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let g = gogfile::parse(&text)?;
    let report = g.validate();
    for issue in report.issues.iter().filter(|i| i.severity != Severity::Violation) {
        writeln!(err, "{issue}").unwrap();
    }
    if !report.is_valid() {
        return Err(Error::Validation(report));
    }
    Ok(g)
}

fn dispatch(cmd: Command, out: &mut String, err: &mut String) -> crate::Result<i32> {
    match cmd {
        Command::Invariants { file } => {
            let g = load(&file, err)?;
            let report = InvariantReport::compute(&g)?;
            let mut code = EXIT_OK;
            for (name, value) in report.entries() {
                if matches!(value, Value::Undefined(_)) {
                    code = EXIT_UNDEFINED;
                }
                writeln!(out, "{name} = {value}").unwrap();
            }
            Ok(code)
        }
        Command::Decompose { op } => {
            let d = match op {
                DecomposeOp::FreeProduct { m, n, s } => {
                    let d = free_product_finite_index(m, n, s)?;
                    if let Some(p) = d.printed_free_rank.filter(|&p| p != d.free_rank) {
                        writeln!(err, "note: the product formula (s/m-1)(s/n-1) gives {p}; {} is the Euler-consistent rank", d.free_rank).unwrap();
                    }
                    d
                }
                DecomposeOp::Hnn { k, c } => hnn_finite_index(k, c)?,
                DecomposeOp::Amalgam { n1, n2, c } => amalgam_finite_index(n1, n2, c)?,
            };
            writeln!(out, "{d}").unwrap();
            Ok(EXIT_OK)
        }
        Command::Mednykh { group, genus, brute_force } => {
            let t = build_group(&group)?;
            let formula = mednykh_eval(genus, &t)?;
            writeln!(out, "formula = {formula}").unwrap();
            if !brute_force {
                return Ok(EXIT_OK);
            }
            let count = hom_count_surface(genus, &t, &Budget::default())?;
            writeln!(out, "brute_force = {count}").unwrap();
            if count == formula {
                writeln!(out, "MATCH").unwrap();
                Ok(EXIT_OK)
            } else {
                writeln!(out, "MISMATCH").unwrap();
                Ok(EXIT_VALIDATION)
            }
        }
        Command::EnumerateSubgroups { a, b, max_index, max_degree } => {
            let (ta, tb) = (build_group(&a)?, build_group(&b)?);
            let budget = Budget { max_degree: max_degree.unwrap_or(Budget::default().max_degree), ..Budget::default() };
            if max_index == 0 {
                return Err(Error::InvalidInput("--max-index must be ≥ 1".into()));
            }
            for s in 1..=max_index {
                for c in enumerate_subgroups(&ta, &tb, s, &budget)? {
                    writeln!(out, "{c}").unwrap();
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_degree } => {
            let budget = Budget { max_degree: max_degree.unwrap_or(Budget::extended().max_degree), ..Budget::default() };
            let checks = match suite {
                Some(s) => verify::run_suite(&s, &budget)?,
                None => verify::run_all(&budget)?,
            };
            let failed = checks.iter().filter(|c| !c.passed()).count();
            for c in &checks {
                writeln!(out, "{c}").unwrap();
            }
            writeln!(out, "{} passed, {failed} failed", checks.len() - failed).unwrap();
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Bounds { file, norm, fix_index, fix_omega } => {
            let g = load(&file, err)?;
            if !g.non_minimal_edges().is_empty() {
                let mut report = g.validate();
                report.promote_warnings_to_violations();
                return Err(Error::Validation(report));
            }
            let norm = norm.map(Norm::Finite).unwrap_or_else(|| g.norm());
            let rg = rank_gradient_graph(&g)?;
            writeln!(out, "norm = {norm}").unwrap();
            writeln!(out, "rg = {rg}").unwrap();
            let mut code = EXIT_OK;
            match accessibility_edge_bound(norm, rg) {
                Ok(k) => writeln!(out, "accessibility_edge_bound = {k}").unwrap(),
                Err(Error::Undefined { reason, .. }) => {
                    writeln!(out, "accessibility_edge_bound = undefined:{reason}").unwrap();
                    code = EXIT_UNDEFINED;
                }
                Err(e) => return Err(e),
            }
            if norm == Norm::Finite(1) {
                writeln!(out, "torsion_free_edge_bound = {}", torsion_free_edge_bound(rg)?).unwrap();
            }
            if let (Some(n), Some(w)) = (fix_index, fix_omega) {
                writeln!(out, "fixed_subgroup_complexity_bound = {}", fixed_subgroup_complexity_bound(n, w)?).unwrap();
            }
            Ok(code)
        }
    }
}
