//! The `chromsym` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input,
//! 3 a resource cap was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use chromsym::basis::{verify_basis, BasisReport, GraphFamily};
use chromsym::chromatic::subset_expansion;
use chromsym::closed_forms::NamedFamily;
use chromsym::limits::{ENV_LATTICE_CAP, ENV_ORACLE_BUDGET, ENV_SUBSET_CAP, ENV_WORKERS};
use chromsym::symfunc::format_coeff;
use chromsym::{Basis, Cap, Error, Graph, Limits, SymFunc};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions and chromatic bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub caps: CapArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print per-check detail in text output.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    /// Largest edge count for the subset expansion.
    #[arg(long, env = ENV_SUBSET_CAP, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub subset_cap: Option<u64>,
    /// Largest vertex count for contraction lattices.
    #[arg(long, env = ENV_LATTICE_CAP, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub lattice_cap: Option<u64>,
    /// Largest number of colorings `k^n` the coloring oracle may visit.
    #[arg(long, env = ENV_ORACLE_BUDGET, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_budget: Option<u64>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = ENV_WORKERS, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

impl CapArgs {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(v) = self.subset_cap {
            limits.subset_edges = v as usize;
        }
        if let Some(v) = self.lattice_cap {
            limits.lattice_vertices = v as usize;
        }
        if let Some(v) = self.oracle_budget {
            limits.oracle_budget = v as u128;
        }
        limits.workers = self.workers.map(|w| w as usize);
        limits
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    P,
    E,
    M,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::P => Basis::P,
            BasisArg::E => Basis::E,
            BasisArg::M => Basis::M,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Complete,
    Star,
    Path,
    Cycle,
}

impl From<FamilyArg> for NamedFamily {
    fn from(f: FamilyArg) -> NamedFamily {
        match f {
            FamilyArg::Complete => NamedFamily::Complete,
            FamilyArg::Star => NamedFamily::Star,
            FamilyArg::Path => NamedFamily::Path,
            FamilyArg::Cycle => NamedFamily::Cycle,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// X_G of a graph file by the subset expansion.
    Compute {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
    },
    /// X of a named family member from its closed form.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
    },
    /// Check that a family yields a basis for every degree up to --max.
    Verify {
        #[arg(long, value_enum, conflicts_with = "custom", required_unless_present = "custom")]
        family: Option<FamilyArg>,
        /// Family file (JSON) listing generator graph files.
        #[arg(long)]
        custom: Option<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Schur expansion and positivity verdict.
    Schur {
        #[arg(long, conflicts_with_all = ["family", "n"], required_unless_present = "family")]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, requires = "n")]
        family: Option<FamilyArg>,
        #[arg(long, requires = "family", value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
}

/// Parses `args` (program name first) and runs, writing results to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_cap() {
        EXIT_CAP
    } else {
        EXIT_INPUT
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::CapExceeded { cap, .. } => {
            let (var, flag) = match cap {
                Cap::SubsetEdges => (ENV_SUBSET_CAP, "--subset-cap"),
                Cap::LatticeVertices => (ENV_LATTICE_CAP, "--lattice-cap"),
                Cap::OracleBudget => (ENV_ORACLE_BUDGET, "--oracle-budget"),
            };
            format!("{e} (raise with {flag} or {var})")
        }
        _ => e.to_string(),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    writeln!(out, "{text}").map_err(|source| Error::Io { path: "<stdout>".into(), source })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn print_expansion(cli: &Cli, out: &mut dyn Write, x: &SymFunc) -> Result<(), Error> {
    match cli.format {
        Format::Text => emit(out, &x.to_string()),
        Format::Json => emit(out, &to_json(x)),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let limits = cli.caps.limits();
    match &cli.command {
        Command::Compute { graph, basis } => {
            let g = Graph::load(graph)?;
            let x = subset_expansion(&g, &limits)?.convert((*basis).into())?;
            print_expansion(cli, out, &x)?;
            Ok(EXIT_OK)
        }
        Command::Generate { family, n, basis } => {
            let x = NamedFamily::from(*family).closed_form(*n as usize)?.convert((*basis).into())?;
            print_expansion(cli, out, &x)?;
            Ok(EXIT_OK)
        }
        Command::Verify { family, custom, max } => {
            let family = match (family, custom) {
                (Some(f), _) => GraphFamily::named((*f).into()),
                (None, Some(spec)) => GraphFamily::load_family_file(spec)?,
                (None, None) => unreachable!("clap requires one of --family, --custom"),
            };
            verify(cli, out, &family, *max as usize, &limits)
        }
        Command::Schur { graph, family, n } => {
            let x = match (graph, family, n) {
                (Some(path), _, _) => subset_expansion(&Graph::load(path)?, &limits)?,
                (None, Some(f), Some(n)) => NamedFamily::from(*f).closed_form(*n as usize)?,
                _ => unreachable!("clap requires --graph or --family with --n"),
            };
            let verdict = x.is_schur_positive()?;
            match cli.format {
                Format::Text => {
                    emit(out, &verdict.expansion.to_string())?;
                    emit(out, &verdict.describe())?;
                }
                Format::Json => {
                    let witness = verdict.witness.as_ref().map(|(mu, c)| {
                        json!({ "partition": mu, "coeff": format_coeff(c) })
                    });
                    let value = json!({
                        "positive": verdict.positive,
                        "witness": witness,
                        "expansion": verdict.expansion,
                    });
                    emit(out, &to_json(&value))?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Closed form against the subset expansion of `G_n`, for built-in families.
#[derive(serde::Serialize)]
struct ClosedFormCheck {
    degree: usize,
    status: &'static str,
    detail: String,
}

fn closed_form_check(f: NamedFamily, n: usize, limits: &Limits) -> Result<ClosedFormCheck, Error> {
    let g = f.graph(n)?;
    if g.edge_count() > limits.subset_edges {
        return Ok(ClosedFormCheck {
            degree: n,
            status: "skipped",
            detail: format!("{} edges exceed the subset-edge cap", g.edge_count()),
        });
    }
    let closed = f.closed_form(n)?;
    let direct = subset_expansion(&g, limits)?;
    Ok(if closed == direct {
        ClosedFormCheck { degree: n, status: "pass", detail: "closed form equals subset expansion".into() }
    } else {
        ClosedFormCheck { degree: n, status: "fail", detail: format!("closed form {closed}, subset expansion {direct}") }
    })
}

fn verify(cli: &Cli, out: &mut dyn Write, family: &GraphFamily, max: usize, limits: &Limits) -> Result<i32, Error> {
    let mut reports: Vec<BasisReport> = Vec::with_capacity(max);
    let mut closed: Vec<ClosedFormCheck> = Vec::new();
    for n in 1..=max {
        reports.push(verify_basis(family, n, limits)?);
        if let Some(f) = family.named_family() {
            closed.push(closed_form_check(f, n, limits)?);
        }
    }
    let first_failure = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| (r.degree, c.name.clone(), c.detail.clone())))
        .or_else(|| {
            closed.iter().find(|c| c.status == "fail").map(|c| (c.degree, "closed-form".to_string(), c.detail.clone()))
        });
    let passed = first_failure.is_none();
    match cli.format {
        Format::Json => {
            let value = json!({
                "family": family.name(),
                "max": max,
                "passed": passed,
                "first_failure": first_failure.as_ref().map(|(n, check, detail)| {
                    json!({ "family": family.name(), "n": n, "check": check, "detail": detail })
                }),
                "degrees": reports,
                "closed_forms": closed,
            });
            emit(out, &to_json(&value))?;
        }
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                let mut line = format!(
                    "{} n={}: {} (determinant {})",
                    r.family,
                    r.degree,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.determinant
                );
                if let Some(c) = closed.get(i) {
                    line.push_str(&format!(", closed form {}", c.status));
                }
                emit(out, &line)?;
                if cli.verbose {
                    for c in &r.checks {
                        emit(out, &format!("  {:<16} {:?}: {}", c.name, c.status, c.detail))?;
                    }
                }
            }
            match &first_failure {
                None => emit(out, "PASS")?,
                Some((n, check, detail)) => {
                    emit(out, &format!("FAIL: family {}, n={n}, check {check}: {detail}", family.name()))?
                }
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}
