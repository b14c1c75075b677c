//! Command-line front end: argument parsing, matrix files and report output.

mod matrix_file;

pub use matrix_file::{parse_matrix_file, read_matrix_file};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classify::{
    classify_prime_set_with, classify_with, enumerate_orbits, search_prime_sets, CensusLabel,
    ClassificationReport, Mode, OrbitCensus,
};
use crate::error::{Error, Result};
use crate::field_linalg::FieldCtx;
use crate::lie::{poincare_residual, quotient_dims, series_check, GENERATORS};
use crate::reduction::LineLabel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "quadpres",
    version,
    about = "Classify quadratic presentations of 4-generator pro-p groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a prime set or a relator matrix.
    Classify(ClassifyArgs),
    /// Print graded dimensions a_1..a_c.
    Dims(DegreeArgs),
    /// Search 4-subsets of primes = 1 mod p.
    Search(SearchArgs),
    /// Orbit census of lines or planes.
    Enumerate(EnumerateArgs),
    /// Residual of prod (1-t^n)^{a_n} against 1 - 4t + 4t^2.
    Poincare(DegreeArgs),
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, requires = "primes", conflicts_with = "matrix")]
    p: Option<u64>,
    /// Four comma-separated primes.
    #[arg(long, value_delimiter = ',', requires = "p")]
    primes: Option<Vec<u64>>,
    /// Relator matrix file.
    #[arg(long, required_unless_present = "p")]
    matrix: Option<PathBuf>,
    /// Run all three classification routes.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct DegreeArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    max_prime: u64,
    #[arg(long)]
    orbit: Option<u8>,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    json: bool,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
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
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Dims(a) => cmd_dims(&a, out),
        Command::Search(a) => cmd_search(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Poincare(a) => cmd_poincare(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InternalInvariantViolation(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("output: {e}"))
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<()> {
    let mode = if a.verify { Mode::Verify } else { Mode::Fast };
    let report = match (&a.matrix, a.p, &a.primes) {
        (Some(path), _, _) => {
            let q = read_matrix_file(path)?;
            classify_with(&q, mode)?
        }
        (None, Some(p), Some(primes)) => {
            let q: [u64; 4] = primes
                .as_slice()
                .try_into()
                .map_err(|_| Error::Parse(format!("expected 4 primes, got {}", primes.len())))?;
            classify_prime_set_with(p, q, mode)?
        }
        _ => return Err(Error::Parse("give --p with --primes, or --matrix".into())),
    };
    if a.json {
        let text =
            serde_json::to_string_pretty(&report).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(out, "{text}").map_err(io)
    } else {
        write_report(&report, out).map_err(io)
    }
}

fn label_or_dash<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref()
        .map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_report(r: &ClassificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "p: {}", r.p)?;
    if let Some(d) = &r.linking {
        writeln!(out, "primes: {}", join(&d.primes.q))?;
        writeln!(out, "primitive roots: {}", join(&d.roots))?;
        for row in &d.l {
            writeln!(out, "linking: {}", join(row))?;
        }
    }
    match r.orbit {
        Some(o) => writeln!(out, "orbit: {o}")?,
        None => writeln!(out, "orbit: none")?,
    }
    writeln!(out, "mild: {}", yes_no(r.mild))?;
    writeln!(out, "dims: {}", join(r.dims.as_slice()))?;
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {w}")?;
    }
    for row in r.complement.basis().row_vecs() {
        writeln!(out, "complement: {}", join(&row))?;
    }
    writeln!(
        out,
        "methods: reduction {}, invariants {}, quadric {}, agree {}",
        label_or_dash(&r.methods.reduction),
        label_or_dash(&r.methods.invariants),
        label_or_dash(&r.methods.quadric),
        yes_no(r.methods.agree)
    )?;
    for n in &r.notes {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}

fn cmd_dims(a: &DegreeArgs, out: &mut dyn Write) -> Result<()> {
    let q = read_matrix_file(&a.matrix)?;
    let dims = quotient_dims(&q, a.max_degree)?;
    writeln!(out, "{}", join(dims.as_slice())).map_err(io)?;
    writeln!(
        out,
        "strongly-free: {}",
        yes_no(series_check(&dims, GENERATORS as u64))
    )
    .map_err(io)
}

fn cmd_poincare(a: &DegreeArgs, out: &mut dyn Write) -> Result<()> {
    let q = read_matrix_file(&a.matrix)?;
    let dims = quotient_dims(&q, a.max_degree)?;
    let r = poincare_residual(&dims, GENERATORS as u64);
    writeln!(out, "dims: {}", join(dims.as_slice())).map_err(io)?;
    writeln!(out, "residual: {}", join(&r)).map_err(io)?;
    match r.iter().position(|&c| c != 0) {
        Some(n) => writeln!(out, "first nonzero: t^{n}"),
        None => writeln!(out, "zero through t^{}", a.max_degree),
    }
    .map_err(io)
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> Result<()> {
    let hits = search_prime_sets(a.p, a.max_prime, a.orbit)?;
    for h in hits.take(a.limit.unwrap_or(usize::MAX)) {
        if a.json {
            let text = serde_json::to_string(&h).map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)?;
        } else {
            writeln!(
                out,
                "{} orbit {}",
                join(&h.primes.q),
                label_or_dash(&h.orbit)
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

fn census_label(l: &CensusLabel) -> String {
    match l {
        CensusLabel::Line(LineLabel::Decomposable) => "decomposable".into(),
        CensusLabel::Line(LineLabel::Generic) => "generic".into(),
        CensusLabel::Plane(o) => o.to_string(),
    }
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<()> {
    let ctx = FieldCtx::new(a.p)?;
    let c: OrbitCensus = enumerate_orbits(&ctx, a.dim)?;
    if a.json {
        let text = serde_json::to_string_pretty(&c).map_err(|e| Error::Parse(e.to_string()))?;
        return writeln!(out, "{text}").map_err(io);
    }
    writeln!(out, "p: {}  dim: {}  subspaces: {}", c.p, c.dim, c.total).map_err(io)?;
    writeln!(out, "orbits: {}", c.orbits.len()).map_err(io)?;
    for o in &c.orbits {
        let rows: Vec<String> = o
            .representative
            .basis()
            .row_vecs()
            .iter()
            .map(|r| format!("({})", join(r)))
            .collect();
        writeln!(
            out,
            "{}: size {}  representative {}",
            census_label(&o.label),
            o.size,
            rows.join(" ")
        )
        .map_err(io)?;
    }
    Ok(())
}
