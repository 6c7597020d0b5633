//! `uacg`: spectra, energies and verification scans for unitary addition
//! Cayley graphs.
//!
//! Exit codes: 0 success, 1 a failed check, 2 invalid arguments, 3 no closed
//! form, 4 disconnected graph.

mod output;

use std::io;
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uacg_core::closedforms::{cf_energy, cf_spectrum};
use uacg_core::linalg::{energy, spectrum_equal, Spectrum};
use uacg_core::verify::{scan, Instance, Status, DEFAULT_TOL};
use uacg_core::{Error, Family, GraphKind, MatrixFamily};

use output::{Emitter, Format, Payload, Record};

#[derive(Parser)]
#[command(name = "uacg", version, about = "Spectra and energies of unitary addition Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum of one matrix.
    Spectrum(MatrixArgs),
    /// Print the energy of one matrix about its centering constant.
    Energy(MatrixArgs),
    /// Check closed forms, bounds and identities at one n or a range.
    Verify(CheckArgs),
    /// Same checks over a range of n, in parallel.
    Scan(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseGraph {
    Uacg,
    Ucg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    ClosedForm,
    Oracle,
    Both,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    n: u64,
    /// adjacency, laplacian, signless, signless-complement, distance,
    /// distance-laplacian, distance-signless (or the long matrix names).
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value_t = BaseGraph::Uacg)]
    graph: BaseGraph,
    #[arg(long)]
    complement: bool,
    /// Defaults to `oracle` for spectra and `closed-form` for energies.
    #[arg(long, value_enum)]
    source: Option<Source>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, conflicts_with_all = ["n_from", "n_to"])]
    n: Option<u64>,
    #[arg(long, requires = "n_to")]
    n_from: Option<u64>,
    #[arg(long, requires = "n_from")]
    n_to: Option<u64>,
    /// Comma-separated family names, or `all`.
    #[arg(long, default_value = "all")]
    families: String,
    /// Relative tolerance; falls back to UACG_TOL, then 1e-8.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::NoClosedForm { .. }) => 3,
            Failure::Core(Error::DisconnectedGraph { .. }) => 4,
            Failure::Core(Error::OutOfRange { .. } | Error::ZeroArgument | Error::TooLarge { .. }) => 2,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }
}

fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match (flag, std::env::var("UACG_TOL")) {
        (Some(t), _) => t,
        (None, Ok(s)) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("UACG_TOL is not a number: `{s}`")))?,
        (None, Err(_)) => DEFAULT_TOL,
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

fn jobs() -> Result<Option<usize>, Failure> {
    match std::env::var("UACG_JOBS") {
        Ok(s) => s
            .trim()
            .parse::<NonZeroUsize>()
            .map(|j| Some(j.get()))
            .map_err(|_| Failure::Usage(format!("UACG_JOBS must be a positive integer, got `{s}`"))),
        Err(_) => Ok(None),
    }
}

struct Selection {
    label: &'static str,
    matrix: MatrixFamily,
    kind: GraphKind,
}

fn select(args: &MatrixArgs) -> Result<Selection, Failure> {
    let (label, matrix, complement) = if let Ok(f) = args.family.parse::<Family>() {
        let complement = args.complement || f == Family::SignlessComplement;
        (f.name(), f.matrix_family(), complement)
    } else if let Ok(m) = args.family.parse::<MatrixFamily>() {
        (m.name(), m, args.complement)
    } else {
        return Err(Failure::Usage(format!("unknown family `{}`", args.family)));
    };
    let base = match args.graph {
        BaseGraph::Uacg => GraphKind::Uacg,
        BaseGraph::Ucg => GraphKind::Ucg,
    };
    let kind = if complement { base.complement() } else { base };
    Ok(Selection { label, matrix, kind })
}

/// G_n and X_n are isomorphic for even `n`, so X_n borrows the G_n results there.
fn closed_form_family(sel: &Selection, n: u64) -> Result<Family, Error> {
    let kind = match sel.kind {
        GraphKind::Ucg if n.is_multiple_of(2) => GraphKind::Uacg,
        GraphKind::UcgComplement if n.is_multiple_of(2) => GraphKind::UacgComplement,
        k => k,
    };
    Family::from_graph(kind, sel.matrix).ok_or(Error::NoClosedForm {
        family: sel.matrix.name(),
        n,
    })
}

fn wants(source: Source) -> (bool, bool) {
    (source != Source::Oracle, source != Source::ClosedForm)
}

fn run_spectrum(args: &MatrixArgs, command: String) -> Result<u8, Failure> {
    let sel = select(args)?;
    let n = args.n;
    let mut inst = Instance::new(n)?;
    if sel.matrix.needs_distances() {
        inst.distances(sel.kind)?;
    }
    let (want_cf, want_oracle) = wants(args.source.unwrap_or(Source::Oracle));
    let cf = if want_cf {
        Some(cf_spectrum::<f64>(closed_form_family(&sel, n)?, n)?)
    } else {
        None
    };
    let oracle = if want_oracle { Some(inst.oracle(sel.kind, sel.matrix)?) } else { None };

    let tol = tolerance(None)?;
    let (deviation, agree) = match (&cf, &oracle) {
        (Some(a), Some(b)) => {
            let cmp = spectrum_equal(a, b, tol);
            (Some(cmp.max_deviation().unwrap_or(f64::INFINITY)), cmp.is_equal())
        }
        _ => (None, true),
    };

    let mut out = Emitter::new(args.format, command, io::stdout().lock());
    let record = |source: &'static str, s: &Spectrum<f64>| Record {
        n,
        family: sel.label.to_owned(),
        payload: Payload::Spectrum {
            graph: sel.kind.name(),
            source,
            entries: s.entries().to_vec(),
            max_deviation: deviation,
        },
    };
    if let Some(s) = &cf {
        out.emit(&record("closed-form", s))?;
    }
    if let Some(s) = &oracle {
        out.emit(&record("oracle", s))?;
    }
    out.finish()?;
    Ok(if agree { 0 } else { 1 })
}

fn run_energy(args: &MatrixArgs, command: String) -> Result<u8, Failure> {
    let sel = select(args)?;
    let n = args.n;
    let mut inst = Instance::new(n)?;
    if sel.matrix.needs_distances() {
        inst.distances(sel.kind)?;
    }
    let (want_cf, want_oracle) = wants(args.source.unwrap_or(Source::ClosedForm));
    let cf = if want_cf {
        Some(cf_energy::<f64>(closed_form_family(&sel, n)?, n)?)
    } else {
        None
    };
    let oracle = if want_oracle {
        let shift = inst.oracle_shift(sel.kind, sel.matrix)?;
        Some(energy(&inst.oracle(sel.kind, sel.matrix)?, shift))
    } else {
        None
    };

    let tol = tolerance(None)?;
    let (deviation, agree) = match (&cf, &oracle) {
        (Some(a), Some(b)) => {
            let scale = a.energy.value.abs().max(b.value.abs()).max(1.0);
            let d = (a.energy.value - b.value).abs() / scale;
            (Some(d), d <= tol)
        }
        _ => (None, true),
    };

    let mut out = Emitter::new(args.format, command, io::stdout().lock());
    let payload = |source, value, shift, caveat| Payload::Energy {
        graph: sel.kind.name(),
        source,
        value,
        shift,
        caveat,
        max_deviation: deviation,
    };
    if let Some(e) = &cf {
        let caveat = e.caveat.map(|c| (c.formula_value, c.note));
        out.emit(&Record {
            n,
            family: sel.label.to_owned(),
            payload: payload("closed-form", e.energy.value, e.energy.shift, caveat),
        })?;
    }
    if let Some(e) = &oracle {
        out.emit(&Record {
            n,
            family: sel.label.to_owned(),
            payload: payload("oracle", e.value, e.shift, None),
        })?;
    }
    out.finish()?;
    Ok(if agree { 0 } else { 1 })
}

fn parse_families(list: &str) -> Result<Vec<Family>, Failure> {
    if list.trim() == "all" {
        return Ok(Family::ALL.to_vec());
    }
    let mut families = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let f = name
            .parse::<Family>()
            .map_err(|_| Failure::Usage(format!("unknown family `{name}`")))?;
        if !families.contains(&f) {
            families.push(f);
        }
    }
    if families.is_empty() {
        return Err(Failure::Usage("no families given".into()));
    }
    Ok(families)
}

fn run_checks(args: &CheckArgs, command: String) -> Result<u8, Failure> {
    let range = match (args.n, args.n_from, args.n_to) {
        (Some(n), _, _) => n..=n,
        (None, Some(a), Some(b)) => a..=b,
        _ => return Err(Failure::Usage("give --n or both --n-from and --n-to".into())),
    };
    let families = parse_families(&args.families)?;
    let tol = tolerance(args.tol)?;
    let report = scan(range, &families, tol, jobs()?)?;

    let mut out = Emitter::new(args.format, command, io::stdout().lock());
    for r in &report.reports {
        out.emit(&Record {
            n: r.n,
            family: r.family.clone(),
            payload: Payload::Report(r.clone()),
        })?;
    }
    out.finish()?;
    eprintln!(
        "pass {} fail {} caveat {} not-applicable {}",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Caveat),
        report.count(Status::NotApplicable)
    );
    Ok(if report.has_failures() { 1 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = match &cli.command {
        Command::Spectrum(a) => run_spectrum(a, command),
        Command::Energy(a) => run_energy(a, command),
        Command::Verify(a) | Command::Scan(a) => run_checks(a, command),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("uacg: {msg}"),
                Failure::Core(e) => eprintln!("uacg: {e}"),
                Failure::Io(e) => eprintln!("uacg: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}
