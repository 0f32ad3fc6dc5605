//! Command-line front end for the `efimov` library.
//!
//! Five subcommands map onto the library layers:
//!
//! - `two-body`: separable-potential dimer, coupling <-> binding in either
//!   direction, optional bound-state wave-function samples;
//! - `bo-scan`: heavy-heavy adiabatic curve kappa(R) on a log-spaced grid,
//!   with Yukawa-tail reference columns off resonance;
//! - `spectrum`: inverse-square-channel bound states by Bessel zeros,
//!   shooting integration, or the small-argument formula, side by side on
//!   request;
//! - `count`: bound-state number by closed-form, node-counting, and
//!   phase-space routes;
//! - `observables`: three-body recombination length and event rate in
//!   laboratory units.
//!
//! Output contract: one rectangular table per invocation, as CSV with
//! `#`-prefixed provenance lines (tool version and every input, no
//! timestamps) or as a JSON object mirroring the same field names
//! (`--format json`). Reruns with identical arguments produce byte-identical
//! output. Numeric cells carry 12 significant digits by default (`--digits`);
//! a missing value is an empty CSV field or JSON null, never "nan" or "inf".
//!
//! Exit codes: 0 success, 2 usage or validation failure (one-line reason on
//! stderr), 3 domain failure such as no bound state, a subcritical mass
//! ratio, or a scan with no solved point.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use efimov::born_oppenheimer::{
    build_curve, efimov_s0, yukawa_tail, BOCurve, MassConfig,
};
use efimov::observables::{recombination_length, recombination_rate, GasParams, BOHR_RADIUS};
use efimov::semiclassical::count_states_semiclassical;
use efimov::spectrum::{
    count_states_direct, count_states_formula, spectrum_asymptotic, spectrum_bessel,
    spectrum_shooting, InverseSquareProblem, SpectrumResult,
};
use efimov::two_body::{
    binding_from_coupling, bound_wavefunction, coupling_from_binding, critical_coupling,
    DimerState, YamaguchiPotential,
};
use efimov::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "efimov",
    version,
    about = "Dimer, adiabatic-curve, and inverse-square-spectrum calculations as reproducible tables"
)]
struct Cli {
    /// Write the table to this path instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format for the table.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Significant digits for numeric cells in CSV output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=17))]
    digits: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the separable-potential dimer from either the coupling or the
    /// binding wavenumber.
    TwoBody(TwoBodyArgs),
    /// Scan the heavy-heavy adiabatic binding curve over a log-spaced grid
    /// of separations.
    BoScan(BoScanArgs),
    /// Bound states of the attractive inverse-square channel.
    Spectrum(SpectrumArgs),
    /// Number of bound states between the short-range cutoff and the
    /// scattering length.
    Count(CountArgs),
    /// Recombination length and loss rate from a short-range amplitude C(a).
    Observables(ObservablesArgs),
}

#[derive(Args)]
struct TwoBodyArgs {
    /// Form-factor range parameter (inverse length).
    #[arg(long)]
    beta: f64,

    /// Bound-state wavenumber; solves for the coupling.
    #[arg(long, conflicts_with = "lambda")]
    kappa0: Option<f64>,

    /// Coupling strength; solves for the bound state.
    #[arg(long)]
    lambda: Option<f64>,

    /// Emit this many log-spaced bound-state wave-function samples instead
    /// of the scalar table (requires kappa0 > 0).
    #[arg(long, value_name = "POINTS")]
    wavefunction_grid: Option<usize>,
}

#[derive(Args)]
struct BoScanArgs {
    /// Dimer binding wavenumber (0 for the resonant limit).
    #[arg(long)]
    kappa0: f64,

    /// Form-factor range parameter (inverse length).
    #[arg(long)]
    beta: f64,

    /// Heavy-to-light mass ratio.
    #[arg(long)]
    mass_ratio: f64,

    /// Smallest separation in the scan.
    #[arg(long)]
    r_min: f64,

    /// Largest separation in the scan.
    #[arg(long)]
    r_max: f64,

    /// Number of log-spaced grid points.
    #[arg(long)]
    points: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Inverse-square channel strength exponent.
    #[arg(long, conflicts_with = "mass_ratio")]
    s0: Option<f64>,

    /// Heavy-to-light mass ratio; the strength exponent is derived from it.
    #[arg(long)]
    mass_ratio: Option<f64>,

    /// Short-range cutoff radius.
    #[arg(long, default_value_t = 1.0)]
    rc: f64,

    /// Number of shallowest states to compute.
    #[arg(long, default_value_t = 3)]
    n: usize,

    /// Eigenvalue method, or all three side by side.
    #[arg(long, value_enum, default_value_t = Method::Bessel)]
    method: Method,

    /// Outer boundary radius (infinite by default).
    #[arg(long, default_value_t = f64::INFINITY)]
    r_outer: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Bessel,
    Shooting,
    Asymptotic,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bessel => "bessel",
            Method::Shooting => "shooting",
            Method::Asymptotic => "asymptotic",
            Method::All => "all",
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Inverse-square channel strength exponent.
    #[arg(long)]
    s0: f64,

    /// Scattering length over short-range cutoff (must exceed 1).
    #[arg(long)]
    a_over_r0: f64,

    /// Counting method, or all three with pairwise differences.
    #[arg(long, value_enum, default_value_t = CountMethod::All)]
    method: CountMethod,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Formula,
    Direct,
    Semiclassical,
    All,
}

#[derive(Args)]
struct ObservablesArgs {
    /// Scattering length in Bohr radii (either sign).
    #[arg(
        long,
        conflicts_with = "c_table",
        required_unless_present = "c_table",
        allow_negative_numbers = true
    )]
    a: Option<f64>,

    /// Dimensionless short-range amplitude C(a) for the single point.
    #[arg(long, conflicts_with = "c_table")]
    c: Option<f64>,

    /// Two-column CSV of (a in Bohr radii, C) rows; one output row each.
    #[arg(long, value_name = "FILE")]
    c_table: Option<PathBuf>,

    /// Atom number density in 1/m^3; enables the rate column with --mass.
    #[arg(long, requires = "mass")]
    density: Option<f64>,

    /// Atom mass in kg; enables the rate column with --density.
    #[arg(long, requires = "density")]
    mass: Option<f64>,
}

/// One table cell: a number, an exact count, free text, or a missing value.
///
/// Missing values keep the table rectangular without ever printing "nan" or
/// "inf": they render as an empty CSV field and a JSON null.
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Empty,
}

/// A finished result table plus its provenance, rendered late so CSV and
/// JSON come from the same data.
struct Report {
    command: &'static str,
    inputs: Vec<(&'static str, String)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    footer: Vec<(&'static str, Cell)>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            footer: Vec::new(),
        }
    }

    fn input(&mut self, key: &'static str, value: impl ToString) {
        self.inputs.push((key, value.to_string()));
    }

    fn render_csv(&self, digits: u32) -> String {
        let mut out = String::new();
        out.push_str(&format!("# efimov-cli {VERSION}\n"));
        out.push_str(&format!("# command: {}\n", self.command));
        for (key, value) in &self.inputs {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|cell| csv_cell(cell, digits)).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        for (key, value) in &self.footer {
            out.push_str(&format!("# {key} = {}\n", csv_cell(value, digits)));
        }
        out
    }

    fn render_json(&self) -> String {
        let inputs: serde_json::Map<String, serde_json::Value> = self
            .inputs
            .iter()
            .map(|(k, v)| ((*k).to_string(), json!(v)))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| serde_json::Value::Array(row.iter().map(json_cell).collect()))
            .collect();
        let footer: serde_json::Map<String, serde_json::Value> = self
            .footer
            .iter()
            .map(|(k, v)| ((*k).to_string(), json_cell(v)))
            .collect();
        let doc = json!({
            "tool": "efimov-cli",
            "version": VERSION,
            "command": self.command,
            "inputs": inputs,
            "columns": self.columns,
            "rows": rows,
            "footer": footer,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }
}

fn csv_cell(cell: &Cell, digits: u32) -> String {
    match cell {
        Cell::Num(x) => format_sig(*x, digits),
        Cell::Int(n) => n.to_string(),
        Cell::Text(s) => sanitize(s),
        Cell::Empty => String::new(),
    }
}

fn json_cell(cell: &Cell) -> serde_json::Value {
    match cell {
        Cell::Num(x) if x.is_finite() => json!(x),
        Cell::Num(_) => serde_json::Value::Null,
        Cell::Int(n) => json!(n),
        Cell::Text(s) => json!(s),
        Cell::Empty => serde_json::Value::Null,
    }
}

/// Scientific notation with the requested number of significant digits.
fn format_sig(x: f64, digits: u32) -> String {
    format!("{:.*e}", digits as usize - 1, x)
}

/// Keeps free text (error reasons, region labels) from breaking the
/// one-field-per-comma dialect.
fn sanitize(s: &str) -> String {
    s.replace(',', ";").replace('\n', " ")
}

/// Failure that ends the run: usage errors exit 2, domain errors exit 3.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidParameter(_) => Failure::Usage(err.to_string()),
            _ => Failure::Domain(err.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// A rendered report together with the process exit status, which a scan
/// with zero solved points can set to 3 while still emitting its table.
struct Outcome {
    report: Report,
    exit: u8,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Self { report, exit: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::TwoBody(args) => cmd_two_body(args),
        Command::BoScan(args) => cmd_bo_scan(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Count(args) => cmd_count(args),
        Command::Observables(args) => cmd_observables(args),
    };
    let outcome = match outcome {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let text = match cli.format {
        Format::Csv => outcome.report.render_csv(cli.digits),
        Format::Json => outcome.report.render_json(),
    };
    if let Some(path) = &cli.output {
        if let Err(err) = fs::write(path, &text) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(outcome.exit)
}

/// Strictly increasing log-spaced grid from `min` to `max` inclusive.
fn log_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>, Failure> {
    if !(min.is_finite() && min > 0.0) {
        return Err(usage(format!("grid minimum must be finite and > 0, got {min}")));
    }
    if points == 0 {
        return Err(usage("grid needs at least one point".to_string()));
    }
    if points == 1 {
        if min != max {
            return Err(usage("a single-point grid requires r-min = r-max".to_string()));
        }
        return Ok(vec![min]);
    }
    if !(max.is_finite() && max > min) {
        return Err(usage(format!(
            "grid maximum must be finite and > minimum, got {max} vs {min}"
        )));
    }
    let ratio = max / min;
    let mut grid: Vec<f64> = (0..points)
        .map(|i| min * ratio.powf(i as f64 / (points - 1) as f64))
        .collect();
    grid[points - 1] = max;
    Ok(grid)
}

/// Dimer solution table; with `--wavefunction-grid` the body becomes the
/// (r, psi) samples and the scalars move into the provenance header.
fn cmd_two_body(args: &TwoBodyArgs) -> Result<Outcome, Failure> {
    let (pot, method): (YamaguchiPotential, &str) = match (args.kappa0, args.lambda) {
        (Some(kappa0), None) => (coupling_from_binding(kappa0, args.beta)?, "from-kappa0"),
        (None, Some(lambda)) => (YamaguchiPotential::new(lambda, args.beta)?, "from-lambda"),
        _ => {
            return Err(usage(
                "exactly one of --kappa0 and --lambda must be given".to_string(),
            ))
        }
    };
    let state: DimerState = binding_from_coupling(&pot)?;
    let lambda_critical = critical_coupling(args.beta)?;

    let mut report = Report::new("two-body");
    report.input("beta", args.beta);
    report.input("solved", method);

    let scalars: Vec<(&'static str, Cell)> = vec![
        ("lambda", Cell::Num(pot.lambda())),
        ("lambda_critical", Cell::Num(lambda_critical)),
        ("kappa0", Cell::Num(state.kappa0())),
        ("binding_energy", Cell::Num(state.binding_energy())),
        (
            "scattering_length",
            if state.kappa0() > 0.0 {
                Cell::Num(state.scattering_length())
            } else {
                Cell::Empty
            },
        ),
    ];

    match args.wavefunction_grid {
        None => {
            report.columns = vec!["quantity", "value"];
            for (name, value) in scalars {
                report.rows.push(vec![Cell::Text(name.to_string()), value]);
            }
            if state.kappa0() == 0.0 {
                report.footer.push((
                    "note",
                    Cell::Text("scattering length diverges at threshold (kappa0 = 0)".to_string()),
                ));
            }
        }
        Some(points) => {
            if state.kappa0() <= 0.0 {
                return Err(usage(
                    "wave-function samples require a bound state (kappa0 > 0)".to_string(),
                ));
            }
            for (name, value) in &scalars {
                if let Cell::Num(x) = value {
                    report.inputs.push((name, format!("{x}")));
                }
            }
            report.columns = vec!["r", "psi"];
            let grid = log_grid(0.1 / args.beta, 10.0 / state.kappa0(), points)?;
            for r in grid {
                let psi = bound_wavefunction(&state, &pot, r)?;
                report.rows.push(vec![Cell::Num(r), Cell::Num(psi)]);
            }
        }
    }
    Ok(Outcome::ok(report))
}

/// Adiabatic curve scan. Off resonance (kappa0 > 0) two reference columns
/// compare the threshold-relative binding tail against the screened
/// long-range form; on resonance the scattering length is infinite and the
/// base columns are emitted alone. Failed points keep their row with empty
/// numeric fields and the reason in the status column; if no point solves,
/// the exit status is 3.
fn cmd_bo_scan(args: &BoScanArgs) -> Result<Outcome, Failure> {
    let pot = coupling_from_binding(args.kappa0, args.beta)?;
    let dimer = binding_from_coupling(&pot)?;
    let masses = MassConfig::new(args.mass_ratio)?;
    let grid = log_grid(args.r_min, args.r_max, args.points)?;
    let curve: BOCurve = build_curve(&dimer, &pot, &masses, &grid, None)?;
    let with_tail = dimer.kappa0() > 0.0;

    let mut report = Report::new("bo-scan");
    report.input("kappa0", args.kappa0);
    report.input("beta", args.beta);
    report.input("mass_ratio", args.mass_ratio);
    report.input("r_min", args.r_min);
    report.input("r_max", args.r_max);
    report.input("points", args.points);

    report.columns = if with_tail {
        vec!["r", "kappa", "epsilon", "xi_r", "tail_epsilon", "yukawa_tail", "region", "status"]
    } else {
        vec!["r", "kappa", "epsilon", "xi_r", "region", "status"]
    };

    let mut n_ok = 0u64;
    for (r, point) in grid.iter().zip(curve.points()) {
        let row = match point {
            Ok(p) => {
                n_ok += 1;
                let mut row = vec![
                    Cell::Num(p.r()),
                    Cell::Num(p.kappa()),
                    Cell::Num(p.epsilon()),
                    Cell::Num(p.xi() * p.r()),
                ];
                if with_tail {
                    row.push(Cell::Num(p.tail_epsilon()));
                    row.push(match yukawa_tail(p.r(), dimer.scattering_length(), &masses) {
                        Ok(reference) => Cell::Num(reference),
                        Err(_) => Cell::Empty,
                    });
                }
                row.push(Cell::Text(p.region().to_string()));
                row.push(Cell::Text("ok".to_string()));
                row
            }
            Err(err) => {
                let blanks = if with_tail { 6 } else { 4 };
                let mut row = vec![Cell::Num(*r)];
                row.extend((0..blanks).map(|_| Cell::Empty));
                row.push(Cell::Text(format!("error: {err}")));
                row
            }
        };
        report.rows.push(row);
    }
    report.footer.push(("points_solved", Cell::Int(n_ok)));
    report
        .footer
        .push(("points_failed", Cell::Int(grid.len() as u64 - n_ok)));

    let exit = if n_ok == 0 { 3 } else { 0 };
    Ok(Outcome { report, exit })
}

fn spectrum_col(result: &SpectrumResult, n: usize) -> Cell {
    match result.kappas().get(n) {
        Some(&kappa) => Cell::Num(kappa),
        None => Cell::Empty,
    }
}

/// Bound-state table for one method, or all three side by side with the
/// cross-method agreement in the footer. The footer deviation is the
/// shooting-vs-Bessel pair; the small-argument formula carries a known
/// constant offset and is reported on its own line.
fn cmd_spectrum(args: &SpectrumArgs) -> Result<Outcome, Failure> {
    let mut report = Report::new("spectrum");
    let s0 = match (args.s0, args.mass_ratio) {
        (Some(s0), None) => {
            report.input("s0", s0);
            s0
        }
        (None, Some(mass_ratio)) => {
            let s0 = efimov_s0(&MassConfig::new(mass_ratio)?)?;
            report.input("mass_ratio", mass_ratio);
            report.input("s0", s0);
            s0
        }
        _ => {
            return Err(usage(
                "exactly one of --s0 and --mass-ratio must be given".to_string(),
            ))
        }
    };
    report.input("rc", args.rc);
    report.input("r_outer", args.r_outer);
    report.input("n", args.n);
    report.input("method", args.method.name());

    let prob = InverseSquareProblem::new(s0, args.rc, args.r_outer)?;
    if args.n == 0 {
        return Err(usage("--n must be at least 1".to_string()));
    }

    match args.method {
        Method::All => {
            let bessel = spectrum_bessel(&prob, args.n)?;
            let shooting = spectrum_shooting(&prob, args.n)?;
            let asymptotic = spectrum_asymptotic(&prob, args.n)?;
            report.columns = vec![
                "n",
                "kappa_bessel",
                "energy_bessel",
                "ratio_to_next",
                "kappa_shooting",
                "kappa_asymptotic",
            ];
            for n in 0..bessel.n_found() {
                let ratio = match bessel.kappas().get(n + 1) {
                    Some(&next) => Cell::Num(bessel.kappas()[n] / next),
                    None => Cell::Empty,
                };
                report.rows.push(vec![
                    Cell::Int(n as u64 + 1),
                    Cell::Num(bessel.kappas()[n]),
                    Cell::Num(bessel.energies()[n]),
                    ratio,
                    spectrum_col(&shooting, n),
                    spectrum_col(&asymptotic, n),
                ]);
            }
            let max_dev = |other: &SpectrumResult| {
                bessel
                    .kappas()
                    .iter()
                    .zip(other.kappas())
                    .map(|(b, o)| (o / b - 1.0).abs())
                    .fold(0.0f64, f64::max)
            };
            report
                .footer
                .push(("max_shooting_rel_deviation", Cell::Num(max_dev(&shooting))));
            report
                .footer
                .push(("max_asymptotic_rel_offset", Cell::Num(max_dev(&asymptotic))));
        }
        method => {
            let result = match method {
                Method::Bessel => spectrum_bessel(&prob, args.n)?,
                Method::Shooting => spectrum_shooting(&prob, args.n)?,
                Method::Asymptotic => spectrum_asymptotic(&prob, args.n)?,
                Method::All => unreachable!("handled above"),
            };
            report.columns = vec!["n", "kappa", "energy", "ratio_to_next"];
            for n in 0..result.n_found() {
                let ratio = match result.kappas().get(n + 1) {
                    Some(&next) => Cell::Num(result.kappas()[n] / next),
                    None => Cell::Empty,
                };
                report.rows.push(vec![
                    Cell::Int(n as u64 + 1),
                    Cell::Num(result.kappas()[n]),
                    Cell::Num(result.energies()[n]),
                    ratio,
                ]);
            }
            if result.truncated() {
                report
                    .footer
                    .push(("states_found", Cell::Int(result.n_found() as u64)));
            }
        }
    }
    Ok(Outcome::ok(report))
}

/// Bound-state count by each requested route, with pairwise differences in
/// the footer when more than one is computed.
fn cmd_count(args: &CountArgs) -> Result<Outcome, Failure> {
    if !(args.a_over_r0.is_finite() && args.a_over_r0 > 1.0) {
        return Err(usage(format!(
            "--a-over-r0 must be finite and > 1, got {}",
            args.a_over_r0
        )));
    }
    let mut report = Report::new("count");
    report.input("s0", args.s0);
    report.input("a_over_r0", args.a_over_r0);
    let method_name = match args.method {
        CountMethod::Formula => "formula",
        CountMethod::Direct => "direct",
        CountMethod::Semiclassical => "semiclassical",
        CountMethod::All => "all",
    };
    report.input("method", method_name);
    report.columns = vec!["method", "count"];

    let want = |m: CountMethod| args.method == CountMethod::All || args.method == m;
    let mut computed: Vec<(&'static str, f64)> = Vec::new();
    if want(CountMethod::Formula) {
        let n = count_states_formula(args.s0, args.a_over_r0, 1.0)?;
        report.rows.push(vec![Cell::Text("formula".to_string()), Cell::Num(n)]);
        computed.push(("formula", n));
    }
    if want(CountMethod::Direct) {
        let prob = InverseSquareProblem::new(args.s0, 1.0, args.a_over_r0)?;
        let n = count_states_direct(&prob)?;
        report.rows.push(vec![Cell::Text("direct".to_string()), Cell::Int(n as u64)]);
        computed.push(("direct", n as f64));
    }
    if want(CountMethod::Semiclassical) {
        let n = count_states_semiclassical(args.s0, 0.0, 1.0, args.a_over_r0)?;
        report
            .rows
            .push(vec![Cell::Text("semiclassical".to_string()), Cell::Num(n)]);
        computed.push(("semiclassical", n));
    }
    for (i, (name_a, a)) in computed.iter().enumerate() {
        for (name_b, b) in computed.iter().skip(i + 1) {
            let key: &'static str = match (*name_a, *name_b) {
                ("formula", "direct") => "diff_formula_direct",
                ("formula", "semiclassical") => "diff_formula_semiclassical",
                ("direct", "semiclassical") => "diff_direct_semiclassical",
                _ => unreachable!("fixed method order"),
            };
            report.footer.push((key, Cell::Num((a - b).abs())));
        }
    }
    Ok(Outcome::ok(report))
}

/// Recombination observables for one (a, C) point or a table of them.
/// Lengths are in Bohr radii; the event rate (per volume and time) needs
/// the gas density and atom mass and is omitted otherwise.
fn cmd_observables(args: &ObservablesArgs) -> Result<Outcome, Failure> {
    let mut report = Report::new("observables");
    let pairs: Vec<(f64, f64)> = match (&args.c_table, args.a, args.c) {
        (Some(path), None, None) => {
            report.input("c_table", path.display());
            read_c_table(path)?
        }
        (None, Some(a), Some(c)) => {
            report.input("a", a);
            report.input("c", c);
            vec![(a, c)]
        }
        (None, Some(_), None) => {
            return Err(usage("--c (or --c-table) is required".to_string()))
        }
        _ => {
            return Err(usage(
                "give either --a with --c, or --c-table alone".to_string(),
            ))
        }
    };
    let gas = match (args.density, args.mass) {
        (Some(density), Some(mass)) => {
            report.input("density", density);
            report.input("mass", mass);
            Some((density, mass))
        }
        _ => None,
    };

    report.columns = if gas.is_some() {
        vec!["a", "c", "rho3", "nu_rec"]
    } else {
        vec!["a", "c", "rho3"]
    };
    for (a, c) in pairs {
        let rho3 = recombination_length(c, a)?;
        let mut row = vec![Cell::Num(a), Cell::Num(c), Cell::Num(rho3)];
        if let Some((density, mass)) = gas {
            let params = GasParams::new(density, mass, a * BOHR_RADIUS, c)?;
            row.push(Cell::Num(recombination_rate(&params)));
        }
        report.rows.push(row);
    }
    Ok(Outcome::ok(report))
}

/// Parses a two-column (a, C) CSV; `#` comment lines and blank lines are
/// skipped.
fn read_c_table(path: &PathBuf) -> Result<Vec<(f64, f64)>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|err| usage(format!("cannot read {}: {err}", path.display())))?;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split(',');
        let parse = |field: Option<&str>| -> Result<f64, Failure> {
            field
                .map(str::trim)
                .ok_or_else(|| usage(format!("{}:{}: expected a,C", path.display(), lineno + 1)))?
                .parse::<f64>()
                .map_err(|err| {
                    usage(format!("{}:{}: {err}", path.display(), lineno + 1))
                })
        };
        let a = parse(fields.next())?;
        let c = parse(fields.next())?;
        pairs.push((a, c));
    }
    if pairs.is_empty() {
        return Err(usage(format!("{}: no data rows", path.display())));
    }
    Ok(pairs)
}
