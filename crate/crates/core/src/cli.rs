//! CSV front end: `eval`, `table`, `scan` and `thermo` subcommands.
//!
//! Output goes to the supplied writer as comma-separated values with a
//! header line. Reals are written with 17 significant digits so they parse
//! back to the identical f64. Exit codes: 0 success, 2 domain or parameter
//! error, 3 non-convergence.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::log_lambert::{asymptotic_approx, BranchId, LogLambertContext};
use crate::special::SolverOptions;
use crate::thermostatics::{DeformationParams, EnsembleSpec, GasConstants, HeatModel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

/// Abscissae of the large-x approximation table, x ≈ n·ln(n)·eⁿ for n = 4..=10.
pub const TABLE_ABSCISSAE: [f64; 7] = [
    302.7564,
    1194.3088,
    4337.0842,
    14937.6471,
    49589.8229,
    160238.6564,
    507178.1179,
];

#[derive(Debug, Parser)]
#[command(
    name = "loglambert",
    version,
    about = "Logarithmic Lambert function and deformed-entropy thermostatics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// W_L(x) on one branch, with derivative and residual.
    Eval(EvalArgs),
    /// Accuracy of the large-x approximation at the seven reference points.
    Table,
    /// Uniform x-grid of one branch (curve data for plotting).
    Scan(ScanArgs),
    /// Heat function and specific heat over a temperature grid.
    Thermo(ThermoArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    branch: BranchId,
    /// Iteration cap of the root solver.
    #[arg(long, default_value_t = SolverOptions::default().max_iter)]
    max_iter: usize,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    branch: BranchId,
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Iteration cap of the root solver.
    #[arg(long, default_value_t = SolverOptions::default().max_iter)]
    max_iter: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnsembleKind {
    /// microcanonical (N, V, E)
    Mc,
    /// isoenthalpic-isobaric (N, P, H)
    Ie,
    /// Hill (mu, V, L)
    Hill,
    /// Ray (mu, P, R)
    Ray,
}

#[derive(Debug, Args)]
struct ThermoArgs {
    #[arg(long, value_enum)]
    ensemble: EnsembleKind,
    #[arg(long, allow_hyphen_values = true)]
    q: f64,
    #[arg(long, allow_hyphen_values = true)]
    qp: f64,
    #[arg(long, allow_hyphen_values = true)]
    r: f64,
    #[arg(long, default_value_t = 10)]
    n: u32,
    #[arg(long, default_value_t = 1.0)]
    v: f64,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    #[arg(long, default_value_t = 3)]
    d: u32,
    #[arg(long, default_value_t = 1.0)]
    m: f64,
    #[arg(long, default_value_t = 1.0)]
    h: f64,
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    #[arg(long, default_value_t = 0.5)]
    tmin: f64,
    #[arg(long, default_value_t = 2.0)]
    tmax: f64,
    #[arg(long, default_value_t = 20)]
    points: usize,
}

/// One CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Real(f64),
    Text(String),
    Empty,
}

/// Ordered (column, value) pairs making up one CSV line.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputRow {
    pub fields: Vec<(&'static str, Field)>,
}

impl OutputRow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn real(mut self, name: &'static str, v: f64) -> Self {
        let field = if v.is_finite() {
            Field::Real(v)
        } else {
            Field::Empty
        };
        self.fields.push((name, field));
        self
    }

    pub fn text(mut self, name: &'static str, v: impl Into<String>) -> Self {
        self.fields.push((name, Field::Text(v.into())));
        self
    }

    pub fn empty(mut self, name: &'static str) -> Self {
        self.fields.push((name, Field::Empty));
        self
    }

    pub fn header(&self) -> String {
        self.fields
            .iter()
            .map(|(n, _)| *n)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn line(&self) -> String {
        self.fields
            .iter()
            .map(|(_, f)| match f {
                Field::Real(v) => format_real(*v),
                Field::Text(s) => s.replace([',', '\n'], " "),
                Field::Empty => String::new(),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// 17 significant digits, scientific notation.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_rows(out: &mut dyn Write, rows: &[OutputRow]) -> io::Result<()> {
    if let Some(first) = rows.first() {
        writeln!(out, "{}", first.header())?;
    }
    for row in rows {
        writeln!(out, "{}", row.line())?;
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } => EXIT_NO_CONVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => solver(a.max_iter).and_then(|o| cmd_eval(a.x, a.b, a.branch, o)),
        Command::Table => cmd_table(),
        Command::Scan(a) => {
            solver(a.max_iter).and_then(|o| cmd_scan(a.b, a.branch, a.from, a.to, a.points, o))
        }
        Command::Thermo(a) => cmd_thermo(&a),
    };
    match result {
        Ok(rows) => match write_rows(out, &rows) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn solver(max_iter: usize) -> crate::Result<SolverOptions> {
    let d = SolverOptions::default();
    SolverOptions::new(d.abs_tol, d.rel_tol, max_iter)
}

/// Header `x,y,derivative,residual`; derivative is left empty at a branch point.
pub fn cmd_eval(
    x: f64,
    b: f64,
    branch: BranchId,
    opts: SolverOptions,
) -> crate::Result<Vec<OutputRow>> {
    let ctx = LogLambertContext::new(b, opts)?;
    let (y, diag) = ctx.eval(x, branch)?;
    let row = OutputRow::new().real("x", x).real("y", y);
    let row = if diag.derivative_singular {
        row.empty("derivative")
    } else {
        row.real("derivative", ctx.derivative(x, branch)?)
    };
    Ok(vec![row.real("residual", diag.residual)])
}

/// Header `x,exact,approx,rel_error` over [`TABLE_ABSCISSAE`] with B = 1.
pub fn cmd_table() -> crate::Result<Vec<OutputRow>> {
    let ctx = LogLambertContext::new(1.0, SolverOptions::default())?;
    TABLE_ABSCISSAE
        .iter()
        .map(|&x| {
            let (exact, _) = ctx.eval(x, BranchId::Pos0)?;
            let approx = asymptotic_approx(x, 1.0)?;
            Ok(OutputRow::new()
                .real("x", x)
                .real("exact", exact)
                .real("approx", approx)
                .real("rel_error", (approx - exact).abs() / exact))
        })
        .collect()
}

/// Header `x,y` on `points` uniformly spaced abscissae of [from, to].
pub fn cmd_scan(
    b: f64,
    branch: BranchId,
    from: f64,
    to: f64,
    points: usize,
    opts: SolverOptions,
) -> crate::Result<Vec<OutputRow>> {
    if points < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 points, got {points}"
        )));
    }
    let ctx = LogLambertContext::new(b, opts)?;
    let domain = ctx.domain(branch)?;
    for end in [from, to] {
        if !end.is_finite() || !domain.contains(end) {
            return Err(Error::Domain(format!(
                "scan end {end} is outside the domain {domain} of branch {branch}"
            )));
        }
    }
    let step = (to - from) / (points - 1) as f64;
    (0..points)
        .map(|i| {
            let x = if i + 1 == points {
                to
            } else {
                from + step * i as f64
            };
            let (y, _) = ctx.eval(x, branch)?;
            Ok(OutputRow::new().real("x", x).real("y", y))
        })
        .collect()
}

fn cmd_thermo(a: &ThermoArgs) -> crate::Result<Vec<OutputRow>> {
    let spec = match a.ensemble {
        EnsembleKind::Mc => EnsembleSpec::Microcanonical { n: a.n, v: a.v },
        EnsembleKind::Ie => EnsembleSpec::IsoenthalpicIsobaric { n: a.n, p: a.p },
        EnsembleKind::Hill => EnsembleSpec::Hill { mu: a.mu, v: a.v },
        EnsembleKind::Ray => EnsembleSpec::Ray {
            mu: a.mu,
            p: a.p,
            n: a.n,
        },
    };
    let gc = GasConstants::new(a.d, a.m, a.h, a.k)?;
    let dp = DeformationParams::new(a.q, a.qp, a.r)?;
    thermo_sweep(spec, gc, dp, a.tmin, a.tmax, a.points)
}

/// Header `T,heat,specific_heat,w_argument,w_value,branch,reason`.
///
/// Temperatures are uniform in [tmin, tmax]. A temperature where the heat
/// function is undefined yields a row with empty numeric fields and the
/// error in `reason`; invalid parameters fail the whole sweep.
pub fn thermo_sweep(
    spec: EnsembleSpec,
    gc: GasConstants,
    dp: DeformationParams,
    tmin: f64,
    tmax: f64,
    points: usize,
) -> crate::Result<Vec<OutputRow>> {
    if !(tmin > 0.0 && tmax >= tmin && tmax.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < tmin <= tmax, got tmin = {tmin}, tmax = {tmax}"
        )));
    }
    if points == 0 {
        return Err(Error::InvalidParameter("need at least 1 point".into()));
    }
    let model = HeatModel::new(spec, gc, dp)?;
    let branch = model.branch().name();
    let step = if points > 1 {
        (tmax - tmin) / (points - 1) as f64
    } else {
        0.0
    };
    Ok((0..points)
        .map(|i| {
            let t = if i + 1 == points && points > 1 {
                tmax
            } else {
                tmin + step * i as f64
            };
            let row = OutputRow::new().real("T", t);
            match model.heat(t) {
                Ok(res) => {
                    let reason = if res.specific_heat.is_finite() {
                        String::new()
                    } else {
                        "specific heat singular at branch point".to_string()
                    };
                    row.real("heat", res.heat)
                        .real("specific_heat", res.specific_heat)
                        .real("w_argument", res.w_argument)
                        .real("w_value", res.w_value)
                        .text("branch", branch)
                        .text("reason", reason)
                }
                Err(e) => row
                    .empty("heat")
                    .empty("specific_heat")
                    .empty("w_argument")
                    .empty("w_value")
                    .text("branch", branch)
                    .text("reason", e.to_string()),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("loglambert").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn format_round_trips() {
        for v in [
            302.7564,
            1.0 / 3.0,
            -2.5e-300,
            6.02e23,
            std::f64::consts::PI,
        ] {
            assert_eq!(format_real(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn eval_negative_flag_values() {
        let (code, out, _) = run_args(&["eval", "--x", "-0.3", "--b", "1", "--branch", "pos1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("x,y,derivative,residual\n"));
        let (code, _, err) = run_args(&["eval", "--x", "-10", "--b", "1", "--branch", "pos0"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("domain"));
    }

    #[test]
    fn parse_errors_exit_two() {
        assert_eq!(run_args(&["eval", "--x", "1"]).0, EXIT_DOMAIN);
        assert_eq!(
            run_args(&["eval", "--x", "1", "--b", "1", "--branch", "pos9"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(run_args(&["nope"]).0, EXIT_DOMAIN);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn error_codes() {
        assert_eq!(
            exit_code(&Error::no_convergence(3, "x")),
            EXIT_NO_CONVERGENCE
        );
        assert_eq!(exit_code(&Error::Domain("x".into())), EXIT_DOMAIN);
        assert_eq!(exit_code(&Error::UncoveredRegion("x".into())), EXIT_DOMAIN);
    }

    #[test]
    fn non_finite_values_become_empty() {
        let row = OutputRow::new()
            .real("a", f64::NAN)
            .real("b", 1.0)
            .text("c", "x,y");
        assert_eq!(row.line(), ",1.0000000000000000e0,x y");
    }
}
