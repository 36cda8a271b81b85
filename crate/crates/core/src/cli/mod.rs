//! Command-line front end: equation parsing, subcommand dispatch and
//! text/JSON reports.
//!
//! Every subcommand takes an equation either in term syntax
//! (`"2*f^2(x)+5*f(x)+2*x=0"`) or as a coefficient list (`"2,5,2"`, highest
//! power first). With `--json` the output is a single object
//! `{"equation": [...], "command": ..., "result": ...}` in which rationals are
//! `"p/q"` strings and floats carry 17 significant digits.

mod json;
mod parse;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyalg::rational_to_f64;
use crate::recurrence::{
    asymptotic_limits, diagnostics_window, fit_general_solution, limit_horizon, orbit_from_linear_map,
    recurrence_residual, sign_diagnostics, Orbit, DEFAULT_HALF_WINDOW,
};
use crate::reduction::{
    check_divisibility, dual_equation, linear_solution_residual, linear_solution_residual_exact, linear_solution_scale,
    reduce, ReducedCoeffs, ReductionReport,
};
use crate::spectrum::{characteristic_spectrum, classify, Case, RootSpectrum, TheoremClassification};

pub use parse::{parse_equation, parse_rational, parse_rational_list, EquationInput, SourceForm};

/// Relative threshold under which a linear-solution residual counts as zero.
pub const LINEAR_ZERO_TOL: f64 = 1e-12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_NOT_REDUCIBLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "polylike",
    version,
    about = "Root spectra and order reduction for polynomial-like iterative equations"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Root residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Relative separation required of strict modulus inequalities.
    #[arg(long = "sep-tol", global = true, default_value_t = 1e-9)]
    sep_tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic roots with multiplicities and moduli.
    Roots {
        #[arg(allow_hyphen_values = true)]
        equation: String,
    },
    /// Which order-reduction pattern the root spectrum satisfies.
    Classify {
        #[arg(allow_hyphen_values = true)]
        equation: String,
    },
    /// Reduced equations with their prerequisites.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        equation: String,
    },
    /// Residual of f(x) = slope*x in the equation and in each reduced equation.
    Verify {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        /// Comma-separated sample points.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        points: String,
    },
    /// Orbit of f(x) = slope*x with recurrence residual and sign diagnostics.
    Simulate {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        x0: String,
        /// Index window JMIN:JMAX.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Closed-form recurrence solution from initial values x_0..x_{n-1}.
    Fit {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        /// Horizon J for the asymptotic ratios.
        #[arg(long)]
        limits: Option<i64>,
    },
    /// Coefficients of the dual equation.
    Dual {
        #[arg(allow_hyphen_values = true)]
        equation: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Roots { .. } => "roots",
            Command::Classify { .. } => "classify",
            Command::Reduce { .. } => "reduce",
            Command::Verify { .. } => "verify",
            Command::Simulate { .. } => "simulate",
            Command::Fit { .. } => "fit",
            Command::Dual { .. } => "dual",
        }
    }

    fn equation(&self) -> &str {
        match self {
            Command::Roots { equation }
            | Command::Classify { equation }
            | Command::Reduce { equation }
            | Command::Verify { equation, .. }
            | Command::Simulate { equation, .. }
            | Command::Fit { equation, .. }
            | Command::Dual { equation } => equation,
        }
    }
}

/// A finished command: JSON result, text rendering and exit code.
struct Outcome {
    result: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome {
            result,
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok((input, outcome)) => {
            let written = if cli.json {
                let doc = json!({
                    "equation": json::rationals(&input.coeffs.descending()),
                    "command": cli.command.name(),
                    "result": outcome.result,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                write!(out, "{}", outcome.text)
            };
            if written.is_err() {
                return EXIT_NUMERIC;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Numeric(_) => EXIT_NUMERIC,
        Error::Domain(_) | Error::Syntax { .. } | Error::Usage(_) => EXIT_USAGE,
    }
}

fn execute(cli: &Cli) -> Result<(EquationInput, Outcome)> {
    let input = parse_equation(cli.command.equation())?;
    let outcome = match &cli.command {
        Command::Roots { .. } => cmd_roots(&input, cli)?,
        Command::Classify { .. } => cmd_classify(&input, cli)?,
        Command::Reduce { .. } => cmd_reduce(&input, cli)?,
        Command::Verify { slope, points, .. } => cmd_verify(&input, cli, slope, points)?,
        Command::Simulate { slope, x0, window, .. } => cmd_simulate(&input, slope, x0, window.as_deref())?,
        Command::Fit { init, limits, .. } => cmd_fit(&input, cli, init, *limits)?,
        Command::Dual { .. } => cmd_dual(&input)?,
    };
    Ok((input, outcome))
}

fn header(input: &EquationInput) -> String {
    format!("equation: {input}\ncharacteristic polynomial: {}\n", input.coeffs)
}

fn cmd_roots(input: &EquationInput, cli: &Cli) -> Result<Outcome> {
    let spec = characteristic_spectrum(&input.coeffs, cli.tol)?;
    let mut text = header(input);
    let _ = writeln!(text, "roots (value, multiplicity, modulus):");
    for e in spec.entries() {
        let _ = writeln!(
            text,
            "  {}  x{}  |r| = {}",
            json::root_text(e),
            e.multiplicity,
            e.modulus()
        );
    }
    Ok(Outcome::ok(
        json!({ "degree": spec.degree(), "roots": json::spectrum(&spec) }),
        text,
    ))
}

fn classification_text(spec: &RootSpectrum, class: &TheoremClassification) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "case: {}", class.case.kind());
    match &class.case {
        Case::NegativePairElimination { r1, r2 } => {
            let _ = writeln!(
                text,
                "  r1 = {} (largest modulus), r2 = {} (smallest modulus)",
                json::root_text(&spec.entries()[r1.index]),
                json::root_text(&spec.entries()[r2.index])
            );
        }
        Case::OppositeSignElimination {
            positive,
            negative,
            positive_is_one,
        } => {
            let _ = writeln!(
                text,
                "  positive root {}, negative root {}{}",
                json::root_text(&spec.entries()[positive.index]),
                json::root_text(&spec.entries()[negative.index]),
                if *positive_is_one {
                    " (positive root is exactly 1)"
                } else {
                    ""
                }
            );
        }
        _ => {}
    }
    if let Some(m) = class.margin {
        let _ = writeln!(text, "  margin: {m}");
    }
    if class.nonreal_bracketed {
        let _ = writeln!(text, "  note: some bracketed roots are non-real");
    }
    for c in &class.checks {
        let _ = writeln!(
            text,
            "  check {}: {:?}{}",
            c.case,
            c.status,
            if c.note.is_empty() {
                String::new()
            } else {
                format!(" ({})", c.note)
            }
        );
    }
    text
}

fn cmd_classify(input: &EquationInput, cli: &Cli) -> Result<Outcome> {
    let spec = characteristic_spectrum(&input.coeffs, cli.tol)?;
    let class = classify(&spec, cli.sep_tol);
    let text = header(input) + &classification_text(&spec, &class);
    Ok(Outcome::ok(json::classification(&spec, &class), text))
}

fn reduction_of(
    input: &EquationInput,
    cli: &Cli,
) -> Result<(RootSpectrum, TheoremClassification, Option<ReductionReport>)> {
    let spec = characteristic_spectrum(&input.coeffs, cli.tol)?;
    let class = classify(&spec, cli.sep_tol);
    let report = match class.case {
        Case::NoneApplicable | Case::Inconclusive => None,
        _ => Some(reduce(&spec, &class)?),
    };
    Ok((spec, class, report))
}

fn cmd_reduce(input: &EquationInput, cli: &Cli) -> Result<Outcome> {
    let (spec, class, report) = reduction_of(input, cli)?;
    let mut text = header(input) + &classification_text(&spec, &class);
    let Some(report) = report else {
        let _ = writeln!(text, "no reduction available");
        return Ok(Outcome {
            result: json!({
                "classification": json::classification(&spec, &class),
                "exclusive_alternatives": false,
                "alternatives": [],
            }),
            text,
            code: EXIT_NOT_REDUCIBLE,
        });
    };
    let mut alternatives = Vec::new();
    if report.exclusive_alternatives {
        let _ = writeln!(text, "exactly one of the following holds, depending on f:");
    }
    for eq in &report.alternatives {
        let div = check_divisibility(&eq.coeffs, &input.coeffs, cli.tol)?;
        let _ = writeln!(
            text,
            "alternative {} [{}]: {} = 0  (divides original: {})",
            eq.provenance.alternative,
            eq.provenance.prerequisite,
            json::coeffs_text(&eq.coeffs),
            div.divides
        );
        alternatives.push(json::reduced_equation(eq, &div));
    }
    Ok(Outcome::ok(
        json!({
            "classification": json::classification(&spec, &class),
            "exclusive_alternatives": report.exclusive_alternatives,
            "alternatives": alternatives,
        }),
        text,
    ))
}

fn cmd_verify(input: &EquationInput, cli: &Cli, slope: &str, points: &str) -> Result<Outcome> {
    let slope_q = parse_rational(slope)?;
    let points_q = parse_rational_list(points)?;
    let slope_f = rational_to_f64(&slope_q);
    let points_f: Vec<f64> = points_q.iter().map(rational_to_f64).collect();

    let exact_check = |p: &crate::polyalg::Polynomial| {
        let r = linear_solution_residual_exact(p, &slope_q, &points_q);
        (rational_to_f64(&r), r.is_zero())
    };
    let (orig_res, orig_zero) = exact_check(&input.coeffs);
    let mut text = header(input);
    let _ = writeln!(
        text,
        "slope {slope_q}: residual on original {orig_res} (solution: {orig_zero})"
    );

    let (_, class, report) = reduction_of(input, cli)?;
    let mut alternatives = Vec::new();
    for eq in report.iter().flat_map(|r| r.alternatives.iter()) {
        let (res, zero) = match &eq.coeffs {
            ReducedCoeffs::Exact(p) => exact_check(p),
            ReducedCoeffs::Numeric(p) => {
                let r = linear_solution_residual(p, slope_f, &points_f);
                (r, r <= LINEAR_ZERO_TOL * linear_solution_scale(p, slope_f, &points_f))
            }
        };
        let _ = writeln!(
            text,
            "alternative {} [{}]: residual {res} (solution: {zero})",
            eq.provenance.alternative, eq.provenance.prerequisite
        );
        alternatives.push(json!({
            "alternative": eq.provenance.alternative,
            "prerequisite": eq.provenance.prerequisite.name(),
            "residual": json::float(res),
            "zero": zero,
        }));
    }
    Ok(Outcome::ok(
        json!({
            "slope": slope_q.to_string(),
            "points": json::rationals(&points_q),
            "case": class.case.kind().name(),
            "original": { "residual": json::float(orig_res), "zero": orig_zero },
            "alternatives": alternatives,
        }),
        text,
    ))
}

fn parse_window(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Usage(format!("window must be JMIN:JMAX with JMIN <= 0 <= JMAX, got {text:?}"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > 0 || hi < 0 {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_simulate(input: &EquationInput, slope: &str, x0: &str, window: Option<&str>) -> Result<Outcome> {
    let slope_q = parse_rational(slope)?;
    let x0_q = parse_rational(x0)?;
    let slope_f = rational_to_f64(&slope_q);
    let (lo, hi) = match window {
        Some(w) => parse_window(w)?,
        None => diagnostics_window(slope_f.abs().max(1.0 / slope_f.abs())),
    };
    let orbit = orbit_from_linear_map(slope_f, rational_to_f64(&x0_q), lo, hi)?;
    let residual = recurrence_residual(&input.coeffs, &orbit)?;
    let signs = sign_diagnostics(&orbit)?;

    let mut text = header(input);
    let _ = writeln!(text, "orbit of f(x) = {slope_q}*x from x_0 = {x0_q} over [{lo}, {hi}]");
    for (j, x) in orbit.iter() {
        let _ = writeln!(text, "  x_{j} = {x}");
    }
    let _ = writeln!(
        text,
        "recurrence residual: {:e} (relative {:e})",
        residual.max_abs, residual.relative
    );
    let _ = write!(text, "{}", json::signs_text(&signs));
    Ok(Outcome::ok(
        json!({
            "slope": slope_q.to_string(),
            "x0": x0_q.to_string(),
            "window": [lo, hi],
            "orbit": json::orbit(&orbit),
            "recurrence_residual": json::residual(&residual),
            "signs": json::signs(&signs),
        }),
        text,
    ))
}

fn cmd_fit(input: &EquationInput, cli: &Cli, init: &str, limits: Option<i64>) -> Result<Outcome> {
    let initial: Vec<f64> = parse_rational_list(init)?.iter().map(rational_to_f64).collect();
    let spec = characteristic_spectrum(&input.coeffs, cli.tol)?;
    let gs = fit_general_solution(&spec, &initial)?;
    let (lo, hi) = diagnostics_window(gs.growth_base());
    let orbit = Orbit::from_solution(&gs, lo, hi)?;
    let residual = recurrence_residual(&input.coeffs, &orbit)?;
    let class = classify(&spec, cli.sep_tol);

    let mut text = header(input);
    let _ = write!(text, "{}", json::solution_text(&gs));
    let _ = writeln!(
        text,
        "recurrence residual over [{lo}, {hi}]: {:e} (relative {:e})",
        residual.max_abs, residual.relative
    );
    let limits_json = match &class.case {
        Case::NegativePairElimination { r1, r2 } => {
            let horizon = limits.unwrap_or(DEFAULT_HALF_WINDOW).min(limit_horizon(&gs, i64::MAX));
            match asymptotic_limits(&gs, r1.value, r2.value, horizon) {
                Ok(report) => {
                    let _ = write!(text, "{}", json::limits_text(&report));
                    json::limits(&report)
                }
                Err(Error::Domain(msg)) => {
                    let _ = writeln!(text, "asymptotic limits: {msg}");
                    Value::Null
                }
                Err(e) => return Err(e),
            }
        }
        _ => Value::Null,
    };
    Ok(Outcome::ok(
        json!({
            "initial": initial.iter().map(|v| json::float(*v)).collect::<Vec<_>>(),
            "solution": json::solution(&gs),
            "window": [lo, hi],
            "recurrence_residual": json::residual(&residual),
            "case": class.case.kind().name(),
            "limits": limits_json,
        }),
        text,
    ))
}

fn cmd_dual(input: &EquationInput) -> Result<Outcome> {
    let dual = dual_equation(&input.coeffs)?;
    let dual_input = EquationInput {
        coeffs: dual.clone(),
        source_form: SourceForm::CoefficientList,
    };
    let text = header(input) + &format!("dual equation: {dual_input}\n");
    Ok(Outcome::ok(
        json!({ "dual": json::rationals(&dual.descending()) }),
        text,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["polylike"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("-6:6").unwrap(), (-6, 6));
        assert!(parse_window("1:6").is_err());
        assert!(parse_window("6").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["dual", "1,0,-2"]).0, EXIT_OK);
        assert_eq!(run_str(&["dual", "1,0,0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["roots", "f(x)+y"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["reduce", "1,0,1"]).0, EXIT_NOT_REDUCIBLE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }
}
