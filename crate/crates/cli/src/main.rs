//! `knu`: point evaluation, verification suites, ratio-bound reports and
//! sign-map generation for the (k, ν)-deformed special functions.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on a domain or
//! configuration error (the error kind is printed on stderr).

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knu::signmap::DEFAULT_Y;
use knu::{
    beta_knu, grid_signmap, hurwitz_knu, ln_beta_knu, ln_gamma_knu, oracle_eval, polygamma_knu,
    psi_knu, ratio_bounds, run_suite, zeta_knu, BetaArgs, DomainError, ErrorKind, EvalControl,
    GridMode, GridSpec, Params, Suite, Target, VerifyConfig,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use output::{fmt_num, num, render_json, write_atomic, CliError};

#[derive(Parser, Debug)]
#[command(
    name = "knu",
    version,
    about = "(k, ν)-deformed Gamma, Beta, Psi and Zeta functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Run a verification suite.
    Check(CheckArgs),
    /// Report the ratio bounds for B(x2, y) / B(x1, y).
    Bounds(BoundsArgs),
    /// Generate sign maps of A − B as CSV and PGM files.
    Signmap(SignmapArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    nu: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<Params<f64>, CliError> {
        Ok(Params::new(self.k, self.nu)?)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    Gamma,
    Beta,
    Psi,
    Polygamma,
    Zeta,
    Hurwitz,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    /// Second Beta argument.
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    /// Hurwitz exponent.
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    /// Polygamma order (≥ 1).
    #[arg(long)]
    m: Option<u32>,
    /// Evaluate the defining integral instead of the fast path.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Override every check's tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Override the x, y sample points (comma-separated).
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_negative_numbers = true)]
    x1: f64,
    #[arg(long, allow_negative_numbers = true)]
    x2: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Desk,
    Paper,
}

#[derive(Args, Debug)]
struct SignmapArgs {
    /// Grid resolution: `desk` (280 log-spaced points per axis, seconds)
    /// or `paper` (2792 points per axis, minutes).
    #[arg(long, value_enum, default_value_t = ModeArg::Desk)]
    mode: ModeArg,
    /// Same as `--mode paper`.
    #[arg(long)]
    paper_grid: bool,
    /// y values (comma-separated); defaults to the sixteen reference values.
    #[arg(long, value_delimiter = ',')]
    y: Option<Vec<f64>>,
    /// CSV path template; `{y}` is replaced by the y value.
    #[arg(long, default_value = "signmap_{y}.csv")]
    out_csv: String,
    /// PGM path template; `{y}` is replaced by the y value.
    #[arg(long, default_value = "signmap_{y}.pgm")]
    out_pgm: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a),
        Command::Check(a) => cmd_check(&a),
        Command::Bounds(a) => cmd_bounds(&a),
        Command::Signmap(a) => cmd_signmap(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", render_json(&value)),
    }
}

fn missing(flag: &str, function: &str) -> CliError {
    DomainError::new(
        ErrorKind::InvalidParameter,
        format!("--{flag} is required for --fn {function}"),
    )
    .into()
}

fn cmd_eval(a: &EvalArgs) -> Result<ExitCode, CliError> {
    let p = a.params.params()?;
    let x = a.x;
    let (name, target, args) = match a.function {
        Function::Gamma => ("gamma", Target::GammaIntegral, vec![x]),
        Function::Beta => (
            "beta",
            Target::BetaUnitIntegral,
            vec![x, a.y.ok_or_else(|| missing("y", "beta"))?],
        ),
        Function::Psi => ("psi", Target::PsiIntegral, vec![x]),
        Function::Polygamma => {
            let m = a.m.ok_or_else(|| missing("m", "polygamma"))?;
            (
                "polygamma",
                Target::PolygammaIntegral,
                vec![f64::from(m), x],
            )
        }
        Function::Zeta => ("zeta", Target::ZetaIntegral, vec![x]),
        Function::Hurwitz => (
            "hurwitz",
            Target::HurwitzIntegral,
            vec![x, a.s.ok_or_else(|| missing("s", "hurwitz"))?],
        ),
    };

    let mut obj = Map::new();
    obj.insert("fn".into(), json!(name));
    obj.insert("k".into(), num(p.k()));
    obj.insert("nu".into(), num(p.nu()));
    let mut text = String::new();

    if a.oracle {
        obj.insert("target".into(), json!(target.name()));
        obj.insert(
            "args".into(),
            Value::Array(args.iter().map(|&v| num(v)).collect()),
        );
        let r = oracle_eval(target, &p, &args, &EvalControl::default())?;
        obj.insert("value".into(), num(r.value));
        obj.insert("err_estimate".into(), num(r.err_estimate));
        obj.insert("effort".into(), json!(r.effort));
        obj.insert("converged".into(), json!(r.converged));
        text.push_str(&format!(
            "value = {}\nerr_estimate = {}\neffort = {}\nconverged = {}\n",
            fmt_num(r.value),
            fmt_num(r.err_estimate),
            r.effort,
            r.converged
        ));
    } else {
        let (value, log_value) = fast_eval(a.function, &p, &args)?;
        obj.insert("value".into(), num(value));
        text.push_str(&format!("value = {}\n", fmt_num(value)));
        if let Some(lv) = log_value {
            obj.insert("log_value".into(), num(lv));
            text.push_str(&format!("log_value = {}\n", fmt_num(lv)));
        }
    }
    emit(a.format, text, Value::Object(obj));
    Ok(ExitCode::SUCCESS)
}

/// Fast-path value, plus the log value for Gamma and Beta. `args` is laid
/// out as for the matching oracle target.
fn fast_eval(f: Function, p: &Params<f64>, args: &[f64]) -> knu::Result<(f64, Option<f64>)> {
    Ok(match f {
        Function::Gamma => {
            let ln = ln_gamma_knu(p, args[0])?;
            (ln.exp(), Some(ln))
        }
        Function::Beta => {
            let b = BetaArgs::new(args[0], args[1])?;
            (beta_knu(p, b)?, Some(ln_beta_knu(p, b)?))
        }
        Function::Psi => (psi_knu(p, args[0])?, None),
        Function::Polygamma => (polygamma_knu(p, args[0] as u32, args[1])?, None),
        Function::Zeta => (zeta_knu(p, args[0])?, None),
        Function::Hurwitz => (hurwitz_knu(p, args[0], args[1])?, None),
    })
}

fn cmd_check(a: &CheckArgs) -> Result<ExitCode, CliError> {
    let cfg = VerifyConfig {
        tol: a.tol,
        points: a.grid.clone(),
    };
    let report = run_suite(a.suite, &cfg)?;
    let passed = report.checks.iter().filter(|c| c.passed).count();
    let mut text = String::new();
    for c in &report.checks {
        text.push_str(&format!(
            "{} {:<40} samples={:<5} skipped={:<5} max_dev={:<22} tol={}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.samples,
            c.skipped,
            fmt_num(c.max_dev),
            fmt_num(c.tol)
        ));
    }
    text.push_str(&format!(
        "{} of {} checks passed ({})\n",
        passed,
        report.checks.len(),
        report.suite
    ));
    let value = serde_json::to_value(&report).map_err(CliError::from)?;
    emit(a.format, text, value);
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bounds(a: &BoundsArgs) -> Result<ExitCode, CliError> {
    let p = a.params.params()?;
    let r = ratio_bounds(&p, a.x1, a.x2, a.y)?;
    let (lo_name, _) = r.best_lower();
    let (hi_name, _) = r.best_upper();
    let rows = [
        ("lower_T1", r.lower_T1),
        ("lower_T31", r.lower_T31),
        ("actual_ratio", r.actual_ratio),
        ("upper_T1", r.upper_T1),
        ("upper_T2", r.upper_T2),
        ("upper_T32", r.upper_T32),
    ];
    let mut text = String::new();
    let mut obj = Map::new();
    for key in ["k", "nu", "x1", "x2", "y"] {
        let v = match key {
            "k" => p.k(),
            "nu" => p.nu(),
            "x1" => a.x1,
            "x2" => a.x2,
            _ => a.y,
        };
        obj.insert(key.into(), num(v));
    }
    for (name, v) in rows {
        text.push_str(&format!("{name:<14} = {}\n", fmt_num(v)));
        obj.insert(name.into(), num(v));
    }
    text.push_str(&format!(
        "{:<14} = {lo_name}\n{:<14} = {hi_name}\n",
        "tightest_lower", "tightest_upper"
    ));
    obj.insert("tightest_lower".into(), json!(lo_name));
    obj.insert("tightest_upper".into(), json!(hi_name));
    emit(a.format, text, Value::Object(obj));
    Ok(ExitCode::SUCCESS)
}

/// Rayon pool capped by `KNU_THREADS` (unset or 0: one thread per core).
fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var("KNU_THREADS") {
        Ok(s) if !s.trim().is_empty() => s.trim().parse::<usize>().map_err(|_| {
            CliError::from(DomainError::new(
                ErrorKind::InvalidParameter,
                format!("KNU_THREADS = `{s}` is not a thread count"),
            ))
        })?,
        _ => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| {
            DomainError::new(ErrorKind::InvalidParameter, format!("thread pool: {e}")).into()
        })
}

fn expand(template: &str, y: f64) -> PathBuf {
    PathBuf::from(template.replace("{y}", &y.to_string()))
}

fn cmd_signmap(a: &SignmapArgs) -> Result<ExitCode, CliError> {
    let mode = if a.paper_grid || a.mode == ModeArg::Paper {
        GridMode::Paper
    } else {
        GridMode::Desk
    };
    let ys = a.y.clone().unwrap_or_else(|| DEFAULT_Y.to_vec());
    if ys.is_empty() || ys.iter().any(|&y| !(y > 0.0 && y.is_finite())) {
        return Err(
            DomainError::new(ErrorKind::InvalidParameter, "--y values must be positive").into(),
        );
    }
    for t in [&a.out_csv, &a.out_pgm] {
        if ys.len() > 1 && !t.contains("{y}") {
            return Err(DomainError::new(
                ErrorKind::InvalidParameter,
                format!("output template `{t}` needs `{{y}}` for several y values"),
            )
            .into());
        }
    }
    let spec = GridSpec::for_mode(mode).with_y(ys);
    let pool = thread_pool()?;

    let results: Vec<Result<Value, CliError>> = pool.install(|| {
        spec.y_values
            .par_iter()
            .map(|&y| {
                let map = grid_signmap(&spec, y);
                let (csv, pgm) = (expand(&a.out_csv, y), expand(&a.out_pgm, y));
                write_atomic(&csv, &map.to_csv())?;
                write_atomic(&pgm, &map.to_pgm())?;
                let mut counts = [0usize; 3];
                for row in map.values() {
                    for f in row {
                        counts[(f + 1) as usize] += 1;
                    }
                }
                Ok(json!({
                    "y": num(y),
                    "width": map.width(),
                    "height": map.height(),
                    "minus": counts[0],
                    "zero": counts[1],
                    "plus": counts[2],
                    "csv": csv.display().to_string(),
                    "pgm": pgm.display().to_string(),
                }))
            })
            .collect()
    });
    let maps = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mut text = String::new();
    for m in &maps {
        text.push_str(&format!(
            "y = {}  {}x{}  plus = {}  zero = {}  minus = {}  -> {}, {}\n",
            fmt_num(m["y"].as_f64().unwrap_or(f64::NAN)),
            m["width"],
            m["height"],
            m["plus"],
            m["zero"],
            m["minus"],
            m["csv"].as_str().unwrap_or_default(),
            m["pgm"].as_str().unwrap_or_default()
        ));
    }
    emit(a.format, text, json!({ "mode": mode.name(), "maps": maps }));
    Ok(ExitCode::SUCCESS)
}
