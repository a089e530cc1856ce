//! Command-line front end: `eval`, `verify`, `converge` and `constants`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric or
//! domain error.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::{const_catalan, const_gamma, const_pi, const_zeta, Mode, PrecisionContext, MAX_DIGITS};
use crate::verify::{self, Overrides, Profile, Status};
use crate::zeta_series::{convergence_table, evaluate, reference_value, EvalRequest, Formula};

pub use render::decimal;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Environment variable that overrides the default precision.
pub const PRECISION_ENV: &str = "EHZ_PRECISION";

const DEFAULT_DIGITS: u32 = 30;
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "ehz", version, about = "Series evaluation and identity verification for ζ(s), ζ(s,x) and Euler sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one series with N terms and compare against its limit.
    Eval(EvalArgs),
    /// Run registered identities.
    Verify(VerifyArgs),
    /// Tabulate partial sums over increasing N and fit the error exponent.
    Converge(ConvergeArgs),
    /// Print γ, π, G and ζ(2..10).
    Constants(ConstantsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fast,
    High,
}

#[derive(Debug, Args)]
struct Common {
    /// Decimal digits of working precision [default: 30, or $EHZ_PRECISION].
    #[arg(long)]
    precision: Option<u32>,
    /// Arithmetic backplane [default: HIGH when precision > 15 and N ≤ 10⁴].
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(long, value_parser = PossibleValuesParser::new(Formula::NAMES))]
    formula: String,
    /// Euler-sum kind for `euler-sum` (E41, E43, E43_2, E45_8, E45_10, ALT2..ALT5).
    #[arg(long)]
    kind: Option<String>,
    /// Real s, as an integer, `p/q` or a terminating decimal.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "q")]
    s: Option<String>,
    /// Integer order q (also p for shen, the power for digamma-half-sum).
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Rational shift `p/q` (the argument y for the polylogarithm identities).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    series: SeriesArgs,
    #[arg(long)]
    terms: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    #[command(flatten)]
    series: SeriesArgs,
    /// Comma-separated, strictly increasing term budgets.
    #[arg(long, value_delimiter = ',', required = true)]
    terms: Vec<u64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run every registered identity.
    #[arg(long, conflicts_with = "id", required_unless_present = "id")]
    all: bool,
    /// Run one identity's full sweep.
    #[arg(long)]
    id: Option<String>,
    #[arg(long, value_enum)]
    profile: Option<ProfileArg>,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    q_max: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long)]
    terms: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Debug, Args)]
struct ConstantsArgs {
    /// Digits after the decimal point.
    #[arg(long, default_value_t = 30)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` unless `--output` redirects them and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().ansi().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let (output, result) = match &cli.command {
        Command::Eval(a) => (a.common.output.clone(), cmd_eval(a)),
        Command::Verify(a) => (a.output.clone(), cmd_verify(a)),
        Command::Converge(a) => (a.common.output.clone(), cmd_converge(a)),
        Command::Constants(a) => (a.output.clone(), cmd_constants(a)),
    };
    match result {
        Ok((text, code)) => {
            let written = match output {
                Some(path) => std::fs::write(&path, text.as_bytes()),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            code
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
        Error::Usage(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Numeric(_) => EXIT_NUMERIC,
    }
}

/// Parses `p/q`, an integer, or (when `allow_decimal`) a terminating decimal.
pub fn parse_rational(s: &str, allow_decimal: bool) -> Result<RBig> {
    let bad = || Error::Usage(format!("malformed rational {s:?}; expected p/q or an integer"));
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: IBig = p.trim().parse().map_err(|_| bad())?;
        let q: UBig = q.trim().parse().map_err(|_| bad())?;
        if q == UBig::ZERO {
            return Err(Error::Usage(format!("zero denominator in {s:?}")));
        }
        return Ok(RBig::from_parts(p, q));
    }
    if let Ok(v) = t.parse::<IBig>() {
        return Ok(RBig::from(v));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if !allow_decimal {
            return Err(Error::Usage(format!("decimal {s:?} is not accepted here; write it as p/q")));
        }
        let neg = int.starts_with('-');
        let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: IBig = digits.parse().map_err(|_| bad())?;
        let v = RBig::from_parts(num, UBig::from(10u8).pow(frac.len()));
        return Ok(if neg { -v } else { v });
    }
    Err(bad())
}

fn default_digits() -> Result<u32> {
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{PRECISION_ENV}={v:?} is not a digit count"))),
        Err(_) => Ok(DEFAULT_DIGITS),
    }
}

fn context(common: &Common, max_terms: u64) -> Result<PrecisionContext> {
    let digits = match common.precision {
        Some(d) => d,
        None => default_digits()?,
    };
    if digits > MAX_DIGITS {
        return Err(Error::Usage(format!("precision {digits} exceeds the maximum of {MAX_DIGITS}")));
    }
    let mode = match common.mode {
        Some(ModeArg::Fast) => Mode::Fast,
        Some(ModeArg::High) => Mode::High,
        None if digits > 15 && max_terms <= 10_000 => Mode::High,
        None => Mode::Fast,
    };
    match mode {
        Mode::Fast => Ok(PrecisionContext::fast()),
        Mode::High => PrecisionContext::new(digits.max(15), Mode::High).map_err(|e| match e {
            Error::Domain(m) => Error::Usage(m),
            other => other,
        }),
    }
}

fn request(series: &SeriesArgs, terms: u64, ctx: PrecisionContext) -> Result<EvalRequest> {
    let formula = Formula::parse(&series.formula, series.kind.as_deref())?;
    let s_or_q = match (&series.s, &series.q) {
        (Some(s), None) => Some(parse_rational(s, true)?),
        (None, Some(q)) => Some(RBig::from(
            q.trim().parse::<IBig>().map_err(|_| Error::Usage(format!("--q must be an integer, got {q:?}")))?,
        )),
        (None, None) => None,
        (Some(_), Some(_)) => return Err(Error::Usage("give --s or --q, not both".into())),
    };
    let x = series.x.as_deref().map(|x| parse_rational(x, false)).transpose()?;
    Ok(EvalRequest::new(formula, s_or_q, x, terms, ctx))
}

#[derive(Serialize)]
struct ParamsOut {
    formula: String,
    s_or_q: Option<String>,
    x: Option<String>,
    terms: Value,
    digits: u32,
    mode: Mode,
}

fn params_out(req: &EvalRequest, terms: Value) -> ParamsOut {
    ParamsOut {
        formula: req.formula.to_string(),
        s_or_q: req.s_or_q.as_ref().map(|v| v.to_string()),
        x: req.x.as_ref().map(|v| v.to_string()),
        terms,
        digits: req.ctx.effective_digits(),
        mode: req.ctx.mode(),
    }
}

fn envelope(command: &str, params: impl Serialize, key: &str, body: Value) -> String {
    let mut v = json!({ "command": command, "params": params, "version": VERSION });
    v.as_object_mut().expect("object").insert(key.to_string(), body);
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_eval(a: &EvalArgs) -> Result<(String, i32)> {
    let ctx = context(&a.common, a.terms)?;
    let req = request(&a.series, a.terms, ctx)?;
    let res = evaluate(&req)?;
    let reference = reference_value(&req)?;
    let sig = ctx.effective_digits() as usize;
    let row = render::ResultRow::new(&res, &reference, sig);
    let text = match a.common.format {
        Format::Text => row.text(&req),
        Format::Json => envelope("eval", params_out(&req, json!(a.terms)), "result", serde_json::to_value(&row).expect("row")),
        Format::Csv => row.csv(&req)?,
    };
    Ok((text, EXIT_OK))
}

fn cmd_converge(a: &ConvergeArgs) -> Result<(String, i32)> {
    let max = a.terms.iter().copied().max().unwrap_or(0);
    let ctx = context(&a.common, max)?;
    let req = request(&a.series, max, ctx)?;
    let table = convergence_table(&req, &a.terms)?;
    let sig = ctx.effective_digits() as usize;
    let text = match a.common.format {
        Format::Text => render::converge_text(&table, sig),
        Format::Csv => render::converge_csv(&table, sig)?,
        Format::Json => {
            let rows: Vec<Value> = table.rows.iter().map(|r| render::converge_row_json(r, sig)).collect();
            let body = json!({ "rows": rows, "exponent": table.exponent });
            envelope("converge", params_out(&req, json!(a.terms)), "result", body)
        }
    };
    Ok((text, EXIT_OK))
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, i32)> {
    let overrides = Overrides {
        n_max: a.n_max,
        q_max: a.q_max,
        x: a.x.as_deref().map(|x| parse_rational(x, false)).transpose()?,
        terms: a.terms,
    };
    let profile = match a.profile {
        Some(ProfileArg::Quick) => Profile::Quick,
        Some(ProfileArg::Full) | None => Profile::Full,
    };
    let (reports, summary) = match &a.id {
        Some(id) => {
            let reports = verify::run_identity_profile(id, &overrides, profile)?;
            let line = render::case_summary(&reports);
            (reports, line)
        }
        None => {
            let reports = verify::run_all_with(profile, &overrides, crate::combinatorics::bell_sequence::<RBig>);
            let line = verify::summary_line(&reports);
            (reports, line)
        }
    };
    let code = if reports.iter().any(|r| r.status == Status::Fail) { EXIT_VERIFY_FAIL } else { EXIT_OK };
    let params = json!({
        "all": a.all,
        "id": a.id,
        "profile": profile,
        "n_max": a.n_max,
        "q_max": a.q_max,
        "x": overrides.x.as_ref().map(|v| v.to_string()),
        "terms": a.terms,
    });
    let text = match a.format {
        Format::Text => render::verify_text(&reports, &summary),
        Format::Json => envelope("verify", params, "reports", serde_json::to_value(&reports).expect("reports")),
        Format::Csv => render::verify_csv(&reports)?,
    };
    Ok((text, code))
}

fn cmd_constants(a: &ConstantsArgs) -> Result<(String, i32)> {
    if a.digits > MAX_DIGITS {
        return Err(Error::Usage(format!("--digits {} exceeds the maximum of {MAX_DIGITS}", a.digits)));
    }
    if a.digits == 0 {
        return Err(Error::Usage("--digits must be at least 1".into()));
    }
    let ctx = PrecisionContext::high((a.digits + 10).max(30))?;
    let mut values = vec![("gamma".to_string(), const_gamma(&ctx)), ("pi".to_string(), const_pi(&ctx)), ("catalan".to_string(), const_catalan(&ctx))];
    for m in 2..=10 {
        values.push((format!("zeta{m}"), const_zeta(m, &ctx)?));
    }
    let d = a.digits as usize;
    let pairs: Vec<(String, String)> = values.into_iter().map(|(n, v)| (n, v.to_fixed(d))).collect();
    let text = match a.format {
        Format::Text => pairs.iter().map(|(n, v)| format!("{n}={v}\n")).collect(),
        Format::Json => {
            let map: serde_json::Map<String, Value> = pairs.iter().map(|(n, v)| (n.clone(), json!(v))).collect();
            envelope("constants", json!({ "digits": a.digits }), "result", Value::Object(map))
        }
        Format::Csv => render::constants_csv(&pairs)?,
    };
    Ok((text, EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ehz").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/4", false).unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-3", false).unwrap(), RBig::from(-3));
        assert_eq!(parse_rational("2.5", true).unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.25", true).unwrap(), rat(-1, 4));
        assert!(matches!(parse_rational("0.5", false), Err(Error::Usage(_))));
        assert!(matches!(parse_rational("1/0", false), Err(Error::Usage(_))));
        assert!(matches!(parse_rational("abc", true), Err(Error::Usage(_))));
    }

    #[test]
    fn constants_command() {
        let (code, out, _) = run_str(&["constants", "--digits", "20"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "gamma=0.57721566490153286061"));
        assert_eq!(out.lines().count(), 12);
        let (_, out, _) = run_str(&["constants", "--digits", "5"]);
        assert!(out.lines().any(|l| l == "catalan=0.91597"));
        let (code, _, err) = run_str(&["constants", "--digits", "1000000"]);
        assert_eq!(code, 2);
        assert!(err.contains("maximum"));
    }

    #[test]
    fn eval_examples() {
        let (code, out, _) = run_str(&["eval", "--formula", "sondow-alt", "--s", "1", "--terms", "60"]);
        assert_eq!(code, 0);
        assert!(out.contains("0.6931471805"), "{out}");
        let (code, out, _) = run_str(&["eval", "--formula", "hasse", "--s", "2", "--x", "1/4", "--terms", "10000", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "eval");
        assert!(v["result"]["reference"].as_str().unwrap().starts_with("17.1973"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["eval", "--formula", "nope", "--terms", "10"]).0, 2);
        assert_eq!(run_str(&["eval", "--formula", "euler-hurwitz", "--q", "1", "--x", "0.5", "--terms", "10"]).0, 2);
        assert_eq!(run_str(&["eval", "--formula", "euler-hurwitz", "--q", "1", "--x", "1/0", "--terms", "10"]).0, 2);
        assert_eq!(run_str(&["eval", "--formula", "euler-hurwitz", "--q", "1", "--x", "-1", "--terms", "10"]).0, 3);
        assert_eq!(run_str(&["eval", "--formula", "hasse", "--s", "1", "--terms", "10"]).0, 3);
        assert_eq!(run_str(&["verify", "--id", "no_such"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
    }

    #[test]
    fn verify_one_identity() {
        let (code, out, _) = run_str(&["verify", "--id", "coppo_30", "--n-max", "20", "--q-max", "3", "--x", "1/3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 63);
        assert!(out.lines().last().unwrap().contains("fail=0"));
    }

    #[test]
    fn converge_csv_shape() {
        let (code, out, _) = run_str(&[
            "converge", "--formula", "euler-hurwitz", "--q", "1", "--x", "1", "--terms", "100,1000,10000", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "N,partial_sum,reference,abs_error,rel_error,seconds");
        assert_eq!(lines.len(), 5);
        let e: f64 = lines[4].strip_prefix("# exponent,").unwrap().parse().unwrap();
        assert!((e + 1.0).abs() < 0.05);
    }
}
