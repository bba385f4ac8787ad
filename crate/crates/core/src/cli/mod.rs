//! Batch command-line front end.
//!
//! Each invocation parses one request, runs it, and writes a single line of
//! key-sorted JSON to the output stream. Failures write a one-line
//! diagnostic to the error stream and exit with the code of the error class:
//! 2 `NotNormal`, 3 `NotUnit`, 4 precision, 5 parse or ring mismatch.

pub mod json;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::batch::Execution;
use crate::error::{Error, Result};
use crate::resultant;
use crate::ring::LocalRing;
use crate::selfcheck;
use crate::series::TruncatedSeries;
use crate::weierstrass;

/// Seed for `selfcheck` when set.
pub const SEED_ENV: &str = "HENSEL_WEIER_SEED";

#[derive(Parser, Debug)]
#[command(name = "hensel-weier", version, about = "Exact Weierstrass division, preparation and henselian resultants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order d and leading unit of an I-normal series.
    Order(Operands),
    /// Division g = B f + C with deg C < d.
    Divide(Operands),
    /// Preparation f = (t^d + Q) v.
    Prepare(Operands),
    /// Henselian resultant Res(f, g).
    Resultant(Operands),
    /// Cofactors u, v with u f + v g = Res(f, g).
    Cofactors(Operands),
    /// f(alpha) for alpha in I.
    Eval(Operands),
    /// Run the built-in invariant suites on small random instances.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args, Debug)]
struct Operands {
    /// `p-adic:p=<prime>,N=<int>` or `tseries:base=Q|F<p>,N=<int>`.
    #[arg(long)]
    ring: String,
    /// Series f: JSON array, JSON series object, or a path to a file holding either.
    #[arg(long)]
    f: String,
    /// Series g (divide, resultant, cofactors).
    #[arg(long)]
    g: Option<String>,
    /// Element alpha (eval).
    #[arg(long)]
    alpha: Option<String>,
    /// t-precision M for operands given as bare arrays.
    #[arg(long)]
    tprec: Option<usize>,
    /// Fail instead of warning when M < (N+1) d.
    #[arg(long)]
    strict_precision: bool,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    /// Cases per suite.
    #[arg(long, default_value_t = 200)]
    cases: usize,
    /// Run cases on one thread.
    #[arg(long)]
    sequential: bool,
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "ParseError: {}", first.trim_start_matches("error: "));
            return 5;
        }
    };
    let outcome = match cli.command {
        Command::Selfcheck(args) => run_selfcheck(&args),
        cmd => dispatch(cmd, err).map(|v| (v, 0)),
    };
    match outcome {
        Ok((value, code)) => {
            let _ = writeln!(out, "{value}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn run_selfcheck(args: &SelfcheckArgs) -> Result<(Value, i32)> {
    let seed = match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{SEED_ENV}={s} is not a u64")))?,
        Err(_) => 0,
    };
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let report = selfcheck::run(seed, args.cases, exec);
    let suites: Vec<Value> = report
        .suites
        .iter()
        .map(|s| json!({"name": s.name, "cases": s.cases, "failed": s.failed}))
        .collect();
    let value = json!({
        "seed": seed,
        "passed": report.passed(),
        "failed": report.failed(),
        "suites": suites,
    });
    Ok((value, if report.failed() == 0 { 0 } else { 1 }))
}

/// Operand text is JSON unless it fails to parse and names an existing file.
fn load_operand(text: &str, what: &str) -> Result<Value> {
    match json::parse_text(text, what) {
        Ok(v) => Ok(v),
        Err(_) if Path::new(text).is_file() => {
            let body = std::fs::read_to_string(text).map_err(|io| Error::Parse(format!("{what}: {text}: {io}")))?;
            json::parse_text(&body, &format!("{what} ({text})"))
        }
        Err(e) => Err(e),
    }
}

fn array_len(v: &Value) -> usize {
    match v {
        Value::Array(a) => a.len(),
        Value::Object(o) => o.get("coeffs").and_then(Value::as_array).map_or(0, Vec::len),
        _ => 0,
    }
}

fn dispatch(cmd: Command, err: &mut dyn Write) -> Result<Value> {
    let ops = match &cmd {
        Command::Order(o)
        | Command::Divide(o)
        | Command::Prepare(o)
        | Command::Resultant(o)
        | Command::Cofactors(o)
        | Command::Eval(o) => o,
        Command::Selfcheck(_) => unreachable!("handled by the caller"),
    };
    let ring: LocalRing = ops.ring.parse()?;
    let n = ring.nilpotence() as usize;
    let f_json = load_operand(&ops.f, "--f")?;
    let g_json = match (&cmd, &ops.g) {
        (Command::Divide(_) | Command::Resultant(_) | Command::Cofactors(_), Some(g)) => Some(load_operand(g, "--g")?),
        (Command::Divide(_) | Command::Resultant(_) | Command::Cofactors(_), None) => {
            return Err(Error::Parse("missing --g".into()))
        }
        (_, Some(_)) => return Err(Error::Parse("--g is not used by this command".into())),
        (_, None) => None,
    };

    let len_f = array_len(&f_json).max(1);
    let default_prec = ops.tprec.unwrap_or(match cmd {
        Command::Order(_) => len_f,
        Command::Eval(_) => len_f.max(n),
        _ => {
            // A bare array is a polynomial, so any M past its length is exact.
            let probe = json::parse_series(&f_json, &ring, len_f, "--f")?;
            let d = probe.normal_order().map_or(1, |o| o.d.max(1));
            len_f.max(g_json.as_ref().map_or(0, array_len)).max((n + 2) * d)
        }
    });
    let f = json::parse_series(&f_json, &ring, default_prec, "--f")?;
    let g = g_json.map(|g| json::parse_series(&g, &ring, default_prec, "--g")).transpose()?;

    if !matches!(cmd, Command::Order(_) | Command::Eval(_)) {
        let d = f.normal_order()?.d;
        let m = g.as_ref().map_or(f.t_prec(), |g| g.t_prec().min(f.t_prec()));
        let want = weierstrass::recommended_t_prec(&ring, d);
        if m < want {
            let msg = format!("t_prec {m} is below the recommended (N+1)*d = {want}");
            if ops.strict_precision {
                return Err(Error::PrecisionTooLow(msg));
            }
            let _ = writeln!(err, "warning: {msg}");
        }
    }

    let mut out = Map::new();
    match cmd {
        Command::Order(_) => {
            let o = f.normal_order()?;
            out.insert("d".into(), json!(o.d));
            out.insert("leading".into(), json::scalar_value(&o.leading));
        }
        Command::Divide(_) => {
            let div = weierstrass::divide(g.as_ref().expect("checked above"), &f)?;
            out.insert("B".into(), json::series_value(div.quotient()));
            out.insert("C".into(), json::poly_value(div.remainder()));
        }
        Command::Prepare(_) => {
            let prep = weierstrass::prepare(&f)?;
            out.insert("P".into(), json::poly_value(prep.polynomial()));
            out.insert("d".into(), json!(prep.order()));
            out.insert("v".into(), json::series_value(prep.unit()));
        }
        Command::Resultant(_) => {
            let res = resultant::resultant(&f, g.as_ref().expect("checked above"))?;
            out.insert("res".into(), json::scalar_value(&res));
        }
        Command::Cofactors(_) => {
            let pair = resultant::cofactors(&f, g.as_ref().expect("checked above"))?;
            out.insert("u".into(), json::series_value(&pair.u));
            out.insert("v".into(), json::series_value(&pair.v));
            out.insert("res".into(), json::scalar_value(&pair.res));
            out.insert("cert_prec".into(), json!(pair.cert_prec));
        }
        Command::Eval(ref o) => {
            let text = o.alpha.as_deref().ok_or_else(|| Error::Parse("missing --alpha".into()))?;
            let alpha = json::parse_elem(&load_operand(text, "--alpha")?, &ring, "--alpha")?;
            out.insert("value".into(), json::scalar_value(&f.evaluate(&alpha)?));
        }
        Command::Selfcheck(_) => unreachable!(),
    }
    Ok(Value::Object(out))
}

/// Parses a series operand the way the CLI does; exposed for round-trip tests.
pub fn parse_series_text(text: &str, ring: &LocalRing, default_prec: usize) -> Result<TruncatedSeries> {
    json::parse_series(&json::parse_text(text, "series")?, ring, default_prec, "series")
}

/// Canonical JSON text of a series.
pub fn emit_series(s: &TruncatedSeries) -> String {
    json::series_value(s).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hensel-weier").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn prepare_flagship() {
        let (code, out, _) = call(&["prepare", "--ring", "p-adic:p=5,N=2", "--f", "[5,0,1,5]", "--tprec", "8"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"P":[5,0,1],"d":2,"v":{"coeffs":[1,5,0,0,0,0],"t_prec":6}}"#);
    }

    #[test]
    fn resultant_flagship() {
        let (code, out, _) = call(&["resultant", "--ring", "p-adic:p=5,N=3", "--f", "[5,0,1]", "--g", "[0,1]"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"res":"5"}"#);
    }

    #[test]
    fn not_normal_exit_code() {
        let (code, out, err) = call(&["order", "--ring", "p-adic:p=5,N=3", "--f", "[5,10,20]"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.starts_with("NotNormal"));
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn argument_errors_exit_5() {
        assert_eq!(call(&["prepare", "--ring", "p-adic:p=4,N=2", "--f", "[1]"]).0, 5);
        assert_eq!(call(&["frobnicate"]).0, 5);
        assert_eq!(call(&["divide", "--ring", "p-adic:p=5,N=2", "--f", "[5,1]"]).0, 5);
        assert_eq!(call(&["divide", "--ring", "p-adic:p=5,N=2", "--f", "[5,1]", "--g", "{\"coeffs\":\"x\"}"]).0, 5);
    }

    #[test]
    fn strict_precision() {
        let args = ["prepare", "--ring", "p-adic:p=5,N=2", "--f", "[5,0,1,5]", "--tprec", "4"];
        let (code, _, err) = call(&args);
        assert_eq!(code, 0);
        assert!(err.starts_with("warning"));
        let mut strict = args.to_vec();
        strict.push("--strict-precision");
        assert_eq!(call(&strict).0, 4);
    }
}
