//! Command-line front end: argument parsing, report formatting and the
//! exit-code contract (0 = all checks pass, 1 = some check failed,
//! 2 = usage error).

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use qcurv_core::compositions::{build_recursion_table, enumerate_compositions, multiplicity};
use qcurv_core::families::p_family;
use qcurv_core::qres::critical_q;
use qcurv_core::suite::{default_models, default_mus, run_suite, CheckStatus, VerificationReport};
use qcurv_core::{EigenParameter, EinsteinModel, Rat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exact verification of Q-curvature recursions on Einstein model
/// geometries. All arithmetic is over arbitrary-precision rationals;
/// rational arguments are written `p/q` or as integers (no decimals).
#[derive(Debug, Parser)]
#[command(name = "qcurv", version, disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity verification suite on a model grid.
    Verify(VerifyArgs),
    /// Print the volume and square-root expansions of one model.
    Series(SeriesArgs),
    /// Print compositions and multiplicities for one order.
    Multiplicities(MultiplicitiesArgs),
    /// Print curvatures and top expansion coefficients of one model.
    Qtable(QtableArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Model dimension (even, >= 6); repeatable, paired with --J.
    #[arg(long = "n", value_name = "INT")]
    pub n: Vec<i64>,
    /// Normalized scalar curvature J; repeatable, paired with --n.
    #[arg(long = "J", value_name = "RAT", allow_hyphen_values = true)]
    pub j: Vec<String>,
    /// Eigenvalue parameter mu >= 0; repeatable.
    #[arg(long = "mu", value_name = "RAT", allow_hyphen_values = true)]
    pub mu: Vec<String>,
    /// Comma-separated check ids (default: all).
    #[arg(long = "checks", value_name = "ID,ID,...")]
    pub checks: Option<String>,
    /// Series truncation order in t = r^2 (4..=8).
    #[arg(long = "max-order", value_name = "INT", default_value_t = 4)]
    pub max_order: usize,
    /// Output format.
    #[arg(long = "format", value_name = "text|json", default_value = "text")]
    pub format: String,
    /// Evaluate grid cells in parallel (output order is unchanged).
    #[arg(long = "parallel")]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long = "n", value_name = "INT")]
    pub n: i64,
    #[arg(long = "J", value_name = "RAT", allow_hyphen_values = true)]
    pub j: String,
    /// Truncation order in t = r^2.
    #[arg(long = "order", value_name = "INT", default_value_t = 4)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct MultiplicitiesArgs {
    /// Composition size N >= 1.
    #[arg(long = "N", value_name = "INT")]
    pub big_n: i64,
    #[arg(long = "format", value_name = "text|json", default_value = "text")]
    pub format: String,
}

#[derive(Debug, Args)]
pub struct QtableArgs {
    #[arg(long = "n", value_name = "INT")]
    pub n: i64,
    #[arg(long = "J", value_name = "RAT", allow_hyphen_values = true)]
    pub j: String,
}

/// A usage-level error: printed to stderr, exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_format(s: &str) -> Result<Format, UsageError> {
    match s {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        other => Err(UsageError(format!(
            "--format must be `text` or `json`, got `{other}`"
        ))),
    }
}

fn parse_rat(flag: &str, s: &str) -> Result<Rat, UsageError> {
    Rat::from_str(s).map_err(|e| UsageError(format!("{flag}: {e}")))
}

fn validate_dimension(n: i64) -> Result<(), UsageError> {
    if n < 6 || n % 2 != 0 {
        Err(UsageError(format!(
            "--n: dimension must be even and at least 6, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Pairs the repeated `--n` and `--J` flags into a model grid. Lists must
/// have equal length, or one of them length one (broadcast). With neither
/// flag given, the default five-model grid is used.
fn build_models(ns: &[i64], js: &[String]) -> Result<Vec<(i64, Rat)>, UsageError> {
    if ns.is_empty() && js.is_empty() {
        return Ok(default_models());
    }
    if ns.is_empty() {
        return Err(UsageError("--J given without --n".into()));
    }
    if js.is_empty() {
        return Err(UsageError("--n given without --J".into()));
    }
    let js: Vec<Rat> = js
        .iter()
        .map(|s| parse_rat("--J", s))
        .collect::<Result<_, _>>()?;
    let pairs: Vec<(i64, Rat)> = if ns.len() == js.len() {
        ns.iter().copied().zip(js).collect()
    } else if ns.len() == 1 {
        js.into_iter().map(|j| (ns[0], j)).collect()
    } else if js.len() == 1 {
        ns.iter().map(|&n| (n, js[0].clone())).collect()
    } else {
        return Err(UsageError(format!(
            "--n and --J must pair up: got {} and {} values",
            ns.len(),
            js.len()
        )));
    };
    for (n, _) in &pairs {
        validate_dimension(*n)?;
    }
    Ok(pairs)
}

fn build_mus(mus: &[String]) -> Result<Vec<Rat>, UsageError> {
    if mus.is_empty() {
        return Ok(default_mus());
    }
    let parsed: Vec<Rat> = mus
        .iter()
        .map(|s| parse_rat("--mu", s))
        .collect::<Result<_, _>>()?;
    for mu in &parsed {
        if mu.is_negative() {
            return Err(UsageError(format!("--mu: must be >= 0, got {mu}")));
        }
    }
    Ok(parsed)
}

fn build_checks(spec: &Option<String>) -> Result<Vec<String>, UsageError> {
    let all: Vec<String> = qcurv_core::suite::check_ids()
        .iter()
        .map(|s| s.to_string())
        .collect();
    match spec {
        None => Ok(all),
        Some(list) => {
            let mut out = Vec::new();
            for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                if !all.iter().any(|a| a == id) {
                    return Err(UsageError(format!("--checks: unknown check id `{id}`")));
                }
                out.push(id.to_string());
            }
            Ok(out)
        }
    }
}

/// Runs a parsed command; returns the output for stdout and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), UsageError> {
    match &cli.command {
        Command::Verify(args) => verify(args),
        Command::Series(args) => series(args),
        Command::Multiplicities(args) => multiplicities(args),
        Command::Qtable(args) => qtable(args),
    }
}

fn verify(args: &VerifyArgs) -> Result<(String, i32), UsageError> {
    let format = parse_format(&args.format)?;
    let models = build_models(&args.n, &args.j)?;
    let mus = build_mus(&args.mu)?;
    let checks = build_checks(&args.checks)?;
    if !(4..=8).contains(&args.max_order) {
        return Err(UsageError(format!(
            "--max-order: must be between 4 and 8, got {}",
            args.max_order
        )));
    }
    let report = run_suite(&models, &mus, &checks, args.max_order, args.parallel)
        .map_err(|e| UsageError(e.to_string()))?;
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    let out = match format {
        Format::Json => render_report_json(&report),
        Format::Text => render_report_text(&report),
    };
    Ok((out, code))
}

fn render_report_json(report: &VerificationReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn render_report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "check  n   J      mu      status           residual");
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{:<5}  {:<2}  {:<5}  {:<6}  {:<15}  {}",
            c.id,
            c.n,
            c.j.to_string(),
            c.mu.to_string(),
            status_str(c.status),
            c.residual
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "summary: pass={} fail={} conjecture-pass={} conjecture-fail={} total={}",
        s.pass, s.fail, s.conjecture_pass, s.conjecture_fail, s.total
    );
    let _ = writeln!(
        out,
        "mu sampling: operator identities have mu-degree <= {}; grid carries {} distinct mu values",
        report.params.mu_poly_degree_bound, report.params.distinct_mu
    );
    out
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::ConjecturePass => "conjecture-pass",
        CheckStatus::ConjectureFail => "conjecture-fail",
    }
}

fn series(args: &SeriesArgs) -> Result<(String, i32), UsageError> {
    validate_dimension(args.n)?;
    if args.order < 1 {
        return Err(UsageError("--order: must be at least 1".into()));
    }
    let j = parse_rat("--J", &args.j)?;
    let m = EinsteinModel::new(args.n, j).map_err(|e| UsageError(e.to_string()))?;
    let v = m.volume_series(args.order);
    let w = v.sqrt().expect("volume expansion starts at one");
    let psi = w.inv().expect("unit constant term");
    let mut out = String::new();
    let _ = writeln!(out, "model: n = {}, J = {}, c = {}", args.n, m.j(), m.c());
    let _ = writeln!(out, "k      v_2k            w_2k            (v^-1/2)_2k");
    for k in 0..=args.order {
        let _ = writeln!(
            out,
            "{:<5}  {:<14}  {:<14}  {}",
            k,
            v.coefficient(k).to_string(),
            w.coefficient(k).to_string(),
            psi.coefficient(k)
        );
    }
    Ok((out, EXIT_OK))
}

fn multiplicities(args: &MultiplicitiesArgs) -> Result<(String, i32), UsageError> {
    let format = parse_format(&args.format)?;
    if args.big_n < 1 {
        return Err(UsageError(format!(
            "--N: must be at least 1, got {}",
            args.big_n
        )));
    }
    let comps = enumerate_compositions(args.big_n).map_err(|e| UsageError(e.to_string()))?;
    let table = build_recursion_table(args.big_n).map_err(|e| UsageError(e.to_string()))?;
    let mut total = Rat::zero();
    let rows: Vec<(String, Rat)> = comps
        .iter()
        .map(|c| {
            let m = multiplicity(c);
            total = &total + &m;
            (c.to_string(), m)
        })
        .collect();

    let out = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "compositions of N = {}", args.big_n);
            for (c, m) in &rows {
                let _ = writeln!(out, "{c} -> {m}");
            }
            let _ = writeln!(out, "sum of multiplicities: {total}");
            let _ = writeln!(
                out,
                "solved recursion coefficients (word; a; coefficient), w-scale {}:",
                table.rhs_scale()
            );
            for e in table.entries() {
                let word = e
                    .word
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let _ = writeln!(out, "({word}); {}; {}", e.a, e.coefficient);
            }
            out
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = table
                .entries()
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "word": e.word,
                        "a": e.a,
                        "coefficient": e.coefficient.to_string(),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "N": args.big_n,
                "multiplicities": rows
                    .iter()
                    .map(|(c, m)| serde_json::json!({"composition": c, "m": m.to_string()}))
                    .collect::<Vec<_>>(),
                "sum": total.to_string(),
                "table": {
                    "entries": entries,
                    "rhs_scale": table.rhs_scale().to_string(),
                },
            });
            let mut s = serde_json::to_string_pretty(&value).expect("serializes");
            s.push('\n');
            s
        }
    };
    Ok((out, EXIT_OK))
}

fn qtable(args: &QtableArgs) -> Result<(String, i32), UsageError> {
    validate_dimension(args.n)?;
    let j = parse_rat("--J", &args.j)?;
    let m = EinsteinModel::new(args.n, j).map_err(|e| UsageError(e.to_string()))?;
    let e = EigenParameter::zero();
    let mut out = String::new();
    let _ = writeln!(out, "model: n = {}, J = {}", args.n, m.j());
    let top = 4.min(args.n / 2) as usize;
    for k in 1..=top {
        if 2 * k as i64 == args.n {
            let q = critical_q(&m).map_err(|e| UsageError(e.to_string()))?;
            let _ = writeln!(out, "Q{} = {}", 2 * k, q);
        } else {
            let g = p_family(&m, &e, k).map_err(|err| UsageError(err.to_string()))?;
            let _ = writeln!(out, "Q{} = {}", 2 * k, g.q_value.expect("subcritical"));
        }
    }
    let v = m.volume_series(4);
    let w = v.sqrt().expect("volume expansion starts at one");
    for k in 1..=4usize {
        let _ = writeln!(out, "v{} = {}", 2 * k, v.coefficient(k));
    }
    for k in 1..=4usize {
        let _ = writeln!(out, "w{} = {}", 2 * k, w.coefficient(k));
    }
    Ok((out, EXIT_OK))
}
