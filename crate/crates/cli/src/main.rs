//! Command-line front end: compute constants to requested digits, run the
//! invariant suites, and benchmark the flagship series.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error (bad
//! argument, wrong method for a target), 3 internal convergence failure.
//! Plain `compute` prints only the value digits on stdout (diagnostics go
//! to stderr) so output is stable and scriptable; `--json` swaps that for
//! one JSON report object.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::num::rational::BigRational;
use hurwitz_core::num::One;
use serde::{Deserialize, Serialize};

use hurwitz_core::contfrac::{
    convergents_exact, eval_cf_backward, euler_transform, zeta2_cf_spec, zeta3_cf_spec,
};
use hurwitz_core::dirichlet::{
    l_minus8_2_fast, l_value, verify_closed_forms, CharacterSpec, LMethod,
};
use hurwitz_core::hurwitz::{zeta2_fast, zeta2_simple, zeta3_fast, zeta3_simple};
use hurwitz_core::numeric::rational::{parse_rational, rat, rat_int};
use hurwitz_core::wz::{check_wz, eval_term, term_ratio, pairs};
use hurwitz_core::{BigReal, PrecisionContext, SeriesResult};

// ── Command surface ─────────────────────────────────────────────────────

#[derive(Parser)]
#[command(name = "hurwitz", about = "Hurwitz zeta and Dirichlet L-values to arbitrary precision", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one value to the requested number of digits.
    Compute(ComputeArgs),
    /// Run an invariant suite; exits 1 on the first failure.
    Verify(VerifyArgs),
    /// Time the flagship series at each requested precision.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// zeta(2, a) — Hurwitz zeta at s = 2.
    Zeta2,
    /// zeta(3, a) — Hurwitz zeta at s = 3.
    Zeta3,
    /// zeta(2) by its integer-coefficient continued fraction.
    Zeta2cf,
    /// zeta(3) by its integer-coefficient continued fraction.
    Zeta3cf,
    /// Dirichlet L(chi_d, s) for a fundamental discriminant d.
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Base-4 row series.
    Simple,
    /// Base-64 / base-1024 diagonal series (default).
    Fast,
    /// Continued fraction (zeta targets at a = 1 only).
    Cf,
    /// Hurwitz decomposition over one character period (L targets).
    Decomposition,
    /// Dedicated single-series route (L target, d = -8, s = 2 only).
    FastSeries,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Simple => "simple",
            Method::Fast => "fast",
            Method::Cf => "cf",
            Method::Decomposition => "decomposition",
            Method::FastSeries => "fast-series",
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// What to compute.
    #[arg(long, value_enum)]
    target: Target,
    /// Hurwitz argument a > 0 as a rational string, e.g. "1/5" (zeta targets).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "x_offset")]
    a: Option<String>,
    /// Series offset x = a - 1 instead of a, e.g. "-4/5" for a = 1/5.
    #[arg(long = "x-offset", allow_hyphen_values = true)]
    x_offset: Option<String>,
    /// Fundamental discriminant (L target).
    #[arg(long, allow_hyphen_values = true)]
    disc: Option<i64>,
    /// Exponent s in {2, 3} (L target).
    #[arg(long, default_value_t = 2)]
    s: u32,
    /// Significant digits to report.
    #[arg(long)]
    digits: usize,
    /// Evaluation route.
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    method: Method,
    /// Guard digits; defaults to HURWITZ_GUARD or 20.
    #[arg(long)]
    guard: Option<usize>,
    /// Emit the full run report as a single JSON object.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Wz,
    ClosedForms,
    CrossMethod,
    Cf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which invariant suite to run.
    #[arg(long, value_enum)]
    suite: Suite,
    /// Working precision for the numeric suites (the wz suite is exact).
    #[arg(long, default_value_t = 50)]
    digits: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Which flagship value to time (at the fixed argument a = 1/5).
    #[arg(long, value_enum)]
    target: BenchTarget,
    /// Comma-separated list of digit counts; empty list prints an empty table.
    #[arg(long = "digits-list", value_delimiter = ',', num_args = 0..)]
    digits_list: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchTarget {
    Zeta2,
    Zeta3,
}

// ── Run report ──────────────────────────────────────────────────────────

/// Everything one computation reports. `value_digits` carries exactly the
/// requested number of significant digits.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct RunReport {
    value_digits: String,
    terms_used: usize,
    elapsed_ms: u64,
    method: String,
    warnings: Vec<String>,
}

/// Failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<hurwitz_core::Error> for Failure {
    fn from(e: hurwitz_core::Error) -> Self {
        Failure {
            code: if e.is_domain() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

type RunResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

// ── compute ─────────────────────────────────────────────────────────────

fn default_guard() -> usize {
    std::env::var("HURWITZ_GUARD")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(20)
}

fn parse_argument(args: &ComputeArgs) -> RunResult<BigRational> {
    let parse = |s: &str| {
        parse_rational(s).map_err(|e| Failure::domain(format!("bad rational '{s}': {e}")))
    };
    if let Some(x) = &args.x_offset {
        return Ok(parse(x)? + BigRational::one());
    }
    match &args.a {
        Some(a) => parse(a),
        None => Ok(BigRational::one()),
    }
}

/// Levels needed for the fractions to clear `digits + guard` output digits,
/// from their per-level rates (1.80 and 3.01 digits).
fn cf_depth(digits: usize, guard: usize, rate: f64) -> u64 {
    ((digits + guard) as f64 / rate).ceil() as u64 + 8
}

fn cf_value(target: Target, ctx: &PrecisionContext) -> RunResult<(BigReal, usize)> {
    let (spec, rate) = match target {
        Target::Zeta2 | Target::Zeta2cf => (zeta2_cf_spec(), 1.80),
        _ => (zeta3_cf_spec(), 3.01),
    };
    let depth = cf_depth(ctx.digits(), ctx.guard(), rate);
    let value = eval_cf_backward(&spec, depth, ctx)?;
    Ok((value, depth as usize))
}

fn shift_warning(a: &BigRational, warnings: &mut Vec<String>) {
    if *a > BigRational::one() {
        let steps = (a - BigRational::one()).ceil().to_integer();
        warnings.push(format!(
            "argument above 1: reduced by {steps} unit steps before summation"
        ));
    }
}

fn compute_report(args: &ComputeArgs) -> RunResult<RunReport> {
    if args.digits == 0 {
        return Err(Failure::domain("digits must be at least 1"));
    }
    let guard = args.guard.unwrap_or_else(default_guard);
    let ctx = PrecisionContext::with_guard(args.digits, guard);
    let mut warnings = Vec::new();
    let started = Instant::now();

    let series = |r: SeriesResult| (r.value, r.terms_used);
    // Resolved route for the report: CF targets always run the fraction, and
    // an L target's default route is the character-period decomposition.
    let route = match (args.target, args.method) {
        (Target::Zeta2cf | Target::Zeta3cf, _) => "cf",
        (Target::L, Method::Fast) => "decomposition",
        (_, m) => m.name(),
    };
    let (value, terms_used) = match (args.target, args.method) {
        (Target::Zeta2 | Target::Zeta3, Method::Simple | Method::Fast) => {
            let a = parse_argument(args)?;
            shift_warning(&a, &mut warnings);
            let s = if args.target == Target::Zeta2 { 2 } else { 3 };
            series(match (s, args.method) {
                (2, Method::Simple) => zeta2_simple(&a, &ctx)?,
                (2, _) => zeta2_fast(&a, &ctx)?,
                (3, Method::Simple) => zeta3_simple(&a, &ctx)?,
                (3, _) => zeta3_fast(&a, &ctx)?,
                _ => unreachable!(),
            })
        }
        (Target::Zeta2 | Target::Zeta3, Method::Cf) => {
            if parse_argument(args)? != BigRational::one() {
                return Err(Failure::domain(
                    "the continued fractions compute the a = 1 values; use a series method for other arguments",
                ));
            }
            cf_value(args.target, &ctx)?
        }
        (Target::Zeta2cf | Target::Zeta3cf, Method::Fast | Method::Cf) => {
            if args.a.is_some() || args.x_offset.is_some() {
                return Err(Failure::domain(
                    "continued-fraction targets take no argument; they compute the a = 1 values",
                ));
            }
            cf_value(args.target, &ctx)?
        }
        (Target::L, Method::Fast | Method::Decomposition | Method::Simple) => {
            let d = args
                .disc
                .ok_or_else(|| Failure::domain("target L requires --disc"))?;
            let chi = CharacterSpec::new(d)?;
            let inner = if args.method == Method::Simple {
                LMethod::Simple
            } else {
                LMethod::Fast
            };
            series(l_value(&chi, args.s, inner, &ctx)?)
        }
        (Target::L, Method::FastSeries) => {
            match (args.disc, args.s) {
                (Some(-8), 2) => series(l_minus8_2_fast(&ctx)?),
                _ => {
                    return Err(Failure::domain(
                        "the dedicated fast series covers discriminant -8 with s = 2 only",
                    ))
                }
            }
        }
        (target, method) => {
            let target = match target {
                Target::Zeta2 => "zeta2",
                Target::Zeta3 => "zeta3",
                Target::Zeta2cf => "zeta2cf",
                Target::Zeta3cf => "zeta3cf",
                Target::L => "L",
            };
            return Err(Failure::domain(format!(
                "method {} does not apply to target {target}",
                method.name()
            )));
        }
    };

    Ok(RunReport {
        value_digits: value.to_sig_string(args.digits),
        terms_used,
        elapsed_ms: started.elapsed().as_millis() as u64,
        method: route.into(),
        warnings,
    })
}

fn cmd_compute(args: &ComputeArgs) -> RunResult<()> {
    let report = compute_report(args)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&report)
                .map_err(|e| Failure { code: 3, message: e.to_string() })?
        );
    } else {
        println!("{}", report.value_digits);
        eprintln!(
            "method {}, {} terms, {} ms",
            report.method, report.terms_used, report.elapsed_ms
        );
        for w in &report.warnings {
            eprintln!("note: {w}");
        }
    }
    Ok(())
}

// ── verify ──────────────────────────────────────────────────────────────

struct SuiteRow {
    name: String,
    ok: bool,
}

fn suite_wz() -> RunResult<Vec<SuiteRow>> {
    let k_points = [rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 11)];
    let mut rows = Vec::new();
    for pair in pairs::all_pairs() {
        let check = check_wz(&pair.f, &pair.g(), 6, &k_points)?;
        rows.push(SuiteRow {
            name: format!("pair {} telescopes on 28 rational points", pair.name),
            ok: check.holds(),
        });
    }
    Ok(rows)
}

fn suite_closed_forms(digits: usize) -> RunResult<Vec<SuiteRow>> {
    let ctx = PrecisionContext::new(digits);
    Ok(verify_closed_forms(&ctx)?
        .into_iter()
        .map(|c| SuiteRow { name: c.label.to_string(), ok: c.ok })
        .collect())
}

fn suite_cross_method(digits: usize) -> RunResult<Vec<SuiteRow>> {
    let ctx = PrecisionContext::new(digits);
    let tolerance = -(digits as i64 - 5);
    let mut rows = Vec::new();
    for (num, den) in [(1i64, 1i64), (1, 2), (1, 3), (1, 4), (1, 5), (3, 4), (7, 8)] {
        let a = rat(num, den);
        for s in [2u32, 3] {
            let (fast, simple) = match s {
                2 => (zeta2_fast(&a, &ctx)?, zeta2_simple(&a, &ctx)?),
                _ => (zeta3_fast(&a, &ctx)?, zeta3_simple(&a, &ctx)?),
            };
            rows.push(SuiteRow {
                name: format!("zeta({s}, {num}/{den}) diagonal vs row scheme"),
                ok: fast.value.sub(&simple.value).below_pow10(tolerance),
            });
        }
    }
    Ok(rows)
}

fn suite_cf(digits: usize) -> RunResult<Vec<SuiteRow>> {
    let ctx = PrecisionContext::new(digits);
    let tolerance = -(digits as i64 - 2);
    let depth2 = cf_depth(digits, ctx.guard(), 1.80);
    let depth3 = cf_depth(digits, ctx.guard(), 3.01);
    let z2 = zeta2_fast(&rat_int(1), &ctx)?.value;
    let cf2 = eval_cf_backward(&zeta2_cf_spec(), depth2, &ctx)?;
    let z3 = zeta3_fast(&rat_int(1), &ctx)?.value;
    let cf3 = eval_cf_backward(&zeta3_cf_spec(), depth3, &ctx)?;
    let mut rows = vec![
        SuiteRow {
            name: format!("zeta(2) fraction depth {depth2} matches the series at {digits} digits"),
            ok: cf2.sub(&z2).below_pow10(tolerance),
        },
        SuiteRow {
            name: format!("zeta(3) fraction depth {depth3} matches the series at {digits} digits"),
            ok: cf3.sub(&z3).below_pow10(tolerance),
        },
    ];
    // Transform exactness at modest depth.
    let g = pairs::zeta3_accel().g();
    let ratio = term_ratio(&g).subst_k_const(&rat_int(0));
    let cf = euler_transform(
        &ratio.num.univariate_in_n().expect("univariate ratio"),
        &ratio.den.univariate_in_n().expect("univariate ratio"),
        &eval_term(&g, 0, &rat_int(0))?,
    );
    let convergents = convergents_exact(&cf, 15)?;
    let mut sum = rat_int(0);
    let mut exact = true;
    for (n, convergent) in convergents.iter().enumerate() {
        sum += eval_term(&g, n as u64, &rat_int(0))?;
        exact &= convergent == &sum;
    }
    rows.push(SuiteRow {
        name: "transform convergents equal partial sums exactly to depth 15".into(),
        ok: exact,
    });
    Ok(rows)
}

fn cmd_verify(args: &VerifyArgs) -> RunResult<()> {
    if args.digits == 0 {
        return Err(Failure::domain("digits must be at least 1"));
    }
    let rows = match args.suite {
        Suite::Wz => suite_wz()?,
        Suite::ClosedForms => suite_closed_forms(args.digits)?,
        Suite::CrossMethod => suite_cross_method(args.digits)?,
        Suite::Cf => suite_cf(args.digits)?,
    };
    for row in &rows {
        println!("{}  {}", if row.ok { "PASS" } else { "FAIL" }, row.name);
    }
    match rows.iter().find(|r| !r.ok) {
        None => Ok(()),
        Some(first) => Err(Failure { code: 1, message: format!("invariant failed: {}", first.name) }),
    }
}

// ── bench ───────────────────────────────────────────────────────────────

fn cmd_bench(args: &BenchArgs) -> RunResult<()> {
    println!("{:>8}  {:>8}  {:>10}", "digits", "terms", "elapsed_ms");
    let a = rat(1, 5);
    for &digits in &args.digits_list {
        if digits == 0 {
            return Err(Failure::domain("digits must be at least 1"));
        }
        let ctx = PrecisionContext::new(digits);
        let started = Instant::now();
        let run = match args.target {
            BenchTarget::Zeta2 => zeta2_fast(&a, &ctx)?,
            BenchTarget::Zeta3 => zeta3_fast(&a, &ctx)?,
        };
        println!(
            "{:>8}  {:>8}  {:>10}",
            digits,
            run.terms_used,
            started.elapsed().as_millis()
        );
    }
    Ok(())
}
