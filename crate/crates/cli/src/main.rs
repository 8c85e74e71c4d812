//! Command-line front end for the canonical-basis library.
//!
//! Every subcommand prints deterministic output in either pretty text or
//! JSON (`--output json`).  Exit codes: 0 success, 1 invariant or
//! acceptance failure, 2 guard exhaustion, 3 usage error.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use canbase::blocks::{block_stats, weight_diagram};
use canbase::canonical::ScanParams;
use canbase::crystal::{component_bfs, component_dot, crystal_op};
use canbase::orders::{bruhat_check, bruhat_statistics, Order, SignVector, Tuple};
use canbase::selftest;
use canbase::tensor::{Gen, Space};
use canbase::{Config, Engine, Error};

#[derive(Parser)]
#[command(
    name = "canbase",
    version,
    about = "Exact canonical-basis, order, crystal, and arc-diagram calculator"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    output: OutputFormat,

    /// Maximum number of terms any intermediate vector may carry.
    #[arg(long, global = true, env = "CANBASE_SUPPORT_GUARD", default_value_t = 1_000_000)]
    support_guard: usize,

    /// Maximum number of straightening or elimination iterations.
    #[arg(long, global = true, env = "CANBASE_DEPTH_GUARD", default_value_t = 10_000)]
    depth_guard: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    C,
    A,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpArg {
    F,
    E,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canonical vector of a tuple.
    Canonical {
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        /// Sign vector such as "+-+" (linear convention only).
        #[arg(long)]
        sigma: Option<String>,
        /// Comma-separated tuple, e.g. "0,1".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Specialize the coefficients at q = 1.
        #[arg(long)]
        q1: bool,
    },
    /// Compare two tuples in the Bruhat order and show the N-statistics.
    Bruhat {
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Apply one crystal operator.
    Crystal {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Sign vector; its presence selects the linear convention.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Bounded breadth-first search of the crystal component of z.
    Component {
        #[arg(long)]
        n: usize,
        /// Entry box as "LO,HI".
        #[arg(long = "box", allow_hyphen_values = true)]
        box_spec: String,
        /// Emit the component as a DOT graph instead.
        #[arg(long)]
        dot: bool,
    },
    /// Weight diagram and block statistics of a strictly dominant tuple.
    Arc {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Scan a box of tuples for canonical coefficients outside ℕ[q].
    Scan {
        #[arg(long)]
        n: usize,
        /// Entry box as "LO,HI".
        #[arg(long = "box", allow_hyphen_values = true)]
        box_spec: String,
        /// Restrict to tuples with the same total weight as this tuple.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Scan tuples in parallel (hit order is still deterministic).
        #[arg(long)]
        parallel: bool,
        /// Abort the scan after this many seconds of wall-clock time.
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
    /// Compare the two projected canonical vectors attached to a tuple.
    Ckw {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Run the full acceptance suite.
    Selftest,
}

/// A subcommand failure, carrying the process exit code.
enum Failure {
    /// Exit 1: a mathematical invariant or acceptance check failed.
    Invariant(String),
    /// Exit 2: a guard limit was exhausted.
    Guard(String),
    /// Exit 3: the request itself was invalid.
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Guard(_) => 2,
            Failure::Usage(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invariant(m) | Failure::Guard(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse_tuple(text: &str) -> Result<Tuple, Failure> {
    text.parse::<Tuple>().map_err(Failure::from)
}

fn parse_sigma(text: &str) -> Result<SignVector, Failure> {
    text.parse::<SignVector>().map_err(Failure::from)
}

/// Resolves `--type`/`--sigma` into an order/space selector.
fn resolve_sigma(
    kind: TypeArg,
    sigma: &Option<String>,
    n: usize,
) -> Result<Option<SignVector>, Failure> {
    match kind {
        TypeArg::C => match sigma {
            None => Ok(None),
            Some(_) => Err(Failure::Usage(
                "--sigma is only meaningful with --type a".into(),
            )),
        },
        TypeArg::A => {
            let text = sigma.as_ref().ok_or_else(|| {
                Failure::Usage("--type a requires --sigma".into())
            })?;
            let sv = parse_sigma(text)?;
            if sv.len() != n {
                return Err(Failure::Usage(format!(
                    "sign vector length {} does not match tuple length {n}",
                    sv.len()
                )));
            }
            Ok(Some(sv))
        }
    }
}

fn parse_box(text: &str) -> Result<(i64, i64), Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!("bad box {text:?}, expected LO,HI")));
    }
    let lo = parts[0]
        .trim()
        .parse::<i64>()
        .map_err(|_| Failure::Usage(format!("bad box bound {:?}", parts[0])))?;
    let hi = parts[1]
        .trim()
        .parse::<i64>()
        .map_err(|_| Failure::Usage(format!("bad box bound {:?}", parts[1])))?;
    if lo > hi {
        return Err(Failure::Usage(format!("empty box {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn tuple_json(t: &Tuple) -> Value {
    json!(t.entries().to_vec())
}

/// Lets a closed pipe terminate the process quietly instead of panicking
/// (`canbase component ... | head` should behave like any Unix tool).
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.support_guard == 0 || cli.depth_guard == 0 {
        eprintln!("error: guards must be strictly positive");
        return ExitCode::from(3);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let config = Config {
        support_guard: cli.support_guard,
        depth_guard: cli.depth_guard,
    };
    match &cli.command {
        Command::Canonical { kind, sigma, b, q1 } => {
            canonical_cmd(cli, &config, *kind, sigma, b, *q1)
        }
        Command::Bruhat { kind, sigma, a, b } => bruhat_cmd(cli, *kind, sigma, a, b),
        Command::Crystal { op, i, b, sigma } => crystal_cmd(cli, *op, *i, b, sigma),
        Command::Component { n, box_spec, dot } => component_cmd(cli, *n, box_spec, *dot),
        Command::Arc { b } => arc_cmd(cli, b),
        Command::Scan {
            n,
            box_spec,
            weight,
            parallel,
            timeout_secs,
        } => scan_cmd(cli, &config, *n, box_spec, weight, *parallel, *timeout_secs),
        Command::Ckw { b } => ckw_cmd(cli, &config, b),
        Command::Selftest => selftest_cmd(cli, &config),
    }
}

fn canonical_cmd(
    cli: &Cli,
    config: &Config,
    kind: TypeArg,
    sigma: &Option<String>,
    b: &str,
    q1: bool,
) -> Result<(), Failure> {
    let b = parse_tuple(b)?;
    let sigma = resolve_sigma(kind, sigma, b.len())?;
    let engine = Engine::new(config.clone());
    let entry = match &sigma {
        None => engine.canonical_c(&b)?,
        Some(sv) => engine.canonical_a(sv, &b)?,
    };
    let mut vector = entry.vector.clone();
    if q1 {
        vector = vector.eval_one();
    }
    match cli.output {
        OutputFormat::Pretty => println!("{vector}"),
        OutputFormat::Json => print_json(&vector.to_json()),
    }
    Ok(())
}

fn bruhat_cmd(
    cli: &Cli,
    kind: TypeArg,
    sigma: &Option<String>,
    a: &str,
    b: &str,
) -> Result<(), Failure> {
    let a = parse_tuple(a)?;
    let b = parse_tuple(b)?;
    if a.len() != b.len() {
        return Err(Failure::Usage(format!(
            "tuple lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let order = match resolve_sigma(kind, sigma, a.len())? {
        None => Order::C,
        Some(sv) => Order::A(sv),
    };
    let forward = bruhat_check(&a, &b, &order);
    let backward = bruhat_check(&b, &a, &order);
    let relation = if a == b {
        "a ⪯ b (equal)"
    } else if forward.holds {
        "a ⪯ b (strict)"
    } else if backward.holds {
        "a ⪰ b (strict)"
    } else {
        "a and b are incomparable"
    };
    let statistics = bruhat_statistics(&a, &b, &order);
    match cli.output {
        OutputFormat::Pretty => {
            println!("{relation}");
            if let Some(v) = &forward.violation {
                println!("violation: {v}");
            }
            for line in &statistics {
                println!("{line}");
            }
        }
        OutputFormat::Json => print_json(&json!({
            "a": tuple_json(&a),
            "b": tuple_json(&b),
            "relation": relation,
            "leq": forward.holds,
            "geq": backward.holds,
            "violation": forward.violation,
            "statistics": statistics,
        })),
    }
    Ok(())
}

fn crystal_cmd(
    cli: &Cli,
    op: OpArg,
    i: i64,
    b: &str,
    sigma: &Option<String>,
) -> Result<(), Failure> {
    let b = parse_tuple(b)?;
    let space = match sigma {
        None => {
            if i < 0 {
                return Err(Failure::Usage(
                    "generator indices are nonnegative in the symplectic convention".into(),
                ));
            }
            Space::type_c(b.len())
        }
        Some(text) => {
            let sv = parse_sigma(text)?;
            if sv.len() != b.len() {
                return Err(Failure::Usage(format!(
                    "sign vector length {} does not match tuple length {}",
                    sv.len(),
                    b.len()
                )));
            }
            Space::type_a(sv)
        }
    };
    let gen = match op {
        OpArg::F => Gen::F,
        OpArg::E => Gen::E,
    };
    let image = crystal_op(&space, &b, i, gen);
    match cli.output {
        OutputFormat::Pretty => match &image {
            Some(c) => println!("{c}"),
            None => println!("none"),
        },
        OutputFormat::Json => print_json(&json!({
            "image": image.as_ref().map(tuple_json),
        })),
    }
    Ok(())
}

fn component_cmd(cli: &Cli, n: usize, box_spec: &str, dot: bool) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (lo, hi) = parse_box(box_spec)?;
    let report = component_bfs(n, lo, hi);
    if dot {
        print!("{}", component_dot(&report));
    } else {
        match cli.output {
            OutputFormat::Pretty => {
                println!(
                    "component of z in the box [{lo},{hi}]^{n}: {} tuples reached",
                    report.reached.len()
                );
                for b in &report.reached {
                    let edges = report
                        .adjacency
                        .get(b)
                        .map(|edges| {
                            edges
                                .iter()
                                .map(|(op, c)| format!("{op}->{c}"))
                                .collect::<Vec<_>>()
                                .join("  ")
                        })
                        .unwrap_or_default();
                    println!("{b}: {edges}");
                }
                println!(
                    "antidominant tuples not reached within the box: {}",
                    report.unreached_antidominant.len()
                );
                for b in &report.unreached_antidominant {
                    println!("unreached: {b}");
                }
            }
            OutputFormat::Json => {
                let adjacency: Value = report
                    .adjacency
                    .iter()
                    .map(|(b, edges)| {
                        let edges: Value = edges
                            .iter()
                            .map(|(op, c)| (op.clone(), json!(c.to_string())))
                            .collect::<serde_json::Map<_, _>>()
                            .into();
                        (b.to_string(), edges)
                    })
                    .collect::<serde_json::Map<_, _>>()
                    .into();
                print_json(&json!({
                    "n": n,
                    "lo": lo,
                    "hi": hi,
                    "reached": report.reached.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                    "adjacency": adjacency,
                    "unreached_antidominant": report
                        .unreached_antidominant
                        .iter()
                        .map(|b| b.to_string())
                        .collect::<Vec<_>>(),
                }));
            }
        }
    }
    if !report.non_antidominant_reached.is_empty() {
        return Err(Failure::Invariant(format!(
            "the search reached non-antidominant tuples: {:?}",
            report.non_antidominant_reached
        )));
    }
    Ok(())
}

fn arc_cmd(cli: &Cli, b: &str) -> Result<(), Failure> {
    let b = parse_tuple(b)?;
    let diagram = weight_diagram(&b)?;
    let stats = block_stats(&b);
    match cli.output {
        OutputFormat::Pretty => {
            println!("{}", diagram.render());
            println!(
                "n0 = {}, n1 = {}, atypicality = {}",
                stats.n0, stats.n1, stats.atypicality
            );
        }
        OutputFormat::Json => print_json(&json!({
            "diagram": diagram.to_json(),
            "stats": {
                "n0": stats.n0,
                "n1": stats.n1,
                "atypicality": stats.atypicality,
            },
        })),
    }
    Ok(())
}

fn scan_cmd(
    cli: &Cli,
    config: &Config,
    n: usize,
    box_spec: &str,
    weight: &Option<String>,
    parallel: bool,
    timeout_secs: Option<u64>,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (lo, hi) = parse_box(box_spec)?;
    let weight_of = match weight {
        None => None,
        Some(text) => {
            let w = parse_tuple(text)?;
            if w.len() != n {
                return Err(Failure::Usage(format!(
                    "weight reference length {} does not match --n {n}",
                    w.len()
                )));
            }
            Some(w)
        }
    };
    let engine = Engine::new(config.clone());
    let report = engine.negativity_scan(&ScanParams {
        n,
        lo,
        hi,
        weight_of,
        deadline: timeout_secs.map(Duration::from_secs),
        parallel,
    });
    match cli.output {
        OutputFormat::Pretty => {
            println!("scanned {} tuples", report.scanned);
            for hit in &report.hits {
                println!("hit: coefficient {} at {} in c[{}]", hit.poly, hit.a, hit.b);
            }
            for (b, e) in &report.errors {
                println!("error at {b}: {e}");
            }
            if report.timed_out {
                println!("timed out before finishing");
            }
            if report.hits.is_empty() && report.errors.is_empty() {
                println!("no coefficients outside ℕ[q] and no errors");
            }
        }
        OutputFormat::Json => print_json(&json!({
            "scanned": report.scanned,
            "timed_out": report.timed_out,
            "hits": report
                .hits
                .iter()
                .map(|hit| json!({
                    "b": tuple_json(&hit.b),
                    "a": tuple_json(&hit.a),
                    "poly": hit.poly.to_json(),
                }))
                .collect::<Vec<_>>(),
            "errors": report
                .errors
                .iter()
                .map(|(b, e)| json!({ "b": tuple_json(b), "error": e }))
                .collect::<Vec<_>>(),
        })),
    }
    if !report.hits.is_empty() {
        Err(Failure::Invariant(format!(
            "{} coefficients outside ℕ[q]",
            report.hits.len()
        )))
    } else if !report.errors.is_empty() {
        Err(Failure::Guard(format!(
            "{} tuples exhausted their guards",
            report.errors.len()
        )))
    } else {
        Ok(())
    }
}

fn ckw_cmd(cli: &Cli, config: &Config, b: &str) -> Result<(), Failure> {
    let b = parse_tuple(b)?;
    let engine = Engine::new(config.clone());
    let report = engine.verify_ckw(&b)?;
    match cli.output {
        OutputFormat::Pretty => {
            println!("sigma = {}", report.sigma);
            println!("b' = {}", report.b_prime);
            println!("lhs = {}", report.lhs);
            println!("rhs = {}", report.rhs);
            println!("equal: {}", report.equal);
        }
        OutputFormat::Json => print_json(&json!({
            "b": tuple_json(&report.b),
            "sigma": report.sigma.to_string(),
            "b_prime": tuple_json(&report.b_prime),
            "lhs": report.lhs.to_json(),
            "rhs": report.rhs.to_json(),
            "equal": report.equal,
        })),
    }
    if report.equal {
        Ok(())
    } else {
        Err(Failure::Invariant(format!(
            "projected canonical vectors differ at {}",
            report.b
        )))
    }
}

fn selftest_cmd(cli: &Cli, config: &Config) -> Result<(), Failure> {
    let reports = selftest::run_all(config);
    match cli.output {
        OutputFormat::Pretty => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!(
                    "{status} — criterion {}: {} ({:?}; {})",
                    r.id, r.name, r.elapsed, r.detail
                );
            }
        }
        OutputFormat::Json => {
            let value: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "elapsed_ms": r.elapsed.as_millis() as u64,
                        "detail": r.detail,
                    })
                })
                .collect();
            print_json(&json!(value));
        }
    }
    if selftest::all_passed(&reports) {
        Ok(())
    } else {
        Err(Failure::Invariant("acceptance suite failed".into()))
    }
}
