//! `barneskit` command-line front end. Results go to stdout as JSON,
//! diagnostics to stderr.

use std::io::Write;
use std::process::ExitCode;

use barneskit::barnes::{barnes_number, barnes_poly};
use barneskit::bernoulli::{bernoulli_order, bernoulli_order_poly};
use barneskit::dedekind::{
    fourier_dedekind_exact, fourier_dedekind_float, partition_count_closed, partition_count_dp,
    popoviciu, FdsKey, PartitionSpec,
};
use barneskit::exact::rational::{format_rational, parse_rational, parse_rational_list};
use barneskit::identities::{
    self, round_sig, CheckReport, SweepRanges, TraceabilityReport, DEFAULT_SEED,
};
use barneskit::zeta::{
    barnes_zeta_decomposed, barnes_zeta_direct, barnes_zeta_special, hurwitz_order_n, hurwitz_zeta,
    ZetaQuery, DEFAULT_TOL,
};
use barneskit::{AVec, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SEED_VAR: &str = "BARNESKIT_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "barneskit",
    version,
    about = "Bernoulli-Barnes numbers, Fourier-Dedekind sums, partitions and Barnes zeta values"
)]
struct Cli {
    /// Wrap the result with the command, its inputs and run metadata.
    #[arg(long, global = true)]
    record: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bernoulli number B_k, or of order N; --poly gives the polynomial.
    Bernoulli {
        k: usize,
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[arg(long)]
        poly: bool,
    },
    /// Bernoulli-Barnes number B_k(a).
    BarnesNumber {
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Bernoulli-Barnes polynomial B_k(x; a) as coefficients, constant term first.
    BarnesPoly {
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Number of partitions of T into the given parts.
    Partition {
        #[arg(long)]
        parts: String,
        t: u64,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
    },
    /// Fourier-Dedekind sum sigma_R(others; mod).
    Fds {
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        others: String,
        #[arg(long = "mod")]
        modulus: String,
        /// Evaluate by summing over roots of unity in double precision.
        #[arg(long)]
        float: bool,
    },
    /// Hurwitz, Barnes or order-n Hurwitz zeta values.
    Zeta {
        #[arg(long, value_enum)]
        kind: ZetaKind,
        #[arg(long, allow_hyphen_values = true, value_parser = real)]
        s: f64,
        #[arg(long, value_parser = real)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Exact Barnes zeta value at s = -K.
    SpecialValue {
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Check a registered identity over a parameter sweep, or all of them.
    Verify {
        #[arg(required_unless_present_any = ["all", "list"], conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Comma-separated ranges such as `n=3..6,m=1..15`.
        #[arg(long)]
        sweep: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Tabular output instead of JSON.
        #[arg(long)]
        csv: bool,
        /// List the registry instead of running anything.
        #[arg(long, conflicts_with_all = ["id", "all"])]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Dp,
    Closed,
    Popoviciu,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZetaKind {
    Hurwitz,
    BarnesDirect,
    BarnesDecomposed,
    OrderN,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// What a subcommand produced, before formatting.
struct Output {
    result: Value,
    inputs: Value,
    metadata: Value,
    /// Pre-rendered CSV that replaces the JSON record.
    csv: Option<String>,
    checks_failed: bool,
}

impl Output {
    fn new(result: Value, inputs: Value) -> Self {
        Output {
            result,
            inputs,
            metadata: json!({}),
            csv: None,
            checks_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(cli.command) {
        Ok(out) => {
            let text = match out.csv {
                Some(csv) => csv,
                None if cli.record => {
                    let mut metadata = out.metadata;
                    metadata["version"] = json!(env!("CARGO_PKG_VERSION"));
                    let record = json!({
                        "command": name,
                        "inputs": out.inputs,
                        "result": out.result,
                        "metadata": metadata,
                    });
                    format!("{record}\n")
                }
                None => format!("{}\n", json!({ "result": out.result })),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.checks_failed {
                eprintln!("barneskit: one or more checks failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("barneskit: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("barneskit: {e}");
            ExitCode::from(2)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Bernoulli { .. } => "bernoulli",
        Command::BarnesNumber { .. } => "barnes-number",
        Command::BarnesPoly { .. } => "barnes-poly",
        Command::Partition { .. } => "partition",
        Command::Fds { .. } => "fds",
        Command::Zeta { .. } => "zeta",
        Command::SpecialValue { .. } => "special-value",
        Command::Verify { .. } => "verify",
    }
}

fn run(command: Command) -> Run<Output> {
    match command {
        Command::Bernoulli { k, order, poly } => {
            if order == 0 {
                return Err(Failure::Usage("--order must be at least 1".into()));
            }
            let result = if poly {
                serde_json::to_value(bernoulli_order_poly(k, order)).expect("poly serializes")
            } else {
                json!(format_rational(&bernoulli_order(k, order)))
            };
            Ok(Output::new(
                result,
                json!({ "k": k, "order": order, "poly": poly }),
            ))
        }
        Command::BarnesNumber { k, a } => {
            let a = AVec::parse(&a)?;
            let result = json!(format_rational(&barnes_number(k, &a)));
            Ok(Output::new(result, json!({ "k": k, "a": a })))
        }
        Command::BarnesPoly { k, a } => {
            let a = AVec::parse(&a)?;
            let poly = barnes_poly(k, &a).poly;
            let result = serde_json::to_value(poly).expect("poly serializes");
            Ok(Output::new(result, json!({ "k": k, "a": a })))
        }
        Command::Partition { parts, t, method } => {
            let parts = integer_list(&parts, "--parts")?;
            let spec = PartitionSpec::new(parts.clone())?;
            let count = match method {
                Method::Dp => {
                    let t = usize::try_from(t).map_err(|_| Failure::Usage("T too large".into()))?;
                    partition_count_dp(&spec, t).to_string()
                }
                Method::Closed => format_rational(&partition_count_closed(&spec, t)?),
                Method::Popoviciu => match parts[..] {
                    [a, b] => popoviciu(a, b, t)?.to_string(),
                    _ => {
                        return Err(Failure::Usage(
                            "--method popoviciu needs exactly two parts".into(),
                        ))
                    }
                },
            };
            let inputs = json!({ "parts": parts, "t": t, "method": value_name(method) });
            Ok(Output::new(json!(count), inputs))
        }
        Command::Fds {
            r,
            others,
            modulus,
            float,
        } => {
            let others = integer_list(&others, "--others")?;
            let modulus = match integer_list(&modulus, "--mod")?[..] {
                [m] => m,
                _ => return Err(Failure::Usage("--mod takes a single integer".into())),
            };
            let key = FdsKey::new(r, others.clone(), modulus)?;
            let result = if float {
                float_value(fourier_dedekind_float(&key)?)
            } else {
                json!(format_rational(&fourier_dedekind_exact(&key)?))
            };
            let inputs = json!({ "r": r, "others": others, "mod": modulus, "float": float });
            Ok(Output::new(result, inputs))
        }
        Command::Zeta {
            kind,
            s,
            x,
            a,
            n,
            tol,
        } => zeta(kind, s, x, a, n, tol),
        Command::SpecialValue { k, x, a } => {
            let xr = parse_rational(&x)?;
            let a = AVec::parse(&a)?;
            let value = barnes_zeta_special(k, &xr, &a);
            let inputs = json!({ "k": k, "x": format_rational(&xr), "a": a });
            Ok(Output::new(json!(format_rational(&value)), inputs))
        }
        Command::Verify {
            id,
            all,
            sweep,
            seed,
            csv,
            list,
        } => {
            let seed = resolve_seed(seed)?;
            if list {
                return Ok(registry_listing());
            }
            if all {
                if sweep.is_some() {
                    return Err(Failure::Usage(
                        "--sweep applies to a single identity".into(),
                    ));
                }
                verify_all(seed, csv)
            } else {
                let id = id.expect("clap requires an id without --all");
                verify_one(&id, sweep.as_deref(), seed, csv)
            }
        }
    }
}

fn zeta(
    kind: ZetaKind,
    s: f64,
    x: f64,
    a: Option<String>,
    n: Option<usize>,
    tol: f64,
) -> Run<Output> {
    let value = match kind {
        ZetaKind::Hurwitz => hurwitz_zeta(s, x, tol)?,
        ZetaKind::OrderN => {
            let n = n.ok_or_else(|| Failure::Usage("--kind order-n needs --n".into()))?;
            hurwitz_order_n(s, x, n, tol)?
        }
        ZetaKind::BarnesDirect | ZetaKind::BarnesDecomposed => {
            let a = a
                .clone()
                .ok_or_else(|| Failure::Usage("Barnes zeta needs --a".into()))?;
            let q = ZetaQuery::new(s, x, AVec::parse(&a)?, tol)?;
            match kind {
                ZetaKind::BarnesDirect => barnes_zeta_direct(&q)?,
                _ => barnes_zeta_decomposed(&q)?,
            }
        }
    };
    let mut out = Output::new(
        float_value(value),
        json!({ "kind": value_name(kind), "s": s, "x": x, "a": a, "n": n }),
    );
    out.metadata = json!({ "target_abs_err": tol });
    Ok(out)
}

/// A real given as a decimal or a fraction such as `7/2`.
fn real(text: &str) -> std::result::Result<f64, String> {
    parse_rational(text)
        .map(|q| barneskit::exact::rational::to_f64(&q))
        .map_err(|e| e.to_string())
}

fn float_value(v: f64) -> Value {
    if v.is_finite() {
        json!(round_sig(v))
    } else {
        json!(v.to_string())
    }
}

fn integer_list(text: &str, flag: &str) -> Run<Vec<u64>> {
    parse_rational_list(text)?
        .into_iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(Failure::Usage(format!("{flag} needs integers, got {q}")));
            }
            u64::try_from(q.to_integer())
                .map_err(|_| Failure::Usage(format!("{flag} needs non-negative integers, got {q}")))
        })
        .collect()
}

fn resolve_seed(flag: Option<u64>) -> Run<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_VAR}=`{v}` is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn registry_listing() -> Output {
    let entries: Vec<Value> = identities::registry()
        .iter()
        .map(|i| {
            json!({
                "id": i.id,
                "anchor": i.anchor,
                "statement": i.statement,
                "mode": i.mode,
                "kind": i.kind,
                "sweep": i.default_sweep(),
            })
        })
        .collect();
    Output::new(Value::Array(entries), json!({ "list": true }))
}

fn verify_one(id: &str, sweep: Option<&str>, seed: u64, csv: bool) -> Run<Output> {
    let ranges = SweepRanges::parse(sweep.unwrap_or(""))?;
    let reports = identities::sweep(id, &ranges, seed)?;
    let failed = reports.iter().any(CheckReport::is_failure);
    let mut out = Output::new(
        serde_json::to_value(&reports).expect("reports serialize"),
        json!({ "id": id, "sweep": sweep, "seed": seed }),
    );
    out.metadata = json!({ "seed": seed, "cases": reports.len() });
    out.checks_failed = failed;
    if csv {
        out.csv = Some(checks_csv(&reports)?);
    }
    Ok(out)
}

fn verify_all(seed: u64, csv: bool) -> Run<Output> {
    let report = identities::verify_all(seed)?;
    let mut out = Output::new(
        serde_json::to_value(&report).expect("report serializes"),
        json!({ "all": true, "seed": seed }),
    );
    out.metadata = json!({ "seed": seed });
    out.checks_failed = !report.all_passed();
    if csv {
        out.csv = Some(trace_csv(&report)?);
    }
    Ok(out)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Run<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(format!("csv output: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Usage(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn checks_csv(reports: &[CheckReport]) -> Run<String> {
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.case.id.clone(),
                cell(&serde_json::to_value(r.status).expect("status serializes")),
                serde_json::to_string(&r.case.params).expect("params serialize"),
                cell(&r.lhs),
                cell(&r.rhs),
                r.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    csv_text(&["id", "status", "params", "lhs", "rhs", "detail"], rows)
}

fn trace_csv(report: &TraceabilityReport) -> Run<String> {
    let rows = report
        .identities
        .iter()
        .map(|e| {
            vec![
                e.id.clone(),
                cell(&serde_json::to_value(e.kind).expect("kind serializes")),
                e.cases.to_string(),
                e.passed.to_string(),
                e.failed.to_string(),
                e.skipped.to_string(),
                e.reported.to_string(),
                e.reported_agreeing.to_string(),
                e.sweep.clone(),
                e.anchor.clone(),
            ]
        })
        .collect();
    csv_text(
        &[
            "id",
            "kind",
            "cases",
            "passed",
            "failed",
            "skipped",
            "reported",
            "reported_agreeing",
            "sweep",
            "anchor",
        ],
        rows,
    )
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}
