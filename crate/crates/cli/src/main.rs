//! Command-line front end: expansions, single coefficients, word censuses,
//! totals, and verification suites, with deterministic JSON or CSV output.
//!
//! Exit codes: 0 on success and on verification suites that pass, 1 on a
//! verification failure (the counterexample is in the report), 2 on usage or
//! parse errors and on an exceeded enumeration budget.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chebcensus::{
    census_bruteforce, census_genfn, expand_compose, expand_recurrence, explicit_coeff,
    explicit_coeff_u, sign_pattern, total_count, verify_abc, verify_mixed_signs, verify_moretrig,
    verify_nonneg, verify_trivial, CensusMap, ChebKind, ExpansionRequest, PropertyCheck, Rational,
    VerifyReport, DEFAULT_BUDGET, DEFAULT_SEARCH_CAP,
};

#[derive(Parser)]
#[command(name = "chebcensus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum KindArg {
    T,
    U,
}

impl From<KindArg> for ChebKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::T => ChebKind::First,
            KindArg::U => ChebKind::Second,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    Compose,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Bruteforce,
    Genfn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Nonneg,
    Abc,
    Moretrig,
    Sign,
    Counterexample,
    Trivial,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the degree-n polynomial of the chosen kind at the Laurent argument
    Expand(ExpandArgs),
    /// Compute one coefficient of the one-variable expansion by the explicit formula
    Coeff(CoeffArgs),
    /// Count cyclically reduced words of length k per homology class
    Census(CensusArgs),
    /// Run verification suites over exact arithmetic
    Verify(VerifyArgs),
    /// Total number of cyclically reduced words of length k
    Total(TotalArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Polynomial kind: T (first) or U (second)
    #[arg(long, value_enum, ignore_case = true)]
    kind: KindArg,
    /// Degree
    #[arg(long)]
    n: u32,
    /// Parameter c as "p/q" or an integer string
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Number of variables
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Expansion method
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    method: Method,
}

#[derive(Args)]
struct CoeffArgs {
    /// Polynomial kind: T (first) or U (second)
    #[arg(long, value_enum, ignore_case = true, default_value_t = KindArg::T)]
    kind: KindArg,
    /// Degree
    #[arg(long)]
    n: u32,
    /// Parameter c as "p/q" or an integer string (must be nonzero)
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Exponent
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
}

#[derive(Args)]
struct CensusArgs {
    /// Rank of the free group
    #[arg(long)]
    r: usize,
    /// Word length
    #[arg(long)]
    k: u32,
    /// Counting backend
    #[arg(long, value_enum, default_value_t = Backend::Genfn)]
    backend: Backend,
    /// Run both backends and compare them
    #[arg(long, conflicts_with = "backend")]
    compare: bool,
    /// Node budget for the brute-force enumerator
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which property suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Parameter values, comma-separated "p/q" or integer strings
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "2"
    )]
    c: Vec<String>,
    /// Largest degree to check
    #[arg(long, default_value_t = 30)]
    n_max: u32,
    /// Number of variables (nonneg suite only)
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Restrict to one kind; default is both for nonneg, T for counterexample
    #[arg(long, value_enum, ignore_case = true)]
    kind: Option<KindArg>,
    /// Degree cap for the counterexample search
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    cap: u32,
}

#[derive(Args)]
struct TotalArgs {
    /// Rank of the free group
    #[arg(long)]
    r: usize,
    /// Word length
    #[arg(long)]
    k: u32,
}

/// A diagnostic that maps to exit code 2.
struct UsageError(String);

fn parse_rational(s: &str) -> Result<Rational, UsageError> {
    Rational::from_str(s).map_err(|e| UsageError(e.to_string()))
}

fn parse_rationals(list: &[String]) -> Result<Vec<Rational>, UsageError> {
    list.iter().map(|s| parse_rational(s)).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Expand(args) => run_expand(args, cli.format),
        Command::Coeff(args) => run_coeff(args, cli.format),
        Command::Census(args) => run_census(args, cli.format),
        Command::Verify(args) => run_verify(args, cli.format),
        Command::Total(args) => run_total(args, cli.format),
    }
}

fn emit_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid JSON")
    );
}

fn emit_csv(rows: Vec<Vec<String>>) {
    let mut writer = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        writer.write_record(&row).expect("stdout write");
    }
    writer.flush().expect("stdout flush");
}

fn run_expand(args: ExpandArgs, format: Format) -> Result<ExitCode, UsageError> {
    let c = parse_rational(&args.c)?;
    if args.d == 0 {
        return Err(UsageError("d must be at least 1".into()));
    }
    let kind: ChebKind = args.kind.into();
    let request = ExpansionRequest::new(kind, args.n, c.clone(), args.d);
    let poly = match args.method {
        Method::Recurrence => expand_recurrence(&request),
        Method::Compose => expand_compose(&request),
    };
    match format {
        Format::Json => emit_json(&json!({
            "kind": kind.to_string(),
            "n": args.n,
            "c": c.to_string(),
            "d": args.d,
            "poly": poly.to_json(),
        })),
        Format::Csv => {
            let mut rows = Vec::new();
            let mut header: Vec<String> = (1..=args.d).map(|i| format!("e_{i}")).collect();
            header.push("coeff".into());
            rows.push(header);
            for (e, coeff) in poly.terms() {
                let mut row: Vec<String> = e.entries().iter().map(|x| x.to_string()).collect();
                row.push(coeff.to_string());
                rows.push(row);
            }
            emit_csv(rows);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_coeff(args: CoeffArgs, format: Format) -> Result<ExitCode, UsageError> {
    let c = parse_rational(&args.c)?;
    let kind: ChebKind = args.kind.into();
    let coeff = match kind {
        ChebKind::First => explicit_coeff(args.n, &c, args.k),
        ChebKind::Second => explicit_coeff_u(args.n, &c, args.k),
    }
    .map_err(|e| UsageError(e.to_string()))?;
    match format {
        Format::Json => emit_json(&json!({
            "kind": kind.to_string(),
            "n": args.n,
            "c": c.to_string(),
            "k": args.k,
            "coeff": coeff.to_string(),
        })),
        Format::Csv => emit_csv(vec![
            vec![
                "kind".into(),
                "n".into(),
                "c".into(),
                "k".into(),
                "coeff".into(),
            ],
            vec![
                kind.to_string(),
                args.n.to_string(),
                c.to_string(),
                args.k.to_string(),
                coeff.to_string(),
            ],
        ]),
    }
    Ok(ExitCode::SUCCESS)
}

fn census_csv_rows(r: usize, census: &CensusMap) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    let mut header: Vec<String> = (1..=r).map(|i| format!("e_{i}")).collect();
    header.push("count".into());
    rows.push(header);
    for (class, count) in census.iter() {
        let mut row: Vec<String> = class.entries().iter().map(|x| x.to_string()).collect();
        row.push(count.to_string());
        rows.push(row);
    }
    rows
}

fn run_census(args: CensusArgs, format: Format) -> Result<ExitCode, UsageError> {
    if args.r == 0 || args.k == 0 {
        return Err(UsageError("census needs r >= 1 and k >= 1".into()));
    }
    if args.compare {
        let brute = census_bruteforce(args.r, args.k, args.budget)
            .map_err(|e| UsageError(e.to_string()))?;
        let genfn = census_genfn(args.r, args.k).map_err(|e| UsageError(e.to_string()))?;
        let agree = brute == genfn;
        match format {
            Format::Json => emit_json(&json!({
                "r": args.r,
                "k": args.k,
                "backends_agree": agree,
                "total": brute.total().to_string(),
            })),
            Format::Csv => emit_csv(vec![
                vec!["backends_agree".into(), "total".into()],
                vec![agree.to_string(), brute.total().to_string()],
            ]),
        }
        return Ok(if agree {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    let (census, backend_name) = match args.backend {
        Backend::Bruteforce => (
            census_bruteforce(args.r, args.k, args.budget)
                .map_err(|e| UsageError(e.to_string()))?,
            "bruteforce",
        ),
        Backend::Genfn => (
            census_genfn(args.r, args.k).map_err(|e| UsageError(e.to_string()))?,
            "genfn",
        ),
    };
    match format {
        Format::Json => emit_json(&json!({
            "r": args.r,
            "k": args.k,
            "backend": backend_name,
            "census": census.to_json_rows(),
            "total": census.total().to_string(),
        })),
        Format::Csv => emit_csv(census_csv_rows(args.r, &census)),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs, format: Format) -> Result<ExitCode, UsageError> {
    let cs = parse_rationals(&args.c)?;
    if args.d == 0 {
        return Err(UsageError("d must be at least 1".into()));
    }
    let kinds: Vec<ChebKind> = match args.kind {
        Some(k) => vec![k.into()],
        None => vec![ChebKind::First, ChebKind::Second],
    };
    let counterexample_kinds: Vec<ChebKind> = match args.kind {
        Some(k) => vec![k.into()],
        None => vec![ChebKind::First],
    };

    let mut report = VerifyReport::default();
    let add_nonneg = |report: &mut VerifyReport| {
        for c in &cs {
            for &kind in &kinds {
                report.extend(verify_nonneg(kind, c, args.n_max, args.d));
            }
        }
    };
    match args.suite {
        Suite::Nonneg => add_nonneg(&mut report),
        Suite::Abc => {
            for c in &cs {
                report.extend(verify_abc(c, args.n_max));
            }
        }
        Suite::Moretrig => {
            for c in &cs {
                report.extend(verify_moretrig(c, args.n_max));
            }
        }
        Suite::Sign => {
            for c in &cs {
                report.extend(sign_pattern(c, args.n_max));
            }
        }
        Suite::Counterexample => {
            for c in &cs {
                for &kind in &counterexample_kinds {
                    report.extend(verify_mixed_signs(kind, c, args.cap));
                }
            }
        }
        Suite::Trivial => report.extend(verify_trivial(args.n_max)),
        Suite::All => {
            add_nonneg(&mut report);
            for c in &cs {
                report.extend(verify_abc(c, args.n_max));
                report.extend(verify_moretrig(c, args.n_max));
                if c < &Rational::from_int(-1) {
                    report.extend(sign_pattern(c, args.n_max));
                }
                for &kind in &counterexample_kinds {
                    report.extend(verify_mixed_signs(kind, c, args.cap));
                }
            }
            report.extend(verify_trivial(args.n_max));
        }
    }

    match format {
        Format::Json => emit_json(&report.to_json()),
        Format::Csv => {
            let mut rows = vec![vec![
                "property".into(),
                "params".into(),
                "pass".into(),
                "n".into(),
                "k".into(),
                "value".into(),
            ]];
            for check in &report.checks {
                rows.push(check_csv_row(check));
            }
            emit_csv(rows);
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check_csv_row(check: &PropertyCheck) -> Vec<String> {
    let mut params = check.params.clone();
    if check.advisory {
        params["advisory"] = json!(true);
    }
    let (n, k, value) = match &check.counterexample {
        Some(w) => {
            let k = if w.exps.len() == 1 {
                w.exps[0].to_string()
            } else {
                format!(
                    "({})",
                    w.exps
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            (w.n.to_string(), k, w.value.to_string())
        }
        None => (String::new(), String::new(), String::new()),
    };
    vec![
        check.property.clone(),
        params.to_string(),
        check.pass.to_string(),
        n,
        k,
        value,
    ]
}

fn run_total(args: TotalArgs, format: Format) -> Result<ExitCode, UsageError> {
    if args.r == 0 || args.k == 0 {
        return Err(UsageError("total needs r >= 1 and k >= 1".into()));
    }
    let total = total_count(args.r, args.k);
    match format {
        Format::Json => emit_json(&json!({
            "r": args.r,
            "k": args.k,
            "total": total.to_string(),
        })),
        Format::Csv => emit_csv(vec![
            vec!["r".into(), "k".into(), "total".into()],
            vec![args.r.to_string(), args.k.to_string(), total.to_string()],
        ]),
    }
    Ok(ExitCode::SUCCESS)
}
