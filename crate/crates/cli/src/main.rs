use std::path::PathBuf;
use std::process::ExitCode;

use algknot_core::harness::{self, Check, HypothesisFilter, SearchConfig, VerificationReport};
use algknot_core::{
    char_divisor, char_divisor_brieskorn, cot_product, cot_product_test,
    decide_brieskorn_cobordism_with_tolerance, equivariant_signatures, milnor_number, parse_input,
    pf_polynomial, recover_exponents, stabilize, total_signature, witt_class,
    witt_equivalent_over_r, BrieskornExponents, CriterionReport, Divisor, Input, WeightSystem,
    DEFAULT_COT_TOLERANCE, SCHEMA_VERSION,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::{json, Value};

/// Invariants and cobordism criteria for algebraic knots of Brieskorn and
/// weighted homogeneous polynomials.
#[derive(Parser)]
#[command(name = "algknot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the rendered output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// The polynomial P_f(t).
    Pf(Single),
    /// Characteristic divisor and cyclotomic factorization.
    Delta(Single),
    /// Equivariant signatures (stabilizes once for an even number of variables).
    Sig(Single),
    /// Exact Witt equivalence over the reals; exit 1 when not equivalent.
    Witt(Pair),
    /// Cotangent-product test on Brieskorn exponents; exit 1 when it fails.
    Cot {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_COT_TOLERANCE)]
        tolerance: f64,
    },
    /// All criteria and a cobordism verdict for two Brieskorn polynomials.
    Report {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_COT_TOLERANCE)]
        tolerance: f64,
    },
    /// Recover exponents from a mod-2 characteristic divisor.
    Recover(Recover),
    /// Run a verification harness check; exit 1 when it finds violations.
    Verify(Verify),
    /// The (p.., 8, 8, 4, 4) vs (p.., 6, 6, 6, 6) square example.
    Example3 {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated extra exponents, n - 3 of them.
        #[arg(long)]
        ps: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Single {
    /// Brieskorn exponents, e.g. 2,3,7.
    #[arg(long)]
    exponents: Option<String>,
    /// Weights, e.g. 5/2,3.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Args)]
struct Recover {
    /// Forward-compute the divisor of these exponents, then invert it.
    #[arg(long, conflicts_with = "lambdas", required_unless_present = "lambdas")]
    exponents: Option<String>,
    /// Divisor given as a sum of Λ_a, e.g. 6,3,2,1 (reduced mod 2).
    #[arg(long)]
    lambdas: Option<String>,
    /// Number of factors; defaults to the number of exponents.
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct Verify {
    #[arg(long, default_value = "theorem2")]
    check: Check,
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 12)]
    max: u64,
    /// Defaults to no-multiple for theorem2 and none otherwise.
    #[arg(long)]
    filter: Option<HypothesisFilter>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    ps: Option<String>,
}

struct Output {
    json: Value,
    text: String,
    csv: String,
    ok: bool,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Text => format!("{}\n", self.text.trim_end()),
            Format::Csv => self.csv.clone(),
        }
    }
}

type CliResult<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

fn integer_json(n: &impl ToString) -> Value {
    let s = n.to_string();
    s.parse::<i64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn parse_exponents(text: &str) -> CliResult<BrieskornExponents> {
    match parse_input(text).map_err(err)? {
        Input::Exponents(e) => Ok(e),
        Input::Weights(_) => Err(format!("'{text}' is not a list of integer exponents")),
    }
}

fn parse_list(text: &str) -> CliResult<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| format!("'{s}' is not a nonnegative integer"))
        })
        .collect()
}

fn single_input(s: &Single) -> CliResult<Input> {
    match (&s.exponents, &s.weights) {
        (Some(e), _) => Ok(Input::Exponents(parse_exponents(e)?)),
        (None, Some(w)) => Ok(Input::Weights(parse_input(w).map_err(err)?.weights())),
        (None, None) => Err("one of --exponents or --weights is required".into()),
    }
}

fn pf(s: &Single) -> CliResult<Output> {
    let input = single_input(s)?;
    let ws = input.weights();
    let p = pf_polynomial(&ws).map_err(err)?;
    let mu = milnor_number(&ws).map_err(err)?;
    let rows = p
        .iter()
        .map(|(e, c)| vec![e.numer().to_string(), e.denom().to_string(), c.to_string()]);
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "input": input,
            "polynomial": p,
            "milnor_number": integer_json(&mu),
        }),
        text: p.to_string(),
        csv: csv_table(&["num", "den", "coeff"], rows),
        ok: true,
    })
}

fn divisor_rows(d: &Divisor) -> Vec<Vec<String>> {
    d.iter()
        .map(|(r, c)| vec![r.num().to_string(), r.den().to_string(), c.to_string()])
        .collect()
}

fn delta(s: &Single) -> CliResult<Output> {
    let input = single_input(s)?;
    let d = char_divisor(&input.weights()).map_err(err)?;
    let cp = d.to_cyclotomic().map_err(err)?;
    let factors: Vec<Value> = cp.iter().map(|(d, e)| json!({"d": d, "e": e})).collect();
    let coefficients: Vec<Value> = cp.expand().iter().map(integer_json).collect();
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "input": input,
            "divisor": d,
            "divisor_text": d.to_string(),
            "characteristic_polynomial": {
                "factors": factors,
                "text": cp.to_string(),
                "degree": cp.degree(),
                "coefficients": coefficients,
            },
        }),
        text: format!("divisor: {d}\ncharacteristic polynomial: {cp}"),
        csv: csv_table(&["num", "den", "multiplicity"], divisor_rows(&d)),
        ok: true,
    })
}

fn sig(s: &Single) -> CliResult<Output> {
    let input = single_input(s)?;
    let ws = input.weights();
    let stabilized = ws.variables() % 2 == 0;
    let target: WeightSystem = if stabilized {
        stabilize(&ws)
    } else {
        ws.clone()
    };
    let table = equivariant_signatures(&target).map_err(err)?;
    let total = total_signature(&table);
    let seifert_sign = if stabilized && ws.variables() % 2 == 1 {
        -1
    } else {
        1
    };
    let mut text: Vec<String> = table.iter().map(|(q, s)| format!("{q}: {s}")).collect();
    text.push(format!("total: {total}"));
    let rows = table
        .iter()
        .map(|(q, s)| vec![q.num().to_string(), q.den().to_string(), s.to_string()]);
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "input": input,
            "stabilized": stabilized,
            "seifert_sign": seifert_sign,
            "signatures": table,
            "total_signature": total,
        }),
        text: text.join("\n"),
        csv: csv_table(&["num", "den", "sigma"], rows),
        ok: true,
    })
}

fn witt(p: &Pair) -> CliResult<Output> {
    let a = parse_input(&p.a).map_err(err)?;
    let b = parse_input(&p.b).map_err(err)?;
    let (wa, wb) = (a.weights(), b.weights());
    let verdict = witt_equivalent_over_r(&wa, &wb).map_err(err)?;
    let (ca, cb) = (witt_class(&wa).map_err(err)?, witt_class(&wb).map_err(err)?);
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "input_a": a.to_string(),
            "input_b": b.to_string(),
            "witt_over_R": verdict,
            "class_a": ca.to_string(),
            "class_b": cb.to_string(),
        }),
        text: format!("witt_over_R: {verdict}"),
        csv: csv_table(
            &["input_a", "input_b", "witt"],
            [vec![a.to_string(), b.to_string(), verdict.to_string()]],
        ),
        ok: verdict,
    })
}

fn cot(p: &Pair, tolerance: f64) -> CliResult<Output> {
    let (a, b) = (parse_exponents(&p.a)?, parse_exponents(&p.b)?);
    let verdict = cot_product_test(&a, &b, tolerance).map_err(err)?;
    let l = a
        .exponents()
        .iter()
        .chain(b.exponents())
        .fold(1u64, |l, x| l.lcm(x)) as i64;
    let (worst_ell, max_difference) = (1..2 * l)
        .step_by(2)
        .map(|ell| (ell, (cot_product(&a, ell) - cot_product(&b, ell)).abs()))
        .fold(
            (1, 0.0f64),
            |best, cur| if cur.1 > best.1 { cur } else { best },
        );
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "input_a": a.to_string(),
            "input_b": b.to_string(),
            "tolerance": tolerance,
            "cot_test": verdict,
            "max_difference": max_difference,
            "worst_ell": worst_ell,
        }),
        text: format!(
            "cot_test: {verdict}\nmax difference {max_difference:e} at odd l = {worst_ell}"
        ),
        csv: csv_table(
            &["input_a", "input_b", "cot"],
            [vec![a.to_string(), b.to_string(), verdict.to_string()]],
        ),
        ok: verdict,
    })
}

fn report_text(r: &CriterionReport) -> String {
    let mut lines = vec![
        format!("input_a: {}", r.input_a),
        format!("input_b: {}", r.input_b),
        format!("witt_over_R: {}", r.witt_over_r),
        format!("cot_test: {}", r.cot_test),
        format!("mod2_congruent: {}", r.mod2_congruent),
        format!("odd_sets_equal: {}", r.odd_sets_equal),
        format!("fox_milnor: {}", r.fox_milnor),
        format!("signatures_equal: {}", r.signatures_equal),
        format!("verdict: {}", r.verdict),
    ];
    lines.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
    lines.join("\n")
}

fn report(p: &Pair, tolerance: f64) -> CliResult<Output> {
    let (a, b) = (parse_exponents(&p.a)?, parse_exponents(&p.b)?);
    let r = decide_brieskorn_cobordism_with_tolerance(&a, &b, tolerance).map_err(err)?;
    Ok(Output {
        json: serde_json::to_value(&r).map_err(err)?,
        text: report_text(&r),
        csv: csv_table(&CriterionReport::CSV_HEADER, [r.csv_record().to_vec()]),
        ok: true,
    })
}

fn recover(r: &Recover) -> CliResult<Output> {
    let (d, count) = match (&r.exponents, &r.lambdas) {
        (Some(e), _) => {
            let e = parse_exponents(e)?;
            let d = char_divisor_brieskorn(&e).mod2().map_err(err)?;
            (d, r.count.unwrap_or(e.variables()))
        }
        (None, Some(l)) => {
            let lambdas = parse_list(l)?;
            if let Some(&a) = lambdas.iter().find(|&&a| a == 0) {
                return Err(format!("Λ index {a} must be positive"));
            }
            let sum = lambdas
                .iter()
                .fold(Divisor::new(), |d, &a| &d + &Divisor::lambda(a));
            let count = r.count.ok_or("--count is required with --lambdas")?;
            (sum.mod2().map_err(err)?, count)
        }
        (None, None) => return Err("one of --exponents or --lambdas is required".into()),
    };
    let rec = recover_exponents(&d, count).map_err(err)?;
    let list = rec
        .exponents
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let mut text = list.clone();
    if rec.hypothesis_violated {
        text.push_str("\nwarning: an exponent divides another one; the result may not be unique");
    }
    Ok(Output {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "divisor_text": d.to_string(),
            "count": count,
            "exponents": rec.exponents,
            "hypothesis_violated": rec.hypothesis_violated,
        }),
        text,
        csv: csv_table(
            &["exponents", "hypothesis_violated"],
            [vec![list, rec.hypothesis_violated.to_string()]],
        ),
        ok: true,
    })
}

fn verification_text(r: &VerificationReport) -> String {
    let mut lines = vec![
        format!("check: {}", r.config.check),
        format!("tuples: {}", r.tuples),
        format!("pairs checked: {}", r.pairs_checked),
    ];
    for p in &r.properties {
        lines.push(format!(
            "{}: {} checked, {} violations",
            p.name, p.checked, p.violations
        ));
    }
    for v in &r.violations {
        lines.push(format!(
            "violation #{} {} ({} vs {}): {}; reproduce with `{}`",
            v.index, v.property, v.input_a, v.input_b, v.detail, v.reproduce
        ));
    }
    lines.extend(r.notes.iter().map(|n| format!("note: {n}")));
    lines.push(format!("elapsed: {:.3}s", r.elapsed_seconds));
    lines.push(format!("pass: {}", r.pass));
    lines.join("\n")
}

fn verification_output(r: VerificationReport) -> CliResult<Output> {
    Ok(Output {
        json: serde_json::to_value(&r).map_err(err)?,
        text: verification_text(&r),
        csv: r.to_csv(),
        ok: r.pass,
    })
}

fn verify(v: &Verify) -> CliResult<Output> {
    let cfg = SearchConfig {
        variables: v.vars,
        max_exponent: v.max,
        hypothesis_filter: v.filter.unwrap_or(match v.check {
            Check::Theorem2 => HypothesisFilter::NoMultiple,
            _ => HypothesisFilter::None,
        }),
        check: v.check,
        seed: v.seed,
        trials: v.trials,
        ps: v
            .ps
            .as_deref()
            .map(parse_list)
            .transpose()?
            .unwrap_or_default(),
    };
    let run = || harness::verify(&cfg).map_err(err);
    let report = match v.jobs {
        Some(0) => return Err("--jobs must be positive".into()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(err)?
            .install(run)?,
        None => run()?,
    };
    verification_output(report)
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Pf(s) => pf(s),
        Command::Delta(s) => delta(s),
        Command::Sig(s) => sig(s),
        Command::Witt(p) => witt(p),
        Command::Cot { pair, tolerance } => cot(pair, *tolerance),
        Command::Report { pair, tolerance } => report(pair, *tolerance),
        Command::Recover(r) => recover(r),
        Command::Verify(v) => verify(v),
        Command::Example3 { n, ps } => {
            let ps = ps
                .as_deref()
                .map(parse_list)
                .transpose()?
                .unwrap_or_default();
            verification_output(harness::reproduce_example3(*n, &ps).map_err(err)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let rendered = out.render(cli.format);
            print!("{rendered}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
