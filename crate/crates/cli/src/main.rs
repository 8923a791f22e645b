use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use trace_codes::{
    build_defining_set, classify_optimality, griesmer_lower_bound, make_field, run_report, weil_sum_closed,
    weil_sum_direct, CodeReport, CodeSpec, EnumerationMode, Error, FieldParams, FqElement, Method, RunConfig,
    DEFAULT_SYMBOL_BUDGET,
};

#[derive(Parser)]
#[command(name = "trace-codes", version, about = "Weight distributions of trace codes over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the defining set D_i in canonical order.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute the weight distribution with one method.
    Distribution {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Theory)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run every method, cross-check, and print the JSON report.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Griesmer bound and optimality class of an [n, k, d] code over F_q.
    Bounds {
        #[arg(long)]
        n: u128,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u128,
        #[arg(long)]
        q: u128,
    },
    /// Evaluate S(alpha, beta) by summation and by the closed form.
    WeilSum {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        l: u64,
        /// Coefficients, constant term first, e.g. `1,0`.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    e: usize,
    #[arg(long)]
    l: u64,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    i: u8,
}

impl CodeArgs {
    fn spec(&self) -> trace_codes::Result<CodeSpec> {
        CodeSpec::new(self.p, self.e, self.l, self.i)
    }
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; defaults to all cores.
    #[arg(long, env = "TRACE_CODES_THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, value_enum, default_value_t = ModeArg::OrbitReduced)]
    mode: ModeArg,
    /// Cap on codewords visited times code length for brute force.
    #[arg(long, default_value_t = DEFAULT_SYMBOL_BUDGET)]
    budget: u64,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            threads: self.threads.map(|t| t as usize),
            budget: self.budget,
            mode: match self.mode {
                ModeArg::Full => EnumerationMode::Full,
                ModeArg::OrbitReduced => EnumerationMode::OrbitReduced,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Analytic,
    Theory,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    OrbitReduced,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parameter(_) | Error::Refused(_)) => EXIT_INVALID,
        Some(Error::Budget(_)) => EXIT_BUDGET,
        Some(Error::Internal(_)) | None => EXIT_CHECK_FAILED,
    }
}

fn parse_element(text: &str, fp: &FieldParams) -> anyhow::Result<FqElement> {
    let coeffs = text
        .split(',')
        .map(|c| c.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::Parameter(format!("bad element {text:?}: {e}")))?;
    Ok(fp.element(&coeffs)?)
}

fn report_status(report: &CodeReport) -> u8 {
    if report.distribution.is_none() {
        EXIT_BUDGET
    } else if report.passed {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Construct { code, format } => {
            let spec = code.spec()?;
            let fp = make_field(spec.p, spec.e)?;
            let d = build_defining_set(&spec, &fp)?;
            let points: Vec<(FqElement, FqElement)> = d.points(&fp).collect();
            match format {
                Format::Json => {
                    let out = serde_json::json!({ "spec": spec, "length": points.len(), "points": points });
                    println!("{}", serde_json::to_string_pretty(&out)?);
                }
                Format::Csv => {
                    println!("x1,x2");
                    for (x1, x2) in &points {
                        println!("\"{x1}\",\"{x2}\"");
                    }
                }
            }
            Ok(0)
        }
        Command::Distribution { code, method, format, run } => {
            let spec = code.spec()?;
            let method = match method {
                MethodArg::Brute => Method::Brute,
                MethodArg::Analytic => Method::Analytic,
                MethodArg::Theory => Method::Theory,
            };
            let report = run_report(&spec, &[method], &run.config())?;
            if let Some(refusal) = report.refusals.first() {
                eprintln!("{} refused: {}", refusal.method.name(), refusal.reason);
            }
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            Ok(report_status(&report))
        }
        Command::Verify { code, run } => {
            let spec = code.spec()?;
            let report = run_report(&spec, &Method::ALL, &run.config())?;
            print!("{}", report.to_json());
            Ok(report_status(&report))
        }
        Command::Bounds { n, k, d, q } => {
            let bound = griesmer_lower_bound(k, d, q)?;
            let class = classify_optimality(n, k, d, q)?;
            let out = serde_json::json!({
                "n": n, "k": k, "d": d, "q": q,
                "griesmer_bound": bound,
                "meets_bound": n >= bound,
                "griesmer_class": class,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(if n >= bound { 0 } else { EXIT_CHECK_FAILED })
        }
        Command::WeilSum { p, e, l, alpha, beta } => {
            let spec = CodeSpec::new(p, e, l, 0)?;
            let fp = make_field(p, e)?;
            let alpha = parse_element(&alpha, &fp).context("--alpha")?;
            let beta = parse_element(&beta, &fp).context("--beta")?;
            if alpha.is_zero() {
                return Err(Error::Parameter("alpha must be nonzero".into()).into());
            }
            let direct = weil_sum_direct(&alpha, &beta, l, &fp);
            let closed = weil_sum_closed(&alpha, &beta, &spec, &fp)?;
            let out = serde_json::json!({
                "alpha": alpha.to_string(),
                "beta": beta.to_string(),
                "direct": direct.to_string(),
                "closed": closed.to_string(),
                "equal": direct == closed,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(if direct == closed { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
