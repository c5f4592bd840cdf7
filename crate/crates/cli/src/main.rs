use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trimetric::report::{self, ReportOptions};
use trimetric::suite::{self, FuzzConfig};
use trimetric::{parse_rational, CenterId, Exact, ExactTriangle, GeometryError, Tolerance};

/// Exact barycentric certificates for classical triangle inequalities.
#[derive(Debug, Parser)]
#[command(name = "trimetric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Debug, Args)]
struct ToleranceArgs {
    /// Relative tolerance for square-root-bearing comparisons [default: 1e-12; verify: 1e-10]
    #[arg(long, global = true)]
    rel_tol: Option<f64>,

    /// Absolute tolerance near zero [default: 1e-14; verify: 1e-10]
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
}

impl ToleranceArgs {
    fn resolve(&self, default: Tolerance) -> Tolerance {
        Tolerance::new(self.rel_tol.unwrap_or(default.relative), self.abs_tol.unwrap_or(default.absolute))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Sides {
    /// Side BC
    a: String,
    /// Side CA
    b: String,
    /// Side AB
    c: String,
}

impl Sides {
    fn triangle(&self) -> Result<ExactTriangle, GeometryError> {
        ExactTriangle::new(parse_rational(&self.a)?, parse_rational(&self.b)?, parse_rational(&self.c)?)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one triangle: invariants, centers, certificates, Euler line data
    Report {
        #[command(flatten)]
        sides: Sides,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Weights x,y,z for the weighted certificates
        #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
        weights: String,
        /// Pole of the Klamkin moment
        #[arg(long, default_value = "centroid")]
        klamkin_point: String,
        /// Second triangle a,b,c for Neuberg–Pedoe (defaults to the triangle itself)
        #[arg(long)]
        other: Option<String>,
        /// Extra λ values for the Euler line table
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Randomized exact-identity and oracle suite
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest side length drawn
        #[arg(long, default_value = "20")]
        side_max: String,
        /// Largest weight magnitude drawn
        #[arg(long, default_value = "10")]
        weight_max: String,
    },
    /// ELD_I and ELD_M on the Euler line X(λ) = (1−λ)H + λO
    Eld {
        #[command(flatten)]
        sides: Sides,
        /// Comma-separated rationals, e.g. 0,2/3,1,2
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status for invalid input.
const EXIT_INPUT: u8 = 1;
/// Exit status for a nonzero residual.
const EXIT_RESIDUAL: u8 = 2;

fn input_error(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_INPUT)
}

fn parse_center(name: &str) -> Result<CenterId, GeometryError> {
    CenterId::ALL
        .into_iter()
        .find(|id| id.to_string() == name || id.symbol().eq_ignore_ascii_case(name))
        .ok_or_else(|| GeometryError::Parse(format!("unknown center {name:?}")))
}

fn parse_triple(text: &str) -> Result<ExactTriangle, GeometryError> {
    let parts = report::parse_lambdas(text)?;
    let [a, b, c]: [Exact; 3] = parts
        .try_into()
        .map_err(|_| GeometryError::Parse(format!("expected a,b,c, got {text:?}")))?;
    ExactTriangle::new(a, b, c)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report records serialize")
}

fn cmd_report(
    sides: &Sides,
    format: Format,
    weights: &str,
    klamkin_point: &str,
    other: Option<&str>,
    lambda: Option<&str>,
    tol: Tolerance,
) -> ExitCode {
    let opts = (|| -> Result<(ExactTriangle, ReportOptions), GeometryError> {
        let t = sides.triangle()?;
        let opts = ReportOptions {
            weights: report::parse_weights(weights)?,
            klamkin_point: parse_center(klamkin_point)?,
            other: other.map(parse_triple).transpose()?,
            lambdas: lambda.map(report::parse_lambdas).transpose()?.unwrap_or_default(),
            tol,
        };
        Ok((t, opts))
    })();
    let (t, opts) = match opts {
        Ok(v) => v,
        Err(err) => return input_error(err),
    };
    let r = match report::build_report(&t, &opts) {
        Ok(r) => r,
        Err(err) => return input_error(err),
    };
    match format {
        Format::Json => println!("{}", to_json(&r)),
        Format::Text => println!("{r}"),
    }
    if r.is_clean() {
        ExitCode::SUCCESS
    } else {
        eprintln!("residual failure: {}", r.failures.join(", "));
        ExitCode::from(EXIT_RESIDUAL)
    }
}

fn cmd_verify(samples: usize, seed: u64, side_max: &str, weight_max: &str, tol: Tolerance) -> ExitCode {
    if samples == 0 {
        return input_error("--samples must be at least 1");
    }
    let bounds = parse_rational(side_max).and_then(|s| Ok((s, parse_rational(weight_max)?)));
    let (side_max, weight_max) = match bounds {
        Ok((s, w)) if s >= trimetric::exact(1, 1) && w >= trimetric::exact(0, 1) => (s, w),
        Ok(_) => return input_error("--side-max must be at least 1 and --weight-max nonnegative"),
        Err(err) => return input_error(err),
    };
    let cfg = FuzzConfig { samples, seed, side_max, weight_max, tol };
    let summary = suite::run(&cfg);
    println!("{summary}");
    if summary.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_RESIDUAL)
    }
}

fn cmd_eld(sides: &Sides, lambda: &str, format: Format) -> ExitCode {
    let parsed = sides.triangle().and_then(|t| Ok((t, report::parse_lambdas(lambda)?)));
    let (t, lambdas) = match parsed {
        Ok(v) => v,
        Err(err) => return input_error(err),
    };
    let rows = report::eld_table(&t, &lambdas);
    match format {
        Format::Json => println!("{}", to_json(&rows)),
        Format::Text => {
            println!("{:<10} {:<24} {:<24} encodes", "λ", "ELD_I", "ELD_M");
            for row in &rows {
                let encodes = row.encodes.map(|id| id.as_str()).unwrap_or("");
                println!("{:<10} {:<24} {:<24} {encodes}", row.lambda.exact, row.eld_i.exact, row.eld_m.exact);
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match &cli.command {
        Command::Report { sides, format, weights, klamkin_point, other, lambda } => cmd_report(
            sides,
            *format,
            weights,
            klamkin_point,
            other.as_deref(),
            lambda.as_deref(),
            cli.tolerance.resolve(Tolerance::default()),
        ),
        Command::Verify { samples, seed, side_max, weight_max } => {
            cmd_verify(*samples, *seed, side_max, weight_max, cli.tolerance.resolve(suite::APPROX_TOLERANCE))
        }
        Command::Eld { sides, lambda, format } => cmd_eld(sides, lambda, *format),
    }
}
