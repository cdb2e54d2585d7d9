//! `daehee` — exact tables, matrices, series coefficients, and identity
//! verification for the higher-order Daehee/Bernoulli sequence families.
//!
//! Exit statuses: 0 on success (and when every selected verification suite
//! passes), 1 when a verification suite fails, 2 on usage or I/O errors.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use daehee_core::{
    contradiction_demo, corrected_first_kind_check, corrected_second_kind_check,
    daehee_threeway_check, default_suite_reports, genfun_stirling_check, lambda_composition_check,
    lambda_pair_check, norlund_check, reflection_check, stirling_inverse_check,
    stirling_transforms_check, table_series, table_series_with_order, table_stirling,
    twisted_scaling_check, Binding, DemoPoint, ExactRing, Family, FamilySpec, MatrixKind,
    MultiPoly, Rational, Symbol, TriMatrix, TruncatedSeries, VerificationReport,
};
use std::path::PathBuf;
use std::str::FromStr;

type QSeries = TruncatedSeries<Rational>;

#[derive(Parser)]
#[command(
    name = "daehee",
    version,
    about = "Exact Daehee/Bernoulli/Nörlund family tables, structural matrices, \
             generating-function coefficients, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit one family's (n+1)×(k+1) table of numbers or polynomials
    Table(TableArgs),
    /// Emit a named structural matrix as a full (n+1)×(n+1) grid
    Matrix(MatrixArgs),
    /// Print coefficients c0..cN of a named generating-function kernel
    Series(SeriesArgs),
    /// Run identity-verification suites and report pass/fail with witnesses
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Markdown,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Truncated power-series expansion of the defining kernel
    Series,
    /// Stirling-matrix transform of the Bernoulli table
    Stirling,
}

#[derive(Args)]
struct TableArgs {
    /// Family: bernoulli, daehee1, daehee2, norlund, lambda-daehee1,
    /// lambda-daehee2, twisted-daehee1, twisted-daehee2, twisted-bernoulli
    #[arg(long)]
    family: String,
    /// Largest row index n
    #[arg(long)]
    n: usize,
    /// Largest order k (column index)
    #[arg(long)]
    k: usize,
    /// Argument binding: a rational like 3/2 or -1/2, or "sym" for symbolic x
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x: String,
    /// λ binding for λ-/twisted families: rational or "sym"
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// ξ binding for twisted families: rational or "sym"
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    /// Construction route; the two are algorithmically independent
    #[arg(long, value_enum, default_value_t = Route::Series)]
    route: Route,
    /// Series truncation order (default n + k + 2; series route only)
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    /// Kind: s1, s2, signless, signed-s2, pascal, lambda, lambda1, xi
    #[arg(long)]
    kind: String,
    /// Largest index; the emitted grid is (n+1)×(n+1)
    #[arg(long)]
    n: usize,
    /// Base binding for `pascal` (rational or "sym"; default symbolic x)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Diagonal binding for `lambda`/`lambda1` (rational or "sym")
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Diagonal binding for `xi` (rational or "sym")
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Kernel: identity, exp, log1p-over-t, expm1-over-t, bernoulli, daehee2
    #[arg(long)]
    name: String,
    /// Highest coefficient index to print
    #[arg(long)]
    order: usize,
    /// Power applied to the kernel
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: stirling-inverse, daehee-threeway, stirling-transforms, norlund,
    /// genfun-stirling, lambda-pair, lambda-composition, reflection,
    /// twisted-scaling, corrected-59, corrected-71, original-54, original-67,
    /// or "all" (every suite at its default range)
    suite: String,
    /// Row/dimension sweep bound (suite-specific default)
    #[arg(long)]
    n: Option<usize>,
    /// Order sweep bound (suite-specific default)
    #[arg(long)]
    k: Option<usize>,
    /// Degree sweep bound (suite-specific default)
    #[arg(long)]
    m: Option<usize>,
    /// Twist value ξ for original-54/original-67 (rational, default 2)
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    /// λ value for original-54/original-67 (nonnegative integer, default 1)
    #[arg(long)]
    lambda: Option<u32>,
    /// Argument x for original-54/original-67 (integer, default 1)
    #[arg(long, allow_negative_numbers = true)]
    x: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Command-level failure: either bad usage/arguments or an I/O problem.
/// Both terminate with exit status 2.
struct CliError(String);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            std::process::ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (rendered, code, out) = match &cli.command {
        Cmd::Table(args) => (cmd_table(args)?, 0, args.out.clone()),
        Cmd::Matrix(args) => (cmd_matrix(args)?, 0, args.out.clone()),
        Cmd::Series(args) => (cmd_series(args)?, 0, args.out.clone()),
        Cmd::Verify(args) => {
            let (rendered, all_ok) = cmd_verify(args)?;
            (rendered, if all_ok { 0 } else { 1 }, args.out.clone())
        }
    };
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(code)
}

fn parse_binding(s: &str) -> Result<Binding, CliError> {
    if s == "sym" {
        return Ok(Binding::Symbolic);
    }
    Rational::from_str(s)
        .map(Binding::Value)
        .map_err(|e| usage(format!("invalid binding '{s}': {e}")))
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s).map_err(|e| usage(format!("invalid rational '{s}': {e}")))
}

fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    let family = Family::from_name(&args.family)
        .ok_or_else(|| usage(format!("unknown family '{}'", args.family)))?;
    let mut spec = FamilySpec::numbers(family, args.k).with_x(parse_binding(&args.x)?);
    if let Some(l) = &args.lambda {
        spec = spec.with_lambda(parse_binding(l)?);
    }
    if let Some(xi) = &args.xi {
        spec = spec.with_xi(parse_binding(xi)?);
    }
    let table = match args.route {
        Route::Series => match args.order {
            Some(order) => {
                if order < args.n {
                    return Err(usage(format!(
                        "--order {order} is below the requested n = {}",
                        args.n
                    )));
                }
                table_series_with_order(&spec, args.n, order)
            }
            None => table_series(&spec, args.n),
        },
        Route::Stirling => {
            if args.order.is_some() {
                return Err(usage("--order applies only to --route series"));
            }
            table_stirling(&spec, args.n)
        }
    }
    .map_err(|e| usage(e.to_string()))?;
    let route = match args.route {
        Route::Series => "series",
        Route::Stirling => "stirling",
    };
    Ok(match args.format {
        Format::Csv => render::table_csv(&table),
        Format::Json => render::table_json(&table, &spec, route),
        Format::Markdown => render::table_markdown(&table),
        Format::Text => return Err(usage("--format text is not available for 'table'")),
    })
}

fn binding_poly(value: &Option<String>, sym: Symbol) -> Result<(MultiPoly, String), CliError> {
    match value {
        None => Ok((MultiPoly::symbol(sym), "sym".to_string())),
        Some(s) => match parse_binding(s)? {
            Binding::Symbolic => Ok((MultiPoly::symbol(sym), "sym".to_string())),
            Binding::Value(v) => Ok((MultiPoly::constant(v.clone()), v.to_string())),
        },
    }
}

fn cmd_matrix(args: &MatrixArgs) -> Result<String, CliError> {
    let reject = |flag: &str, value: &Option<String>| -> Result<(), CliError> {
        if value.is_some() {
            Err(usage(format!(
                "--{flag} does not apply to matrix kind '{}'",
                args.kind
            )))
        } else {
            Ok(())
        }
    };
    let (kind, binding) = match args.kind.as_str() {
        "s1" | "s2" | "signless" | "signed-s2" => {
            reject("x", &args.x)?;
            reject("lambda", &args.lambda)?;
            reject("xi", &args.xi)?;
            let kind = match args.kind.as_str() {
                "s1" => MatrixKind::StirlingFirst,
                "s2" => MatrixKind::StirlingSecond,
                "signless" => MatrixKind::StirlingFirstSignless,
                _ => MatrixKind::StirlingSecondSigned,
            };
            (kind, None)
        }
        "pascal" => {
            reject("lambda", &args.lambda)?;
            reject("xi", &args.xi)?;
            let (base, shown) = binding_poly(&args.x, Symbol::X)?;
            (MatrixKind::Pascal(base), Some(shown))
        }
        "lambda" | "lambda1" => {
            reject("x", &args.x)?;
            reject("xi", &args.xi)?;
            let (base, shown) = binding_poly(&args.lambda, Symbol::Lambda)?;
            let base = if args.kind == "lambda1" {
                base.neg()
            } else {
                base
            };
            (MatrixKind::DiagPow(base), Some(shown))
        }
        "xi" => {
            reject("x", &args.x)?;
            reject("lambda", &args.lambda)?;
            let (base, shown) = binding_poly(&args.xi, Symbol::Xi)?;
            (MatrixKind::DiagPow(base), Some(shown))
        }
        other => return Err(usage(format!("unknown matrix kind '{other}'"))),
    };
    let matrix = TriMatrix::build(&kind, args.n);
    Ok(match args.format {
        Format::Csv => render::matrix_csv(&matrix),
        Format::Json => render::matrix_json(&matrix, &args.kind, binding),
        Format::Markdown => render::matrix_markdown(&matrix),
        Format::Text => return Err(usage("--format text is not available for 'matrix'")),
    })
}

fn cmd_series(args: &SeriesArgs) -> Result<String, CliError> {
    let order = args.order;
    let kernel = match args.name.as_str() {
        "identity" => QSeries::one(order),
        "exp" => QSeries::exp(&Rational::integer(1), order),
        "log1p-over-t" => QSeries::log1p_over_t(order),
        "expm1-over-t" => QSeries::expm1_over_t(order),
        "bernoulli" => QSeries::expm1_over_t(order)
            .inverse()
            .expect("constant term 1 is invertible"),
        "daehee2" => {
            let one_minus_t = QSeries::from_fn(order, |n| match n {
                0 => Rational::integer(1),
                1 => Rational::integer(-1),
                _ => Rational::integer(0),
            });
            QSeries::log1p_over_t(order)
                .rescale(&Rational::integer(-1))
                .mul(&one_minus_t)
        }
        other => return Err(usage(format!("unknown series kernel '{other}'"))),
    };
    let coeffs: Vec<Rational> = {
        let powered = kernel.pow(args.k);
        (0..=args.order).map(|n| powered.coeff(n).clone()).collect()
    };
    Ok(match args.format {
        Format::Text => render::series_text(&coeffs),
        Format::Csv => render::series_csv(&coeffs),
        Format::Json => render::series_json(&args.name, args.k, &coeffs),
        Format::Markdown => render::series_markdown(&coeffs),
    })
}

/// CLI suite tokens in the order `verify all` reports them.
const SUITE_TOKENS: [&str; 13] = [
    "stirling-inverse",
    "daehee-threeway",
    "stirling-transforms",
    "norlund",
    "genfun-stirling",
    "lambda-pair",
    "lambda-composition",
    "reflection",
    "twisted-scaling",
    "corrected-59",
    "corrected-71",
    "original-54",
    "original-67",
];

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), CliError> {
    let reports = run_suites(args)?;
    let all_ok = reports.iter().all(|r| r.ok());
    let rendered = match args.format {
        Format::Text => render::verify_text(&reports),
        Format::Csv => render::verify_csv(&reports),
        Format::Json => render::verify_json(&reports),
        Format::Markdown => render::verify_markdown(&reports),
    };
    Ok((rendered, all_ok))
}

fn run_suites(args: &VerifyArgs) -> Result<Vec<VerificationReport>, CliError> {
    if args.suite == "all" {
        let mut reports = default_suite_reports();
        assert_eq!(reports.len(), SUITE_TOKENS.len());
        for (r, token) in reports.iter_mut().zip(SUITE_TOKENS) {
            r.id = token.to_string();
        }
        return Ok(reports);
    }
    let demo_point = |args: &VerifyArgs| -> Result<DemoPoint, CliError> {
        let defaults = DemoPoint::default();
        Ok(DemoPoint {
            xi: match &args.xi {
                Some(s) => parse_rational(s)?,
                None => defaults.xi,
            },
            lambda: args.lambda.unwrap_or(defaults.lambda),
            x: args.x.unwrap_or(defaults.x),
            k: args.k.unwrap_or(defaults.k),
            m_max: args.m.unwrap_or(defaults.m_max),
        })
    };
    let mut report = match args.suite.as_str() {
        "stirling-inverse" => stirling_inverse_check(args.n.unwrap_or(25)),
        "daehee-threeway" => daehee_threeway_check(args.n.unwrap_or(8), args.k.unwrap_or(4)),
        "stirling-transforms" => {
            let n = args.n.unwrap_or(15);
            stirling_transforms_check(n, n.min(10), args.k.unwrap_or(6))
        }
        "norlund" => {
            let m = args.m.unwrap_or(12);
            let k = args.k.unwrap_or(5);
            norlund_check(m, k, m.min(8), k.min(4))
        }
        "genfun-stirling" => genfun_stirling_check(args.m.unwrap_or(8), args.n.unwrap_or(15)),
        "lambda-pair" => lambda_pair_check(args.n.unwrap_or(8), args.k.unwrap_or(4)),
        "lambda-composition" => lambda_composition_check(args.m.unwrap_or(6), args.k.unwrap_or(4)),
        "reflection" => reflection_check(args.n.unwrap_or(10), args.k.unwrap_or(5)),
        "twisted-scaling" => twisted_scaling_check(args.n.unwrap_or(8), args.k.unwrap_or(4)),
        "corrected-59" => corrected_first_kind_check(args.m.unwrap_or(6), args.k.unwrap_or(4)),
        "corrected-71" => corrected_second_kind_check(args.m.unwrap_or(6), args.k.unwrap_or(4)),
        "original-54" => {
            contradiction_demo(false, &demo_point(args)?).map_err(|e| usage(e.to_string()))?
        }
        "original-67" => {
            contradiction_demo(true, &demo_point(args)?).map_err(|e| usage(e.to_string()))?
        }
        other => return Err(usage(format!("unknown verify suite '{other}'"))),
    };
    report.id = args.suite.clone();
    Ok(vec![report])
}
