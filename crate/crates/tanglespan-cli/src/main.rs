//! Command line tying the tangle span pipelines together: Alexander
//! polynomials by independent routes, numerical root location with
//! theorem checks, rational tangle classification at t = -1, and seeded
//! family verification.
//!
//! Exit codes: 0 on success, 1 on domain or usage errors, 2 when a
//! verification fails (route disagreement or a failed root-location
//! check).  Identical arguments produce byte-identical output.

mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use report::{
    check_json, AlexJson, CfJson, ClassifyJson, ColoringJson, PolyJson, RootsJson, RouteJson,
    SampleJson, VerifyJson, SCHEMA,
};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tanglespan::alexander::{
    alex_layer_span, alex_pretzel_closed, alex_pretzel_continuant, alex_pretzel_span,
    alex_rational_continuant, alex_rational_span, AlexanderResult,
};
use tanglespan::minus1::{
    classify_rational, fraction_from_coloring, integral_coloring, plucker_point,
    verify_rational_curve,
};
use tanglespan::roots::{
    check_halfplane, check_unit_circle, csv_rows, find_roots, sample_family, verify_sample,
    Family, FamilySample, KnotSpec, RootReport, CSV_HEADER, DEFAULT_TOL, HALFPLANE_GUARD,
    UNIT_CIRCLE_EPS,
};
use tanglespan::tangle::{even_cf, parse_tangle, two_bridge_params, Parity, PretzelSpec};
use tanglespan::Error as TsError;

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "tanglespan",
    version,
    about = "Alexander polynomials, root location, and rational tangle classification in exact arithmetic"
)]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Root-finder convergence tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Worker threads for verify batches (default: sequential).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a knot, by one route or all of them.
    Alex {
        #[command(subcommand)]
        target: AlexTarget,
    },
    /// Roots of an Alexander polynomial, with optional location checks.
    Roots {
        #[command(subcommand)]
        target: RootsTarget,
    },
    /// Fraction and slope of a rational 2-tangle expression at t = -1,
    /// with its Fox coloring and Plücker point.
    Classify { expr: String },
    /// Even continued fraction of the two-bridge fraction P/Q.
    Cf { fraction: String },
    /// Sample a knot family and verify its root-location statement.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Largest band or fraction entry the sampler may draw.
        #[arg(long, default_value_t = 15)]
        bound: i64,
        /// Also write one CSV row per root to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AlexTarget {
    /// Two-bridge knot b(p, q), given as the fraction P/Q.
    Rational {
        fraction: String,
        #[arg(long, value_enum, default_value_t = RationalRoute::All)]
        route: RationalRoute,
    },
    /// Pretzel knot P(q1, ..., qn), given as comma-separated integers.
    Pretzel {
        entries: String,
        #[arg(long, value_enum, default_value_t = PretzelRoute::All)]
        route: PretzelRoute,
    },
    /// Four-strand layer word, closed by the two-bridge equalizer.
    Tangle {
        expr: String,
        /// Row pairing of the closure.
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        parity: ParityArg,
    },
}

#[derive(Subcommand)]
enum RootsTarget {
    /// Two-bridge knot b(p, q), given as the fraction P/Q.
    Rational {
        fraction: String,
        #[command(flatten)]
        flags: RootFlags,
    },
    /// Pretzel knot P(q1, ..., qn), given as comma-separated integers.
    Pretzel {
        entries: String,
        #[command(flatten)]
        flags: RootFlags,
    },
}

#[derive(Args)]
struct RootFlags {
    /// Root-location check to enforce (exit 2 on failure).
    #[arg(long, value_enum)]
    check: Option<CheckArg>,
    /// Also write one CSV row per root to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RationalRoute {
    Span,
    Continuant,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PretzelRoute {
    Span,
    Continuant,
    Closed,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    /// Every root within 1e-8 of the unit circle.
    Circle,
    /// Every root with real part above -1.
    Hoste,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Positive odd bands, odd count.
    #[value(name = "odd-pretzel")]
    OddPretzel,
    /// One even band among an even count of positive bands.
    #[value(name = "even-pretzel-2p")]
    EvenPretzel2p,
    /// One even band among an odd count of positive bands.
    #[value(name = "even-pretzel-2p1")]
    EvenPretzel2p1,
    /// Two-bridge knots b(p, q).
    #[value(name = "rational")]
    Rational,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::OddPretzel => Family::OddPretzel,
            FamilyArg::EvenPretzel2p => Family::EvenPretzel2p,
            FamilyArg::EvenPretzel2p1 => Family::EvenPretzel2p1,
            FamilyArg::Rational => Family::Rational,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    match cli.command {
        Command::Alex { target } => run_alex(target, cli.json),
        Command::Roots { target } => run_roots(target, cli.json, tol),
        Command::Classify { expr } => run_classify(&expr, cli.json),
        Command::Cf { fraction } => run_cf(&fraction, cli.json),
        Command::Verify {
            family,
            samples,
            seed,
            bound,
            csv,
        } => run_verify(
            family.into(),
            samples,
            seed,
            bound,
            csv.as_deref(),
            cli.json,
            tol,
            cli.jobs.unwrap_or(1),
        ),
    }
}

fn parse_fraction(s: &str) -> Result<(i64, i64), TsError> {
    let parse = |x: &str| {
        x.trim().parse::<i64>().map_err(|_| TsError::Parse {
            pos: 0,
            msg: format!("expected an integer in P/Q, got '{x}'"),
        })
    };
    match s.split_once('/') {
        Some((p, q)) => Ok((parse(p)?, parse(q)?)),
        None => Ok((parse(s)?, 1)),
    }
}

fn parse_entries(s: &str) -> Result<Vec<i64>, TsError> {
    s.split(',')
        .map(|x| {
            x.trim().parse::<i64>().map_err(|_| TsError::Parse {
                pos: 0,
                msg: format!("expected comma-separated integers, got '{x}'"),
            })
        })
        .collect()
}

fn emit<T: Serialize>(json: bool, report: &T, text: String) -> Result<(), Box<dyn std::error::Error>> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let result = if json {
        writeln!(stdout, "{}", serde_json::to_string_pretty(report)?)
    } else {
        write!(stdout, "{text}")
    };
    match result {
        // A closed pipe means the consumer stopped reading; not our error.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => Ok(other?),
    }
}

fn run_alex(target: AlexTarget, json: bool) -> CliResult {
    let (input, results): (String, Vec<AlexanderResult>) = match target {
        AlexTarget::Rational { fraction, route } => {
            let (p, q) = parse_fraction(&fraction)?;
            let results = match route {
                RationalRoute::Span => vec![alex_rational_span(p, q)?],
                RationalRoute::Continuant => vec![alex_rational_continuant(p, q)?],
                RationalRoute::All => {
                    vec![alex_rational_span(p, q)?, alex_rational_continuant(p, q)?]
                }
            };
            (KnotSpec::Rational { p, q }.id(), results)
        }
        AlexTarget::Pretzel { entries, route } => {
            let entries = parse_entries(&entries)?;
            let spec = PretzelSpec::new(entries.clone())?;
            let results = match route {
                PretzelRoute::Span => vec![alex_pretzel_span(&spec)?],
                PretzelRoute::Continuant => vec![alex_pretzel_continuant(&spec)?],
                PretzelRoute::Closed => vec![alex_pretzel_closed(&spec)?],
                PretzelRoute::All => vec![
                    alex_pretzel_span(&spec)?,
                    alex_pretzel_continuant(&spec)?,
                    alex_pretzel_closed(&spec)?,
                ],
            };
            (KnotSpec::Pretzel(entries).id(), results)
        }
        AlexTarget::Tangle { expr, parity } => {
            let parsed = parse_tangle(&expr)?;
            (expr, vec![alex_layer_span(&parsed, parity.into())?])
        }
    };
    let agree = results
        .windows(2)
        .all(|w| w[0].delta == w[1].delta && w[0].determinant == w[1].determinant);
    let report = AlexJson {
        schema: SCHEMA,
        command: "alex",
        input,
        routes: results.iter().map(RouteJson::new).collect(),
        agree,
    };
    let text = report.text();
    emit(json, &report, text)?;
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn write_csv<'a>(
    path: &Path,
    blocks: impl Iterator<Item = (&'a str, &'a RootReport)>,
) -> Result<(), Box<dyn std::error::Error>> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (id, report) in blocks {
        for row in csv_rows(id, report) {
            out.push_str(&row);
            out.push('\n');
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

fn run_roots(target: RootsTarget, json: bool, tol: f64) -> CliResult {
    let (input, alex, flags) = match target {
        RootsTarget::Rational { fraction, flags } => {
            let (p, q) = parse_fraction(&fraction)?;
            (
                KnotSpec::Rational { p, q }.id(),
                alex_rational_continuant(p, q)?,
                flags,
            )
        }
        RootsTarget::Pretzel { entries, flags } => {
            let entries = parse_entries(&entries)?;
            let spec = PretzelSpec::new(entries.clone())?;
            (
                KnotSpec::Pretzel(entries).id(),
                alex_pretzel_closed(&spec)?,
                flags,
            )
        }
    };
    let report = find_roots(&alex.delta, tol)?;
    let check = flags.check.map(|c| match c {
        CheckArg::Circle => check_json("unit-circle", check_unit_circle(&report, UNIT_CIRCLE_EPS)),
        CheckArg::Hoste => check_json("half-plane", check_halfplane(&report, HALFPLANE_GUARD)),
    });
    if let Some(path) = &flags.csv {
        write_csv(path, std::iter::once((input.as_str(), &report)))?;
    }
    let passed = check.as_ref().map_or(true, |c| c.pass);
    let out = RootsJson {
        schema: SCHEMA,
        command: "roots",
        input,
        delta: PolyJson::new(&alex.delta),
        determinant: alex.determinant.to_string(),
        tolerance: report.tolerance,
        iterations: report.iterations,
        roots: RootsJson::roots_of(&report),
        check,
    };
    let text = out.text();
    emit(json, &out, text)?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run_classify(expr: &str, json: bool) -> CliResult {
    let parsed = parse_tangle(expr)?;
    let class = classify_rational(&parsed)?;
    let (coloring, coloring_error) = match coloring_report(&parsed) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let report = ClassifyJson {
        schema: SCHEMA,
        command: "classify",
        input: expr.to_string(),
        fraction: class.fraction.to_string(),
        slope: class.slope.to_string(),
        coloring,
        coloring_error,
    };
    let text = report.text();
    emit(json, &report, text)?;
    Ok(ExitCode::SUCCESS)
}

fn coloring_report(expr: &tanglespan::tangle::TangleExpr) -> Result<ColoringJson, TsError> {
    let integral = integral_coloring(expr)?;
    let m = &integral.matrix;
    let fraction = fraction_from_coloring(m)?;
    let boundary = m.boundary();
    let point = plucker_point(&boundary)?;
    let (on_curve, parameter) = verify_rational_curve(&point);
    Ok(ColoringJson {
        matrix: [
            [m.a.to_string(), m.b.to_string()],
            [m.c.to_string(), m.d.to_string()],
        ],
        boundary: boundary.map(|x| x.to_string()),
        fraction: fraction.to_string(),
        plucker: point.coords().map(|x| x.to_string()),
        on_curve,
        curve_parameter: parameter.map(|s| s.to_string()),
    })
}

fn run_cf(fraction: &str, json: bool) -> CliResult {
    let (p, q) = parse_fraction(fraction)?;
    let (p_n, q_n, mirrored) = two_bridge_params(p, q)?;
    let cf = if p_n == 1 { Vec::new() } else { even_cf(p_n, q_n)? };
    let value = tanglespan::tangle::cf_eval(&cf).to_string();
    let report = CfJson {
        schema: SCHEMA,
        command: "cf",
        p: p_n,
        q: q_n,
        mirrored,
        even_cf: cf,
        value,
    };
    let text = report.text();
    emit(json, &report, text)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    family: Family,
    samples: usize,
    seed: u64,
    bound: i64,
    csv: Option<&Path>,
    json: bool,
    tol: f64,
    jobs: usize,
) -> CliResult {
    if bound < 3 {
        return Err(Box::new(TsError::Parse {
            pos: 0,
            msg: "--bound must be at least 3".into(),
        }));
    }
    let specs = sample_family(family, samples, seed, bound);
    let verified: Result<Vec<FamilySample>, TsError> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        pool.install(|| {
            specs
                .par_iter()
                .map(|s| verify_sample(family, s, tol))
                .collect()
        })
    } else {
        specs.iter().map(|s| verify_sample(family, s, tol)).collect()
    };
    let verified = verified?;
    let failures = verified.iter().filter(|s| !s.passed()).count();
    let worst_margin = match family.check_name() {
        "unit-circle" => verified
            .iter()
            .map(|s| s.outcome.margin)
            .fold(0.0, f64::max),
        _ => verified
            .iter()
            .map(|s| s.outcome.margin)
            .fold(f64::INFINITY, f64::min),
    };
    if let Some(path) = csv {
        write_csv(
            path,
            verified.iter().map(|s| (s.id.as_str(), &s.report)),
        )?;
    }
    let report = VerifyJson {
        schema: SCHEMA,
        command: "verify",
        family: family.to_string(),
        check: family.check_name().to_string(),
        samples,
        failures,
        worst_margin,
        seed,
        bound,
        details: verified.iter().map(SampleJson::new).collect(),
    };
    let text = report.text();
    emit(json, &report, text)?;
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
