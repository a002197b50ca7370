//! Command-line front end: argument model, JSON request and report types,
//! and the dispatcher used by the `loghiggs` binary.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod report;

use report::*;

use loghiggs::coherent::{alpha_thresholds, decide_mu_alpha, default_alpha_grid};
use loghiggs::cohiggs::{
    construct_stable_field, decide_stability, gap_condition, invariant_line_subbundles_rank2, is_2nilpotent,
    log_tangent_catalog, pencil_degenerate_member, quadric_extension_screen, CoHiggsPair, LogTangentDescriptor,
};
use loghiggs::exactpoly::char_poly;
use loghiggs::rat::{parse_rat, Rat};
use loghiggs::splitbundles::SplittingType;
use loghiggs::triples::{
    alpha_window, commutant, decide_nu_alpha, hn_filtration, intertwiner_solve, nu_alpha, verify_hn, Triple,
};
use loghiggs::Status;

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input or a failed operation.
pub const EXIT_INVALID: i32 = 2;
/// Exit code for an `Unknown` verdict under `--strict`.
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] loghiggs::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Json(_) => "json",
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "loghiggs",
    version,
    about = "Exact stability decisions for co-Higgs pairs, coherent systems and triples on P^1"
)]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Exit with code 3 when any verdict is Unknown.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// JSON input: a file path, `-` for stdin, or an inline JSON document.
#[derive(Debug, Clone, Args)]
pub struct Input {
    pub input: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ambient {
    P1,
    P1Meromorphic,
    Pn,
    QuadricLines,
    QuadricTMinusD,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting of a cataloged logarithmic tangent bundle.
    Catalog {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        ambient: Option<Ambient>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long)]
        ell: Option<i64>,
    },
    /// Validate a pair and decide its stability.
    CheckPair(Input),
    /// Build a certified stable field on a splitting type.
    ConstructStable {
        #[command(flatten)]
        input: Input,
        /// Splitting type as a JSON array, e.g. "[0,0,0]".
        #[arg(long = "E")]
        e: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Characteristic polynomial, invariant lines and verdict of a pair.
    StabilityReport(Input),
    /// μ_α verdicts of a pair over an α grid.
    CoherentAlphaScan {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rationals; defaults to 1/10, 2/10, …, 2.
        #[arg(long, value_delimiter = ',')]
        alphas: Vec<String>,
    },
    /// ν_α verdict of a triple.
    TripleCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Harder–Narasimhan filtration of a triple.
    TripleHn {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Degenerate members of a pencil of binary forms.
    PencilCheck(Input),
    /// Closed-form rules: one query or an array of queries.
    Formulas(Input),
    /// Numerical screen for an extension on the quadric.
    QuadricScreen(Input),
    /// Constant matrices A2 with A2 M = M A1.
    Intertwiner(Input),
}

/// The outcome of a run: the JSON document to emit and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub code: i32,
}

fn read_input(input: &Input) -> Result<String> {
    match input.input.as_deref() {
        None => Err(CliError::Usage("missing input (path, '-' or inline JSON)".into())),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(s) if s.trim_start().starts_with(['{', '[']) => Ok(s.to_string()),
        Some(path) => Ok(std::fs::read_to_string(path)?),
    }
}

fn parse<T: serde::de::DeserializeOwned>(input: &Input) -> Result<T> {
    Ok(serde_json::from_str(&read_input(input)?)?)
}

fn rational(s: &str) -> Result<Rat> {
    Ok(parse_rat(s)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn strict_code(strict: bool, statuses: impl IntoIterator<Item = Status>) -> i32 {
    if strict && statuses.into_iter().any(|s| s == Status::Unknown) {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn descriptor(
    ambient: Ambient,
    n: Option<i64>,
    m: Option<i64>,
    a: Option<i64>,
    b: Option<i64>,
    ell: Option<i64>,
) -> Result<LogTangentDescriptor> {
    let need = |v: Option<i64>, name: &str| v.ok_or_else(|| CliError::Usage(format!("--{name} is required")));
    Ok(match ambient {
        Ambient::P1 => LogTangentDescriptor::P1Points { m: need(m, "m")? },
        Ambient::P1Meromorphic => LogTangentDescriptor::P1Meromorphic { ell: need(ell, "ell")? },
        Ambient::Pn => LogTangentDescriptor::PnHyperplanes { n: need(n, "n")?, m: need(m, "m")? },
        Ambient::QuadricLines => LogTangentDescriptor::QuadricLines { a: need(a, "a")?, b: need(b, "b")? },
        Ambient::QuadricTMinusD => LogTangentDescriptor::QuadricTMinusD,
    })
}

fn pair_report(pair: CoHiggsPair) -> Result<PairReport> {
    let verdict = decide_stability(&pair)?;
    Ok(PairReport {
        rank: pair.rank(),
        slope: pair.bundle().slope(),
        gap_condition: gap_condition(pair.bundle(), pair.twist()),
        two_nilpotent: is_2nilpotent(&pair),
        verdict,
        pair,
    })
}

/// Executes a parsed command line and renders its report.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let strict = cli.strict;
    let (document, code) = match &cli.command {
        Command::Catalog { input, ambient, n, m, a, b, ell } => {
            let desc = match ambient {
                Some(amb) => descriptor(*amb, *n, *m, *a, *b, *ell)?,
                None => parse(input)?,
            };
            (to_json(&log_tangent_catalog(&desc)?)?, EXIT_OK)
        }
        Command::CheckPair(input) => {
            let report = pair_report(parse(input)?)?;
            let code = strict_code(strict, [report.verdict.status]);
            (to_json(&report)?, code)
        }
        Command::ConstructStable { input, e, k } => {
            let request = match (e, k) {
                (Some(e), Some(k)) => {
                    let summands: Vec<i64> = serde_json::from_str(e)?;
                    ConstructRequest { e: SplittingType::new(summands), k: *k }
                }
                (None, None) => parse(input)?,
                _ => return Err(CliError::Usage("--E and --k go together".into())),
            };
            let pair = construct_stable_field(&request.e, request.k, cli.seed)?;
            let verdict = decide_stability(&pair)?;
            let code = strict_code(strict, [verdict.status]);
            (to_json(&ConstructReport { seed: cli.seed, pair, verdict })?, code)
        }
        Command::StabilityReport(input) => {
            let pair: CoHiggsPair = parse(input)?;
            let chi = char_poly(pair.field(), pair.twist())?;
            let lines = if pair.rank() == 2 && pair.twist() >= 0 {
                match invariant_line_subbundles_rank2(&pair) {
                    Ok(lines) => Some(lines),
                    Err(loghiggs::Error::ScalarField) => None,
                    Err(e) => return Err(e.into()),
                }
            } else {
                None
            };
            let verdict = decide_stability(&pair)?;
            let code = strict_code(strict, [verdict.status]);
            let report =
                StabilityReport { char_poly_text: chi.to_string(), char_poly: chi, invariant_lines: lines, verdict };
            (to_json(&report)?, code)
        }
        Command::CoherentAlphaScan { input, alphas } => {
            let pair: CoHiggsPair = parse(input)?;
            let grid = if alphas.is_empty() {
                default_alpha_grid()
            } else {
                alphas.iter().map(|a| rational(a)).collect::<Result<_>>()?
            };
            let scan = grid
                .into_iter()
                .map(|alpha| Ok(AlphaVerdict { verdict: decide_mu_alpha(&pair, &alpha)?, alpha }))
                .collect::<Result<Vec<_>>>()?;
            let code = strict_code(strict, scan.iter().map(|s| s.verdict.status));
            (to_json(&AlphaScanReport { thresholds: alpha_thresholds(pair.bundle()), scan })?, code)
        }
        Command::TripleCheck { input, alpha } => {
            let triple: Triple = parse(input)?;
            let alpha = rational(alpha)?;
            let verdict = decide_nu_alpha(&triple, &alpha)?;
            let code = strict_code(strict, [verdict.status]);
            let report = TripleReport { nu: nu_alpha(&triple, &alpha)?, window: alpha_window(&triple), alpha, verdict };
            (to_json(&report)?, code)
        }
        Command::TripleHn { input, alpha } => {
            let triple: Triple = parse(input)?;
            let chain = hn_filtration(&triple, &rational(alpha)?)?;
            let failure = verify_hn(&triple, &chain)?;
            (to_json(&HnReport { verified: failure.is_none(), failure, chain })?, EXIT_OK)
        }
        Command::PencilCheck(input) => {
            let request: PencilRequest = parse(input)?;
            (to_json(&PencilReport { witness: pencil_degenerate_member(&request.u, &request.v)? })?, EXIT_OK)
        }
        Command::Formulas(input) => {
            let request: FormulaRequest = parse(input)?;
            let queries = match request {
                FormulaRequest::One(q) => vec![q],
                FormulaRequest::Many(qs) => qs,
            };
            let rows = queries
                .into_iter()
                .map(|query| Ok(FormulaRow { value: query.evaluate()?, query }))
                .collect::<Result<Vec<_>>>()?;
            (to_json(&rows)?, EXIT_OK)
        }
        Command::QuadricScreen(input) => {
            let r: QuadricRequest = parse(input)?;
            (to_json(&quadric_extension_screen(r.sub, r.quot, r.deg_z, r.polarization)?)?, EXIT_OK)
        }
        Command::Intertwiner(input) => {
            let r: IntertwinerRequest = parse(input)?;
            let report = IntertwinerReport { solution: intertwiner_solve(&r.a1, &r.m)?, commutant: commutant(&r.a1)? };
            (to_json(&report)?, EXIT_OK)
        }
    };
    Ok(Outcome { document, code })
}

/// Runs a command line, turning failures into an error document with exit
/// code 2.
pub fn run(cli: &Cli) -> Outcome {
    execute(cli).unwrap_or_else(|e| {
        let doc = ErrorReport { error: ErrorBody { kind: e.kind().to_string(), message: e.to_string() } };
        Outcome {
            document: serde_json::to_string_pretty(&doc).expect("error report serializes") + "\n",
            code: EXIT_INVALID,
        }
    })
}
