//! The `tropico` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 domain error (such as `--alpha`
//! outside the frontier).

use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::api::{decode, ApiError, FrontierResponse, RateReport, Session, SolveResponse};
use crate::problem::{Problem, ProblemError};
use crate::server::{self, AppState};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tropico",
    version,
    about = "Pareto-optimal rating of alternatives from pairwise comparisons"
)]
pub struct Cli {
    /// Log-domain tolerance for boundary comparisons.
    #[arg(long, global = true, env = "TROPICO_TOL")]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Input {
    /// Problem file (JSON, or CSV with --csv).
    pub path: PathBuf,
    /// Read a single comparison matrix from CSV.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check reciprocity and consistency and report spectral radii.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Rate the alternatives.
    Rate {
        #[command(flatten)]
        input: Input,
        /// Minimize the error of one matrix.
        #[arg(long, conflicts_with_all = ["scalarized", "alpha", "samples"])]
        single: bool,
        /// Matrix used by --single.
        #[arg(long, value_enum, default_value_t = Which::A, requires = "single")]
        matrix: Which,
        /// Minimize the error of the entry-wise maximum of A and B.
        #[arg(long, conflicts_with_all = ["alpha", "samples"])]
        scalarized: bool,
        /// Solutions at one frontier point with x⁻Ax = alpha.
        #[arg(long, conflicts_with = "samples")]
        alpha: Option<f64>,
        /// Solutions at k log-evenly spaced frontier points.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = RateFormat::Text)]
        format: RateFormat,
        /// Report values as natural logs.
        #[arg(long)]
        log: bool,
    },
    /// Print the Pareto frontier.
    Frontier {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = FrontierFormat::Table)]
        format: FrontierFormat,
        /// Report values as natural logs.
        #[arg(long)]
        log: bool,
    },
    /// Serve the JSON API (and optionally a static front end).
    Serve {
        /// Problem to preload as id 1.
        path: Option<PathBuf>,
        #[arg(long, requires = "path")]
        csv: bool,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Directory with the front-end bundle.
        #[arg(long)]
        ui_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RateFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrontierFormat {
    Table,
    Json,
    Svg,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        let code = match e {
            ApiError::Domain { .. } => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(input: &Input, tol: Option<f64>) -> Result<Problem, Failure> {
    Ok(Problem::load(&input.path, input.csv, tol)?)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { input } => validate(&input, cli.tol, out),
        Command::Rate {
            input,
            single,
            matrix,
            scalarized,
            alpha,
            samples,
            format,
            log,
        } => {
            let mut problem = load(&input, cli.tol)?;
            if log {
                problem.set_log_output(true);
            }
            let two = problem.b().is_some();
            let session = Session::new(problem)?;
            if format == RateFormat::Json {
                if let Some(alpha) = alpha {
                    if !two {
                        return Err(input_error("--alpha needs matrices A and B"));
                    }
                    writeln!(out, "{}", to_json(&session.solve(alpha)?))?;
                    return Ok(EXIT_OK);
                }
            }
            let report = if single {
                session.rate_single(matrix == Which::B)?
            } else if scalarized {
                session.rate_scalarized()?
            } else {
                if !two && (alpha.is_some() || samples.is_some()) {
                    return Err(input_error("--alpha and --samples need matrices A and B"));
                }
                let log = session.problem().log_output();
                let alphas = match (alpha, samples) {
                    (Some(a), _) => Some(vec![decode(a, log)?]),
                    (None, Some(k)) => Some(session.rating().frontier().sample_alphas(k)),
                    (None, None) => None,
                };
                session.rate_bicriteria(alphas)?
            };
            match format {
                RateFormat::Json => writeln!(out, "{}", to_json(&report))?,
                RateFormat::Text => write_report(&session, &report, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Frontier { input, format, log } => {
            let mut problem = load(&input, cli.tol)?;
            if problem.b().is_none() {
                return Err(input_error("the frontier needs matrices A and B"));
            }
            if log {
                problem.set_log_output(true);
            }
            let session = Session::new(problem)?;
            match format {
                FrontierFormat::Json => writeln!(out, "{}", to_json(&session.frontier()))?,
                FrontierFormat::Svg => write!(
                    out,
                    "{}",
                    crate::svg::frontier_svg(session.rating().frontier())
                )?,
                FrontierFormat::Table => {
                    write_frontier(&session.frontier(), session.problem().log_output(), out)?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Serve {
            path,
            csv,
            port,
            host,
            ui_dir,
        } => {
            let state = AppState::new(cli.tol);
            if let Some(path) = path {
                let problem = load(&Input { path, csv }, cli.tol)?;
                if problem.n() > server::MAX_N {
                    return Err(input_error(format!(
                        "more than {} alternatives",
                        server::MAX_N
                    )));
                }
                let id = state.insert(Session::new(problem)?);
                eprintln!("preloaded problem id {id}");
            }
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(server::serve(SocketAddr::new(host, port), state, ui_dir))?;
            Ok(EXIT_OK)
        }
    }
}

/// The compact JSON also returned by the HTTP service.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let digits = (4 - v.abs().log10().floor() as i32).clamp(0, 12) as usize;
    let s = format!("{v:.digits$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn validate(input: &Input, tol: Option<f64>, out: &mut dyn Write) -> Result<u8, Failure> {
    let problem = load(input, tol)?;
    let t = problem.tolerance();
    let mut line =
        |name: &str, m: &crate::decision::ComparisonMatrix, sym: &str| -> std::io::Result<()> {
            let kind = if m.is_consistent(t) {
                "consistent"
            } else {
                "inconsistent"
            };
            writeln!(
                out,
                "{name}: reciprocal, {kind}, {sym}={}",
                num(m.spectral_radius().value())
            )
        };
    line("A", problem.a(), "μ")?;
    if let Some(b) = problem.b() {
        line("B", b, "ν")?;
    }
    Ok(EXIT_OK)
}

fn write_frontier(f: &FrontierResponse, log: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let domain = if log { " (natural logs)" } else { "" };
    writeln!(
        out,
        "μ = {}, ν = {}, G(ν) = {}{domain}",
        num(f.mu),
        num(f.nu),
        num(f.g_of_nu)
    )?;
    if f.degenerate {
        writeln!(
            out,
            "degenerate: single point (α, β) = ({}, {})",
            num(f.mu),
            num(f.nu)
        )?;
        return Ok(());
    }
    writeln!(
        out,
        "{:>10} {:>10} {:>10} {:>10}  β on segment",
        "alpha_lo", "alpha_hi", "slope", "intercept"
    )?;
    for s in &f.segments {
        writeln!(
            out,
            "{:>10} {:>10} {:>10} {:>10}  {}·α^{}",
            num(s.alpha_lo),
            num(s.alpha_hi),
            num(s.slope),
            num(s.intercept),
            num(s.coef),
            num(s.slope)
        )?;
    }
    let bps: Vec<String> = f.breakpoints.iter().map(|b| num(*b)).collect();
    writeln!(
        out,
        "breakpoints: {}",
        if bps.is_empty() {
            "none".into()
        } else {
            bps.join(", ")
        }
    )?;
    let ends: Vec<String> = f
        .endpoints
        .iter()
        .map(|p| format!("({}, {})", num(p.alpha), num(p.beta)))
        .collect();
    writeln!(out, "endpoints: {}", ends.join(", "))
}

fn write_solution(
    labels: &[String],
    s: &SolveResponse,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "α = {}, β = {}", num(s.alpha), num(s.beta))?;
    for (i, b) in s.basis.iter().enumerate() {
        let tag = if s.basis.len() > 1 {
            format!(" #{}", i + 1)
        } else {
            String::new()
        };
        let scores: Vec<String> = labels
            .iter()
            .zip(&b.scores)
            .map(|(l, v)| format!("{l} {}", num(*v)))
            .collect();
        let ranking: Vec<String> = b
            .ranking
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| labels[i].as_str())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect();
        writeln!(out, "  scores{tag}: {}", scores.join(", "))?;
        writeln!(out, "  ranking{tag}: {}", ranking.join(" > "))?;
        writeln!(
            out,
            "  objectives{tag}: ({}, {})",
            num(b.objectives.a),
            num(b.objectives.b)
        )?;
    }
    Ok(())
}

fn write_report(session: &Session, r: &RateReport, out: &mut dyn Write) -> std::io::Result<()> {
    let log = session.problem().log_output();
    writeln!(out, "method: {}", r.method)?;
    if let Some(e) = r.error {
        writeln!(out, "minimum error: {}", num(e))?;
    }
    if let Some(f) = &r.frontier {
        write_frontier(f, log, out)?;
    }
    for s in &r.solutions {
        write_solution(session.problem().labels(), s, out)?;
    }
    Ok(())
}
