//! JSON payloads shared by the command line and the HTTP service, so both
//! emit byte-for-byte the same documents.
//!
//! Numbers are max-times values unless the problem asks for log output, in
//! which case every value (and every value read back, such as `alpha` or `x`)
//! is a natural log. Segment `slope`/`intercept` are always log-log.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicriteria::BicriteriaError;
use crate::decision::{
    rate_scalarized, rate_single, BicriteriaRating, DecisionError, RatingMethod, RatingSolution,
};
use crate::problem::Problem;
use crate::semifield::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ApiError {
    /// Malformed or invalid input.
    #[error("{0}")]
    BadRequest(String),
    #[error("unknown problem id {0}")]
    NotFound(String),
    /// Well-formed input outside the problem's domain.
    #[error("{message}")]
    Domain { message: String, interval: [f64; 2] },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<[f64; 2]>,
}

impl ApiError {
    pub fn body(&self) -> ErrorBody {
        ErrorBody {
            error: self.to_string(),
            interval: match self {
                ApiError::Domain { interval, .. } => Some(*interval),
                _ => None,
            },
        }
    }

    fn from_decision(e: DecisionError, log: bool) -> Self {
        match e {
            DecisionError::Bicriteria(BicriteriaError::OutOfRange { alpha, lo, hi }) => {
                ApiError::Domain {
                    message: format!(
                        "alpha = {} lies outside the frontier range [{}, {}]",
                        short(encode(alpha, log)),
                        short(encode(lo, log)),
                        short(encode(hi, log))
                    ),
                    interval: [encode(lo, log), encode(hi, log)],
                }
            }
            other => ApiError::BadRequest(other.to_string()),
        }
    }
}

/// Ten significant digits, for messages.
fn short(v: f64) -> String {
    format!("{}", format!("{v:.9e}").parse::<f64>().unwrap_or(v))
}

pub fn encode(s: Scalar, log: bool) -> f64 {
    if log {
        s.log()
    } else {
        s.value()
    }
}

pub fn decode(v: f64, log: bool) -> Result<Scalar, ApiError> {
    let s = if log {
        Scalar::from_log(v)
    } else {
        Scalar::from_value(v)
    };
    s.map_err(|e| ApiError::BadRequest(e.to_string()))
}

/// Comma-separated numbers, e.g. a query parameter `x=1,0.5,0.25`.
pub fn parse_list(text: &str) -> Result<Vec<f64>, ApiError> {
    text.split(',')
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|_| ApiError::BadRequest(format!("{:?} is not a number", f.trim())))
        })
        .collect()
}

/// A validated problem together with its precomputed frontier.
#[derive(Debug, Clone)]
pub struct Session {
    problem: Problem,
    rating: BicriteriaRating,
}

impl Session {
    pub fn new(problem: Problem) -> Result<Self, ApiError> {
        let rating = problem
            .rating()
            .map_err(|e| ApiError::BadRequest(e.to_string()))?;
        Ok(Session { problem, rating })
    }

    pub fn problem(&self) -> &Problem {
        &self.problem
    }

    pub fn rating(&self) -> &BicriteriaRating {
        &self.rating
    }

    fn log(&self) -> bool {
        self.problem.log_output()
    }

    pub fn describe(&self, id: &str) -> ProblemResponse {
        let f = self.rating.frontier();
        let log = self.log();
        ProblemResponse {
            id: id.to_string(),
            n: self.problem.n(),
            labels: self.problem.labels().to_vec(),
            mu: encode(f.mu, log),
            nu: self.problem.b().map(|_| encode(f.nu, log)),
            degenerate: f.degenerate,
            alpha_min: encode(f.alpha_min(), log),
            alpha_max: encode(f.alpha_max(), log),
        }
    }

    pub fn frontier(&self) -> FrontierResponse {
        let f = self.rating.frontier();
        let log = self.log();
        FrontierResponse {
            mu: encode(f.mu, log),
            nu: encode(f.nu, log),
            g_of_nu: encode(f.g_of_nu, log),
            degenerate: f.degenerate,
            segments: f
                .segments
                .iter()
                .map(|s| SegmentBody {
                    alpha_lo: encode(s.alpha_lo, log),
                    alpha_hi: encode(s.alpha_hi, log),
                    slope: s.slope(),
                    intercept: s.intercept(),
                    coef: s.term.coef.value(),
                })
                .collect(),
            breakpoints: f
                .breakpoints()
                .into_iter()
                .map(|b| encode(b, log))
                .collect(),
            endpoints: f
                .endpoints()
                .into_iter()
                .map(|(a, b)| Point {
                    alpha: encode(a, log),
                    beta: encode(b, log),
                })
                .collect(),
        }
    }

    /// Solutions at the given `alpha`, in the problem's output domain.
    pub fn solve(&self, alpha: f64) -> Result<SolveResponse, ApiError> {
        let log = self.log();
        let alpha = decode(alpha, log)?;
        let sol = self
            .rating
            .solve(alpha)
            .map_err(|e| ApiError::from_decision(e, log))?;
        Ok(SolveResponse::from_solution(&sol, log))
    }

    /// Chebyshev errors of an arbitrary positive rating vector.
    pub fn error(&self, x: &[f64]) -> Result<ErrorResponse, ApiError> {
        let log = self.log();
        let x: Vec<f64> = if log {
            x.iter().map(|v| v.exp()).collect()
        } else {
            x.to_vec()
        };
        let bad = |e: DecisionError| ApiError::BadRequest(e.to_string());
        let ea = self.problem.a().chebyshev_error(&x).map_err(bad)?;
        let eb = match self.problem.b() {
            Some(b) => Some(b.chebyshev_error(&x).map_err(bad)?),
            None => None,
        };
        let enc = |v: f64| if log { v.ln() } else { v };
        Ok(ErrorResponse {
            cheb_a: enc(ea.value),
            cheb_b: eb.map(|e| enc(e.value)),
            relative_a: ea.relative,
            relative_b: eb.map(|e| e.relative),
        })
    }

    /// Frontier plus solutions at the given points (endpoints and
    /// breakpoints when `alphas` is `None`).
    pub fn rate_bicriteria(&self, alphas: Option<Vec<Scalar>>) -> Result<RateReport, ApiError> {
        let f = self.rating.frontier();
        let alphas = alphas.unwrap_or_else(|| {
            let mut v = vec![f.alpha_min()];
            v.extend(f.breakpoints());
            if !f.degenerate {
                v.push(f.alpha_max());
            }
            v
        });
        let solutions = alphas
            .into_iter()
            .map(|a| {
                self.rating
                    .solve(a)
                    .map(|s| SolveResponse::from_solution(&s, self.log()))
                    .map_err(|e| ApiError::from_decision(e, self.log()))
            })
            .collect::<Result<_, _>>()?;
        Ok(RateReport {
            method: RatingMethod::Bicriteria.describe().to_string(),
            error: None,
            frontier: Some(self.frontier()),
            solutions,
        })
    }

    /// Single-criterion rating of `A` (or of `B` with `use_b`).
    pub fn rate_single(&self, use_b: bool) -> Result<RateReport, ApiError> {
        let m = if use_b {
            self.problem
                .b()
                .ok_or_else(|| ApiError::BadRequest("the problem has no matrix B".into()))?
        } else {
            self.problem.a()
        };
        let sol = rate_single(m, self.problem.tolerance())
            .map_err(|e| ApiError::from_decision(e, self.log()))?;
        Ok(RateReport {
            method: sol.method.describe().to_string(),
            error: Some(encode(sol.alpha, self.log())),
            frontier: None,
            solutions: vec![SolveResponse::from_solution(&sol, self.log())],
        })
    }

    pub fn rate_scalarized(&self) -> Result<RateReport, ApiError> {
        let b = self.problem.b().ok_or_else(|| {
            ApiError::BadRequest("scalarized rating needs matrices A and B".into())
        })?;
        let sol = rate_scalarized(self.problem.a(), b, self.problem.tolerance())
            .map_err(|e| ApiError::from_decision(e, self.log()))?;
        let RatingMethod::Scalarized { error } = sol.method else {
            unreachable!("scalarized rating")
        };
        Ok(RateReport {
            method: sol.method.describe().to_string(),
            error: Some(encode(error, self.log())),
            frontier: None,
            solutions: vec![SolveResponse::from_solution(&sol, self.log())],
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemResponse {
    pub id: String,
    pub n: usize,
    pub labels: Vec<String>,
    pub mu: f64,
    /// `null` for a single-matrix problem.
    pub nu: Option<f64>,
    pub degenerate: bool,
    pub alpha_min: f64,
    pub alpha_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentBody {
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    /// `d log β / d log α`.
    pub slope: f64,
    /// `log β` at `log α = 0`.
    pub intercept: f64,
    /// `β = coef · α^slope` in max-times values.
    pub coef: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontierResponse {
    pub mu: f64,
    pub nu: f64,
    pub g_of_nu: f64,
    pub degenerate: bool,
    pub segments: Vec<SegmentBody>,
    pub breakpoints: Vec<f64>,
    pub endpoints: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Objectives {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisBody {
    /// Largest score is 1 (0 in log output).
    pub scores: Vec<f64>,
    /// Indices into the labels, best first; tied alternatives share a group.
    pub ranking: Vec<Vec<usize>>,
    pub objectives: Objectives,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResponse {
    pub alpha: f64,
    pub beta: f64,
    pub basis: Vec<BasisBody>,
    /// `(x⁻Ax, x⁻Bx)` recomputed from the basis vectors (largest over the
    /// basis).
    pub objectives_check: Objectives,
}

impl SolveResponse {
    pub fn from_solution(sol: &RatingSolution, log: bool) -> Self {
        let basis: Vec<BasisBody> = sol
            .basis
            .iter()
            .map(|s| BasisBody {
                scores: s
                    .scores
                    .iter()
                    .map(|&v| if log { v.ln() } else { v })
                    .collect(),
                ranking: s.ranking.clone(),
                objectives: Objectives {
                    a: encode(s.objectives.0, log),
                    b: encode(s.objectives.1, log),
                },
            })
            .collect();
        let check_a = Scalar::sum(sol.basis.iter().map(|s| s.objectives.0));
        let check_b = Scalar::sum(sol.basis.iter().map(|s| s.objectives.1));
        SolveResponse {
            alpha: encode(sol.alpha, log),
            beta: encode(sol.beta, log),
            basis,
            objectives_check: Objectives {
                a: encode(check_a, log),
                b: encode(check_b, log),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorResponse {
    pub cheb_a: f64,
    pub cheb_b: Option<f64>,
    pub relative_a: f64,
    pub relative_b: Option<f64>,
}

/// Output of a rating run on the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub method: String,
    /// Minimum error of the single or scalarized problem.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier: Option<FrontierResponse>,
    pub solutions: Vec<SolveResponse>,
}
