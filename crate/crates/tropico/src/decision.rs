//! Rating alternatives from pairwise comparison matrices.
//!
//! The log-Chebyshev approximation error of a comparison matrix `A` by the
//! consistent matrix `(xᵢ/xⱼ)` is `max_ij a_ij xⱼ / xᵢ`, which is the tropical
//! quadratic form `x⁻Ax` in max-times arithmetic. Single-criterion rating
//! minimizes it; bi-criteria rating traces the Pareto frontier of the pair.

use std::fmt;

use thiserror::Error;

use crate::bicriteria::{BiObjective, BicriteriaError, ParetoFrontier, ParetoSolution};
use crate::linalg::{LinalgError, Matrix, Vector};
use crate::semifield::Scalar;
use crate::tolerance::Tolerance;

/// A reciprocity or diagonal defect at `(i, j)` (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct ReciprocityViolation {
    pub i: usize,
    pub j: usize,
    pub a_ij: f64,
    pub a_ji: f64,
}

impl fmt::Display for ReciprocityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(
                f,
                "diagonal entry ({0},{0}) = {1} is not 1",
                self.i + 1,
                self.a_ij
            )
        } else {
            write!(
                f,
                "a({},{}) = {} but 1/a({},{}) = {}",
                self.i + 1,
                self.j + 1,
                self.a_ij,
                self.j + 1,
                self.i + 1,
                1.0 / self.a_ji
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecisionError {
    #[error("comparison matrix is empty")]
    Empty,
    #[error("comparison matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({},{}) = {value} is not a positive finite number", .i + 1, .j + 1)]
    NonPositive { i: usize, j: usize, value: f64 },
    #[error("matrix is not reciprocal: {}", join(.0))]
    NotReciprocal(Vec<ReciprocityViolation>),
    #[error("{found} labels given for {n} alternatives")]
    LabelCount { n: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("rating vector entry {index} = {value} is not positive")]
    NonPositiveRating { index: usize, value: f64 },
    #[error(transparent)]
    Bicriteria(#[from] BicriteriaError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn join(v: &[ReciprocityViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidateOptions {
    /// Replace `a_ij` by `(a_ij / a_ji)^{1/2}` instead of rejecting a
    /// non-reciprocal matrix.
    pub repair: bool,
}

/// Symmetrically reciprocal matrix of positive pairwise comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonMatrix {
    labels: Vec<String>,
    values: Vec<Vec<f64>>,
    matrix: Matrix,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("alt{i}")).collect()
}

/// Shape and positivity checks shared by comparison and plain matrices.
pub(crate) fn check_positive_square(values: &[Vec<f64>]) -> Result<usize, DecisionError> {
    let n = values.len();
    if n == 0 {
        return Err(DecisionError::Empty);
    }
    for (i, row) in values.iter().enumerate() {
        if row.len() != n {
            return Err(DecisionError::NotSquare {
                row: i,
                len: row.len(),
                n,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(DecisionError::NonPositive { i, j, value: v });
            }
        }
    }
    Ok(n)
}

impl ComparisonMatrix {
    pub fn validate(
        values: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        tol: &Tolerance,
    ) -> Result<Self, DecisionError> {
        Self::validate_with(values, labels, tol, ValidateOptions::default())
    }

    pub fn validate_with(
        mut values: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        tol: &Tolerance,
        opts: ValidateOptions,
    ) -> Result<Self, DecisionError> {
        let n = check_positive_square(&values)?;
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(DecisionError::LabelCount {
                n,
                found: labels.len(),
            });
        }
        let violations = reciprocity_violations(&values, tol.reciprocity);
        if !violations.is_empty() {
            if !opts.repair {
                return Err(DecisionError::NotReciprocal(violations));
            }
            symmetrize(&mut values);
        }
        let matrix = Matrix::from_values(&values)?;
        Ok(ComparisonMatrix {
            labels,
            values,
            matrix,
        })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Largest `|log a_ij − log a_ik − log a_kj|` over all triples.
    pub fn inconsistency(&self) -> f64 {
        let n = self.n();
        let l = |i: usize, j: usize| self.values[i][j].ln();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((l(i, j) - l(i, k) - l(k, j)).abs());
                }
            }
        }
        worst
    }

    /// `a_ij = a_ik a_kj` for all triples, up to the relative tolerance.
    pub fn is_consistent(&self, tol: &Tolerance) -> bool {
        self.inconsistency() <= tol.reciprocity.max(tol.log)
    }

    pub fn spectral_radius(&self) -> Scalar {
        self.matrix.spectral_radius().expect("square")
    }

    pub fn chebyshev_error(&self, x: &[f64]) -> Result<ChebyshevError, DecisionError> {
        chebyshev_error(&self.values, x)
    }
}

#[allow(clippy::needless_range_loop)]
fn reciprocity_violations(values: &[Vec<f64>], rel: f64) -> Vec<ReciprocityViolation> {
    let n = values.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a_ij, a_ji) = (values[i][j], values[j][i]);
            // a_ij · a_ji = 1 within relative tolerance; covers the diagonal too
            if (a_ij * a_ji - 1.0).abs() > rel {
                out.push(ReciprocityViolation { i, j, a_ij, a_ji });
            }
        }
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn symmetrize(values: &mut [Vec<f64>]) {
    let n = values.len();
    for i in 0..n {
        values[i][i] = 1.0;
        for j in (i + 1)..n {
            let v = (values[i][j] / values[j][i]).sqrt();
            values[i][j] = v;
            values[j][i] = 1.0 / v;
        }
    }
}

/// Log-Chebyshev approximation error of a matrix by `(xᵢ/xⱼ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevError {
    /// `max_ij a_ij xⱼ / xᵢ`.
    pub value: f64,
    /// `value − 1`, the maximum relative error for reciprocal matrices.
    pub relative: f64,
}

/// `max_ij a_ij xⱼ / xᵢ`, computed directly in ordinary arithmetic.
pub fn chebyshev_error(values: &[Vec<f64>], x: &[f64]) -> Result<ChebyshevError, DecisionError> {
    if values.len() != x.len() {
        return Err(DecisionError::DimensionMismatch {
            left: values.len(),
            right: x.len(),
        });
    }
    if let Some((index, &value)) = x
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v > 0.0))
    {
        return Err(DecisionError::NonPositiveRating { index, value });
    }
    let mut value = f64::NEG_INFINITY;
    for (i, row) in values.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            value = value.max(a * x[j] / x[i]);
        }
    }
    Ok(ChebyshevError {
        value,
        relative: value - 1.0,
    })
}

/// Groups alternatives by descending score; consecutive scores within `tie`
/// relative difference of the group leader share a group.
pub fn rank(scores: &[f64], tie: f64) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match groups.last_mut() {
            Some(g) if (scores[g[0]] - scores[idx]) < tie * scores[g[0]].abs() => g.push(idx),
            _ => groups.push(vec![idx]),
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatingMethod {
    /// One matrix, minimum log-Chebyshev error.
    Single,
    /// Minimum error for `C = A ⊕ B`; one compromise, not the whole frontier.
    Scalarized { error: Scalar },
    /// A point of the Pareto frontier of the two errors.
    Bicriteria,
}

impl RatingMethod {
    pub fn describe(&self) -> &'static str {
        match self {
            RatingMethod::Single => "single criterion",
            RatingMethod::Scalarized { .. } => "scalarized (not Pareto-complete)",
            RatingMethod::Bicriteria => "bi-criteria Pareto-optimal",
        }
    }
}

/// Normalized scores of one generating column.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    /// Max-times values with largest entry 1.
    pub scores: Vec<f64>,
    /// Alternatives by descending score, ties grouped.
    pub ranking: Vec<Vec<usize>>,
    /// `(x⁻Ax, x⁻Bx)` recomputed for this column.
    pub objectives: (Scalar, Scalar),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatingSolution {
    pub method: RatingMethod,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub generator: Matrix,
    pub basis: Vec<ScoreVector>,
}

impl RatingSolution {
    fn from_pareto(
        sol: ParetoSolution,
        a: &Matrix,
        b: &Matrix,
        method: RatingMethod,
        tol: &Tolerance,
    ) -> Result<Self, DecisionError> {
        let basis = sol
            .basis
            .columns()
            .map(|col| score_vector(&col, a, b, tol))
            .collect::<Result<_, _>>()?;
        Ok(RatingSolution {
            method,
            alpha: sol.alpha,
            beta: sol.beta,
            generator: sol.generator,
            basis,
        })
    }

    pub fn labels_ranked<'a>(&self, labels: &'a [String], column: usize) -> Vec<Vec<&'a str>> {
        self.basis[column]
            .ranking
            .iter()
            .map(|g| g.iter().map(|&i| labels[i].as_str()).collect())
            .collect()
    }
}

fn score_vector(
    col: &Vector,
    a: &Matrix,
    b: &Matrix,
    tol: &Tolerance,
) -> Result<ScoreVector, DecisionError> {
    let x = col.normalized_max();
    let scores = x.values();
    let objectives = crate::bicriteria::objective_values(a, b, &x)?;
    Ok(ScoreVector {
        ranking: rank(&scores, tol.tie),
        scores,
        objectives,
    })
}

/// Minimum-error rating of a single matrix, solved as the bi-objective
/// problem with both matrices equal (a degenerate frontier at `(μ, μ)`).
pub fn rate_single(m: &ComparisonMatrix, tol: &Tolerance) -> Result<RatingSolution, DecisionError> {
    rate_matrix(m.matrix(), tol, RatingMethod::Single, m.matrix())
}

fn rate_matrix(
    m: &Matrix,
    tol: &Tolerance,
    method: RatingMethod,
    other: &Matrix,
) -> Result<RatingSolution, DecisionError> {
    let problem = BiObjective::with_tolerance(m.clone(), m.clone(), *tol)?;
    let sol = problem.solve_at(problem.frontier().mu)?;
    let (a, b) = match method {
        RatingMethod::Scalarized { .. } => (other, m),
        _ => (m, m),
    };
    RatingSolution::from_pareto(sol, a, b, method, tol)
}

/// Rates against `C = A ⊕ B` (entry-wise maximum, generally not reciprocal).
/// Each basis column reports its own `(x⁻Ax, x⁻Bx)`; `alpha`/`beta` hold the
/// maxima of those over the basis.
pub fn rate_scalarized(
    a: &ComparisonMatrix,
    b: &ComparisonMatrix,
    tol: &Tolerance,
) -> Result<RatingSolution, DecisionError> {
    if a.n() != b.n() {
        return Err(DecisionError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let c = a.matrix().add(b.matrix())?;
    let error = c.spectral_radius()?;
    let problem = BiObjective::with_tolerance(c.clone(), c, *tol)?;
    let sol = problem.solve_at(problem.frontier().mu)?;
    let mut out = RatingSolution::from_pareto(
        sol,
        a.matrix(),
        b.matrix(),
        RatingMethod::Scalarized { error },
        tol,
    )?;
    out.alpha = Scalar::sum(out.basis.iter().map(|s| s.objectives.0));
    out.beta = Scalar::sum(out.basis.iter().map(|s| s.objectives.1));
    Ok(out)
}

/// Bi-criteria rating: the frontier plus an evaluator `α ↦ RatingSolution`.
#[derive(Debug, Clone)]
pub struct BicriteriaRating {
    problem: BiObjective,
}

impl BicriteriaRating {
    pub fn problem(&self) -> &BiObjective {
        &self.problem
    }

    pub fn frontier(&self) -> &ParetoFrontier {
        self.problem.frontier()
    }

    pub fn solve(&self, alpha: Scalar) -> Result<RatingSolution, DecisionError> {
        let sol = self.problem.solve_at(alpha)?;
        RatingSolution::from_pareto(
            sol,
            self.problem.a(),
            self.problem.b(),
            RatingMethod::Bicriteria,
            self.problem.tolerance(),
        )
    }

    /// Solutions at `k` log-evenly spaced frontier points.
    pub fn sample(&self, k: usize) -> Result<Vec<RatingSolution>, DecisionError> {
        self.frontier()
            .sample_alphas(k)
            .into_iter()
            .map(|alpha| self.solve(alpha))
            .collect()
    }
}

pub fn rate_bicriteria(
    a: &ComparisonMatrix,
    b: &ComparisonMatrix,
    tol: &Tolerance,
) -> Result<BicriteriaRating, DecisionError> {
    if a.n() != b.n() {
        return Err(DecisionError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let problem = BiObjective::with_tolerance(a.matrix().clone(), b.matrix().clone(), *tol)?;
    Ok(BicriteriaRating { problem })
}
