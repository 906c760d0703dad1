use super::{objective_values, reduce_collinear, BicriteriaError, RkmTable, Term, TraceFunction};
use crate::linalg::{LinalgError, Matrix, Vector};
use crate::semifield::Scalar;
use crate::tolerance::Tolerance;

/// Piece of the frontier on which `β = coef ⊗ α^(−exponent)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub alpha_lo: Scalar,
    pub alpha_hi: Scalar,
    pub term: Term,
}

impl Segment {
    /// Slope of the segment in log-log coordinates.
    pub fn slope(&self) -> f64 {
        -self.term.exponent.value()
    }

    /// Intercept in log-log coordinates (`log coef`).
    pub fn intercept(&self) -> f64 {
        self.term.coef.log()
    }
}

/// The Pareto frontier of `minimize (x⁻Ax, x⁻Bx)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoFrontier {
    pub mu: Scalar,
    pub nu: Scalar,
    pub g_of_nu: Scalar,
    /// The frontier is the single point `(μ, ν)`.
    pub degenerate: bool,
    /// Empty when degenerate; otherwise tiles `[μ, G(ν)]` in order.
    pub segments: Vec<Segment>,
}

impl ParetoFrontier {
    fn build(
        mu: Scalar,
        nu: Scalar,
        g: &TraceFunction,
        h: &TraceFunction,
        tol: &Tolerance,
    ) -> Result<Self, BicriteriaError> {
        let g_of_nu = g.eval(nu)?;
        // μ = G(ν) exactly gives the same single point from both branches;
        // near-equality is folded into the degenerate case.
        let degenerate = g_of_nu.le_tol(mu, tol.log);
        let segments = if degenerate {
            Vec::new()
        } else {
            h.pieces_on(mu.log(), g_of_nu.log(), tol.log)
                .into_iter()
                .map(|p| Segment {
                    alpha_lo: Scalar::from_log(p.lo).expect("finite"),
                    alpha_hi: Scalar::from_log(p.hi).expect("finite"),
                    term: p.term,
                })
                .collect()
        };
        Ok(ParetoFrontier {
            mu,
            nu,
            g_of_nu,
            degenerate,
            segments,
        })
    }

    pub fn alpha_min(&self) -> Scalar {
        self.mu
    }

    pub fn alpha_max(&self) -> Scalar {
        if self.degenerate {
            self.mu
        } else {
            self.g_of_nu
        }
    }

    /// Checks `alpha` against `[μ, α_max]` with log slack `tol`, and returns
    /// it snapped into the interval.
    pub fn admit(&self, alpha: Scalar, tol: f64) -> Result<Scalar, BicriteriaError> {
        let (lo, hi) = (self.alpha_min(), self.alpha_max());
        if alpha.is_zero() || !lo.le_tol(alpha, tol) || !alpha.le_tol(hi, tol) {
            return Err(BicriteriaError::OutOfRange { alpha, lo, hi });
        }
        Ok(alpha.max(lo).min(hi))
    }

    /// `β = H(α) ⊕ ν` evaluated on the stored segments.
    pub fn beta_at(&self, alpha: Scalar, tol: f64) -> Result<(Scalar, Scalar), BicriteriaError> {
        let alpha = self.admit(alpha, tol)?;
        if self.degenerate {
            return Ok((alpha, self.nu));
        }
        let idx = self
            .segments
            .partition_point(|s| s.alpha_hi < alpha)
            .min(self.segments.len() - 1);
        Ok((alpha, self.segments[idx].term.eval(alpha).add(self.nu)))
    }

    /// `(μ, H(μ) ⊕ ν)` and `(G(ν), ν)`, or the single point `(μ, ν)`.
    pub fn endpoints(&self) -> Vec<(Scalar, Scalar)> {
        if self.degenerate {
            return vec![(self.mu, self.nu)];
        }
        let first = self.beta_at(self.mu, 0.0).expect("in range").1;
        let last = self.beta_at(self.g_of_nu, 0.0).expect("in range").1;
        vec![(self.mu, first), (self.g_of_nu, last)]
    }

    /// Interior breakpoints of `β = H(α)`.
    pub fn breakpoints(&self) -> Vec<Scalar> {
        self.segments.iter().skip(1).map(|s| s.alpha_lo).collect()
    }

    /// `k` values of `α` evenly spaced in log scale over the frontier; a
    /// single `μ` for a degenerate frontier.
    pub fn sample_alphas(&self, k: usize) -> Vec<Scalar> {
        if self.degenerate || k <= 1 {
            return if k == 0 { Vec::new() } else { vec![self.mu] };
        }
        let (lo, hi) = (self.mu.log(), self.g_of_nu.log());
        (0..k)
            .map(|i| {
                let x = if i == k - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (k - 1) as f64
                };
                Scalar::from_log(x).expect("finite")
            })
            .collect()
    }
}

/// Generator of all Pareto-optimal solutions at one frontier point.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoSolution {
    pub alpha: Scalar,
    pub beta: Scalar,
    /// `(α⁻¹A ⊕ β⁻¹B)*`.
    pub generator: Matrix,
    /// One max-normalized column per collinearity class of the generator.
    pub basis: Matrix,
}

impl ParetoSolution {
    pub fn basis_columns(&self) -> Vec<Vector> {
        self.basis.columns().collect()
    }
}

/// A bi-objective problem with its trace functions and frontier precomputed.
#[derive(Debug, Clone)]
pub struct BiObjective {
    a: Matrix,
    b: Matrix,
    tol: Tolerance,
    g: TraceFunction,
    h: TraceFunction,
    frontier: ParetoFrontier,
}

impl BiObjective {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self, BicriteriaError> {
        Self::with_tolerance(a, b, Tolerance::default())
    }

    pub fn with_tolerance(a: Matrix, b: Matrix, tol: Tolerance) -> Result<Self, BicriteriaError> {
        let table = RkmTable::build(&a, &b)?;
        let mu = a.spectral_radius()?;
        let nu = b.spectral_radius()?;
        if mu.is_zero() {
            return Err(BicriteriaError::ZeroRadius { which: 'A' });
        }
        if nu.is_zero() {
            return Err(BicriteriaError::ZeroRadius { which: 'B' });
        }
        let g = TraceFunction::g_from_table(&table);
        let h = TraceFunction::h_from_table(&table);
        let frontier = ParetoFrontier::build(mu, nu, &g, &h, &tol)?;
        Ok(BiObjective {
            a,
            b,
            tol,
            g,
            h,
            frontier,
        })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn g(&self) -> &TraceFunction {
        &self.g
    }

    pub fn h(&self) -> &TraceFunction {
        &self.h
    }

    pub fn frontier(&self) -> &ParetoFrontier {
        &self.frontier
    }

    /// All Pareto-optimal solutions achieving `x⁻Ax = α`.
    ///
    /// `β` is read from the frontier segments, so the returned pair always
    /// lies on the published frontier. A degenerate frontier admits `α = μ`
    /// only.
    pub fn solve_at(&self, alpha: Scalar) -> Result<ParetoSolution, BicriteriaError> {
        let (alpha, beta) = self.frontier.beta_at(alpha, self.tol.log)?;
        let d = self
            .a
            .scale(alpha.inv().expect("alpha ≥ μ > 𝟘"))
            .add(&self.b.scale(beta.inv().expect("beta ≥ ν > 𝟘")))?;
        let generator = match d.kleene_star(self.tol.log) {
            Ok(star) => star,
            Err(LinalgError::StarUndefined { tr }) => {
                return Err(BicriteriaError::TraceCheck { tr })
            }
            Err(e) => return Err(e.into()),
        };
        let basis = reduce_collinear(&generator, self.tol.collinear);
        Ok(ParetoSolution {
            alpha,
            beta,
            generator,
            basis,
        })
    }

    pub fn objective_values(&self, x: &Vector) -> Result<(Scalar, Scalar), BicriteriaError> {
        objective_values(&self.a, &self.b, x)
    }
}
