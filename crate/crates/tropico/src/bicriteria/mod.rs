//! Complete Pareto-optimal solution of `minimize (x⁻Ax, x⁻Bx)`.
//!
//! With spectral radii `μ` of `A` and `ν` of `B` and the dual trace functions
//! `G`, `H`, the frontier is the curve `β = H(α)` for `μ ≤ α ≤ G(ν)` when
//! `μ < G(ν)`, and the single point `(μ, ν)` otherwise. For every frontier
//! point the regular solutions are `(α⁻¹A ⊕ β⁻¹B)* u` with `u` regular.

mod collinear;
mod frontier;
mod rkm;
mod trace_fn;

pub use collinear::reduce_collinear;
pub use frontier::{BiObjective, ParetoFrontier, ParetoSolution, Segment};
pub use rkm::RkmTable;
pub use trace_fn::{Exponent, Piece, Term, TraceFunction};

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix, Vector};
use crate::semifield::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BicriteriaError {
    #[error("matrices must be square of the same size, got {a:?} and {b:?}")]
    DimensionMismatch {
        a: (usize, usize),
        b: (usize, usize),
    },
    #[error("matrix {which} has zero spectral radius")]
    ZeroRadius { which: char },
    #[error("trace functions are evaluated at nonzero arguments only")]
    ZeroArgument,
    #[error("alpha = {alpha} lies outside the frontier range [{lo}, {hi}]")]
    OutOfRange {
        alpha: Scalar,
        lo: Scalar,
        hi: Scalar,
    },
    #[error("internal inconsistency: Tr(α⁻¹A ⊕ β⁻¹B) = {tr} exceeds 𝟙")]
    TraceCheck { tr: Scalar },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn common_dimension(a: &Matrix, b: &Matrix) -> Result<usize, BicriteriaError> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(BicriteriaError::DimensionMismatch {
            a: (a.rows(), a.cols()),
            b: (b.rows(), b.cols()),
        });
    }
    Ok(a.rows())
}

/// `G` built through the `R_km` table, together with the operation count.
pub fn build_g(a: &Matrix, b: &Matrix) -> Result<(TraceFunction, u64), BicriteriaError> {
    let table = RkmTable::build(a, b)?;
    Ok((TraceFunction::g_from_table(&table), table.ops().count()))
}

pub fn build_h(a: &Matrix, b: &Matrix) -> Result<TraceFunction, BicriteriaError> {
    Ok(TraceFunction::h_from_table(&RkmTable::build(a, b)?))
}

/// `(x⁻Ax, x⁻Bx)` for a regular `x`.
pub fn objective_values(
    a: &Matrix,
    b: &Matrix,
    x: &Vector,
) -> Result<(Scalar, Scalar), BicriteriaError> {
    x.require_regular()?;
    Ok((x.quadratic_form(a)?, x.quadratic_form(b)?))
}
