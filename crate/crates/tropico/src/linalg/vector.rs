use std::ops::Index;

use super::{LinalgError, Matrix};
use crate::semifield::Scalar;

/// Column vector over the semifield.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector(Vec<Scalar>);

/// Row vector, produced by conjugate transposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowVector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn from_values(values: &[f64]) -> Result<Self, LinalgError> {
        Ok(Vector(
            values
                .iter()
                .map(|&v| Scalar::from_value(v))
                .collect::<Result<_, _>>()?,
        ))
    }

    pub fn from_logs(logs: &[f64]) -> Result<Self, LinalgError> {
        Ok(Vector(
            logs.iter()
                .map(|&v| Scalar::from_log(v))
                .collect::<Result<_, _>>()?,
        ))
    }

    /// The all-`𝟙` vector.
    pub fn ones(n: usize) -> Self {
        Vector(vec![Scalar::ONE; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn values(&self) -> Vec<f64> {
        self.0.iter().map(|s| s.value()).collect()
    }

    pub fn logs(&self) -> Vec<f64> {
        self.0.iter().map(|s| s.log()).collect()
    }

    /// No entry is `𝟘`.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|s| !s.is_zero())
    }

    pub(crate) fn require_regular(&self) -> Result<(), LinalgError> {
        match self.0.iter().position(|s| s.is_zero()) {
            Some(index) => Err(LinalgError::NotRegular { index }),
            None => Ok(()),
        }
    }

    /// Multiplicative conjugate transposition `x⁻`: inverses of nonzero
    /// entries, `𝟘` kept in place.
    pub fn conjugate(&self) -> RowVector {
        RowVector(
            self.0
                .iter()
                .map(|s| s.inv().unwrap_or(Scalar::ZERO))
                .collect(),
        )
    }

    pub fn scale(&self, c: Scalar) -> Vector {
        Vector(self.0.iter().map(|s| c.mul(*s)).collect())
    }

    /// `⊕` of the entries.
    pub fn max_entry(&self) -> Scalar {
        Scalar::sum(self.0.iter().copied())
    }

    /// Scaled so that the largest entry is `𝟙`. The zero vector is returned as is.
    pub fn normalized_max(&self) -> Vector {
        match self.max_entry().inv() {
            Ok(c) => self.scale(c),
            Err(_) => self.clone(),
        }
    }

    /// Entry-wise `≤` with log-domain slack.
    pub fn le_tol(&self, other: &Vector, tol: f64) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.le_tol(*b, tol))
    }

    pub fn max_log_distance(&self, other: &Vector) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.log_distance(*b))
            .fold(0.0, f64::max)
    }

    /// The quadratic form `x⁻ A x`.
    pub fn quadratic_form(&self, a: &Matrix) -> Result<Scalar, LinalgError> {
        self.conjugate().mul_mat(a)?.dot(self)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl RowVector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        RowVector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    /// Back to a column vector by conjugate transposition.
    pub fn conjugate(&self) -> Vector {
        Vector(
            self.0
                .iter()
                .map(|s| s.inv().unwrap_or(Scalar::ZERO))
                .collect(),
        )
    }

    /// `r A`.
    pub fn mul_mat(&self, a: &Matrix) -> Result<RowVector, LinalgError> {
        if self.dim() != a.rows() {
            return Err(LinalgError::DimensionMismatch {
                op: "row_mul",
                left: (1, self.dim()),
                right: (a.rows(), a.cols()),
            });
        }
        Ok(RowVector(
            (0..a.cols())
                .map(|j| Scalar::sum((0..a.rows()).map(|i| self.0[i].mul(a.get(i, j)))))
                .collect(),
        ))
    }

    /// `r x`.
    pub fn dot(&self, x: &Vector) -> Result<Scalar, LinalgError> {
        if self.dim() != x.dim() {
            return Err(LinalgError::DimensionMismatch {
                op: "dot",
                left: (1, self.dim()),
                right: (x.dim(), 1),
            });
        }
        Ok(Scalar::sum(self.0.iter().zip(&x.0).map(|(a, b)| a.mul(*b))))
    }
}

impl Index<usize> for RowVector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}
