use std::fmt;

use super::{LinalgError, OpCounter, Vector};
use crate::semifield::Scalar;

/// Dense row-major matrix over the semifield.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if rows * cols != data.len() {
            return Err(LinalgError::BadShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    /// Builds a matrix from rows of ordinary non-negative reals.
    pub fn from_values<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            for &v in row {
                data.push(Scalar::from_value(v)?);
            }
        }
        Self::new(n_rows, n_cols, data)
    }

    /// Builds a square matrix from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    /// Assembles a matrix from equally sized column vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self, LinalgError> {
        let rows = columns.first().map_or(0, Vector::dim);
        if let Some(c) = columns.iter().find(|c| c.dim() != rows) {
            return Err(LinalgError::DimensionMismatch {
                op: "from_columns",
                left: (rows, 1),
                right: (c.dim(), 1),
            });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    /// Max-times values, row by row.
    pub fn to_values(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).value()).collect())
            .collect()
    }

    /// Every column holds a nonzero entry.
    pub fn is_column_regular(&self) -> bool {
        self.first_zero_column().is_none()
    }

    pub(crate) fn first_zero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
    }

    fn require_square(&self) -> Result<usize, LinalgError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Entry-wise `⊕`.
    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(*b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `(self · other)_ij = ⊕_k self_ik ⊗ other_kj`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.mul_counted(other, &mut OpCounter::default())
    }

    /// Product that records the scalar operations it performs.
    pub fn mul_counted(&self, other: &Matrix, ops: &mut OpCounter) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d = d.add(a.mul(*b));
                }
            }
        }
        // one ⊗ and one ⊕ per (i, k, j) triple
        ops.record(2 * (self.rows * self.cols * other.cols) as u64);
        Ok(out)
    }

    pub fn add_counted(&self, other: &Matrix, ops: &mut OpCounter) -> Result<Matrix, LinalgError> {
        let out = self.add(other)?;
        ops.record(self.data.len() as u64);
        Ok(out)
    }

    pub fn mul_vec(&self, x: &Vector) -> Result<Vector, LinalgError> {
        if self.cols != x.dim() {
            return Err(LinalgError::DimensionMismatch {
                op: "mul_vec",
                left: (self.rows, self.cols),
                right: (x.dim(), 1),
            });
        }
        Ok(Vector::new(
            (0..self.rows)
                .map(|i| Scalar::sum((0..self.cols).map(|j| self.get(i, j).mul(x[j]))))
                .collect(),
        ))
    }

    /// `x ⊗ A` entry-wise.
    pub fn scale(&self, x: Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| x.mul(*a)).collect(),
        }
    }

    /// `A⁰ = I`, `Aᵖ = A·Aᵖ⁻¹`.
    pub fn pow(&self, p: usize) -> Result<Matrix, LinalgError> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..p {
            acc = self.mul(&acc)?;
        }
        Ok(acc)
    }

    /// The powers `A¹, …, Aⁿ` computed with `n − 1` products.
    pub fn powers(&self) -> Result<Vec<Matrix>, LinalgError> {
        let n = self.require_square()?;
        let mut out: Vec<Matrix> = Vec::with_capacity(n);
        if n == 0 {
            return Ok(out);
        }
        out.push(self.clone());
        for _ in 1..n {
            let next = self.mul(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// `⊕` of the diagonal.
    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        let n = self.require_square()?;
        Ok(Scalar::sum((0..n).map(|i| self.get(i, i))))
    }

    /// `tr A, tr A², …, tr Aⁿ`.
    pub fn power_traces(&self) -> Result<Vec<Scalar>, LinalgError> {
        self.powers()?.iter().map(Matrix::trace).collect()
    }

    /// `Tr(A) = ⊕_{k=1..n} tr Aᵏ`.
    pub fn tr_big(&self) -> Result<Scalar, LinalgError> {
        Ok(Scalar::sum(self.power_traces()?))
    }

    /// `λ = ⊕_{k=1..n} tr^{1/k}(Aᵏ)`, the maximum geometric cycle mean.
    pub fn spectral_radius(&self) -> Result<Scalar, LinalgError> {
        let traces = self.power_traces()?;
        Ok(spectral_radius_from_traces(&traces))
    }

    /// `A* = I ⊕ A ⊕ … ⊕ Aⁿ⁻¹`, defined when `Tr(A) ≤ 𝟙` (up to `tol` in the
    /// log domain).
    pub fn kleene_star(&self, tol: f64) -> Result<Matrix, LinalgError> {
        let n = self.require_square()?;
        let powers = self.powers()?;
        let tr = Scalar::sum(powers.iter().map(|p| p.trace().expect("square")));
        if !tr.le_tol(Scalar::ONE, tol) {
            return Err(LinalgError::StarUndefined { tr });
        }
        let mut star = Matrix::identity(n);
        for p in powers.iter().take(n.saturating_sub(1)) {
            star = star.add(p)?;
        }
        Ok(star)
    }

    /// Entry-wise `≤` with log-domain slack.
    pub fn le_tol(&self, other: &Matrix, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.le_tol(*b, tol))
    }

    /// Largest entry-wise log distance; `+∞` on shape or support mismatch.
    pub fn max_log_distance(&self, other: &Matrix) -> f64 {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.log_distance(*b))
            .fold(0.0, f64::max)
    }

    /// `⊕` of every entry.
    pub fn max_entry(&self) -> Scalar {
        Scalar::sum(self.data.iter().copied())
    }
}

fn spectral_radius_from_traces(traces: &[Scalar]) -> Scalar {
    Scalar::sum(
        traces
            .iter()
            .enumerate()
            .map(|(k, t)| t.pow(1.0 / (k + 1) as f64).expect("positive exponent")),
    )
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
