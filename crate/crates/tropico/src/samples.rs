//! Small ready-made problems used by the examples, the tests and the CLI docs.

use crate::linalg::Matrix;

/// Comparison data for four alternatives under two criteria.
pub const FOUR_ALTERNATIVES_A: [[f64; 4]; 4] = [
    [1.0, 3.0, 4.0, 2.0],
    [1.0 / 3.0, 1.0, 1.0 / 2.0, 1.0 / 3.0],
    [1.0 / 4.0, 2.0, 1.0, 4.0],
    [1.0 / 2.0, 3.0, 1.0 / 4.0, 1.0],
];

pub const FOUR_ALTERNATIVES_B: [[f64; 4]; 4] = [
    [1.0, 2.0, 4.0, 2.0],
    [1.0 / 2.0, 1.0, 1.0 / 3.0, 1.0 / 2.0],
    [1.0 / 4.0, 3.0, 1.0, 4.0],
    [1.0 / 2.0, 2.0, 1.0 / 4.0, 1.0],
];

/// The two four-alternative comparison matrices as semifield matrices.
pub fn four_alternatives() -> (Matrix, Matrix) {
    (
        Matrix::from_values(&FOUR_ALTERNATIVES_A).expect("valid"),
        Matrix::from_values(&FOUR_ALTERNATIVES_B).expect("valid"),
    )
}

/// Reciprocal 2x2 matrix `[[1, a], [1/a, 1]]`.
pub fn reciprocal_2x2(a: f64) -> Matrix {
    Matrix::from_values(&[[1.0, a], [1.0 / a, 1.0]]).expect("positive entry")
}

/// Consistent matrix `a_ij = x_i / x_j`.
pub fn consistent(x: &[f64]) -> Vec<Vec<f64>> {
    x.iter()
        .map(|xi| x.iter().map(|xj| xi / xj).collect())
        .collect()
}
