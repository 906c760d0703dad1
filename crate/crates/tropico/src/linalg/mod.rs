//! Matrices and vectors over the semifield, traces, the Kleene star, the
//! spectral radius and the two basic inequality solvers.

mod matrix;
mod vector;

pub use matrix::Matrix;
pub use vector::{RowVector, Vector};

use thiserror::Error;

use crate::semifield::{DomainError, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("{rows}x{cols} matrix cannot hold {len} entries")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("column {col} has no nonzero entry")]
    NotColumnRegular { col: usize },
    #[error("vector entry {index} is zero")]
    NotRegular { index: usize },
    #[error("Kleene star undefined: Tr = {tr} exceeds 𝟙")]
    StarUndefined { tr: Scalar },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// Running count of scalar `⊕`/`⊗` operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter(u64);

impl OpCounter {
    pub fn record(&mut self, ops: u64) {
        self.0 += ops;
    }

    pub fn count(&self) -> u64 {
        self.0
    }
}

/// Greatest solution of `A x ≤ d` for column-regular `A` and regular `d`,
/// namely `(d⁻ A)⁻`. Every `x` below it solves the inequality.
pub fn solve_upper(a: &Matrix, d: &Vector) -> Result<Vector, LinalgError> {
    if a.rows() != d.dim() {
        return Err(LinalgError::DimensionMismatch {
            op: "solve_upper",
            left: (a.rows(), a.cols()),
            right: (d.dim(), 1),
        });
    }
    if let Some(col) = a.first_zero_column() {
        return Err(LinalgError::NotColumnRegular { col });
    }
    d.require_regular()?;
    Ok(d.conjugate().mul_mat(a)?.conjugate())
}

/// Regular solutions of `A x ≤ x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Subfixpoint {
    /// `Tr(A) ≤ 𝟙`: the solutions are exactly `A* u` for regular `u`.
    Generator(Matrix),
    /// `Tr(A) > 𝟙`: only `x = 0` solves the inequality.
    TrivialOnly { tr: Scalar },
}

pub fn solve_subfixpoint(a: &Matrix, tol: f64) -> Result<Subfixpoint, LinalgError> {
    match a.kleene_star(tol) {
        Ok(star) => Ok(Subfixpoint::Generator(star)),
        Err(LinalgError::StarUndefined { tr }) => Ok(Subfixpoint::TrivialOnly { tr }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use proptest::prelude::*;

    fn s(v: f64) -> Scalar {
        Scalar::new(v)
    }

    fn close(a: Scalar, b: f64) -> bool {
        a.log_distance(s(b)) < 1e-12
    }

    fn assert_row(m: &Matrix, i: usize, expected: &[f64]) {
        for (j, &e) in expected.iter().enumerate() {
            assert!(close(m.get(i, j), e), "({i},{j}): {:?} vs {e}", m.get(i, j));
        }
    }

    #[test]
    fn products_on_four_alternatives() {
        let (a, b) = samples::four_alternatives();
        let ba = b.mul(&a).unwrap();
        assert!(close(ba.get(0, 3), 16.0));
        assert!(close(ba.trace().unwrap(), 1.5));
        assert_eq!(Matrix::identity(4).mul(&a).unwrap(), a);
        assert_eq!(a.add(&a).unwrap(), a);
    }

    #[test]
    fn powers_match_worked_values() {
        let (a, b) = samples::four_alternatives();
        assert_row(&a.pow(2).unwrap(), 0, &[1.0, 8.0, 4.0, 16.0]);
        assert_row(&a.pow(4).unwrap(), 1, &[8.0 / 3.0, 16.0, 4.0, 16.0 / 3.0]);
        assert_row(&b.pow(3).unwrap(), 0, &[8.0, 32.0, 4.0, 16.0]);
        assert_eq!(a.pow(0).unwrap(), Matrix::identity(4));
        let bppp = b.mul(&a.pow(3).unwrap()).unwrap();
        assert!(close(bppp.trace().unwrap(), 24.0));
    }

    #[test]
    fn traces_and_radius() {
        let (a, b) = samples::four_alternatives();
        assert!(close(a.spectral_radius().unwrap(), 2.0));
        assert!(close(b.spectral_radius().unwrap(), 2.0));
        assert_eq!(Matrix::identity(3).trace().unwrap(), Scalar::ONE);
        let d = a
            .scale(s(2.0).inv().unwrap())
            .add(&b.scale(s(3.0).inv().unwrap()))
            .unwrap();
        assert!(d.tr_big().unwrap().le_tol(Scalar::ONE, 1e-12));
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(m.trace(), Err(LinalgError::NotSquare { .. })));
        assert!(matches!(m.pow(2), Err(LinalgError::NotSquare { .. })));
        assert!(matches!(
            m.mul(&m),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kleene_star_worked_values() {
        let (a, b) = samples::four_alternatives();
        let d = a
            .scale(s(0.5))
            .add(&b.scale(s(3.0).inv().unwrap()))
            .unwrap();
        let star = d.kleene_star(1e-9).unwrap();
        assert_row(&star, 0, &[1.0, 6.0, 2.0, 4.0]);
        assert_row(&star, 1, &[1.0 / 6.0, 1.0, 1.0 / 3.0, 2.0 / 3.0]);
        assert_row(&star, 3, &[0.25, 1.5, 0.5, 1.0]);

        let theta = s(24.0).pow(0.25).unwrap();
        let t = theta.value();
        let star = a
            .add(&b)
            .unwrap()
            .scale(theta.inv().unwrap())
            .kleene_star(1e-9)
            .unwrap();
        assert_row(&star, 0, &[1.0, 2.0 * t, 4.0 / t, 2.0 * t * t / 3.0]);
        assert_row(&star, 3, &[t * t / 16.0, 3.0 / t, t / 4.0, 1.0]);

        assert_eq!(
            Matrix::zeros(3, 3).kleene_star(1e-9).unwrap(),
            Matrix::identity(3)
        );
    }

    #[test]
    fn star_rejects_large_trace() {
        let m = Matrix::from_values(&[[2.0, 0.0], [0.0, 0.5]]).unwrap();
        match m.kleene_star(1e-9) {
            Err(LinalgError::StarUndefined { tr }) => assert!(close(tr, 4.0)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            solve_subfixpoint(&m, 1e-9).unwrap(),
            Subfixpoint::TrivialOnly { .. }
        ));
    }

    #[test]
    fn conjugate_rules() {
        let x = Vector::from_values(&[1.0, 1.0 / 6.0, 0.5, 0.25]).unwrap();
        let c = x.conjugate();
        for (got, want) in c.entries().iter().zip([1.0, 6.0, 2.0, 4.0]) {
            assert!(close(*got, want));
        }
        assert!(c.dot(&x).unwrap().log_distance(Scalar::ONE) < 1e-15);
        let z = Vector::new(vec![Scalar::ZERO, s(2.0)]);
        let zc = z.conjugate();
        assert!(zc[0].is_zero());
        assert!(close(zc[1], 0.5));
    }

    #[test]
    fn solve_upper_cases() {
        let d = Vector::from_values(&[3.0, 0.5, 7.0]).unwrap();
        assert!(
            solve_upper(&Matrix::identity(3), &d)
                .unwrap()
                .max_log_distance(&d)
                < 1e-15
        );
        let one = Matrix::from_values(&[[4.0]]).unwrap();
        let x = solve_upper(&one, &Vector::from_values(&[2.0]).unwrap()).unwrap();
        assert!(close(x[0], 0.5));
        let bad = Matrix::from_values(&[[1.0, 0.0], [1.0, 0.0]]).unwrap();
        assert_eq!(
            solve_upper(&bad, &Vector::ones(2)),
            Err(LinalgError::NotColumnRegular { col: 1 })
        );
        let dz = Vector::new(vec![Scalar::ONE, Scalar::ZERO]);
        assert_eq!(
            solve_upper(&Matrix::identity(2), &dz),
            Err(LinalgError::NotRegular { index: 1 })
        );
    }

    fn matrix_strategy(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(
            prop_oneof![4 => (-3.0f64..3.0).prop_map(Some), 1 => Just(None)],
            n * n,
        )
        .prop_map(move |v| {
            Matrix::new(
                n,
                n,
                v.into_iter()
                    .map(|e| e.map_or(Scalar::ZERO, |l| Scalar::from_log(l).unwrap()))
                    .collect(),
            )
            .unwrap()
        })
    }

    fn pair(max_n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
        (1..=max_n).prop_flat_map(|n| (matrix_strategy(n), matrix_strategy(n)))
    }

    proptest! {
        #[test]
        fn trace_identities((a, b) in pair(5), x in -3.0f64..3.0) {
            let x = Scalar::from_log(x).unwrap();
            prop_assert_eq!(a.add(&b).unwrap().trace().unwrap(), a.trace().unwrap().add(b.trace().unwrap()));
            let ab = a.mul(&b).unwrap().trace().unwrap();
            let ba = b.mul(&a).unwrap().trace().unwrap();
            prop_assert!(ab.log_distance(ba) < 1e-12);
            prop_assert!(a.scale(x).trace().unwrap().log_distance(x.mul(a.trace().unwrap())) < 1e-12);
        }

        #[test]
        fn radius_is_homogeneous((a, _) in pair(5), x in -3.0f64..3.0) {
            let x = Scalar::from_log(x).unwrap();
            let lhs = a.scale(x).spectral_radius().unwrap();
            let rhs = x.mul(a.spectral_radius().unwrap());
            prop_assert!(lhs.log_distance(rhs) < 1e-12);
        }

        #[test]
        fn star_is_fixpoint((a, _) in pair(5)) {
            // rescale so that the star exists
            let lambda = a.spectral_radius().unwrap();
            let a = match lambda.inv() {
                Ok(l) => a.scale(l),
                Err(_) => a,
            };
            let star = a.kleene_star(1e-9).unwrap();
            let rhs = Matrix::identity(a.rows()).add(&a.mul(&star).unwrap()).unwrap();
            prop_assert!(star.max_log_distance(&rhs) < 1e-9);
        }

        #[test]
        fn upper_solution_is_greatest(
            (a, _) in pair(4),
            d in proptest::collection::vec(-3.0f64..3.0, 4),
        ) {
            prop_assume!(a.is_column_regular());
            let d = Vector::from_logs(&d[..a.rows()]).unwrap();
            let x = solve_upper(&a, &d).unwrap();
            prop_assert!(a.mul_vec(&x).unwrap().le_tol(&d, 1e-12));
            for j in 0..x.dim() {
                let mut bumped = x.entries().to_vec();
                bumped[j] = bumped[j].mul(Scalar::from_log(1e-6).unwrap());
                let ax = a.mul_vec(&Vector::new(bumped)).unwrap();
                prop_assert!(!ax.le_tol(&d, 0.0));
            }
        }

        #[test]
        fn generator_columns_solve_subfixpoint(
            (a, _) in pair(5),
            u in proptest::collection::vec(-3.0f64..3.0, 5),
        ) {
            if let Subfixpoint::Generator(g) = solve_subfixpoint(&a, 1e-9).unwrap() {
                let x = g.mul_vec(&Vector::from_logs(&u[..a.rows()]).unwrap()).unwrap();
                prop_assert!(a.mul_vec(&x).unwrap().le_tol(&x, 1e-9));
            } else {
                prop_assert!(!a.tr_big().unwrap().le_tol(Scalar::ONE, 1e-9));
            }
        }
    }
}
