use crate::linalg::{Matrix, Vector};

/// Keeps one column per collinearity class, each scaled so that its largest
/// entry is `𝟙`. Columns `u`, `v` are collinear when they share the zero
/// pattern and `max_i |log uᵢ − log vᵢ − s| ≤ tol`, `s` being the median
/// log-ratio. Zero columns are dropped. The first column of each class wins.
pub fn reduce_collinear(g: &Matrix, tol: f64) -> Matrix {
    let mut reps: Vec<Vector> = Vec::new();
    for col in g.columns() {
        if col.max_entry().is_zero() {
            continue;
        }
        let col = col.normalized_max();
        if !reps.iter().any(|r| collinear(r, &col, tol)) {
            reps.push(col);
        }
    }
    Matrix::from_columns(&reps).expect("columns share the row count")
}

pub(crate) fn collinear(u: &Vector, v: &Vector, tol: f64) -> bool {
    if u.dim() != v.dim() {
        return false;
    }
    let mut ratios = Vec::with_capacity(u.dim());
    for (a, b) in u.entries().iter().zip(v.entries()) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => {}
            (false, false) => ratios.push(a.log() - b.log()),
            _ => return false,
        }
    }
    if ratios.is_empty() {
        return true;
    }
    let mut sorted = ratios.clone();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 0 {
        0.5 * (sorted[mid - 1] + sorted[mid])
    } else {
        sorted[mid]
    };
    ratios.iter().all(|r| (r - median).abs() <= tol)
}
