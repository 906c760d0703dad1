use super::BicriteriaError;
use crate::linalg::{Matrix, OpCounter};
use crate::semifield::Scalar;

/// Sums of mixed products `R_km = ⊕_{i₁+…+i_k=m} B A^{i₁} ⋯ B A^{i_k}`
/// for all `k + m ≤ n`, with `R_0m = Aᵐ` and `R_k0 = Bᵏ`.
#[derive(Debug, Clone)]
pub struct RkmTable {
    n: usize,
    // table[k][m] for m in 0..=n-k
    table: Vec<Vec<Matrix>>,
    ops: OpCounter,
}

impl RkmTable {
    /// Fills the table with at most two products and one sum per entry.
    ///
    /// Words with `k ≥ 2` letters `B` either end in `A` (drop it: `R_{k,m-1}`)
    /// or in `B A⁰` (drop it: `R_{k-1,m}`), so
    /// `R_km = R_{k,m-1} A ⊕ R_{k-1,m} B`. For `k = 1` the only word is `B Aᵐ`.
    pub fn build(a: &Matrix, b: &Matrix) -> Result<Self, BicriteriaError> {
        let n = super::common_dimension(a, b)?;
        let mut ops = OpCounter::default();
        let mut table: Vec<Vec<Matrix>> = Vec::with_capacity(n + 1);

        let mut row0 = Vec::with_capacity(n + 1);
        row0.push(Matrix::identity(n));
        for m in 1..=n {
            let next = row0[m - 1].mul_counted(a, &mut ops)?;
            row0.push(next);
        }
        table.push(row0);

        for k in 1..=n {
            let mut row: Vec<Matrix> = Vec::with_capacity(n - k + 1);
            for m in 0..=(n - k) {
                let entry = if m == 0 {
                    table[k - 1][0].mul_counted(b, &mut ops)?
                } else if k == 1 {
                    b.mul_counted(&table[0][m], &mut ops)?
                } else {
                    let ends_a = row[m - 1].mul_counted(a, &mut ops)?;
                    let ends_b = table[k - 1][m].mul_counted(b, &mut ops)?;
                    ends_a.add_counted(&ends_b, &mut ops)?
                };
                row.push(entry);
            }
            table.push(row);
        }
        Ok(RkmTable { n, table, ops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `R_km`; panics when `k + m > n`.
    pub fn get(&self, k: usize, m: usize) -> &Matrix {
        &self.table[k][m]
    }

    pub fn trace(&self, k: usize, m: usize) -> Scalar {
        self.get(k, m).trace().expect("square")
    }

    /// Scalar operations spent building the table.
    pub fn ops(&self) -> OpCounter {
        self.ops
    }

    /// `Tr(A ⊕ B)` assembled from the table:
    /// `⊕_{k=1..n} tr Aᵏ ⊕ ⊕_{k=1..n} ⊕_{m=0..n-k} tr R_km`.
    pub fn binomial_tr_big(&self) -> Scalar {
        let pure_a = Scalar::sum((1..=self.n).map(|k| self.trace(0, k)));
        let mixed = Scalar::sum(
            (1..=self.n)
                .flat_map(|k| (0..=self.n - k).map(move |m| (k, m)))
                .map(|(k, m)| self.trace(k, m)),
        );
        pure_a.add(mixed)
    }

    /// `(k, m, tr R_km)` for `1 ≤ k ≤ n-1`, `1 ≤ m ≤ n-k`: the coefficients
    /// of the two trace functions.
    pub fn mixed_traces(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.n;
        (1..n)
            .flat_map(|k| (1..=n - k).map(move |m| (k, m)))
            .map(|(k, m)| (k, m, self.trace(k, m)))
            .collect()
    }
}
