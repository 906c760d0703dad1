/// Log-domain tolerances shared by the approximate comparisons of the crate.
///
/// Exact algebra never consults these; they only decide boundary cases such as
/// `Tr(A) ≤ 𝟙` at a frontier endpoint or whether two columns are collinear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Slack for `≤` and equality tests on scalars.
    pub log: f64,
    /// Maximum spread of log-ratios for two columns to count as collinear.
    pub collinear: f64,
    /// Relative score difference below which alternatives are tied.
    pub tie: f64,
    /// Relative tolerance of the reciprocity check on comparison matrices.
    pub reciprocity: f64,
}

impl Tolerance {
    pub const DEFAULT_LOG: f64 = 1e-9;

    /// Default tolerances with the scalar slack replaced.
    pub fn with_log(log: f64) -> Self {
        Tolerance {
            log,
            ..Self::default()
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            log: Self::DEFAULT_LOG,
            collinear: 1e-7,
            tie: 1e-6,
            reciprocity: 1e-9,
        }
    }
}
