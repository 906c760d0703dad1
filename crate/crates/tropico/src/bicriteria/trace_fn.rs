use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{BicriteriaError, RkmTable};
use crate::semifield::Scalar;

/// Positive rational `num/den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u32,
    den: u32,
}

impl Exponent {
    pub fn new(num: u32, den: u32) -> Self {
        assert!(num > 0 && den > 0, "exponent must be positive");
        let g = gcd(num, den);
        Exponent {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One term `coef ⊗ t^(−exponent)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coef: Scalar,
    pub exponent: Exponent,
}

impl Term {
    pub fn eval(&self, t: Scalar) -> Scalar {
        // t is nonzero here
        Scalar::from_log(self.coef.log() - self.exponent.value() * t.log()).expect("finite")
    }
}

/// A term active on the interval `[lo, hi]` of `log t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub term: Term,
    pub lo: f64,
    pub hi: f64,
}

/// `F(t) = ⊕ coef ⊗ t^(−exponent)` over finitely many terms.
///
/// In log coordinates this is the upper envelope of lines with negative
/// slopes; the envelope is built once and evaluated by binary search.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceFunction {
    terms: Vec<Term>,
    hull: Vec<Term>,
    // breaks[i] separates hull[i] and hull[i + 1]
    breaks: Vec<f64>,
}

impl TraceFunction {
    /// Deduplicates by exponent (keeping the largest coefficient), drops zero
    /// coefficients and builds the envelope.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut by_exp: BTreeMap<Exponent, Scalar> = BTreeMap::new();
        for t in terms {
            if t.coef.is_zero() {
                continue;
            }
            let slot = by_exp.entry(t.exponent).or_insert(Scalar::ZERO);
            *slot = slot.add(t.coef);
        }
        // steepest descent first: slopes -e sorted ascending
        let terms: Vec<Term> = by_exp
            .into_iter()
            .rev()
            .map(|(exponent, coef)| Term { coef, exponent })
            .collect();
        let (hull, breaks) = upper_envelope(&terms);
        TraceFunction {
            terms,
            hull,
            breaks,
        }
    }

    /// `G(s) = ⊕ tr^{1/m}(R_km) s^{−k/m}`.
    pub fn g_from_table(table: &RkmTable) -> Self {
        Self::from_terms(table.mixed_traces().into_iter().map(|(k, m, tr)| Term {
            coef: tr.pow(1.0 / m as f64).expect("positive exponent"),
            exponent: Exponent::new(k as u32, m as u32),
        }))
    }

    /// `H(t) = ⊕ tr^{1/k}(R_km) t^{−m/k}`.
    pub fn h_from_table(table: &RkmTable) -> Self {
        Self::from_terms(table.mixed_traces().into_iter().map(|(k, m, tr)| Term {
            coef: tr.pow(1.0 / k as f64).expect("positive exponent"),
            exponent: Exponent::new(m as u32, k as u32),
        }))
    }

    /// Terms after deduplication, ordered by decreasing exponent.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms that appear on the envelope, ordered by decreasing exponent.
    pub fn envelope(&self) -> &[Term] {
        &self.hull
    }

    /// Breakpoints of the envelope in `log t`.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks
    }

    /// Envelope pieces clipped to `[lo, hi]` in `log t`. Pieces shorter than
    /// `min_len` are dropped unless nothing else would remain.
    pub fn pieces_on(&self, lo: f64, hi: f64, min_len: f64) -> Vec<Piece> {
        let mut out = Vec::new();
        for (i, term) in self.hull.iter().enumerate() {
            let from = if i == 0 {
                f64::NEG_INFINITY
            } else {
                self.breaks[i - 1]
            };
            let to = self.breaks.get(i).copied().unwrap_or(f64::INFINITY);
            let (a, b) = (from.max(lo), to.min(hi));
            if b - a > min_len {
                out.push(Piece {
                    term: *term,
                    lo: a,
                    hi: b,
                });
            }
        }
        if out.is_empty() && !self.hull.is_empty() {
            let term = self.hull[self.piece_index(lo)];
            out.push(Piece { term, lo, hi });
        }
        // stitch neighbours so the clipped pieces tile [lo, hi]
        if let Some(first) = out.first_mut() {
            first.lo = lo;
        }
        if let Some(last) = out.last_mut() {
            last.hi = hi;
        }
        for i in 1..out.len() {
            out[i].lo = out[i - 1].hi;
        }
        out
    }

    fn piece_index(&self, x: f64) -> usize {
        self.breaks.partition_point(|&b| b < x)
    }

    /// `F(t)`; `𝟘` when the function has no terms.
    pub fn eval(&self, t: Scalar) -> Result<Scalar, BicriteriaError> {
        if t.is_zero() {
            return Err(BicriteriaError::ZeroArgument);
        }
        if self.hull.is_empty() {
            return Ok(Scalar::ZERO);
        }
        Ok(self.hull[self.piece_index(t.log())].eval(t))
    }
}

impl fmt::Display for TraceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "𝟘");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{:.6}·t^-{}", t.coef.value(), t.exponent))
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn intersect(l: &Term, r: &Term) -> f64 {
    // l.coef - l.e x = r.coef - r.e x
    (l.coef.log() - r.coef.log()) / (l.exponent.value() - r.exponent.value())
}

/// Convex-hull pass over lines sorted by increasing slope.
fn upper_envelope(lines: &[Term]) -> (Vec<Term>, Vec<f64>) {
    let mut hull: Vec<Term> = Vec::with_capacity(lines.len());
    for line in lines {
        while hull.len() >= 2 {
            let l1 = &hull[hull.len() - 2];
            let l2 = &hull[hull.len() - 1];
            let x12 = intersect(l1, l2);
            let x13 = intersect(l1, line);
            // the middle line is dominated, or touches only at a point
            if x13 <= x12 + 1e-12 * (1.0 + x12.abs()) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(*line);
    }
    let breaks = hull.windows(2).map(|w| intersect(&w[0], &w[1])).collect();
    (hull, breaks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use proptest::prelude::*;

    fn s(v: f64) -> Scalar {
        Scalar::new(v)
    }

    fn naive(f: &TraceFunction, t: Scalar) -> Scalar {
        Scalar::sum(f.terms().iter().map(|term| term.eval(t)))
    }

    #[test]
    fn exponent_reduction_and_order() {
        assert_eq!(Exponent::new(2, 4), Exponent::new(1, 2));
        assert!(Exponent::new(1, 3) < Exponent::new(1, 2));
        assert_eq!(Exponent::new(3, 1).to_string(), "3");
        assert_eq!(Exponent::new(1, 3).to_string(), "1/3");
    }

    #[test]
    fn four_alternative_h_reduces_to_five_terms() {
        let (a, b) = samples::four_alternatives();
        let table = RkmTable::build(&a, &b).unwrap();
        let h = TraceFunction::h_from_table(&table);
        let want = [
            (24.0, Exponent::new(3, 1)),
            (8.0, Exponent::new(2, 1)),
            (24f64.sqrt(), Exponent::new(1, 1)),
            (8f64.sqrt(), Exponent::new(1, 2)),
            (24f64.cbrt(), Exponent::new(1, 3)),
        ];
        assert_eq!(h.terms().len(), want.len());
        for (term, (coef, e)) in h.terms().iter().zip(want) {
            assert_eq!(term.exponent, e);
            assert!(term.coef.log_distance(s(coef)) < 1e-12);
        }
        let g = TraceFunction::g_from_table(&table);
        assert_eq!(g.terms().len(), 5);
        assert!(g.eval(s(2.0)).unwrap().log_distance(s(3.0)) < 1e-12);
        assert!(h.eval(s(3.0)).unwrap().log_distance(s(2.0)) < 1e-12);
        assert!(h.eval(s(2.0)).unwrap().log_distance(s(3.0)) < 1e-12);
        let theta = s(24.0).pow(0.25).unwrap();
        assert!(h.eval(theta).unwrap().log_distance(theta) < 1e-12);
    }

    #[test]
    fn concurrent_lines_leave_no_sliver() {
        // 24t⁻³, 24^{1/2}t⁻¹ and 24^{1/3}t^{-1/3} meet in one point
        let f = TraceFunction::from_terms([
            Term {
                coef: s(24.0),
                exponent: Exponent::new(3, 1),
            },
            Term {
                coef: s(24f64.sqrt()),
                exponent: Exponent::new(1, 1),
            },
            Term {
                coef: s(24f64.cbrt()),
                exponent: Exponent::new(1, 3),
            },
        ]);
        assert_eq!(f.envelope().len(), 2);
        assert!((f.breakpoints()[0] - 24f64.ln() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn single_term_and_zero_argument() {
        let c = s(5.0);
        let f = TraceFunction::from_terms([Term {
            coef: c,
            exponent: Exponent::new(1, 1),
        }]);
        assert!(f.eval(c).unwrap().log_distance(Scalar::ONE) < 1e-15);
        assert_eq!(f.eval(Scalar::ZERO), Err(BicriteriaError::ZeroArgument));
        let empty = TraceFunction::from_terms([]);
        assert_eq!(empty.eval(c).unwrap(), Scalar::ZERO);
    }

    #[test]
    fn two_by_two_g_is_trace_over_s() {
        let a = Matrix::from_values(&[[1.0, 3.0], [0.5, 2.0]]).unwrap();
        let b = Matrix::from_values(&[[0.7, 1.1], [4.0, 1.0]]).unwrap();
        let table = RkmTable::build(&a, &b).unwrap();
        let g = TraceFunction::g_from_table(&table);
        let tr = b.mul(&a).unwrap().trace().unwrap();
        for sv in [0.3, 1.0, 7.5] {
            let want = tr.mul(s(sv).inv().unwrap());
            assert!(g.eval(s(sv)).unwrap().log_distance(want) < 1e-12);
        }
    }

    use crate::linalg::Matrix;

    proptest! {
        #[test]
        fn envelope_matches_naive_max(
            raw in proptest::collection::vec((-5.0f64..5.0, 1u32..6, 1u32..6), 1..12),
            x in -8.0f64..8.0,
        ) {
            let f = TraceFunction::from_terms(raw.iter().map(|&(c, num, den)| Term {
                coef: Scalar::from_log(c).unwrap(),
                exponent: Exponent::new(num, den),
            }));
            let t = Scalar::from_log(x).unwrap();
            prop_assert!(f.eval(t).unwrap().log_distance(naive(&f, t)) < 1e-10);
        }
    }
}
