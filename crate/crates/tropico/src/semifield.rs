//! Scalars of the idempotent semifield `(max, ×)`.
//!
//! Every scalar is stored as the natural logarithm of its max-times value, so
//! the semifield product is an addition of logs and rational powers are plain
//! multiplications. The tropical zero is represented by `-∞`. Values are only
//! converted back to ordinary positive reals at I/O boundaries.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DomainError {
    #[error("the tropical zero has no inverse")]
    InverseOfZero,
    #[error("the tropical zero cannot be raised to the non-positive power {0}")]
    ZeroToNonPositivePower(f64),
    #[error("max-times values must be finite and non-negative, got {0}")]
    InvalidValue(f64),
    #[error("log-domain values must not be NaN or +inf, got {0}")]
    InvalidLog(f64),
}

/// Element of the idempotent semifield in log-domain storage.
///
/// Ordering, equality and hashing are exact on the stored logarithm.
#[derive(Clone, Copy)]
pub struct Scalar(f64);

// ⊕ and ⊗ are max and +-of-logs, so the std operator traits stay unimplemented
#[allow(clippy::should_implement_trait)]
impl Scalar {
    /// The tropical zero `𝟘` (max-times value 0).
    pub const ZERO: Scalar = Scalar(f64::NEG_INFINITY);
    /// The tropical unit `𝟙` (max-times value 1).
    pub const ONE: Scalar = Scalar(0.0);

    /// Builds a scalar from its logarithm. `-∞` is accepted and yields `𝟘`.
    pub fn from_log(log: f64) -> Result<Self, DomainError> {
        if log.is_nan() || log == f64::INFINITY {
            return Err(DomainError::InvalidLog(log));
        }
        Ok(Scalar(log))
    }

    /// Builds a scalar from an ordinary non-negative real.
    pub fn from_value(value: f64) -> Result<Self, DomainError> {
        if !value.is_finite() || value < 0.0 {
            return Err(DomainError::InvalidValue(value));
        }
        Ok(Scalar(value.ln()))
    }

    /// Constructor for values known to be valid; panics otherwise.
    pub fn new(value: f64) -> Self {
        Self::from_value(value).expect("invalid max-times value")
    }

    pub fn log(self) -> f64 {
        self.0
    }

    /// The max-times value `exp(log)`.
    pub fn value(self) -> f64 {
        self.0.exp()
    }

    pub fn is_zero(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn add(self, other: Scalar) -> Scalar {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    /// `a ⊗ b`; `𝟘` is absorbing.
    pub fn mul(self, other: Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            Scalar::ZERO
        } else {
            Scalar(self.0 + other.0)
        }
    }

    pub fn inv(self) -> Result<Scalar, DomainError> {
        if self.is_zero() {
            Err(DomainError::InverseOfZero)
        } else {
            Ok(Scalar(-self.0))
        }
    }

    /// `a ⊗ b⁻¹`.
    pub fn div(self, other: Scalar) -> Result<Scalar, DomainError> {
        Ok(self.mul(other.inv()?))
    }

    /// Real power `a^q`, exact in the log domain.
    pub fn pow(self, q: f64) -> Result<Scalar, DomainError> {
        if self.is_zero() {
            return if q > 0.0 {
                Ok(Scalar::ZERO)
            } else {
                Err(DomainError::ZeroToNonPositivePower(q))
            };
        }
        if q == 0.0 {
            return Ok(Scalar::ONE);
        }
        Ok(Scalar(self.0 * q))
    }

    /// Rational power `a^(num/den)`.
    pub fn pow_ratio(self, num: i64, den: u64) -> Result<Scalar, DomainError> {
        self.pow(num as f64 / den as f64)
    }

    /// `true` when `self ≤ other ⊗ exp(tol)`, i.e. `≤` up to a log-domain slack.
    pub fn le_tol(self, other: Scalar, tol: f64) -> bool {
        if self.is_zero() {
            return true;
        }
        if other.is_zero() {
            return false;
        }
        self.0 <= other.0 + tol
    }

    /// Absolute log-domain distance; two zeros are at distance 0, a zero and a
    /// nonzero at distance `+∞`.
    pub fn log_distance(self, other: Scalar) -> f64 {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => 0.0,
            (false, false) => (self.0 - other.0).abs(),
            _ => f64::INFINITY,
        }
    }

    /// `⊕` over an iterator; `𝟘` for an empty one.
    pub fn sum<I: IntoIterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.into_iter().fold(Scalar::ZERO, Scalar::add)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is never stored, so total_cmp agrees with the numeric order.
        self.0.total_cmp(&other.0)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "𝟘")
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// Twelve significant digits unless a precision is given.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "𝟘");
        }
        match f.precision() {
            Some(p) => write!(f, "{:.*}", p, self.value()),
            None => {
                let rounded: f64 = format!("{:.11e}", self.value()).parse().expect("float");
                write!(f, "{rounded}")
            }
        }
    }
}
