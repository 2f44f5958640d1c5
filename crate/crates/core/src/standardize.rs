//! Centering and reduction of raw sample vectors.
//!
//! A raw vector in R^D (off the diagonal line of constant vectors) is mapped
//! to its centered-reduced representative `(x - mean) / stddev`, which lies
//! on the hypersphere of radius sqrt(D): component mean 0, component squares
//! summing to D. Constant vectors have no representative and are rejected.

use crate::error::{Error, Result};

/// Default relative tolerance for deciding that a vector is constant.
///
/// The exactly-constant case is a line of measure zero; a numerical
/// neighborhood is needed because standardizing a nearly constant vector
/// amplifies noise catastrophically.
pub const DEFAULT_EPS_DIAG: f64 = 1e-12;

/// Components with absolute value at or below this cutoff are ignored when
/// picking the leading sign during canonicalization.
pub const SIGN_CUTOFF: f64 = 1e-12;

const MEAN_TOL: f64 = 1e-10;
const NORM_REL_TOL: f64 = 1e-10;

/// A raw sample vector in R^D, D >= 2, all components finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint {
    values: Vec<f64>,
}

impl SamplePoint {
    /// Validates dimension and finiteness; NaN and infinities are rejected
    /// here so the numeric kernels never see them.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::DimensionTooSmall { dim: values.len() });
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteComponent { index });
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Component average.
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.dim() as f64
    }

    /// Population standard deviation of the components (divides by D, not
    /// D - 1). Zero for constant vectors.
    pub fn stddev(&self) -> f64 {
        let mean = self.mean();
        let ssq: f64 = self.values.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ssq / self.dim() as f64).sqrt()
    }

    /// Whether the point is within `eps` (relative to `max(1, ||p||)`) of
    /// the diagonal line of constant vectors.
    pub fn is_diagonal(&self, eps: f64) -> bool {
        let mean = self.mean();
        let dev_norm = self
            .values
            .iter()
            .map(|v| (v - mean) * (v - mean))
            .sum::<f64>()
            .sqrt();
        let norm = self.values.iter().map(|v| v * v).sum::<f64>().sqrt();
        dev_norm <= eps * norm.max(1.0)
    }
}

/// A vector on the radius-sqrt(D) hypersphere: component sum ~ 0 and squared
/// norm ~ D, both within the tolerances enforced by [`StandardizedPoint::new`].
#[derive(Debug, Clone, PartialEq)]
pub struct StandardizedPoint {
    values: Vec<f64>,
}

impl StandardizedPoint {
    /// Validates the hypersphere invariants: |sum| <= 1e-10 * D and
    /// |sum of squares - D| <= 1e-10 * D.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::DimensionTooSmall { dim: values.len() });
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteComponent { index });
            }
        }
        let d = values.len() as f64;
        let sum: f64 = values.iter().sum();
        let ssq: f64 = values.iter().map(|v| v * v).sum();
        if sum.abs() > MEAN_TOL * d || (ssq - d).abs() > NORM_REL_TOL * d {
            return Err(Error::NotStandardized);
        }
        Ok(Self { values })
    }

    /// Construction path for values already known to satisfy the invariants
    /// (outputs of [`standardize`] and of the barycenter solver).
    pub(crate) fn new_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(values.len() >= 2);
        debug_assert!({
            let d = values.len() as f64;
            let sum: f64 = values.iter().sum();
            let ssq: f64 = values.iter().map(|v| v * v).sum();
            sum.abs() <= MEAN_TOL * d && (ssq - d).abs() <= NORM_REL_TOL * d
        });
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// The antipodal representative. Standardization identifies `q` with
    /// `-q`: they are at correlation distance zero from each other.
    pub fn negated(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Deterministic representative of the pair `{q, -q}`: the first
    /// component with absolute value above [`SIGN_CUTOFF`] is made positive.
    /// Idempotent.
    pub fn canonicalize(&self) -> Self {
        match leading_sign(&self.values) {
            s if s < 0.0 => self.negated(),
            _ => self.clone(),
        }
    }
}

/// Sign of the first component whose absolute value exceeds the cutoff;
/// 1.0 when every component is below it.
pub(crate) fn leading_sign(values: &[f64]) -> f64 {
    for &v in values {
        if v.abs() > SIGN_CUTOFF {
            return if v < 0.0 { -1.0 } else { 1.0 };
        }
    }
    1.0
}

/// Centers and reduces a sample point with the default diagonal tolerance.
pub fn standardize(p: &SamplePoint) -> Result<StandardizedPoint> {
    standardize_with(p, DEFAULT_EPS_DIAG)
}

/// Centers and reduces a sample point, rejecting points within `eps_diag`
/// of the constant-vector line.
pub fn standardize_with(p: &SamplePoint, eps_diag: f64) -> Result<StandardizedPoint> {
    if p.is_diagonal(eps_diag) {
        return Err(Error::DegenerateInput);
    }
    let mean = p.mean();
    let deviations: Vec<f64> = p.values().iter().map(|v| v - mean).collect();
    let ssq: f64 = deviations.iter().map(|v| v * v).sum();
    let stddev = (ssq / p.dim() as f64).sqrt();
    Ok(StandardizedPoint::new_unchecked(
        deviations.into_iter().map(|v| v / stddev).collect(),
    ))
}
