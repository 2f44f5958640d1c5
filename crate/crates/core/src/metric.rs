//! Correlation and the correlation-based distance.
//!
//! For standardized points the Pearson correlation reduces to a scaled
//! scalar product, `corr(x, y) = (x . y) / D`, and the distance is
//! `d(x, y) = sqrt(1 - corr^2)`, which ranges over [0, 1]. The distance is
//! a pseudometric: it is zero exactly when the points are affinely related
//! componentwise, so antipodal points are at distance zero.

use crate::error::{Error, Result};
use crate::standardize::StandardizedPoint;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Correlation of two same-dimension standardized points, computed on slices
/// whose dimensions have already been checked.
pub(crate) fn correlation_values(a: &[f64], b: &[f64]) -> f64 {
    (dot(a, b) / a.len() as f64).clamp(-1.0, 1.0)
}

pub(crate) fn distance_values(a: &[f64], b: &[f64]) -> f64 {
    let c = correlation_values(a, b);
    (1.0 - c * c).sqrt()
}

fn check_dims(x: &StandardizedPoint, y: &StandardizedPoint) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(())
}

/// Pearson correlation `(x . y) / D`, clamped to [-1, 1].
///
/// Clamping is needed because roundoff can push the scaled scalar product of
/// near-collinear points just past 1, which would make the distance NaN.
pub fn correlation(x: &StandardizedPoint, y: &StandardizedPoint) -> Result<f64> {
    check_dims(x, y)?;
    Ok(correlation_values(x.values(), y.values()))
}

/// Correlation distance `sqrt(1 - corr(x, y)^2)`, in [0, 1].
pub fn distance(x: &StandardizedPoint, y: &StandardizedPoint) -> Result<f64> {
    check_dims(x, y)?;
    Ok(distance_values(x.values(), y.values()))
}

/// Angle between the standardized vectors, in [0, pi]. The distance equals
/// the sine of this angle.
pub fn angle(x: &StandardizedPoint, y: &StandardizedPoint) -> Result<f64> {
    check_dims(x, y)?;
    Ok(correlation_values(x.values(), y.values()).acos())
}

/// Dense symmetric matrix of pairwise correlation distances.
///
/// Each unordered pair is computed once and mirrored, so symmetry is exact
/// and the diagonal is exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    /// Number of points (the matrix is `n x n`).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n);
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        assert!(i < self.n);
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row-major entries, length `n * n`.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }
}

/// Pairwise distance matrix over a non-empty point set of shared dimension.
pub fn distance_matrix(points: &[StandardizedPoint]) -> Result<DistanceMatrix> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance_values(points[i].values(), points[j].values());
            entries[i * n + j] = d;
            entries[j * n + i] = d;
        }
    }
    Ok(DistanceMatrix { n, entries })
}
