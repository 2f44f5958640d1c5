//! Center of mass of standardized points on the radius-sqrt(D) hypersphere.
//!
//! The point minimizing the mean squared correlation distance to a set,
//! subject to lying on the sphere, solves a Lagrange system that reduces to
//! a symmetric eigenproblem: build the scatter matrix
//! `M = (1/(N*D)) * sum_j x_j x_j^T`, take its dominant eigenvector, scale
//! it to norm sqrt(D). The attained objective is `1 - lambda_max`.
//!
//! The eigensolver is a cyclic Jacobi iteration: plane rotations annihilate
//! off-diagonal entries in row-cyclic sweeps until the off-diagonal
//! Frobenius norm drops below tolerance. A full decomposition (rather than
//! power iteration for the top pair) is used because degeneracy detection
//! needs the second eigenvalue and D stays modest.

use crate::error::{Error, Result};
use crate::metric::dot;
use crate::standardize::{leading_sign, StandardizedPoint};

/// Sweep budget for the Jacobi iteration. Convergence is quadratic once
/// rotations get small; symmetric matrices of the sizes used here settle in
/// under ten sweeps.
pub const MAX_SWEEPS: usize = 100;

/// The iteration stops when the off-diagonal Frobenius norm falls below
/// this factor times `max(1, ||M||_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Relative gap under which the top eigenvalue is reported as degenerate.
const DEGENERACY_REL_TOL: f64 = 1e-9;

/// The D x D matrix `m_ik = (1/(N*D)) * sum_j x_jk * x_ji` of a point set.
///
/// For standardized inputs it is symmetric positive semidefinite with unit
/// trace, and the all-ones vector lies in its kernel because every point is
/// centered.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl ScatterMatrix {
    /// Accumulates the scaled outer products of a non-empty point set.
    /// Each unordered index pair is summed once (points in input order) and
    /// mirrored, so symmetry is exact.
    pub fn from_points(points: &[StandardizedPoint]) -> Result<Self> {
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
        let scale = 1.0 / (n as f64 * dim as f64);
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            for k in i..dim {
                let mut acc = 0.0;
                for p in points {
                    let v = p.values();
                    acc += v[i] * v[k];
                }
                let m = acc * scale;
                entries[i * dim + k] = m;
                entries[k * dim + i] = m;
            }
        }
        Ok(Self { dim, entries })
    }

    /// Builds from raw row-major entries, which must be finite and exactly
    /// symmetric. The data-derived invariants (unit trace, positive
    /// semidefiniteness) are not required here: the eigensolver accepts any
    /// symmetric matrix.
    pub fn from_entries(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput);
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        for (index, v) in entries.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteComponent { index });
            }
        }
        for row in 0..dim {
            for col in (row + 1)..dim {
                if entries[row * dim + col] != entries[col * dim + row] {
                    return Err(Error::NotSymmetric { row, col });
                }
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        assert!(i < self.dim && k < self.dim);
        self.entries[i * self.dim + k]
    }

    /// Row-major entries, length `dim * dim`.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Matrix-vector product `M * x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|i| dot(&self.entries[i * self.dim..(i + 1) * self.dim], x))
            .collect()
    }
}

/// Full eigendecomposition of a symmetric matrix: eigenvalues sorted
/// descending, `eigenvectors[k]` the unit eigenvector paired with
/// `eigenvalues[k]`, each with canonical sign (first significant component
/// positive).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
}

fn off_diagonal_norm(a: &[f64], d: usize) -> f64 {
    let mut ssq = 0.0;
    for p in 0..d {
        for q in (p + 1)..d {
            let v = a[p * d + q];
            ssq += v * v;
        }
    }
    (2.0 * ssq).sqrt()
}

/// One row-cyclic sweep of Jacobi rotations over all off-diagonal entries.
fn jacobi_sweep(a: &mut [f64], v: &mut [f64], d: usize) {
    for p in 0..d.saturating_sub(1) {
        for q in (p + 1)..d {
            let apq = a[p * d + q];
            if apq == 0.0 {
                continue;
            }
            let theta = 0.5 * (a[q * d + q] - a[p * d + p]) / apq;
            // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0; for huge
            // theta fall back to the first-order root to avoid overflow in
            // theta^2.
            let t = if theta.abs() > 1e100 {
                0.5 / theta
            } else {
                let r = theta.abs() + (theta * theta + 1.0).sqrt();
                if theta < 0.0 {
                    -1.0 / r
                } else {
                    1.0 / r
                }
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let tau = s / (1.0 + c);

            let h = t * apq;
            a[p * d + p] -= h;
            a[q * d + q] += h;
            a[p * d + q] = 0.0;
            a[q * d + p] = 0.0;
            for j in 0..d {
                if j == p || j == q {
                    continue;
                }
                let ajp = a[j * d + p];
                let ajq = a[j * d + q];
                let njp = ajp - s * (ajq + tau * ajp);
                let njq = ajq + s * (ajp - tau * ajq);
                a[j * d + p] = njp;
                a[p * d + j] = njp;
                a[j * d + q] = njq;
                a[q * d + j] = njq;
            }
            // Accumulate the rotation into the eigenvector columns.
            for j in 0..d {
                let vjp = v[j * d + p];
                let vjq = v[j * d + q];
                v[j * d + p] = vjp - s * (vjq + tau * vjp);
                v[j * d + q] = vjq + s * (vjp - tau * vjq);
            }
        }
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Fails with [`Error::ConvergenceFailure`] if the off-diagonal norm is not
/// below `OFF_DIAGONAL_TOL * max(1, ||M||_F)` within [`MAX_SWEEPS`] sweeps.
pub fn eigen_symmetric(m: &ScatterMatrix) -> Result<EigenDecomposition> {
    let d = m.dim;
    let mut a = m.entries.clone();
    let mut v = vec![0.0; d * d];
    for i in 0..d {
        v[i * d + i] = 1.0;
    }
    let tol = OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    while off_diagonal_norm(&a, d) > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps });
        }
        jacobi_sweep(&mut a, &mut v, d);
        sweeps += 1;
    }

    // Stable sort keeps the sweep-order column first among equal
    // eigenvalues, which pins the representative under degeneracy.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a[j * d + j].total_cmp(&a[i * d + i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * d + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| {
            let mut vec: Vec<f64> = (0..d).map(|row| v[row * d + col]).collect();
            if leading_sign(&vec) < 0.0 {
                for x in &mut vec {
                    *x = -*x;
                }
            }
            vec
        })
        .collect();

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Center-of-mass result: the sphere point minimizing the mean squared
/// correlation distance to the input set.
#[derive(Debug, Clone, PartialEq)]
pub struct Barycenter {
    /// The minimizer, scaled to norm sqrt(D) and sign-canonicalized.
    pub point: StandardizedPoint,
    /// Top eigenvalue of the scatter matrix; lies in [1/D, 1].
    pub eigenvalue: f64,
    /// Attained objective, equal to `1 - eigenvalue` up to roundoff.
    pub objective: f64,
    /// Set when the top eigenvalue is (numerically) multiple: the minimizer
    /// set is then a whole sub-sphere and `point` is one deterministic
    /// representative of it.
    pub degenerate: bool,
}

/// Mean squared correlation distance from `g` to the point set:
/// `1 - (1/(N*D^2)) * sum_j (g . x_j)^2`.
pub fn objective(g: &StandardizedPoint, points: &[StandardizedPoint]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = g.dim();
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
    }
    let mut sum = 0.0;
    for p in points {
        let gp = dot(g.values(), p.values());
        sum += gp * gp;
    }
    Ok(1.0 - sum / (points.len() as f64 * (d * d) as f64))
}

/// Center of mass of a non-empty set of standardized points.
///
/// Builds the scatter matrix, decomposes it, and returns the dominant
/// eigenvector scaled back onto the sphere. Ties at the top eigenvalue are
/// reported through the `degenerate` flag rather than resolved.
pub fn center_of_mass(points: &[StandardizedPoint]) -> Result<Barycenter> {
    let m = ScatterMatrix::from_points(points)?;
    let eig = eigen_symmetric(&m)?;
    let d = m.dim();
    let lambda = eig.eigenvalues[0];
    let sqrt_d = (d as f64).sqrt();
    let values: Vec<f64> = eig.eigenvectors[0].iter().map(|&c| sqrt_d * c).collect();
    let point = StandardizedPoint::new_unchecked(values).canonicalize();
    let objective = objective(&point, points)?;
    let degenerate = eig.eigenvalues[1] >= lambda * (1.0 - DEGENERACY_REL_TOL);
    Ok(Barycenter {
        point,
        eigenvalue: lambda,
        objective,
        degenerate,
    })
}
