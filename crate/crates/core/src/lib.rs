//! Correlation-based geometry on standardized sample vectors.
//!
//! Centering and reducing a non-constant vector in R^D places it on the
//! hypersphere of radius sqrt(D), where Pearson correlation becomes a scaled
//! scalar product. This crate builds three layers on that observation:
//!
//! - [`standardize`]: the centered-reduced transform and its guard rails
//!   (constant-vector rejection, sign canonicalization).
//! - [`metric`]: the correlation distance `d = sqrt(1 - corr^2)`, single
//!   pairs or full pairwise matrices.
//! - [`barycenter`]: the constrained center of mass of a point set, obtained
//!   as the dominant eigenvector of the scatter matrix via cyclic Jacobi
//!   rotations.
//! - [`clustering`]: Lloyd-style k-means whose centroid update is that
//!   center of mass.
//!
//! ```
//! use corrsphere::{center_of_mass, standardize, SamplePoint};
//!
//! let points = vec![
//!     standardize(&SamplePoint::new(vec![1.0, 2.0, 3.0])?)?,
//!     standardize(&SamplePoint::new(vec![1.0, 3.0, 2.0])?)?,
//! ];
//! let bary = center_of_mass(&points)?;
//! assert!((bary.eigenvalue - 0.75).abs() < 1e-12);
//! assert!((bary.objective - 0.25).abs() < 1e-12);
//! # Ok::<(), corrsphere::Error>(())
//! ```

pub mod barycenter;
pub mod clustering;
pub mod error;
pub mod metric;
pub mod rng;
pub mod standardize;

pub use barycenter::{
    center_of_mass, eigen_symmetric, objective, Barycenter, EigenDecomposition, ScatterMatrix,
};
pub use clustering::{assign, fit, init_centers, ClusterModel, ClusteringConfig, InitMethod};
pub use error::{Error, Result};
pub use metric::{angle, correlation, distance, distance_matrix, DistanceMatrix};
pub use standardize::{
    standardize, standardize_with, SamplePoint, StandardizedPoint, DEFAULT_EPS_DIAG,
};
