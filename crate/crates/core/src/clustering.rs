//! Lloyd-style k-means under the correlation distance.
//!
//! The update step replaces each cluster's centroid with its sphere center
//! of mass, so both halves of the iteration — nearest-center assignment and
//! centroid recomputation — can only lower the mean squared distance.
//! Because the distance identifies antipodal points, each cluster gathers a
//! correlation pattern together with its sign-flipped images.

use crate::barycenter::center_of_mass;
use crate::error::{Error, Result};
use crate::metric::distance_values;
use crate::rng::SplitMix64;
use crate::standardize::StandardizedPoint;

/// Center initialization strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitMethod {
    /// The first center is the input point nearest the global center of
    /// mass; each next center is the input point farthest (in min-distance)
    /// from those already chosen. Deterministic, no randomness.
    FarthestPoint,
    /// `k` distinct input points drawn from the seeded generator.
    RandomDistinct,
}

/// Parameters for [`fit`]. Defaults: 100 iterations, tolerance 1e-8, seed 0,
/// farthest-point initialization.
#[derive(Debug, Clone)]
pub struct ClusteringConfig {
    pub k: usize,
    pub max_iters: usize,
    pub tol: f64,
    pub seed: u64,
    pub init: InitMethod,
}

impl ClusteringConfig {
    /// Panics if `k` is zero.
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "cluster count must be at least 1");
        Self {
            k,
            max_iters: 100,
            tol: 1e-8,
            seed: 0,
            init: InitMethod::FarthestPoint,
        }
    }

    /// Panics if `max_iters` is zero.
    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        assert!(max_iters >= 1, "iteration budget must be at least 1");
        self.max_iters = max_iters;
        self
    }

    /// Panics if `tol` is negative or non-finite.
    pub fn with_tol(mut self, tol: f64) -> Self {
        assert!(tol >= 0.0 && tol.is_finite(), "tolerance must be >= 0");
        self.tol = tol;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_init(mut self, init: InitMethod) -> Self {
        self.init = init;
        self
    }
}

/// Fitted clustering: `centers[c]` is the center of mass of cluster `c`,
/// `assignments[j]` the cluster of point `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterModel {
    pub centers: Vec<StandardizedPoint>,
    pub assignments: Vec<usize>,
    /// Mean squared distance of each point to its assigned center; in [0, 1].
    pub inertia: f64,
    pub iterations_run: usize,
    /// True when the loop stopped before exhausting `max_iters`.
    pub converged: bool,
}

fn check_shared_dim(points: &[StandardizedPoint]) -> Result<usize> {
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(dim)
}

/// Picks `cfg.k` input points as starting centers. Deterministic given the
/// seed and input order.
pub fn init_centers(
    points: &[StandardizedPoint],
    cfg: &ClusteringConfig,
) -> Result<Vec<StandardizedPoint>> {
    let n = points.len();
    if cfg.k > n {
        return Err(Error::TooFewPoints { k: cfg.k, n });
    }
    check_shared_dim(points)?;

    let chosen = match cfg.init {
        InitMethod::FarthestPoint => {
            let global = center_of_mass(points)?;
            let mut best = 0;
            let mut best_dist = f64::INFINITY;
            for (j, p) in points.iter().enumerate() {
                let d = distance_values(global.point.values(), p.values());
                if d < best_dist {
                    best_dist = d;
                    best = j;
                }
            }
            let mut chosen = vec![best];
            while chosen.len() < cfg.k {
                let mut next = None;
                let mut next_dist = -1.0;
                for j in 0..n {
                    if chosen.contains(&j) {
                        continue;
                    }
                    let min_dist = chosen
                        .iter()
                        .map(|&c| distance_values(points[c].values(), points[j].values()))
                        .fold(f64::INFINITY, f64::min);
                    if min_dist > next_dist {
                        next_dist = min_dist;
                        next = Some(j);
                    }
                }
                chosen.push(next.expect("k <= n leaves an unchosen point"));
            }
            chosen
        }
        InitMethod::RandomDistinct => {
            let mut rng = SplitMix64::new(cfg.seed);
            let mut chosen = Vec::with_capacity(cfg.k);
            while chosen.len() < cfg.k {
                let idx = rng.next_index(n);
                if !chosen.contains(&idx) {
                    chosen.push(idx);
                }
            }
            chosen
        }
    };
    Ok(chosen.into_iter().map(|j| points[j].clone()).collect())
}

/// Nearest-center label for every point, ties to the lowest center index.
pub fn assign(points: &[StandardizedPoint], centers: &[StandardizedPoint]) -> Result<Vec<usize>> {
    if centers.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = centers[0].dim();
    for p in centers.iter().chain(points) {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(points
        .iter()
        .map(|p| {
            let mut best = 0;
            let mut best_dist = distance_values(centers[0].values(), p.values());
            for (c, center) in centers.iter().enumerate().skip(1) {
                let d = distance_values(center.values(), p.values());
                if d < best_dist {
                    best_dist = d;
                    best = c;
                }
            }
            best
        })
        .collect())
}

fn mean_square_to_centers(
    points: &[StandardizedPoint],
    centers: &[StandardizedPoint],
    labels: &[usize],
) -> f64 {
    let sum: f64 = points
        .iter()
        .zip(labels)
        .map(|(p, &l)| {
            let d = distance_values(centers[l].values(), p.values());
            d * d
        })
        .sum();
    sum / points.len() as f64
}

/// Recomputes per-cluster centers of mass. Clusters left empty by the last
/// assignment are repaired first: the point farthest from its current
/// center becomes a singleton cluster, which strictly lowers the objective
/// and keeps k fixed.
fn update_centers(
    points: &[StandardizedPoint],
    labels: &mut [usize],
    prev_centers: &[StandardizedPoint],
    k: usize,
) -> Result<Vec<StandardizedPoint>> {
    let mut counts = vec![0usize; k];
    for &l in labels.iter() {
        counts[l] += 1;
    }
    for c in 0..k {
        if counts[c] > 0 {
            continue;
        }
        let mut farthest = None;
        let mut farthest_dist = -1.0;
        for (j, p) in points.iter().enumerate() {
            // Donor cluster must keep at least one member.
            if counts[labels[j]] < 2 {
                continue;
            }
            let d = distance_values(prev_centers[labels[j]].values(), p.values());
            if d > farthest_dist {
                farthest_dist = d;
                farthest = Some(j);
            }
        }
        let j = farthest.expect("k <= n guarantees a donor cluster");
        counts[labels[j]] -= 1;
        labels[j] = c;
        counts[c] = 1;
    }

    let mut centers = Vec::with_capacity(k);
    for c in 0..k {
        let members: Vec<StandardizedPoint> = points
            .iter()
            .zip(labels.iter())
            .filter(|(_, &l)| l == c)
            .map(|(p, _)| p.clone())
            .collect();
        centers.push(center_of_mass(&members)?.point);
    }
    Ok(centers)
}

/// Runs Lloyd iterations until assignments stabilize, the inertia gain drops
/// below `cfg.tol`, or the iteration budget runs out.
///
/// Assignment stability alone can cycle under exact ties, so the tolerance
/// guard is always active as well.
pub fn fit(points: &[StandardizedPoint], cfg: &ClusteringConfig) -> Result<ClusterModel> {
    let n = points.len();
    if cfg.k > n {
        return Err(Error::TooFewPoints { k: cfg.k, n });
    }
    check_shared_dim(points)?;

    let mut centers = init_centers(points, cfg)?;
    let mut labels = assign(points, &centers)?;
    let mut prev_inertia = mean_square_to_centers(points, &centers, &labels);
    let mut inertia = prev_inertia;
    let mut iterations_run = 0;

    for iter in 1..=cfg.max_iters {
        iterations_run = iter;
        centers = update_centers(points, &mut labels, &centers, cfg.k)?;
        let new_labels = assign(points, &centers)?;
        inertia = mean_square_to_centers(points, &centers, &new_labels);
        let stable = new_labels == labels;
        let small_gain = prev_inertia - inertia < cfg.tol;
        labels = new_labels;
        prev_inertia = inertia;
        if stable || small_gain {
            break;
        }
    }

    let converged = iterations_run < cfg.max_iters;
    Ok(ClusterModel {
        centers,
        assignments: labels,
        inertia,
        iterations_run,
        converged,
    })
}
