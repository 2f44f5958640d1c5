//! Property tests for the scatter matrix, the Jacobi eigendecomposition
//! contract, and the optimality of the sphere center of mass.

use corrsphere::{
    center_of_mass, distance, eigen_symmetric, objective, standardize, SamplePoint, ScatterMatrix,
    StandardizedPoint,
};
use proptest::prelude::*;

fn sphere_point(d: usize) -> impl Strategy<Value = StandardizedPoint> {
    prop::collection::vec(-100.0..100.0f64, d)
        .prop_map(|values| SamplePoint::new(values).unwrap())
        .prop_filter("diagonal points are excluded", |p| !p.is_diagonal(1e-9))
        .prop_map(|p| standardize(&p).unwrap())
}

fn point_set() -> impl Strategy<Value = Vec<StandardizedPoint>> {
    (2usize..=10, 1usize..=15)
        .prop_flat_map(|(d, n)| prop::collection::vec(sphere_point(d), n))
}

fn frobenius(entries: &[f64]) -> f64 {
    entries.iter().map(|v| v * v).sum::<f64>().sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scatter_matrix_invariants(points in point_set()) {
        let m = ScatterMatrix::from_points(&points).unwrap();
        let d = m.dim();
        for i in 0..d {
            for k in 0..d {
                prop_assert_eq!(m.get(i, k), m.get(k, i));
            }
        }
        prop_assert!((m.trace() - 1.0).abs() <= 1e-12 * d as f64);
        let m_ones = m.apply(&vec![1.0; d]);
        prop_assert!(frobenius(&m_ones) <= 1e-10, "||M*1|| = {}", frobenius(&m_ones));

        let eig = eigen_symmetric(&m).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-10, "eigenvalue sum {sum}");
        for lambda in &eig.eigenvalues {
            prop_assert!(*lambda >= -1e-10, "negative eigenvalue {lambda}");
        }
        prop_assert!(eig.eigenvalues[0] >= 1.0 / d as f64 - 1e-12);
    }

    #[test]
    fn eigendecomposition_contract(points in point_set()) {
        let m = ScatterMatrix::from_points(&points).unwrap();
        let d = m.dim();
        let eig = eigen_symmetric(&m).unwrap();

        // Residual ||M v - lambda v|| per pair.
        for (vec, lambda) in eig.eigenvectors.iter().zip(&eig.eigenvalues) {
            let mv = m.apply(vec);
            let res: f64 = mv
                .iter()
                .zip(vec)
                .map(|(mvi, vi)| (mvi - lambda * vi) * (mvi - lambda * vi))
                .sum::<f64>()
                .sqrt();
            prop_assert!(res <= 1e-10, "residual {res} at lambda {lambda}");
        }

        // Pairwise orthonormality.
        for i in 0..d {
            for j in i..d {
                let dot: f64 = eig.eigenvectors[i]
                    .iter()
                    .zip(&eig.eigenvectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() <= 1e-10, "v{i} . v{j} = {dot}");
            }
        }

        // Reconstruction M = sum_k lambda_k v_k v_k^T.
        let mut recon = vec![0.0; d * d];
        for (vec, lambda) in eig.eigenvectors.iter().zip(&eig.eigenvalues) {
            for i in 0..d {
                for j in 0..d {
                    recon[i * d + j] += lambda * vec[i] * vec[j];
                }
            }
        }
        let diff: Vec<f64> = recon
            .iter()
            .zip(m.entries())
            .map(|(a, b)| a - b)
            .collect();
        let bound = 1e-10 * frobenius(m.entries()).max(1.0);
        prop_assert!(frobenius(&diff) <= bound, "reconstruction error {}", frobenius(&diff));
    }

    #[test]
    fn barycenter_satisfies_the_lagrange_system(points in point_set()) {
        let m = ScatterMatrix::from_points(&points).unwrap();
        let d = m.dim();
        let b = center_of_mass(&points).unwrap();

        // Stationarity M g = lambda g.
        let mg = m.apply(b.point.values());
        let res: f64 = mg
            .iter()
            .zip(b.point.values())
            .map(|(mgi, gi)| (mgi - b.eigenvalue * gi) * (mgi - b.eigenvalue * gi))
            .sum::<f64>()
            .sqrt();
        prop_assert!(res <= 1e-9 * (d as f64).sqrt(), "stationarity residual {res}");

        // Constraint H(g) = 1 - (g.g)/D = 0.
        let gg: f64 = b.point.values().iter().map(|v| v * v).sum();
        prop_assert!((1.0 - gg / d as f64).abs() <= 1e-10);

        // Objective identity and eigenvalue range.
        prop_assert!((b.objective - (1.0 - b.eigenvalue)).abs() <= 1e-10);
        prop_assert!(b.eigenvalue >= 1.0 / d as f64 - 1e-10);
        prop_assert!(b.eigenvalue <= 1.0 + 1e-10);
    }

    #[test]
    fn objective_equals_mean_squared_distance(
        (points, g) in (2usize..=10, 1usize..=15).prop_flat_map(|(d, n)| {
            (prop::collection::vec(sphere_point(d), n), sphere_point(d))
        })
    ) {
        // The pooled form 1 - sum/(N*D^2) must agree with averaging the
        // squared pairwise distances directly.
        let pooled = objective(&g, &points).unwrap();
        let averaged: f64 = points
            .iter()
            .map(|x| {
                let d = distance(&g, x).unwrap();
                d * d
            })
            .sum::<f64>()
            / points.len() as f64;
        prop_assert!((pooled - averaged).abs() <= 1e-10, "{pooled} vs {averaged}");
    }

    #[test]
    fn barycenter_beats_input_points_and_probes(
        points in point_set(),
        probe_seed in prop::collection::vec(prop::collection::vec(-10.0..10.0f64, 10), 20),
    ) {
        let b = center_of_mass(&points).unwrap();
        let best = objective(&b.point, &points).unwrap();
        for p in &points {
            let other = objective(p, &points).unwrap();
            prop_assert!(best <= other + 1e-9, "{best} > F(input) = {other}");
        }
        let d = points[0].dim();
        for raw in &probe_seed {
            let candidate = SamplePoint::new(raw[..d].to_vec()).unwrap();
            if candidate.is_diagonal(1e-9) {
                continue;
            }
            let q = standardize(&candidate).unwrap();
            let other = objective(&q, &points).unwrap();
            prop_assert!(best <= other + 1e-9, "{best} > F(probe) = {other}");
        }
    }

    #[test]
    fn negating_points_leaves_the_barycenter_unchanged(
        points in point_set(),
        flips in prop::collection::vec(any::<bool>(), 15),
    ) {
        let flipped: Vec<StandardizedPoint> = points
            .iter()
            .zip(&flips)
            .map(|(p, &flip)| if flip { p.negated() } else { p.clone() })
            .collect();
        // (-a)*(-b) == a*b exactly, so the scatter matrix and everything
        // downstream are bitwise identical.
        prop_assert_eq!(center_of_mass(&points).unwrap(), center_of_mass(&flipped).unwrap());
    }

    #[test]
    fn permuting_points_leaves_the_barycenter_unchanged(points in point_set()) {
        let b = center_of_mass(&points).unwrap();
        // Permutation reorders the scatter accumulation, so results agree
        // only up to roundoff; near-degenerate spectra are excluded because
        // the representative eigenvector is then arbitrary within the
        // eigenspace.
        let m = ScatterMatrix::from_points(&points).unwrap();
        let eig = eigen_symmetric(&m).unwrap();
        prop_assume!(eig.eigenvalues[0] - eig.eigenvalues[1] > 1e-3);

        let reversed: Vec<StandardizedPoint> = points.iter().rev().cloned().collect();
        let br = center_of_mass(&reversed).unwrap();
        prop_assert!((b.eigenvalue - br.eigenvalue).abs() <= 1e-12);
        for (a, c) in b.point.values().iter().zip(br.point.values()) {
            prop_assert!((a - c).abs() <= 1e-9, "{a} vs {c}");
        }
    }
}
