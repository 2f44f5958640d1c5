//! Property tests for the correlation distance: pseudometric axioms on the
//! standardization sphere plus the identities that pin it to the geometry
//! (sine of the angle, sign invariance, affine collapse).

use corrsphere::{angle, distance, distance_matrix, standardize, SamplePoint, StandardizedPoint};
use proptest::prelude::*;

fn sphere_point(d: usize) -> impl Strategy<Value = StandardizedPoint> {
    prop::collection::vec(-100.0..100.0f64, d)
        .prop_map(|values| SamplePoint::new(values).unwrap())
        .prop_filter("diagonal points are excluded", |p| !p.is_diagonal(1e-9))
        .prop_map(|p| standardize(&p).unwrap())
}

fn sphere_triple() -> impl Strategy<Value = (StandardizedPoint, StandardizedPoint, StandardizedPoint)>
{
    (3usize..=20).prop_flat_map(|d| (sphere_point(d), sphere_point(d), sphere_point(d)))
}

proptest! {
    #[test]
    fn symmetry_is_exact((x, y, _) in sphere_triple()) {
        prop_assert_eq!(distance(&x, &y).unwrap(), distance(&y, &x).unwrap());
    }

    #[test]
    fn range_is_the_unit_interval((x, y, _) in sphere_triple()) {
        let d = distance(&x, &y).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
    }

    #[test]
    fn triangle_inequality_holds((x, y, z) in sphere_triple()) {
        let xz = distance(&x, &z).unwrap();
        let xy = distance(&x, &y).unwrap();
        let yz = distance(&y, &z).unwrap();
        prop_assert!(xz <= xy + yz + 1e-9, "{xz} > {xy} + {yz}");
    }

    #[test]
    fn sign_flips_are_invisible((x, y, _) in sphere_triple()) {
        prop_assert_eq!(distance(&x, &y).unwrap(), distance(&x, &y.negated()).unwrap());
        prop_assert_eq!(distance(&x, &y).unwrap(), distance(&x.negated(), &y).unwrap());
    }

    #[test]
    fn distance_is_the_sine_of_the_angle((x, y, _) in sphere_triple()) {
        let d = distance(&x, &y).unwrap();
        let a = angle(&x, &y).unwrap();
        prop_assert!((d - a.sin()).abs() <= 1e-9, "d = {d}, sin(angle) = {}", a.sin());
    }

    #[test]
    fn affine_images_collapse_to_distance_zero(
        d in 2usize..=16,
        raw in prop::collection::vec(-5.0..5.0f64, 16),
        scale in prop_oneof![0.25..4.0f64, -4.0..-0.25f64],
        shift in -2.0..2.0f64,
    ) {
        let p = SamplePoint::new(raw[..d].to_vec()).unwrap();
        prop_assume!(!p.is_diagonal(1e-9));
        let image = SamplePoint::new(
            p.values().iter().map(|v| scale * v + shift).collect(),
        ).unwrap();
        prop_assume!(!image.is_diagonal(1e-9));
        let dist = distance(&standardize(&p).unwrap(), &standardize(&image).unwrap()).unwrap();
        prop_assert!(dist <= 1e-7, "distance {dist} for scale {scale}, shift {shift}");
    }

    #[test]
    fn distance_matrix_matches_pairwise_calls(
        d in 3usize..=8,
        n in 1usize..=8,
        seed_rows in prop::collection::vec(prop::collection::vec(-50.0..50.0f64, 8), 8),
    ) {
        let points: Vec<StandardizedPoint> = seed_rows[..n]
            .iter()
            .map(|row| SamplePoint::new(row[..d].to_vec()).unwrap())
            .filter(|p| !p.is_diagonal(1e-9))
            .map(|p| standardize(&p).unwrap())
            .collect();
        prop_assume!(!points.is_empty());
        let m = distance_matrix(&points).unwrap();
        for i in 0..points.len() {
            prop_assert_eq!(m.get(i, i), 0.0);
            for j in 0..points.len() {
                prop_assert_eq!(m.get(i, j), m.get(j, i));
                if i != j {
                    prop_assert_eq!(m.get(i, j), distance(&points[i], &points[j]).unwrap());
                }
            }
        }
    }
}
