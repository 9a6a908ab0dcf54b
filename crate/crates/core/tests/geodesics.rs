use hypmetric::geodesy::{
    line_through, line_to_sinh_cosh, parallel_family, parallels_through, scan_min_gap, segment_contains,
    sinh_cosh_point, GapScan,
};
use hypmetric::sample::{random_isometry, random_point, random_unit};
use hypmetric::{euclidean_distance, hyperbolic_distance, Angle, Geodesic, Point, Tolerance};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = Point<f64>;

fn d(x: &P, y: &P) -> f64 {
    hyperbolic_distance(x, y).unwrap()
}

fn tol() -> Tolerance<f64> {
    Tolerance::default()
}

fn coords(dim: usize, half: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-half..half, dim)
}

fn direction(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    coords(dim, 1.0).prop_filter("non-zero direction", |v| v.iter().map(|c| c * c).sum::<f64>() > 1e-3)
}

proptest! {
    #[test]
    fn unit_speed(a in coords(3, 10.0), z in direction(3), s in -10.0..10.0f64, t in -10.0..10.0f64) {
        let g = Geodesic::new(P::new(a).unwrap(), P::new(z).unwrap()).unwrap();
        prop_assert!((g.direction().norm() - 1.0).abs() <= 1e-12);
        prop_assert!((d(&g.point_at(s), &g.point_at(t)) - (s - t).abs()).abs() <= 1e-9);
    }

    #[test]
    fn lines_are_geodesic(a in coords(3, 5.0), b in coords(3, 5.0), s in 0.0..1.0f64, t in 0.0..1.0f64) {
        let (a, b) = (P::new(a).unwrap(), P::new(b).unwrap());
        let dab = d(&a, &b);
        prop_assume!(dab > 1e-6);
        let g = line_through(&a, &b, tol()).unwrap();
        prop_assert!(d(&g.point_at(dab), &b) <= 1e-9);
        let phi = |u: f64| g.point_at(u * dab);
        prop_assert!((d(&phi(s), &phi(t)) - dab * (s - t).abs()).abs() <= 1e-9 * (1.0 + dab));
    }

    #[test]
    fn segments_are_unique(a in coords(3, 2.0), b in coords(3, 2.0), u in 0.0..1.0f64, seed in any::<u64>()) {
        let (a, b) = (P::new(a).unwrap(), P::new(b).unwrap());
        let dab = d(&a, &b);
        prop_assume!(dab > 0.1);
        let g = line_through(&a, &b, tol()).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let on = g.point_at(u * dab);
        let push: P = random_unit(&mut r, 3);
        let off = P::new(hypmetric::linalg::axpy(on.coords(), r.random_range(1e-2..1e-1), push.coords())).unwrap();
        for x in [on, off] {
            if segment_contains(&a, &b, &x, tol()).unwrap() {
                let nearest = g.point_at(g.nearest_parameter(&x).unwrap());
                prop_assert!(euclidean_distance(&nearest, &x).unwrap() <= 1e-6);
            }
        }
    }

    #[test]
    fn distinct_lines_share_at_most_one_point(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let dim = r.random_range(2..4);
        let p: P = random_point(&mut r, dim, 3.0);
        let first = Geodesic::new(p.clone(), random_unit(&mut r, dim)).unwrap();
        // half the time force a crossing at p
        let base = if r.random_bool(0.5) { p } else { random_point(&mut r, dim, 3.0) };
        let second = Geodesic::new(base, random_unit(&mut r, dim)).unwrap();
        prop_assume!(!first.same_line(&second, tol()).unwrap());
        let shared: Vec<P> = (-1000..=1000)
            .map(|k| first.point_at(k as f64 * 0.01))
            .filter(|x| second.distance_to(x).unwrap() <= 1e-6)
            .collect();
        for x in &shared {
            for y in &shared {
                prop_assert!(euclidean_distance(x, y).unwrap() <= 1e-5);
            }
        }
    }

    #[test]
    fn reparametrized_line_is_the_same_set(seed in any::<u64>(), shift in -3.0..3.0f64) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = Geodesic::new(random_point(&mut r, 3, 3.0), random_unit(&mut r, 3)).unwrap();
        let moved = line_through(&g.point_at(shift), &g.point_at(shift + 1.5), tol()).unwrap();
        prop_assert!(g.same_line(&moved, tol()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parallel_postulate_fails(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let dim = r.random_range(2..4);
        let line = Geodesic::new(random_point(&mut r, dim, 3.0), random_unit(&mut r, dim)).unwrap();
        prop_assume!(line.distance_to(&P::origin(dim)).unwrap() > 0.05);
        let (a, b) = line_to_sinh_cosh(&line, tol()).unwrap();
        for t in [-2.0, 0.0, 0.7] {
            prop_assert!(euclidean_distance(&sinh_cosh_point(&a, &b, t), &line.point_at(t)).unwrap() <= 1e-9);
        }
        let mus: Vec<f64> = (0..5)
            .map(|_| r.random_range(1.2..5.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 })
            .collect();
        let scan = GapScan { per_axis: 40, ..GapScan::default() };
        let family: Vec<Geodesic<f64>> = mus.iter().map(|&mu| parallel_family(&a, &b, mu).unwrap()).collect();
        for l in &family {
            prop_assert!(l.passes_through_origin(1e-12));
            let rep = scan_min_gap(|s| l.point_at(s), |t| line.point_at(t), scan).unwrap();
            prop_assert!(rep.disjoint(), "gap {}", rep.gap);
        }
        for i in 0..family.len() {
            for j in i + 1..family.len() {
                if (mus[i] - mus[j]).abs() > 1e-3 {
                    prop_assert!(!family[i].same_line(&family[j], tol()).unwrap());
                }
            }
        }

        // same construction through an arbitrary point off the line
        let x: P = random_point(&mut r, dim, 2.0);
        prop_assume!(line.distance_to(&x).unwrap() > 0.05);
        for l in parallels_through(&x, &line, &mus, tol()).unwrap() {
            prop_assert!(l.contains(&x, 1e-8).unwrap());
            let rep = scan_min_gap(|s| l.point_at(s), |t| line.point_at(t), scan).unwrap();
            prop_assert!(rep.disjoint(), "gap {}", rep.gap);
        }
    }

    #[test]
    fn angle_measure_is_invariant(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let dim = r.random_range(2..5);
        let angle = Angle::from_points(
            &random_point(&mut r, dim, 3.0),
            &random_point(&mut r, dim, 3.0),
            &random_point(&mut r, dim, 3.0),
        )
        .unwrap();
        for _ in 0..100 {
            let g = random_isometry::<f64, _>(&mut r, dim, 3.0);
            let image = angle.transformed(&g).unwrap();
            prop_assert!((image.measure() - angle.measure()).abs() <= 1e-8);
        }
    }
}
