use hypmetric::geodesy::line_through;
use hypmetric::homogeneity::{
    normalize_euclidean_gauge, omega_validate, projective_counterexample, snowflake_distance, sphere_fit_rotation,
    GaugeCondition,
};
use hypmetric::metric::{Euclidean, GreatCircle, Hyperbolic};
use hypmetric::sample::{random_orthogonal, random_point, random_unit};
use hypmetric::{hyperbolic_distance, Interval, Metric, OmegaGauge, Point, SpherePoint, Tolerance};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ray_gauges() -> Vec<OmegaGauge<f64>> {
    vec![
        OmegaGauge::identity(Interval::Ray),
        OmegaGauge::sqrt(Interval::Ray),
        OmegaGauge::saturating(),
        OmegaGauge::linear(3.0, Interval::Ray),
        OmegaGauge::piecewise_linear(vec![(0.0, 0.0), (1.0, 2.0), (4.0, 3.0)], Interval::Ray).unwrap(),
    ]
}

fn unit_gauges() -> Vec<OmegaGauge<f64>> {
    vec![
        OmegaGauge::identity(Interval::Unit),
        OmegaGauge::sqrt(Interval::Unit),
        OmegaGauge::piecewise_linear(vec![(0.0, 0.0), (0.5, 0.8), (1.0, 1.0)], Interval::Unit).unwrap(),
    ]
}

fn check_metric<M, F>(w: &OmegaGauge<f64>, base: M, mut draw: F)
where
    M: Metric<f64> + Copy,
    F: FnMut() -> M::Point,
{
    assert!(omega_validate(w, 200).unwrap().passed, "{} should be a gauge", w.name());
    for _ in 0..10_000 {
        let (x, y, z) = (draw(), draw(), draw());
        let sd = |a: &M::Point, b: &M::Point| snowflake_distance(w, base, a, b).unwrap();
        assert_eq!(sd(&x, &y), sd(&y, &x));
        assert_eq!(sd(&x, &x), 0.0);
        assert!(sd(&x, &y) > 0.0);
        assert!(sd(&x, &z) <= sd(&x, &y) + sd(&y, &z) + 1e-12, "{} on {}", w.name(), M::NAME);
    }
}

#[test]
fn snowflakes_are_metrics() {
    let mut r = ChaCha8Rng::seed_from_u64(21);
    for w in ray_gauges() {
        check_metric(&w, Hyperbolic, || random_point(&mut r, 3, 10.0));
        check_metric(&w, Euclidean, || random_point(&mut r, 2, 10.0));
    }
    for w in unit_gauges() {
        check_metric(&w, GreatCircle, || SpherePoint::new(random_unit(&mut r, 3).into_coords()).unwrap());
    }
}

#[test]
fn square_gauge_is_rejected_with_a_witness() {
    for domain in [Interval::Ray, Interval::Unit] {
        let w = OmegaGauge::<f64>::square(domain);
        let rep = omega_validate(&w, 100).unwrap();
        let v = rep.violation.expect("a witness");
        assert!(!rep.passed);
        assert_eq!(v.condition, GaugeCondition::Subadditive);
        assert!(domain.contains(v.x + v.y));
        assert!(w.eval(v.x + v.y) > w.eval(v.x) + w.eval(v.y));
    }
}

#[test]
fn counterexample_in_several_dimensions() {
    for n in [2, 3, 5] {
        let ce = projective_counterexample::<f64>(n).unwrap();
        assert!(ce.verified);
        let triples = ([ce.x.clone(), ce.y.clone(), ce.z1.clone()], [ce.x, ce.y, ce.z2]);
        assert!(sphere_fit_rotation(&triples.0, &triples.1, 1e-9).unwrap().is_none());
    }
}

#[test]
fn sphere_rotation_round_trip() {
    let mut r = ChaCha8Rng::seed_from_u64(22);
    for k in 1..=5 {
        let a = random_orthogonal::<f64, _>(&mut r, 4);
        let src: Vec<SpherePoint<f64>> =
            (0..k).map(|_| SpherePoint::new(random_unit(&mut r, 4).into_coords()).unwrap()).collect();
        let dst: Vec<SpherePoint<f64>> =
            src.iter().map(|p| SpherePoint::new(a.mul_vec(p.coords()).unwrap()).unwrap()).collect();
        let fitted = sphere_fit_rotation(&src, &dst, 1e-9).unwrap().expect("Gram matrices agree");
        assert!(fitted.is_orthogonal(1e-9));
        for (p, q) in src.iter().zip(&dst) {
            let img = SpherePoint::new(fitted.mul_vec(p.coords()).unwrap()).unwrap();
            assert!(img.approx_eq(q, Tolerance::uniform(1e-9)));
        }
    }
}

#[test]
fn gauge_rigidity_midpoint_defect() {
    let mut r = ChaCha8Rng::seed_from_u64(23);
    let curved = [OmegaGauge::sqrt(Interval::Ray), OmegaGauge::saturating()];
    let identity = OmegaGauge::identity(Interval::Ray);
    let mut tested = 0;
    while tested < 200 {
        let a: Point<f64> = random_point(&mut r, 3, 3.0);
        let b: Point<f64> = random_point(&mut r, 3, 3.0);
        let dab = hyperbolic_distance(&a, &b).unwrap();
        if dab < 0.5 {
            continue;
        }
        tested += 1;
        let g = line_through(&a, &b, Tolerance::default()).unwrap();
        let samples: Vec<Point<f64>> = (0..=2000).map(|k| g.point_at(dab * k as f64 / 2000.0)).collect();
        let sd = |w: &OmegaGauge<f64>, x: &Point<f64>, y: &Point<f64>| snowflake_distance(w, Hyperbolic, x, y).unwrap();
        for w in &curved {
            let half = 0.5 * sd(w, &a, &b);
            let hit =
                samples.iter().any(|m| (sd(w, &a, m) - half).abs() <= 1e-6 && (sd(w, m, &b) - half).abs() <= 1e-6);
            assert!(!hit, "{} has a metric midpoint on the geodesic", w.name());
        }
        let half = 0.5 * sd(&identity, &a, &b);
        let mid = &samples[1000];
        assert!((sd(&identity, &a, mid) - half).abs() <= 1e-9 && (sd(&identity, mid, &b) - half).abs() <= 1e-9);
    }
}

proptest! {
    #[test]
    fn normalization_equation(slope in 0.01..100.0f64, cap in 0.1..50.0f64) {
        let gauges = [
            OmegaGauge::linear(slope, Interval::Ray),
            OmegaGauge::new("capped", Interval::Ray, move |t: f64| cap * t / (1.0 + t), Some(cap)),
            OmegaGauge::new("root", Interval::Ray, move |t: f64| slope * t.sqrt(), Some(f64::INFINITY)),
        ];
        for w in gauges {
            let (wn, alpha) = normalize_euclidean_gauge(&w).unwrap();
            let target = 1f64.min(0.5 * w.limit_at_infinity().unwrap());
            prop_assert!(alpha > 0.0);
            prop_assert!((wn.eval(1.0) - target).abs() <= 1e-9);
            prop_assert!(omega_validate(&wn, 100).unwrap().passed);
        }
    }
}
