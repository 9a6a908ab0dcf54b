use crate::error::{check_dims, GeometryError, Result};
use crate::isometry::{translation_apply, Isometry};
use crate::linalg;
use crate::metric::hyperbolic_distance;
use crate::point::Point;
use crate::scalar::{Real, Tolerance};

/// Unit-speed geodesic `t ↦ T_a(sinh(t) z)`; doubles as the hyperbolic line
/// it traces.
#[derive(Debug, Clone, PartialEq)]
pub struct Geodesic<T> {
    base: Point<T>,
    direction: Point<T>,
}

impl<T: Real> Geodesic<T> {
    /// `direction` is normalized; it must be non-zero.
    pub fn new(base: Point<T>, direction: Point<T>) -> Result<Self> {
        check_dims(base.dim(), direction.dim())?;
        let direction = direction.normalized()?;
        Ok(Self { base, direction })
    }

    /// The line through `0⃗` spanned by `direction`.
    pub fn through_origin(direction: Point<T>) -> Result<Self> {
        let n = direction.dim();
        Self::new(Point::origin(n), direction)
    }

    pub fn base(&self) -> &Point<T> {
        &self.base
    }

    pub fn direction(&self) -> &Point<T> {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn point_at(&self, t: T) -> Point<T> {
        translation_apply(&self.base, &self.direction.scaled(t.sinh())).expect("dimensions checked at construction")
    }

    /// `T_{−a}(x)`, i.e. `x` seen from the base point.
    fn pulled_back(&self, x: &Point<T>) -> Result<Point<T>> {
        translation_apply(&self.base.neg(), x)
    }

    /// Hyperbolic distance from `x` to the line.
    ///
    /// With `w = T_{−a}(x)` split as `w = ⟨w,z⟩z + w⊥`, the distance is
    /// `asinh ‖w⊥‖`.
    pub fn distance_to(&self, x: &Point<T>) -> Result<T> {
        let w = self.pulled_back(x)?;
        let along = linalg::dot(w.coords(), self.direction.coords());
        let perp = linalg::axpy(w.coords(), -along, self.direction.coords());
        Ok(linalg::norm(&perp).asinh())
    }

    /// Parameter of the point of the line nearest to `x`:
    /// `sinh t = ⟨w,z⟩ / √(1 + ‖w⊥‖²)`.
    pub fn nearest_parameter(&self, x: &Point<T>) -> Result<T> {
        let w = self.pulled_back(x)?;
        let along = linalg::dot(w.coords(), self.direction.coords());
        let perp = linalg::axpy(w.coords(), -along, self.direction.coords());
        Ok((along / T::one().hypot(linalg::norm(&perp))).asinh())
    }

    pub fn contains(&self, x: &Point<T>, tol: T) -> Result<bool> {
        Ok(self.distance_to(x)? <= tol)
    }

    pub fn passes_through_origin(&self, tol: T) -> bool {
        self.distance_to(&Point::origin(self.dim())).is_ok_and(|d| d <= tol)
    }

    /// Set equality of the traced lines: both defining points of `other` must be
    /// metrically collinear with two points of `self`.
    pub fn same_line(&self, other: &Self, tol: Tolerance<T>) -> Result<bool> {
        check_dims(self.dim(), other.dim())?;
        let p = self.point_at(T::zero());
        let q = self.point_at(T::one());
        Ok(metrically_collinear(&p, &q, &other.point_at(T::zero()), tol)?
            && metrically_collinear(&p, &q, &other.point_at(T::one()), tol)?)
    }

    /// Image under an isometry, re-expressed with base `g(a)`.
    pub fn transformed(&self, g: &Isometry<T>) -> Result<Self> {
        let base = g.apply(&self.base)?;
        let ahead = g.apply(&self.point_at(T::one()))?;
        let dir = translation_apply(&base.neg(), &ahead)?;
        Self::new(base, dir)
    }
}

/// The unique line through distinct `a` and `b`, based at `a`, with
/// `point_at(d_h(a, b)) = b`.
pub fn line_through<T: Real>(a: &Point<T>, b: &Point<T>, tol: Tolerance<T>) -> Result<Geodesic<T>> {
    let d = hyperbolic_distance(a, b)?;
    if d <= tol.abs {
        return Err(GeometryError::Degenerate("a line needs two distinct points"));
    }
    let w = translation_apply(&a.neg(), b)?;
    Geodesic::new(a.clone(), w)
}

/// Whether `x` lies on the segment `[a, b]`: `d(a,x) + d(x,b) = d(a,b)`.
pub fn segment_contains<T: Real>(a: &Point<T>, b: &Point<T>, x: &Point<T>, tol: Tolerance<T>) -> Result<bool> {
    let dab = hyperbolic_distance(a, b)?;
    let excess = hyperbolic_distance(a, x)? + hyperbolic_distance(x, b)? - dab;
    Ok(excess.abs() <= tol.bound(dab))
}

/// Some ordering of the three points makes the triangle inequality an equality.
pub fn metrically_collinear<T: Real>(a: &Point<T>, b: &Point<T>, c: &Point<T>, tol: Tolerance<T>) -> Result<bool> {
    check_dims(a.dim(), b.dim())?;
    check_dims(a.dim(), c.dim())?;
    Ok(segment_contains(a, c, b, tol)? || segment_contains(b, c, a, tol)? || segment_contains(a, b, c, tol)?)
}

/// The hyperbolic sphere of radius `r` about `0⃗` is the Euclidean sphere of
/// radius `sinh r`.
pub fn sphere_euclidean_radius<T: Real>(r: T) -> Result<T> {
    if !(r >= T::zero()) || !r.is_finite() {
        return Err(GeometryError::Domain { what: "sphere radius", value: r.to_f64_lossy() });
    }
    Ok(r.sinh())
}

/// `t ↦ (sinh t)`, an isometry `(ℝ, d_e) → H¹`.
pub fn h1_embedding<T: Real>(t: T) -> Point<T> {
    Point::new(vec![t.sinh()]).expect("sinh of a finite real is finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::euclidean_distance;

    fn p(v: &[f64]) -> Point<f64> {
        Point::new(v.to_vec()).unwrap()
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn geodesic_point_examples() {
        let g = Geodesic::new(Point::origin(2), p(&[1.0, 0.0])).unwrap();
        assert_eq!(g.point_at(0.0), Point::origin(2));
        let q = g.point_at(1.0);
        assert!((q[0] - 1.175_201_193_643_801_4).abs() < 1e-15 && q[1] == 0.0);
        assert!((hyperbolic_distance(&q, &Point::origin(2)).unwrap() - 1.0).abs() < 1e-15);

        let y = p(&[0.5, -1.0]);
        let z = p(&[0.6, 0.8]);
        let g = Geodesic::new(y.clone(), z.clone()).unwrap();
        let expected = translation_apply(&y, &z.scaled(0.7f64.sinh())).unwrap();
        assert!(g.point_at(0.7).approx_eq(&expected, tol()));
    }

    #[test]
    fn zero_direction_rejected() {
        assert!(Geodesic::<f64>::new(Point::origin(2), Point::origin(2)).is_err());
    }

    #[test]
    fn line_through_examples() {
        let o = Point::origin(2);
        let b = p(&[2.0, 0.0]);
        let g = line_through(&o, &b, tol()).unwrap();
        assert_eq!(g.base(), &o);
        assert!(g.direction().approx_eq(&p(&[1.0, 0.0]), Tolerance::uniform(1e-15)));
        // negative parameters run along −b
        let back = g.point_at(-0.5);
        assert!(back[0] < 0.0 && back[1].abs() < 1e-15);

        let a = p(&[0.3, 1.1]);
        let b = p(&[-2.0, 0.4]);
        let g = line_through(&a, &b, tol()).unwrap();
        let d = hyperbolic_distance(&a, &b).unwrap();
        assert!(euclidean_distance(&g.point_at(d), &b).unwrap() < 1e-9);
        // swapping the endpoints traces the same set
        let h = line_through(&b, &a, tol()).unwrap();
        assert!(g.same_line(&h, tol()).unwrap());
        for t in [-3.0, -0.5, 0.2, 4.0] {
            assert!(h.distance_to(&g.point_at(t)).unwrap() < 1e-9);
        }
        assert!(matches!(line_through(&a, &a, tol()), Err(GeometryError::Degenerate(_))));
    }

    #[test]
    fn segment_examples() {
        let a = p(&[0.0, 0.0]);
        let b = p(&[2.0, 0.0]);
        assert!(segment_contains(&a, &b, &a, tol()).unwrap());
        let g = line_through(&a, &b, tol()).unwrap();
        let mid = g.point_at(hyperbolic_distance(&a, &b).unwrap() / 2.0);
        assert!(segment_contains(&a, &b, &mid, tol()).unwrap());
        assert!(!segment_contains(&a, &p(&[1.0, 0.0]), &p(&[0.0, 1.0]), tol()).unwrap());
        assert!(segment_contains(&a, &b, &p(&[0.0]), tol()).is_err());
    }

    #[test]
    fn collinearity_examples() {
        let a = p(&[0.4, -0.2]);
        let b = p(&[1.0, 3.0]);
        assert!(metrically_collinear(&a, &a, &b, tol()).unwrap());
        let g = line_through(&a, &b, tol()).unwrap();
        assert!(metrically_collinear(&g.point_at(-1.0), &g.point_at(2.5), &g.point_at(0.3), tol()).unwrap());
        let o = Point::origin(2);
        assert!(!metrically_collinear(&o, &p(&[1.0, 0.0]), &p(&[0.0, 1.0]), tol()).unwrap());
    }

    #[test]
    fn distance_to_line_matches_brute_force() {
        let g = Geodesic::new(p(&[0.3, -0.4]), p(&[1.0, 2.0])).unwrap();
        let x = p(&[-1.0, 0.7]);
        let brute = (-4000..=4000)
            .map(|k| hyperbolic_distance(&g.point_at(k as f64 * 1e-3), &x).unwrap())
            .fold(f64::INFINITY, f64::min);
        let exact = g.distance_to(&x).unwrap();
        assert!(exact <= brute + 1e-12 && brute - exact < 1e-6);
        let t = g.nearest_parameter(&x).unwrap();
        assert!((hyperbolic_distance(&g.point_at(t), &x).unwrap() - exact).abs() < 1e-12);
    }

    #[test]
    fn sphere_radius_examples() {
        assert_eq!(sphere_euclidean_radius(0.0).unwrap(), 0.0);
        let r = 2f64.sqrt().acosh();
        assert!((sphere_euclidean_radius(r).unwrap() - 1.0).abs() < 1e-15);
        assert!(sphere_euclidean_radius(-0.1).is_err());
        for dir in [p(&[1.0, 0.0, 0.0]), p(&[0.0, 0.6, -0.8])] {
            let x = dir.scaled(sphere_euclidean_radius(1.3).unwrap());
            assert!((hyperbolic_distance(&x, &Point::origin(3)).unwrap() - 1.3).abs() < 1e-9);
        }
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_embedding(0.0), p(&[0.0]));
        let d = hyperbolic_distance(&h1_embedding(3.0), &h1_embedding(-2.0)).unwrap();
        assert!((d - 5.0f64).abs() < 1e-9);
        let g = Geodesic::through_origin(p(&[1.0])).unwrap();
        assert_eq!(g.point_at(1.7), h1_embedding(1.7));
    }
}
