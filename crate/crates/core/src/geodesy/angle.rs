use crate::error::{check_dims, Result};
use crate::isometry::{fit_isometry, translation_apply, Isometry};
use crate::linalg;
use crate::metric::hyperbolic_distance;
use crate::point::Point;
use crate::scalar::Real;

/// An ordered pair of closed half-lines `t ↦ T_v(sinh(t) z_i)`, `t ≥ 0`, from a
/// common vertex `v`.
///
/// Directions are stored as seen from the vertex (after `T_{−v}`), so at `0⃗`
/// they are literal Euclidean directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Angle<T> {
    vertex: Point<T>,
    first: Point<T>,
    second: Point<T>,
}

impl<T: Real> Angle<T> {
    /// Directions are normalized.
    pub fn new(vertex: Point<T>, first: Point<T>, second: Point<T>) -> Result<Self> {
        check_dims(vertex.dim(), first.dim())?;
        check_dims(vertex.dim(), second.dim())?;
        Ok(Self { vertex, first: first.normalized()?, second: second.normalized()? })
    }

    /// The angle at `vertex` with half-lines through `p` and `q`.
    pub fn from_points(vertex: &Point<T>, p: &Point<T>, q: &Point<T>) -> Result<Self> {
        let back = vertex.neg();
        Self::new(vertex.clone(), translation_apply(&back, p)?, translation_apply(&back, q)?)
    }

    pub fn vertex(&self) -> &Point<T> {
        &self.vertex
    }

    pub fn first(&self) -> &Point<T> {
        &self.first
    }

    pub fn second(&self) -> &Point<T> {
        &self.second
    }

    /// Point at arc length `t ≥ 0` on the first (`which = 0`) or second half-line.
    pub fn ray_point(&self, which: usize, t: T) -> Point<T> {
        let z = if which == 0 { &self.first } else { &self.second };
        translation_apply(&self.vertex, &z.scaled(t.sinh())).expect("dimensions checked at construction")
    }

    /// Angle in `[0, π]` between the directions at the vertex.
    pub fn measure(&self) -> T {
        let c = linalg::dot(self.first.coords(), self.second.coords());
        c.max(-T::one()).min(T::one()).acos()
    }

    /// Two angles are congruent iff an isometry carries one ordered pair of
    /// half-lines onto the other, which at the vertex means an orthogonal map
    /// between the direction pairs: equal measures.
    pub fn congruent(&self, other: &Self, tol: T) -> bool {
        (self.measure() - other.measure()).abs() <= tol
    }

    /// With `R₁'`, `R₂'` the opposite half-lines, the angle is right when
    /// `(R₁,R₂)`, `(R₂',R₁)`, `(R₂,R₁')` and `(R₁',R₂')` are pairwise congruent.
    pub fn is_right(&self, tol: T) -> bool {
        let r1 = self.first.clone();
        let r2 = self.second.clone();
        let r1p = r1.neg();
        let r2p = r2.neg();
        let make =
            |a: &Point<T>, b: &Point<T>| Self { vertex: self.vertex.clone(), first: a.clone(), second: b.clone() };
        let family = [make(&r1, &r2), make(&r2p, &r1), make(&r2, &r1p), make(&r1p, &r2p)];
        family.iter().enumerate().all(|(i, a)| family[i + 1..].iter().all(|b| a.congruent(b, tol)))
    }

    /// The angle carried by an isometry.
    pub fn transformed(&self, g: &Isometry<T>) -> Result<Self> {
        Self::from_points(
            &g.apply(&self.vertex)?,
            &g.apply(&self.ray_point(0, T::one()))?,
            &g.apply(&self.ray_point(1, T::one()))?,
        )
    }

    /// A global isometry taking `self` onto `other` (vertex to vertex, first
    /// half-line to first, second to second), or `None` if the two are not
    /// congruent.
    pub fn congruence_witness(&self, other: &Self, tol: T) -> Result<Option<Isometry<T>>> {
        check_dims(self.vertex.dim(), other.vertex.dim())?;
        if !self.congruent(other, tol) {
            return Ok(None);
        }
        let src = [self.vertex.clone(), self.ray_point(0, T::one()), self.ray_point(1, T::one())];
        let dst = [other.vertex.clone(), other.ray_point(0, T::one()), other.ray_point(1, T::one())];
        Ok(Some(fit_isometry(&src, &dst)?.isometry))
    }

    /// Largest distance between `g` applied to sampled points of `self`'s
    /// half-lines and the matching points of `other`.
    pub fn witness_residual(&self, other: &Self, g: &Isometry<T>, params: &[T]) -> Result<T> {
        let mut worst = hyperbolic_distance(&g.apply(&self.vertex)?, &other.vertex)?;
        for &t in params {
            for which in 0..2 {
                let img = g.apply(&self.ray_point(which, t))?;
                worst = worst.max(hyperbolic_distance(&img, &other.ray_point(which, t))?);
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    fn p(v: &[f64]) -> Point<f64> {
        Point::new(v.to_vec()).unwrap()
    }

    #[test]
    fn measure_examples() {
        let o = Point::origin(2);
        let right = Angle::new(o.clone(), p(&[1.0, 0.0]), p(&[0.0, 1.0])).unwrap();
        assert!((right.measure() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let z = p(&[0.6, -0.8]);
        let flat = Angle::new(p(&[1.0, 2.0]), z.clone(), z).unwrap();
        assert_eq!(flat.measure(), 0.0);
    }

    #[test]
    fn right_angle_examples() {
        let o = Point::origin(2);
        let e1 = p(&[1.0, 0.0]);
        assert!(Angle::new(o.clone(), e1.clone(), p(&[0.0, 1.0])).unwrap().is_right(1e-9));
        assert!(!Angle::new(o.clone(), e1.clone(), e1.clone()).unwrap().is_right(1e-9));
        let diag = p(&[1.0, 1.0]);
        let a = Angle::new(o, e1, diag).unwrap();
        assert!((a.measure() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!(!a.is_right(1e-9));
    }

    #[test]
    fn measure_is_isometry_invariant() {
        let a = Angle::from_points(&p(&[0.4, -0.3]), &p(&[1.0, 1.0]), &p(&[-2.0, 0.5])).unwrap();
        let rot = Matrix::from_rows(vec![vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        let g = Isometry::new(p(&[1.5, 0.2]), rot).unwrap();
        let b = a.transformed(&g).unwrap();
        assert!((a.measure() - b.measure()).abs() < 1e-12);
    }

    #[test]
    fn witness_maps_half_lines() {
        let a = Angle::new(Point::origin(2), p(&[1.0, 0.0]), p(&[0.0, 1.0])).unwrap();
        let b = Angle::new(p(&[2.0, -1.0]), p(&[1.0, 1.0]), p(&[1.0, -1.0])).unwrap();
        let g = a.congruence_witness(&b, 1e-9).unwrap().expect("right angles are congruent");
        assert!(a.witness_residual(&b, &g, &[0.5, 1.0, 3.0]).unwrap() < 1e-9);
        let c = Angle::new(Point::origin(2), p(&[1.0, 0.0]), p(&[1.0, 1.0])).unwrap();
        assert!(a.congruence_witness(&c, 1e-9).unwrap().is_none());
    }
}
