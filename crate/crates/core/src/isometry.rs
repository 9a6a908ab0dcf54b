//! Hyperbolic translations and isometries in decomposed form `x ↦ T_a(Ux)`.
//!
//! The translation `T_y(x) = x + ([x] + ⟨x,y⟩/([y]+1)) y` moves `0⃗` to `y`,
//! preserves `d_h`, and has inverse `T_{−y}`. Every isometry of `Hⁿ` is
//! `T_a ∘ U` for a unique vector `a` and orthogonal `U`, and any finite
//! distance-preserving map extends to such an isometry ([`fit_isometry`]).

use crate::error::{check_dims, GeometryError, Result};
use crate::linalg::{self, Matrix};
use crate::metric::{bracket, hyperbolic_distance};
use crate::point::Point;
use crate::scalar::{Real, Tolerance};

/// `T_y(x)`.
pub fn translation_apply<T: Real>(y: &Point<T>, x: &Point<T>) -> Result<Point<T>> {
    let alpha = bracket(x) + x.dot(y)? / (bracket(y) + T::one());
    Ok(Point::from_vec_unchecked(linalg::axpy(x.coords(), alpha, y.coords())))
}

/// The hyperbolic translation `T_y`.
#[derive(Debug, Clone, PartialEq)]
pub struct Translation<T> {
    y: Point<T>,
}

impl<T: Real> Translation<T> {
    pub fn new(y: Point<T>) -> Self {
        Self { y }
    }

    pub fn parameter(&self) -> &Point<T> {
        &self.y
    }

    pub fn apply(&self, x: &Point<T>) -> Result<Point<T>> {
        translation_apply(&self.y, x)
    }

    pub fn inverse(&self) -> Self {
        Self { y: self.y.neg() }
    }
}

/// An isometry `x ↦ T_a(Ux)` with `U` orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry<T> {
    translation: Point<T>,
    linear: Matrix<T>,
}

impl<T: Real> Isometry<T> {
    /// Checks dimensions and that `UᵀU = I` within `T::ORTHO_TOL`.
    pub fn new(translation: Point<T>, linear: Matrix<T>) -> Result<Self> {
        check_dims(translation.dim(), linear.dim())?;
        let defect = linear.orthogonality_defect();
        if !(defect <= T::ORTHO_TOL) {
            return Err(GeometryError::NotOrthogonal { defect: defect.to_f64_lossy() });
        }
        Ok(Self { translation, linear })
    }

    pub fn identity(dim: usize) -> Self {
        Self { translation: Point::origin(dim), linear: Matrix::identity(dim) }
    }

    pub fn from_translation(y: Point<T>) -> Self {
        let n = y.dim();
        Self { translation: y, linear: Matrix::identity(n) }
    }

    pub fn from_linear(linear: Matrix<T>) -> Result<Self> {
        Self::new(Point::origin(linear.dim()), linear)
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn translation(&self) -> &Point<T> {
        &self.translation
    }

    pub fn linear(&self) -> &Matrix<T> {
        &self.linear
    }

    pub fn apply(&self, x: &Point<T>) -> Result<Point<T>> {
        let ux = Point::from_vec_unchecked(self.linear.mul_vec(x.coords())?);
        translation_apply(&self.translation, &ux)
    }

    /// `self ∘ other`, recovered from the action of the composite on
    /// `0⃗, e₁, …, eₙ`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Self::from_action(self.dim(), |x| self.apply(&other.apply(x)?))
    }

    /// `(−Uᵀa, Uᵀ)`, using `U ∘ T_y ∘ U⁻¹ = T_{Uy}`.
    pub fn inverse(&self) -> Self {
        let ut = self.linear.transpose();
        let a = ut.mul_vec(self.translation.coords()).expect("dimensions checked at construction");
        Self { translation: Point::from_vec_unchecked(linalg::scale(&a, -T::one())), linear: ut }
    }

    /// Reads off `(a, U)` from a map known to be a hyperbolic isometry:
    /// `a = f(0⃗)` and the `j`-th column of `U` is `T_{−a}(f(e_j))`. The matrix
    /// is polar-projected to remove rounding.
    pub fn from_action<F>(dim: usize, f: F) -> Result<Self>
    where
        F: Fn(&Point<T>) -> Result<Point<T>>,
    {
        let a = f(&Point::origin(dim))?;
        check_dims(dim, a.dim())?;
        let back = a.neg();
        let columns = (0..dim)
            .map(|j| Ok(translation_apply(&back, &f(&Point::basis(dim, j))?)?.into_coords()))
            .collect::<Result<Vec<_>>>()?;
        let u = Matrix::from_columns(&columns)?.polar_projection()?;
        Ok(Self { translation: a, linear: u })
    }

    /// Largest `d_h(self(x), other(x))` over `points`.
    pub fn max_deviation(&self, other: &Self, points: &[Point<T>]) -> Result<T> {
        points.iter().try_fold(T::zero(), |m, x| Ok(m.max(hyperbolic_distance(&self.apply(x)?, &other.apply(x)?)?)))
    }

    /// Whether `self` and `other` agree on `0⃗` and every basis vector.
    pub fn approx_eq(&self, other: &Self, tol: Tolerance<T>) -> bool {
        self.translation.approx_eq(&other.translation, tol)
            && self.linear.max_abs_diff(&other.linear) <= tol.abs + tol.rel
    }
}

impl<T: Real> From<Translation<T>> for Isometry<T> {
    fn from(t: Translation<T>) -> Self {
        Self::from_translation(t.y)
    }
}

/// Result of [`fit_isometry`].
#[derive(Debug, Clone)]
pub struct FittedIsometry<T> {
    pub isometry: Isometry<T>,
    /// `true` when the translated samples span `ℝⁿ`, so no other isometry fits.
    pub unique: bool,
    /// `max_i d_h(g(source[i]), target[i])`.
    pub max_residual: T,
}

/// First pair `(i, j)` whose hyperbolic distances disagree by more than
/// `tol·(1 + d)`, with both distances.
pub fn first_distance_mismatch<T: Real>(
    source: &[Point<T>],
    target: &[Point<T>],
    tol: T,
) -> Result<Option<(usize, usize, T, T)>> {
    check_dims(source.len(), target.len())?;
    for i in 0..source.len() {
        for j in (i + 1)..source.len() {
            let ds = hyperbolic_distance(&source[i], &source[j])?;
            let dt = hyperbolic_distance(&target[i], &target[j])?;
            if !((ds - dt).abs() <= tol * (T::one() + ds.max(dt))) {
                return Ok(Some((i, j, ds, dt)));
            }
        }
    }
    Ok(None)
}

/// Inner-product criterion: for maps fixing `0⃗`, being isometric is the same
/// as preserving every inner product. Returns the largest
/// `|⟨s_i,s_j⟩ − ⟨t_i,t_j⟩|`.
pub fn inner_product_defect<T: Real>(source: &[Point<T>], target: &[Point<T>]) -> Result<T> {
    check_dims(source.len(), target.len())?;
    let mut worst = T::zero();
    for i in 0..source.len() {
        for j in i..source.len() {
            let gs = source[i].dot(&source[j])?;
            let gt = target[i].dot(&target[j])?;
            worst = worst.max((gs - gt).abs());
        }
    }
    Ok(worst)
}

/// [`fit_isometry_with_tol`] at the default distance tolerance `T::FIT_TOL`.
pub fn fit_isometry<T: Real>(source: &[Point<T>], target: &[Point<T>]) -> Result<FittedIsometry<T>> {
    fit_isometry_with_tol(source, target, T::FIT_TOL)
}

/// Extends the finite partial isometry `source[i] ↦ target[i]` to a global
/// isometry.
///
/// Both sets are translated so their first points sit at `0⃗`; the translated
/// sets then have equal Gram matrices and an orthogonal `U` carries one onto
/// the other. The result is `T_{target[0]} ∘ U ∘ T_{−source[0]}` in `(a, U)`
/// form. Inputs are accepted when every pairwise distance matches within
/// `tol·(1 + d)`.
pub fn fit_isometry_with_tol<T: Real>(source: &[Point<T>], target: &[Point<T>], tol: T) -> Result<FittedIsometry<T>> {
    if source.is_empty() {
        return Err(GeometryError::Parameter("at least one point pair is required".into()));
    }
    check_dims(source.len(), target.len())?;
    let n = source[0].dim();
    for p in source.iter().chain(target) {
        check_dims(n, p.dim())?;
    }
    if let Some((i, j, ds, dt)) = first_distance_mismatch(source, target, tol)? {
        return Err(GeometryError::NotPartialIsometry {
            i,
            j,
            source_distance: ds.to_f64_lossy(),
            target_distance: dt.to_f64_lossy(),
        });
    }

    let to_origin_src = source[0].neg();
    let to_origin_dst = target[0].neg();
    let s = source[1..].iter().map(|p| translation_apply(&to_origin_src, p)).collect::<Result<Vec<_>>>()?;
    let r = target[1..].iter().map(|p| translation_apply(&to_origin_dst, p)).collect::<Result<Vec<_>>>()?;

    // The translated sets fix 0⃗, so they must have equal Gram matrices.
    let dmax = s.iter().fold(T::zero(), |m, p| m.max(p.norm().asinh()));
    for i in 0..s.len() {
        for j in i..s.len() {
            let gs = s[i].dot(&s[j])?;
            let gr = r[i].dot(&r[j])?;
            let bound = T::lit(4.0) * tol * (T::one() + dmax) * bracket(&s[i]) * bracket(&s[j]);
            if !((gs - gr).abs() <= bound) {
                return Err(GeometryError::NotPartialIsometry {
                    i: i + 1,
                    j: j + 1,
                    source_distance: hyperbolic_distance(&source[i + 1], &source[j + 1])?.to_f64_lossy(),
                    target_distance: hyperbolic_distance(&target[i + 1], &target[j + 1])?.to_f64_lossy(),
                });
            }
        }
    }

    let s_vecs: Vec<Vec<T>> = s.iter().map(|p| p.coords().to_vec()).collect();
    let r_vecs: Vec<Vec<T>> = r.iter().map(|p| p.coords().to_vec()).collect();
    let (u, rank) = linalg::orthogonal_map(n, &s_vecs, &r_vecs, T::DEPENDENCE_TOL)?;

    let isometry = Isometry::from_action(n, |x| {
        let moved = translation_apply(&to_origin_src, x)?;
        let rotated = Point::from_vec_unchecked(u.mul_vec(moved.coords())?);
        translation_apply(&target[0], &rotated)
    })?;

    let max_residual = source
        .iter()
        .zip(target)
        .try_fold(T::zero(), |m, (p, q)| Ok::<_, GeometryError>(m.max(hyperbolic_distance(&isometry.apply(p)?, q)?)))?;

    Ok(FittedIsometry { isometry, unique: rank == n, max_residual })
}

/// `|cosh(c·arcosh(t²)) − cosh(c·arcosh(t))²|`.
///
/// A dilation of `Hⁿ` (`n > 1`) with constant `c` forces this to vanish for
/// every `t ≥ 1`, which only happens for `c = 1`.
pub fn dilation_residual<T: Real>(c: T, t: T) -> Result<T> {
    if !(c > T::zero()) || !c.is_finite() {
        return Err(GeometryError::Domain { what: "dilation constant", value: c.to_f64_lossy() });
    }
    if !(t >= T::one()) || !t.is_finite() {
        return Err(GeometryError::Domain { what: "dilation residual argument t", value: t.to_f64_lossy() });
    }
    let lhs = (c * (t * t).acosh()).cosh();
    let inner = (c * t.acosh()).cosh();
    Ok((lhs - inner * inner).abs())
}
