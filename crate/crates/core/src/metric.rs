//! The bracket functional and the four metrics: hyperbolic, Euclidean,
//! great-circle and projective.
//!
//! The hyperbolic distance `arcosh([x][y] − ⟨x,y⟩)` loses almost all precision
//! for nearby points because the argument sits next to 1. [`hyperbolic_distance`]
//! uses the equivalent form
//!
//! ```text
//! d_h(x, y) = 2 asinh( ½ √( ‖x − y‖² − ([x] − [y])² ) )
//! ```
//!
//! with `[x] − [y]` evaluated as `⟨x − y, x + y⟩ / ([x] + [y])`. Far from `0⃗`
//! the two terms under the root still nearly cancel for nearby points; there
//! the same quantity is taken from the rearrangement
//!
//! ```text
//! q² = (‖δ⊥‖²‖s‖² + 4g²) / (‖s‖² − g²),   s = x + y, δ = x − y, g = [x] − [y]
//! ```
//!
//! with `δ⊥` the part of `δ` orthogonal to `s`. It cancels only when `x + y` is
//! short, which is exactly where the first form is safe.

use crate::error::{check_dims, GeometryError, Result};
use crate::linalg;
use crate::point::{Point, ProjPoint, SpherePoint};
use crate::scalar::Real;

/// `[x] = √(1 + ‖x‖²)`, computed with `hypot` so it does not overflow.
pub fn bracket<T: Real>(x: &Point<T>) -> T {
    T::one().hypot(x.norm())
}

/// The argument `[x][y] − ⟨x,y⟩` of the textbook formula; always `≥ 1`
/// mathematically, with equality iff `x = y`.
pub fn cosh_distance<T: Real>(x: &Point<T>, y: &Point<T>) -> Result<T> {
    Ok(bracket(x) * bracket(y) - x.dot(y)?)
}

/// Cancellation-free hyperbolic distance. Exactly symmetric in its arguments.
pub fn hyperbolic_distance<T: Real>(x: &Point<T>, y: &Point<T>) -> Result<T> {
    check_dims(x.dim(), y.dim())?;
    let diff = linalg::sub(x.coords(), y.coords());
    let sum = linalg::add(x.coords(), y.coords());
    let chord = linalg::norm(&diff);
    if chord == T::zero() {
        return Ok(T::zero());
    }
    let along = linalg::dot(&diff, &sum);
    let g = (along / (bracket(x) + bracket(y))).abs();
    let span = linalg::norm(&sum);
    let q = if chord >= span {
        ((chord - g).max(T::zero()) * (chord + g)).sqrt()
    } else {
        let perp = linalg::norm(&linalg::axpy(&diff, -along / (span * span), &sum));
        let num = (perp * span).powi(2) + T::lit(4.0) * g * g;
        (num / ((span - g) * (span + g))).sqrt()
    };
    Ok(T::lit(2.0) * (q * T::lit(0.5)).asinh())
}

/// Textbook `arcosh([x][y] − ⟨x,y⟩)` with domain clamping. Kept as a
/// reference; prefer [`hyperbolic_distance`].
pub fn hyperbolic_distance_naive<T: Real>(x: &Point<T>, y: &Point<T>) -> Result<T> {
    Ok(acosh_clamped(cosh_distance(x, y)?)?.acosh())
}

pub fn euclidean_distance<T: Real>(x: &Point<T>, y: &Point<T>) -> Result<T> {
    check_dims(x.dim(), y.dim())?;
    Ok(linalg::norm(&linalg::sub(x.coords(), y.coords())))
}

/// Angle between unit vectors as `2 atan2(‖x − y‖, ‖x + y‖)`, which equals
/// `arccos⟨x,y⟩` but stays accurate near `0` and `π`.
fn unit_angle<T: Real>(x: &[T], y: &[T]) -> T {
    let chord = linalg::norm(&linalg::sub(x, y));
    let span = linalg::norm(&linalg::add(x, y));
    T::lit(2.0) * chord.atan2(span)
}

/// Great-circle distance normalized to diameter 1: `arccos(⟨x,y⟩) / π`.
pub fn sphere_distance<T: Real>(x: &SpherePoint<T>, y: &SpherePoint<T>) -> Result<T> {
    check_dims(x.ambient_dim(), y.ambient_dim())?;
    Ok(unit_angle(x.coords(), y.coords()) / T::PI())
}

/// Projective distance `(2/π) arccos |⟨u,v⟩|`, independent of representatives.
pub fn projective_distance<T: Real>(u: &ProjPoint<T>, v: &ProjPoint<T>) -> Result<T> {
    let (u, v) = (u.rep(), v.rep());
    check_dims(u.ambient_dim(), v.ambient_dim())?;
    let angle = unit_angle(u.coords(), v.coords());
    let acute = angle.min(unit_angle(u.coords(), v.antipode().coords()));
    Ok(T::lit(2.0) * acute / T::PI())
}

/// Lift to the hyperboloid: `([x], x₁, …, xₙ)`.
pub fn hyperboloid_embed<T: Real>(x: &Point<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(x.dim() + 1);
    out.push(bracket(x));
    out.extend_from_slice(x.coords());
    out
}

/// Poincaré-ball coordinates `x / (1 + [x])`; the result has norm `< 1`.
pub fn poincare_coords<T: Real>(x: &Point<T>) -> Vec<T> {
    linalg::scale(x.coords(), T::one() / (T::one() + bracket(x)))
}

/// Inverse of [`poincare_coords`]: `p ↦ 2p / (1 − ‖p‖²)`.
pub fn poincare_inverse<T: Real>(p: &[T]) -> Result<Point<T>> {
    let r = linalg::norm(p);
    if !(r < T::one()) {
        return Err(GeometryError::Domain { what: "Poincaré ball norm", value: r.to_f64_lossy() });
    }
    let denom = (T::one() - r) * (T::one() + r);
    Point::new(linalg::scale(p, T::lit(2.0) / denom))
}

/// Clamps an `arcosh` argument into `[1, ∞)` if it undershoots by at most
/// `T::CLAMP_SLACK`.
pub fn acosh_clamped<T: Real>(v: T) -> Result<T> {
    if v >= T::one() {
        Ok(v)
    } else if v >= T::one() - T::CLAMP_SLACK {
        Ok(T::one())
    } else {
        Err(GeometryError::Domain { what: "arcosh argument", value: v.to_f64_lossy() })
    }
}

/// Clamps an `arccos` argument into `[−1, 1]` if it overshoots by at most
/// `T::CLAMP_SLACK`.
pub fn acos_clamped<T: Real>(v: T) -> Result<T> {
    if v.abs() <= T::one() {
        Ok(v)
    } else if v.abs() <= T::one() + T::CLAMP_SLACK {
        Ok(v.signum())
    } else {
        Err(GeometryError::Domain { what: "arccos argument", value: v.to_f64_lossy() })
    }
}

/// Value range of a metric, which is also the domain a gauge must be defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// `[0, 1]`
    Unit,
    /// `[0, ∞)`
    Ray,
}

impl Interval {
    pub fn name(self) -> &'static str {
        match self {
            Interval::Unit => "[0,1]",
            Interval::Ray => "[0,inf)",
        }
    }

    pub fn contains<T: Real>(self, t: T) -> bool {
        t >= T::zero() && (self == Interval::Ray || t <= T::one())
    }
}

/// A metric on some point type.
pub trait Metric<T: Real> {
    type Point;
    const NAME: &'static str;
    /// Range of distance values.
    const RANGE: Interval;

    fn distance(&self, a: &Self::Point, b: &Self::Point) -> Result<T>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Hyperbolic;

#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean;

#[derive(Debug, Clone, Copy, Default)]
pub struct GreatCircle;

#[derive(Debug, Clone, Copy, Default)]
pub struct Projective;

impl<T: Real> Metric<T> for Hyperbolic {
    type Point = Point<T>;
    const NAME: &'static str = "hyperbolic";
    const RANGE: Interval = Interval::Ray;

    fn distance(&self, a: &Point<T>, b: &Point<T>) -> Result<T> {
        hyperbolic_distance(a, b)
    }
}

impl<T: Real> Metric<T> for Euclidean {
    type Point = Point<T>;
    const NAME: &'static str = "euclidean";
    const RANGE: Interval = Interval::Ray;

    fn distance(&self, a: &Point<T>, b: &Point<T>) -> Result<T> {
        euclidean_distance(a, b)
    }
}

impl<T: Real> Metric<T> for GreatCircle {
    type Point = SpherePoint<T>;
    const NAME: &'static str = "sphere";
    const RANGE: Interval = Interval::Unit;

    fn distance(&self, a: &SpherePoint<T>, b: &SpherePoint<T>) -> Result<T> {
        sphere_distance(a, b)
    }
}

impl<T: Real> Metric<T> for Projective {
    type Point = ProjPoint<T>;
    const NAME: &'static str = "projective";
    const RANGE: Interval = Interval::Unit;

    fn distance(&self, a: &ProjPoint<T>, b: &ProjPoint<T>) -> Result<T> {
        projective_distance(a, b)
    }
}
