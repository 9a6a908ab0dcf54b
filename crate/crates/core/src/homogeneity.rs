//! Metric gauges `ω ∈ Ω(I)` and the 3-point homogeneity counterexample in `Pⁿ`.
//!
//! A gauge is a continuous `ω: I → [0, ∞)` with `ω(0) = 0` that is strictly
//! increasing (ω1) and subadditive (ω2). Composing a metric with such a gauge
//! gives another metric with the same isometries.

use std::fmt;
use std::sync::Arc;

use crate::error::{check_dims, GeometryError, Result};
use crate::linalg::{self, Matrix};
use crate::metric::{projective_distance, Interval, Metric};
use crate::point::{ProjPoint, SpherePoint};
use crate::scalar::Real;

type GaugeFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// A scalar gauge on `[0, 1]` or `[0, ∞)`.
///
/// Continuity is not checked; [`omega_validate`] samples (ω1) and (ω2). For
/// ray gauges the limit `ω(∞)` is declared by the caller.
#[derive(Clone)]
pub struct OmegaGauge<T> {
    name: String,
    domain: Interval,
    eval: GaugeFn<T>,
    limit_at_infinity: Option<T>,
}

impl<T: fmt::Debug> fmt::Debug for OmegaGauge<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OmegaGauge")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("limit_at_infinity", &self.limit_at_infinity)
            .finish()
    }
}

impl<T: Real> OmegaGauge<T> {
    pub fn new<F>(name: impl Into<String>, domain: Interval, eval: F, limit_at_infinity: Option<T>) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        Self { name: name.into(), domain, eval: Arc::new(eval), limit_at_infinity }
    }

    pub fn identity(domain: Interval) -> Self {
        Self::new("identity", domain, |t| t, Some(T::infinity()))
    }

    pub fn sqrt(domain: Interval) -> Self {
        Self::new("sqrt", domain, |t: T| t.sqrt(), Some(T::infinity()))
    }

    /// `t²`: increasing but not subadditive, so not a gauge.
    pub fn square(domain: Interval) -> Self {
        Self::new("square", domain, |t: T| t * t, Some(T::infinity()))
    }

    /// `t / (1 + t)` on `[0, ∞)`, with `ω(∞) = 1`.
    pub fn saturating() -> Self {
        Self::new("saturating", Interval::Ray, |t: T| t / (T::one() + t), Some(T::one()))
    }

    pub fn linear(slope: T, domain: Interval) -> Self {
        Self::new(format!("linear({slope})"), domain, move |t| slope * t, Some(T::infinity()))
    }

    /// Piecewise-linear gauge through `knots`, which must start at `(0, 0)` and
    /// have strictly increasing abscissae. Past the last knot the last segment
    /// is extended, so `ω(∞)` is `+∞` for a rising last segment.
    pub fn piecewise_linear(knots: Vec<(T, T)>, domain: Interval) -> Result<Self> {
        if knots.len() < 2 {
            return Err(GeometryError::Parameter("a gauge table needs at least two knots".into()));
        }
        if knots[0] != (T::zero(), T::zero()) {
            return Err(GeometryError::Parameter("a gauge table must start at (0, 0)".into()));
        }
        if knots.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(GeometryError::Parameter("gauge table entries must be finite".into()));
        }
        if knots.windows(2).any(|w| !(w[1].0 > w[0].0)) {
            return Err(GeometryError::Parameter("gauge table abscissae must increase strictly".into()));
        }
        let (xa, ya) = knots[knots.len() - 2];
        let (xb, yb) = knots[knots.len() - 1];
        let last_slope = (yb - ya) / (xb - xa);
        let limit = if last_slope > T::zero() {
            T::infinity()
        } else if last_slope == T::zero() {
            yb
        } else {
            T::neg_infinity()
        };
        let eval = move |t: T| {
            let k = knots.partition_point(|&(x, _)| x <= t).clamp(1, knots.len() - 1);
            let (x0, y0) = knots[k - 1];
            let (x1, y1) = knots[k];
            y0 + (y1 - y0) * (t - x0) / (x1 - x0)
        };
        Ok(Self::new("table", domain, eval, Some(limit)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn limit_at_infinity(&self) -> Option<T> {
        self.limit_at_infinity
    }

    pub fn eval(&self, t: T) -> T {
        (self.eval)(t)
    }

    /// `t ↦ ω(αt)`; the limit at infinity is unchanged.
    pub fn rescaled(&self, alpha: T) -> Self {
        let inner = Arc::clone(&self.eval);
        Self {
            name: format!("{}(alpha*t)", self.name),
            domain: self.domain,
            eval: Arc::new(move |t| inner(alpha * t)),
            limit_at_infinity: self.limit_at_infinity,
        }
    }
}

/// Which gauge condition a sample broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeCondition {
    /// `ω(0) = 0`
    Origin,
    /// (ω1) strictly increasing
    Increasing,
    /// (ω2) subadditive
    Subadditive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeViolation<T> {
    pub condition: GaugeCondition,
    pub x: T,
    pub y: T,
    pub omega_x: T,
    pub omega_y: T,
    /// `ω(x + y)` for subadditivity; unused (`NaN`) otherwise.
    pub omega_sum: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaugeReport<T> {
    pub passed: bool,
    pub grid: Vec<T>,
    pub violation: Option<GaugeViolation<T>>,
}

/// Default upper end of the sampled range for ray gauges.
pub const RAY_SAMPLING_CAP: f64 = 100.0;

/// Sampling grid: uniform on `[0, 1]`, or `0` plus a geometric grid on
/// `[cap·10⁻⁴, cap]` for ray gauges.
pub fn gauge_grid<T: Real>(domain: Interval, grid_size: usize, cap: T) -> Vec<T> {
    let n = grid_size.max(2);
    match domain {
        Interval::Unit => (0..n).map(|i| T::from_count(i) / T::from_count(n - 1)).collect(),
        Interval::Ray => {
            let lo = cap * T::lit(1e-4);
            let ratio = (cap / lo).ln() / T::from_count((n - 2).max(1));
            std::iter::once(T::zero()).chain((0..n - 1).map(|i| lo * (ratio * T::from_count(i)).exp())).collect()
        }
    }
}

/// [`omega_validate_with_cap`] with the ray cap at [`RAY_SAMPLING_CAP`].
pub fn omega_validate<T: Real>(w: &OmegaGauge<T>, grid_size: usize) -> Result<GaugeReport<T>> {
    omega_validate_with_cap(w, grid_size, T::lit(RAY_SAMPLING_CAP))
}

/// Checks `ω(0) = 0`, (ω1) on adjacent grid points and (ω2) on every grid pair
/// `x ≤ y` with `x + y` in the domain. Stops at the first violation, scanning
/// `x` then `y` in increasing order.
pub fn omega_validate_with_cap<T: Real>(w: &OmegaGauge<T>, grid_size: usize, cap: T) -> Result<GaugeReport<T>> {
    if grid_size < 2 {
        return Err(GeometryError::Parameter("grid_size must be at least 2".into()));
    }
    if !(cap > T::zero()) || !cap.is_finite() {
        return Err(GeometryError::Parameter(format!("sampling cap must be positive, got {cap}")));
    }
    let grid = gauge_grid(w.domain(), grid_size, cap);
    let values: Vec<T> = grid.iter().map(|&t| w.eval(t)).collect();
    let slack = T::lit(1e-12);
    let report = |violation| GaugeReport { passed: false, grid: grid.clone(), violation: Some(violation) };

    let w0 = values[0];
    if !(w0.abs() <= slack) {
        return Ok(report(GaugeViolation {
            condition: GaugeCondition::Origin,
            x: T::zero(),
            y: T::zero(),
            omega_x: w0,
            omega_y: w0,
            omega_sum: T::nan(),
        }));
    }
    for i in 0..grid.len() - 1 {
        if !(values[i + 1] > values[i]) {
            return Ok(report(GaugeViolation {
                condition: GaugeCondition::Increasing,
                x: grid[i],
                y: grid[i + 1],
                omega_x: values[i],
                omega_y: values[i + 1],
                omega_sum: T::nan(),
            }));
        }
    }
    for i in 0..grid.len() {
        for j in i..grid.len() {
            let (x, y) = (grid[i], grid[j]);
            if !w.domain().contains(x + y) {
                break;
            }
            let sum = w.eval(x + y);
            let bound = values[i] + values[j];
            if !(sum <= bound + slack * (T::one() + bound)) {
                return Ok(report(GaugeViolation {
                    condition: GaugeCondition::Subadditive,
                    x,
                    y,
                    omega_x: values[i],
                    omega_y: values[j],
                    omega_sum: sum,
                }));
            }
        }
    }
    Ok(GaugeReport { passed: true, grid, violation: None })
}

/// The metric `ω ∘ d`.
#[derive(Debug, Clone)]
pub struct Snowflake<M, T> {
    gauge: OmegaGauge<T>,
    base: M,
}

impl<T: Real, M: Metric<T>> Snowflake<M, T> {
    /// Fails when the gauge is defined on a different interval than the base
    /// metric's range.
    pub fn new(gauge: OmegaGauge<T>, base: M) -> Result<Self> {
        if gauge.domain() != M::RANGE {
            return Err(GeometryError::GaugeDomainMismatch {
                gauge: gauge.domain().name(),
                metric: M::NAME,
                expected: M::RANGE.name(),
            });
        }
        Ok(Self { gauge, base })
    }

    pub fn gauge(&self) -> &OmegaGauge<T> {
        &self.gauge
    }
}

impl<T: Real, M: Metric<T>> Metric<T> for Snowflake<M, T> {
    type Point = M::Point;
    const NAME: &'static str = "snowflake";
    const RANGE: Interval = M::RANGE;

    fn distance(&self, a: &M::Point, b: &M::Point) -> Result<T> {
        Ok(self.gauge.eval(self.base.distance(a, b)?))
    }
}

/// `ω(d(x, y))` for a base metric `d`.
pub fn snowflake_distance<T: Real, M: Metric<T>>(w: &OmegaGauge<T>, base: M, x: &M::Point, y: &M::Point) -> Result<T> {
    Snowflake::new(w.clone(), base)?.distance(x, y)
}

/// Rescales a ray gauge to `ω'(t) = ω(αt)` with `ω'(1) = min(1, ½ω(∞))`, the
/// normal form for snowflaked Euclidean spaces. Returns `(ω', α)`.
pub fn normalize_euclidean_gauge<T: Real>(w: &OmegaGauge<T>) -> Result<(OmegaGauge<T>, T)> {
    if w.domain() != Interval::Ray {
        return Err(GeometryError::GaugeDomainMismatch {
            gauge: w.domain().name(),
            metric: "euclidean",
            expected: Interval::Ray.name(),
        });
    }
    let limit = w
        .limit_at_infinity()
        .ok_or_else(|| GeometryError::Parameter("the gauge must declare its limit at infinity".into()))?;
    if !(limit > T::zero()) {
        return Err(GeometryError::Parameter(format!("limit at infinity must be positive, got {limit}")));
    }
    let target = T::one().min(limit * T::lit(0.5));

    let mut hi = T::one();
    let mut doublings = 0;
    while w.eval(hi) < target {
        hi = hi * T::lit(2.0);
        doublings += 1;
        if doublings > 2000 || !hi.is_finite() {
            return Err(GeometryError::Numeric("could not bracket the normalization target".into()));
        }
    }
    let mut lo = T::zero();
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if w.eval(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let alpha = (lo + hi) * T::lit(0.5);
    let err = (w.eval(alpha) - target).abs();
    if !(err <= T::DEFAULT_TOL * T::one().max(target)) {
        return Err(GeometryError::Numeric(format!("bisection did not converge: |w(alpha) - target| = {err}")));
    }
    Ok((w.rescaled(alpha), alpha))
}

/// The two triples `(x, y, z₁)` and `(x, y, z₂)` in `𝕊ⁿ` whose projective
/// classes have equal pairwise distances although no orthogonal map (with any
/// choice of signs) carries one onto the other.
#[derive(Debug, Clone)]
pub struct ProjectiveCounterexample<T> {
    pub x: SpherePoint<T>,
    pub y: SpherePoint<T>,
    pub z1: SpherePoint<T>,
    pub z2: SpherePoint<T>,
    /// `[⟨x,z₁⟩, ⟨x,z₂⟩, ⟨y,z₁⟩, ⟨y,z₂⟩]`
    pub inner_products: [T; 4],
    /// `d_p` between `(x,y)`, `(x,z)`, `(y,z)` for `z = z₁` then `z = z₂`.
    pub distances: [[T; 3]; 2],
    /// For each sign pattern `(ε₀, ε₁, ε₂)`, the largest entry of
    /// `|Gram(ε₀x, ε₁y, ε₂z₁) − Gram(x, y, z₂)|`.
    pub gram_margins: [T; 8],
    pub verified: bool,
}

fn padded<T: Real>(head: [T; 3], ambient: usize) -> SpherePoint<T> {
    let mut v = head.to_vec();
    v.resize(ambient, T::zero());
    SpherePoint::from_unit_unchecked(v)
}

/// Builds and checks the counterexample in `𝕊ⁿ ⊂ ℝⁿ⁺¹`, `n ≥ 2`.
pub fn projective_counterexample<T: Real>(n: usize) -> Result<ProjectiveCounterexample<T>> {
    if n < 2 {
        return Err(GeometryError::Parameter(format!("the counterexample needs n >= 2, got {n}")));
    }
    let ambient = n + 1;
    let h = T::lit(0.5) * T::lit(2.0).sqrt();
    let q = T::lit(0.25);
    let x = padded([T::one(), T::zero(), T::zero()], ambient);
    let y = padded([h, h, T::zero()], ambient);
    let z1 = padded([q, q, T::lit(14.0).sqrt() * q], ambient);
    let z2 = padded([q, T::lit(-0.75), T::lit(6.0).sqrt() * q], ambient);

    let inner_products = [x.dot(&z1)?, x.dot(&z2)?, y.dot(&z1)?, y.dot(&z2)?];

    let proj = |p: &SpherePoint<T>| ProjPoint::new(p.clone());
    let (px, py, pz1, pz2) = (proj(&x), proj(&y), proj(&z1), proj(&z2));
    let distances = [
        [projective_distance(&px, &py)?, projective_distance(&px, &pz1)?, projective_distance(&py, &pz1)?],
        [projective_distance(&px, &py)?, projective_distance(&px, &pz2)?, projective_distance(&py, &pz2)?],
    ];

    let reference = linalg::gram(&[x.coords().to_vec(), y.coords().to_vec(), z2.coords().to_vec()]);
    let mut gram_margins = [T::zero(); 8];
    for (pattern, margin) in gram_margins.iter_mut().enumerate() {
        let sign = |bit: usize| if pattern >> bit & 1 == 1 { -T::one() } else { T::one() };
        let family = [
            linalg::scale(x.coords(), sign(0)),
            linalg::scale(y.coords(), sign(1)),
            linalg::scale(z1.coords(), sign(2)),
        ];
        let g = linalg::gram(&family);
        *margin =
            g.iter().flatten().zip(reference.iter().flatten()).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()));
    }

    let tight = T::lit(1e-12);
    let verified = (inner_products[0] - inner_products[1]).abs() <= tight
        && (inner_products[2] + inner_products[3]).abs() <= tight
        && inner_products[2].abs() > tight
        && distances[0].iter().zip(&distances[1]).all(|(a, b)| (*a - *b).abs() <= tight)
        && gram_margins.iter().all(|&m| m > T::lit(0.1));

    Ok(ProjectiveCounterexample { x, y, z1, z2, inner_products, distances, gram_margins, verified })
}

/// An orthogonal `A` with `A·source[i] = target[i]`, or `None` when the Gram
/// matrices differ by more than `tol`. The completion on the orthogonal
/// complement follows the same canonical rule as isometry fitting.
pub fn sphere_fit_rotation<T: Real>(
    source: &[SpherePoint<T>],
    target: &[SpherePoint<T>],
    tol: T,
) -> Result<Option<Matrix<T>>> {
    check_dims(source.len(), target.len())?;
    let Some(first) = source.first() else {
        return Err(GeometryError::Parameter("at least one point pair is required".into()));
    };
    let n = first.ambient_dim();
    for p in source.iter().chain(target) {
        check_dims(n, p.ambient_dim())?;
    }
    let s: Vec<Vec<T>> = source.iter().map(|p| p.coords().to_vec()).collect();
    let t: Vec<Vec<T>> = target.iter().map(|p| p.coords().to_vec()).collect();
    let gs = linalg::gram(&s);
    let gt = linalg::gram(&t);
    let mismatch = gs.iter().flatten().zip(gt.iter().flatten()).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()));
    if mismatch > tol {
        return Ok(None);
    }
    let (u, _) = linalg::orthogonal_map(n, &s, &t, T::DEPENDENCE_TOL)?;
    Ok(Some(u))
}

/// 2-point homogeneity of `Pⁿ`: when `d_p(ū,v̄) = d_p(x̄,ȳ)`, returns the sign
/// `ε` and an orthogonal `A` with `A·u = x`, `A·v = ε·y`.
pub fn projective_pair_rotation<T: Real>(
    u: &SpherePoint<T>,
    v: &SpherePoint<T>,
    x: &SpherePoint<T>,
    y: &SpherePoint<T>,
    tol: T,
) -> Result<Option<(T, Matrix<T>)>> {
    for eps in [T::one(), -T::one()] {
        let ey = SpherePoint::from_unit_unchecked(linalg::scale(y.coords(), eps));
        if let Some(a) = sphere_fit_rotation(&[u.clone(), v.clone()], &[x.clone(), ey], tol)? {
            return Ok(Some((eps, a)));
        }
    }
    Ok(None)
}
