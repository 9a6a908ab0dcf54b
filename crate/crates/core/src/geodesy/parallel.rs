//! Lines through a point that miss a given line.
//!
//! A line `L` not through `0⃗` can be written `L = {sinh(t)·a + cosh(t)·b}`
//! with `a`, `b` linearly independent. For `|μ| > 1` the span of `μa + b` misses
//! `L`: `s(μa + b) = sinh(t)a + cosh(t)b` would force `sinh t = sμ` and
//! `cosh t = s`, so `|sinh t| > cosh t`. Distinct `μ` give distinct lines.

use crate::error::{check_dims, GeometryError, Result};
use crate::geodesy::line::Geodesic;
use crate::isometry::Isometry;
use crate::linalg;
use crate::metric::{bracket, hyperbolic_distance};
use crate::point::Point;
use crate::scalar::{Real, Tolerance};

/// `sinh(t)·a + cosh(t)·b`.
pub fn sinh_cosh_point<T: Real>(a: &Point<T>, b: &Point<T>, t: T) -> Point<T> {
    let v = linalg::add(&linalg::scale(a.coords(), t.sinh()), &linalg::scale(b.coords(), t.cosh()));
    Point::new(v).expect("finite for finite parameters")
}

/// Writes a line `L = T_y ∘ γ_z` not through `0⃗` as `(a, b)` with
/// `a = z + ⟨z,y⟩/([y]+1)·y` and `b = y`, so that
/// `L.point_at(t) = sinh(t)·a + cosh(t)·b`.
pub fn line_to_sinh_cosh<T: Real>(line: &Geodesic<T>, tol: Tolerance<T>) -> Result<(Point<T>, Point<T>)> {
    if line.passes_through_origin(tol.abs) {
        return Err(GeometryError::Degenerate("the line passes through the origin"));
    }
    let y = line.base();
    let z = line.direction();
    let coef = z.dot(y)? / (bracket(y) + T::one());
    let a = Point::new(linalg::axpy(z.coords(), coef, y.coords()))?;
    Ok((a, y.clone()))
}

/// Inverse of [`line_to_sinh_cosh`]. Only pairs that come from a unit-speed
/// line are accepted: `z = a − ⟨a,b⟩/([b]([b]+1))·b` must be a unit vector.
pub fn sinh_cosh_to_line<T: Real>(a: &Point<T>, b: &Point<T>, tol: Tolerance<T>) -> Result<Geodesic<T>> {
    let bb = bracket(b);
    let coef = a.dot(b)? / (bb * (bb + T::one()));
    let z = Point::new(linalg::axpy(a.coords(), -coef, b.coords()))?;
    if !tol.eq(z.norm(), T::one()) {
        return Err(GeometryError::Parameter(format!(
            "(a, b) does not describe a unit-speed hyperbolic line: recovered direction has norm {}",
            z.norm()
        )));
    }
    Geodesic::new(b.clone(), z)
}

fn check_independent<T: Real>(a: &Point<T>, b: &Point<T>) -> Result<()> {
    check_dims(a.dim(), b.dim())?;
    let nb = b.norm();
    let na = a.norm();
    if na == T::zero() || nb == T::zero() {
        return Err(GeometryError::Degenerate("a and b must be linearly independent"));
    }
    let (basis, _) = linalg::orthonormalize(&[b.coords().to_vec()], T::DEPENDENCE_TOL);
    let along = linalg::dot(a.coords(), &basis[0]);
    let residual = linalg::norm(&linalg::axpy(a.coords(), -along, &basis[0]));
    if residual <= T::DEPENDENCE_TOL * na.max(T::one()) {
        return Err(GeometryError::Degenerate("a and b must be linearly independent"));
    }
    Ok(())
}

/// The line through `0⃗` spanned by `μa + b`, disjoint from
/// `{sinh(t)a + cosh(t)b}` whenever `|μ| > 1`.
pub fn parallel_family<T: Real>(a: &Point<T>, b: &Point<T>, mu: T) -> Result<Geodesic<T>> {
    if !(mu.abs() > T::one()) || !mu.is_finite() {
        return Err(GeometryError::Parameter(format!("|mu| must exceed 1, got {mu}")));
    }
    check_independent(a, b)?;
    let c = Point::new(linalg::axpy(b.coords(), mu, a.coords()))?;
    Geodesic::through_origin(c)
}

/// Lines through `point` missing `line`, one per `μ`: move `point` to `0⃗`,
/// build [`parallel_family`] there and move back.
pub fn parallels_through<T: Real>(
    point: &Point<T>,
    line: &Geodesic<T>,
    mus: &[T],
    tol: Tolerance<T>,
) -> Result<Vec<Geodesic<T>>> {
    check_dims(point.dim(), line.dim())?;
    let to_origin = Isometry::from_translation(point.neg());
    let back = Isometry::from_translation(point.clone());
    let moved = line.transformed(&to_origin)?;
    let (a, b) = line_to_sinh_cosh(&moved, tol)?;
    mus.iter().map(|&mu| parallel_family(&a, &b, mu)?.transformed(&back)).collect()
}

/// Parameter grid and refinement settings for [`scan_min_gap`].
#[derive(Debug, Clone, Copy)]
pub struct GapScan<T> {
    pub lo: T,
    pub hi: T,
    /// Grid points per parameter; the scan evaluates `per_axis²` pairs.
    pub per_axis: usize,
    /// Upper bound on alternating golden-section passes after the grid; the
    /// refinement stops early once neither parameter moves.
    pub refine_passes: usize,
}

impl<T: Real> Default for GapScan<T> {
    /// `[−10, 10]²` with `100 × 100 = 10⁴` samples.
    fn default() -> Self {
        Self { lo: T::lit(-10.0), hi: T::lit(10.0), per_axis: 100, refine_passes: 200 }
    }
}

/// Smallest distance found between two parametrized curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport<T> {
    pub gap: T,
    pub s: T,
    pub t: T,
}

impl<T: Real> GapReport<T> {
    /// The scan's disjointness verdict: gap strictly above `1e−4`.
    pub fn disjoint(&self) -> bool {
        self.gap > T::lit(1e-4)
    }
}

fn golden_min<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T) -> T {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..80 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

/// Grid scan of `d_h(first(s), second(t))` over `[lo, hi]²`, then alternating
/// golden-section refinement of the best pair within one grid cell.
///
/// This is a falsification harness, not a proof of disjointness.
pub fn scan_min_gap<T, F, G>(first: F, second: G, cfg: GapScan<T>) -> Result<GapReport<T>>
where
    T: Real,
    F: Fn(T) -> Point<T>,
    G: Fn(T) -> Point<T>,
{
    if cfg.per_axis < 2 || !(cfg.hi > cfg.lo) {
        return Err(GeometryError::Parameter("scan needs at least 2 samples per axis on a non-empty range".into()));
    }
    let step = (cfg.hi - cfg.lo) / T::from_count(cfg.per_axis - 1);
    let grid: Vec<T> = (0..cfg.per_axis).map(|i| cfg.lo + step * T::from_count(i)).collect();
    let firsts: Vec<Point<T>> = grid.iter().map(|&s| first(s)).collect();
    let seconds: Vec<Point<T>> = grid.iter().map(|&t| second(t)).collect();

    let mut best = GapReport { gap: T::infinity(), s: cfg.lo, t: cfg.lo };
    for (p, &s) in firsts.iter().zip(&grid) {
        for (q, &t) in seconds.iter().zip(&grid) {
            let d = hyperbolic_distance(p, q)?;
            if d < best.gap {
                best = GapReport { gap: d, s, t };
            }
        }
    }

    let dist = |s: T, t: T| hyperbolic_distance(&first(s), &second(t)).unwrap_or(T::infinity());
    let clamp = |v: T| v.max(cfg.lo).min(cfg.hi);
    let (mut s, mut t) = (best.s, best.t);
    let settled = |old: T, new: T| (new - old).abs() <= T::epsilon() * (T::one() + new.abs()) * T::lit(16.0);
    for _ in 0..cfg.refine_passes {
        let s_next = golden_min(|u| dist(u, t), clamp(s - step), clamp(s + step));
        let t_next = golden_min(|u| dist(s_next, u), clamp(t - step), clamp(t + step));
        let done = settled(s, s_next) && settled(t, t_next);
        (s, t) = (s_next, t_next);
        if done {
            break;
        }
    }
    let refined = dist(s, t);
    if refined < best.gap {
        best = GapReport { gap: refined, s, t };
    }
    Ok(best)
}
