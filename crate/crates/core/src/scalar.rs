//! Scalar abstraction.
//!
//! Every geometric routine in this crate is written against [`Real`], which is
//! implemented for `f32` and `f64`. Tolerances are part of the scalar because a
//! threshold that is sensible in double precision is meaningless in single.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar used by the geometry.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Default absolute and relative equality tolerance.
    const DEFAULT_TOL: Self;
    /// Slack allowed when clamping an argument of `arcosh`/`arccos` back into its domain.
    const CLAMP_SLACK: Self;
    /// Residual norm below which a vector is treated as linearly dependent.
    const DEPENDENCE_TOL: Self;
    /// Entrywise bound on `UᵀU - I` for a matrix to count as orthogonal.
    const ORTHO_TOL: Self;
    /// Tolerance accepted when matching pairwise distances of a partial isometry.
    const FIT_TOL: Self;

    /// Lossy conversion from an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const DEFAULT_TOL: Self = 1e-9;
    const CLAMP_SLACK: Self = 1e-9;
    const DEPENDENCE_TOL: Self = 1e-12;
    const ORTHO_TOL: Self = 1e-9;
    const FIT_TOL: Self = 1e-6;
}

impl Real for f32 {
    const DEFAULT_TOL: Self = 1e-4;
    const CLAMP_SLACK: Self = 1e-4;
    const DEPENDENCE_TOL: Self = 1e-5;
    const ORTHO_TOL: Self = 1e-4;
    const FIT_TOL: Self = 1e-3;
}

/// Mixed absolute/relative comparison: `|a - b| <= abs + rel * max(|a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    pub abs: T,
    pub rel: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self { abs: T::DEFAULT_TOL, rel: T::DEFAULT_TOL }
    }
}

impl<T: Real> Tolerance<T> {
    pub fn new(abs: T, rel: T) -> Self {
        Self { abs, rel }
    }

    /// Same value for the absolute and relative parts.
    pub fn uniform(tol: T) -> Self {
        Self { abs: tol, rel: tol }
    }

    pub fn bound(&self, scale: T) -> T {
        self.abs + self.rel * scale.abs()
    }

    pub fn eq(&self, a: T, b: T) -> bool {
        (a - b).abs() <= self.bound(a.abs().max(b.abs()))
    }

    pub fn is_zero(&self, a: T) -> bool {
        a.abs() <= self.abs
    }
}
