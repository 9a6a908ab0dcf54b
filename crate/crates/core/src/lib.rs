//! Elementary real hyperbolic space on `ℝⁿ`.
//!
//! Points of `Hⁿ(ℝ)` are plain coordinate vectors and the distance is
//!
//! ```text
//! d_h(x, y) = arcosh([x][y] − ⟨x,y⟩),   [x] = √(1 + ‖x‖²)
//! ```
//!
//! On top of that metric the crate provides
//!
//! - the translations `T_y` and isometries in the form `T_a ∘ U` ([`isometry`]),
//!   including extension of finite partial isometries to global ones;
//! - geodesics, segments, collinearity, spheres, angles and an explicit family
//!   of lines through a point that miss a given line ([`geodesy`]);
//! - the great-circle and projective metrics, gauge functions `ω` that turn a
//!   metric `d` into `ω ∘ d`, and the projective 3-point counterexample
//!   ([`homogeneity`]).
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*64` aliases below
//! are the usual entry points.

// `!(a <= b)` is used on purpose so that NaN fails every check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geodesy;
pub mod homogeneity;
pub mod isometry;
pub mod linalg;
pub mod metric;
pub mod point;
pub mod sample;
pub mod scalar;

pub use error::{GeometryError, Result};
pub use geodesy::{Angle, Geodesic};
pub use homogeneity::{omega_validate, snowflake_distance, GaugeReport, OmegaGauge, Snowflake};
pub use isometry::{fit_isometry, FittedIsometry, Isometry, Translation};
pub use linalg::Matrix;
pub use metric::{
    bracket, euclidean_distance, hyperbolic_distance, projective_distance, sphere_distance, Interval, Metric,
};
pub use point::{Point, ProjPoint, SpherePoint};
pub use scalar::{Real, Tolerance};

pub type Point64 = Point<f64>;
pub type Point32 = Point<f32>;
pub type SpherePoint64 = SpherePoint<f64>;
pub type ProjPoint64 = ProjPoint<f64>;
pub type Matrix64 = Matrix<f64>;
pub type Isometry64 = Isometry<f64>;
pub type Isometry32 = Isometry<f32>;
pub type Geodesic64 = Geodesic<f64>;
pub type Angle64 = Angle<f64>;
pub type OmegaGauge64 = OmegaGauge<f64>;
