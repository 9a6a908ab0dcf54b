//! Lines, segments, spheres, angles and the failure of the parallel postulate.
//!
//! Every unit-speed geodesic through `a` is `t ↦ T_a(sinh(t) z)` for a unit
//! vector `z`, so a line is stored as that pair. Through `0⃗` hyperbolic lines are
//! exactly the Euclidean lines, which is what makes angles at `0⃗` and the
//! parallel construction explicit.

mod angle;
mod line;
mod parallel;

pub use angle::Angle;
pub use line::{h1_embedding, line_through, metrically_collinear, segment_contains, sphere_euclidean_radius, Geodesic};
pub use parallel::{
    line_to_sinh_cosh, parallel_family, parallels_through, scan_min_gap, sinh_cosh_point, sinh_cosh_to_line, GapReport,
    GapScan,
};
