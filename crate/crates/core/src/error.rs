use thiserror::Error;

/// Errors raised by the geometry routines.
///
/// Numeric payloads are stored as `f64` regardless of the scalar in use so the
/// error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a point needs at least one coordinate")]
    EmptyPoint,

    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },

    #[error("{what} is outside its domain (value {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error(
        "not a partial isometry: pair ({i}, {j}) has source distance {source_distance} \
         but target distance {target_distance}"
    )]
    NotPartialIsometry { i: usize, j: usize, source_distance: f64, target_distance: f64 },

    #[error("matrix is not orthogonal (max |UᵀU - I| = {defect})")]
    NotOrthogonal { defect: f64 },

    #[error("gauge domain {gauge} does not match the {metric} metric, which needs {expected}")]
    GaugeDomainMismatch { gauge: &'static str, metric: &'static str, expected: &'static str },

    #[error("numerical failure: {0}")]
    Numeric(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(GeometryError::DimensionMismatch { left, right })
    }
}
