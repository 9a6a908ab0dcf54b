//! Point types: model points of `Hⁿ = ℝⁿ`, unit-sphere points and projective classes.

use std::ops::Index;

use crate::error::{check_dims, GeometryError, Result};
use crate::linalg;
use crate::scalar::{Real, Tolerance};

/// A point of the model `Hⁿ(ℝ) = ℝⁿ`, also used for plain Euclidean vectors.
///
/// Coordinates are finite and there is at least one of them.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Real> Point<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeometryError::EmptyPoint);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite { index });
        }
        Ok(Self { coords })
    }

    /// The origin `0⃗` of `ℝⁿ`. Panics if `dim == 0`.
    pub fn origin(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self { coords: vec![T::zero(); dim] }
    }

    /// The `i`-th standard basis vector of `ℝⁿ`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        Self { coords: linalg::unit_vector(dim, i) }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn dot(&self, other: &Self) -> Result<T> {
        check_dims(self.dim(), other.dim())?;
        Ok(linalg::dot(&self.coords, &other.coords))
    }

    pub fn norm(&self) -> T {
        linalg::norm(&self.coords)
    }

    pub fn scaled(&self, s: T) -> Self {
        Self { coords: linalg::scale(&self.coords, s) }
    }

    pub fn neg(&self) -> Self {
        self.scaled(-T::one())
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| *c == T::zero())
    }

    /// Coordinate-wise comparison under `tol`.
    pub fn approx_eq(&self, other: &Self, tol: Tolerance<T>) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(&a, &b)| tol.eq(a, b))
    }

    /// Unit vector in the direction of `self`.
    pub fn normalized(&self) -> Result<Self> {
        let len = self.norm();
        if len == T::zero() {
            return Err(GeometryError::Degenerate("cannot normalize the zero vector"));
        }
        Ok(self.scaled(T::one() / len))
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<T>) -> Self {
        debug_assert!(!coords.is_empty());
        Self { coords }
    }
}

impl<T> Index<usize> for Point<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

impl<T: Real> TryFrom<Vec<T>> for Point<T> {
    type Error = GeometryError;

    fn try_from(coords: Vec<T>) -> Result<Self> {
        Self::new(coords)
    }
}

/// A point of the unit sphere `𝕊ⁿ ⊂ ℝⁿ⁺¹`. Construction normalizes.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint<T> {
    coords: Vec<T>,
}

impl<T: Real> SpherePoint<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        let p = Point::new(coords)?.normalized()?;
        Ok(Self { coords: p.into_coords() })
    }

    /// Ambient dimension `n + 1`.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn antipode(&self) -> Self {
        Self { coords: linalg::scale(&self.coords, -T::one()) }
    }

    pub fn dot(&self, other: &Self) -> Result<T> {
        check_dims(self.ambient_dim(), other.ambient_dim())?;
        Ok(linalg::dot(&self.coords, &other.coords))
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance<T>) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.coords.iter().zip(&other.coords).all(|(&a, &b)| tol.eq(a, b))
    }

    pub(crate) fn from_unit_unchecked(coords: Vec<T>) -> Self {
        Self { coords }
    }
}

/// A point of `Pⁿ(ℝ)`: the class `{u, −u}` of a unit vector, kept through one
/// representative.
#[derive(Debug, Clone)]
pub struct ProjPoint<T> {
    rep: SpherePoint<T>,
}

impl<T: Real> ProjPoint<T> {
    pub fn new(rep: SpherePoint<T>) -> Self {
        Self { rep }
    }

    pub fn from_coords(coords: Vec<T>) -> Result<Self> {
        Ok(Self::new(SpherePoint::new(coords)?))
    }

    pub fn rep(&self) -> &SpherePoint<T> {
        &self.rep
    }

    /// Same class: representatives agree up to sign.
    pub fn same_class(&self, other: &Self, tol: Tolerance<T>) -> bool {
        self.rep.approx_eq(&other.rep, tol) || self.rep.approx_eq(&other.rep.antipode(), tol)
    }
}

impl<T: Real> From<SpherePoint<T>> for ProjPoint<T> {
    fn from(rep: SpherePoint<T>) -> Self {
        Self::new(rep)
    }
}
