//! Random points, directions, orthogonal matrices and isometries for
//! property checks and scans. All draws go through a caller-supplied RNG so
//! results are reproducible from a seed.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::isometry::Isometry;
use crate::linalg::{self, Matrix};
use crate::point::Point;
use crate::scalar::Real;

/// Coordinates uniform in `[−half_width, half_width]`.
pub fn random_point<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize, half_width: f64) -> Point<T> {
    let coords = (0..dim).map(|_| T::lit(rng.random_range(-half_width..=half_width))).collect();
    Point::new(coords).expect("finite draws")
}

/// Uniformly distributed unit vector.
pub fn random_unit<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Point<T> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let len = linalg::norm(&v);
        if len > 1e-6 {
            let coords = v.into_iter().map(|c| T::lit(c / len)).collect();
            return Point::new(coords).expect("finite draws");
        }
    }
}

/// Orthogonal matrix from Gram–Schmidt on a Gaussian matrix.
pub fn random_orthogonal<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Matrix<T> {
    let columns: Vec<Vec<T>> = (0..dim).map(|_| random_unit::<T, _>(rng, dim).into_coords()).collect();
    let (basis, _) = linalg::orthonormalize(&columns, T::DEPENDENCE_TOL);
    let basis = linalg::complete_basis(basis, dim);
    Matrix::from_columns(&basis).expect("square by construction")
}

/// Random `(a, U)` with `a` uniform in the box of half-width `half_width`.
pub fn random_isometry<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize, half_width: f64) -> Isometry<T> {
    let a = random_point(rng, dim, half_width);
    Isometry::new(a, random_orthogonal(rng, dim)).expect("orthogonal by construction")
}
