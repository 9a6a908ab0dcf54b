//! Dense vector and square-matrix helpers.
//!
//! Dimensions in this crate are small (tens at most), so everything here is a
//! plain row-major `Vec<T>`.

use crate::error::{check_dims, GeometryError, Result};
use crate::scalar::Real;

pub fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Euclidean norm, scaled by the largest magnitude so it cannot overflow
/// before the final multiplication.
pub fn norm<T: Real>(a: &[T]) -> T {
    let scale = a.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
    if scale == T::zero() || !scale.is_finite() {
        return scale;
    }
    let sum: T = a.iter().map(|&x| (x / scale) * (x / scale)).sum();
    scale * sum.sqrt()
}

pub fn sub<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn add<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn scale<T: Real>(a: &[T], s: T) -> Vec<T> {
    a.iter().map(|&x| x * s).collect()
}

/// `a + s * b`
pub fn axpy<T: Real>(a: &[T], s: T, b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x + s * y).collect()
}

pub fn unit_vector<T: Real>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// Square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GeometryError::EmptyPoint);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            check_dims(n, row.len())?;
            data.extend(row);
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(GeometryError::NonFinite { index });
        }
        Ok(Self { n, data })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<T>]) -> Result<Self> {
        let n = columns.len();
        let mut m = Self::zeros(n);
        for (j, col) in columns.iter().enumerate() {
            check_dims(n, col.len())?;
            for (i, &v) in col.iter().enumerate() {
                m.data[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        check_dims(self.n, v.len())?;
        Ok(self.data.chunks(self.n).map(|row| dot(row, v)).collect())
    }

    /// Largest entry of `|MᵀM - I|`.
    pub fn orthogonality_defect(&self) -> T {
        let n = self.n;
        let mut worst = T::zero();
        for i in 0..n {
            for j in i..n {
                let g: T = (0..n).map(|k| self.get(k, i) * self.get(k, j)).sum();
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }

    pub fn is_orthogonal(&self, tol: T) -> bool {
        self.orthogonality_defect() <= tol
    }

    /// Nearest orthogonal matrix (orthogonal polar factor) by Newton–Schulz
    /// iteration `X ← X (3I − XᵀX) / 2`.
    ///
    /// Only valid for matrices already close to orthogonal; a defect of 0.5 or
    /// more is rejected.
    pub fn polar_projection(&self) -> Result<Self> {
        let defect = self.orthogonality_defect();
        if !(defect < T::lit(0.5)) {
            return Err(GeometryError::NotOrthogonal { defect: defect.to_f64_lossy() });
        }
        let n = self.n;
        let three = T::lit(3.0);
        let half = T::lit(0.5);
        let mut x = self.clone();
        for _ in 0..64 {
            if x.orthogonality_defect() <= T::epsilon() * T::from_count(4 * n) {
                break;
            }
            let xtx = x.transpose().mul(&x)?;
            let mut corr = xtx;
            for (idx, v) in corr.data.iter_mut().enumerate() {
                let diag = if idx / n == idx % n { three } else { T::zero() };
                *v = (diag - *v) * half;
            }
            x = x.mul(&corr)?;
        }
        Ok(x)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data.iter().zip(&other.data).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}

/// Removes from `v` its components along the (orthonormal) `basis`, twice.
fn reorthogonalize<T: Real>(v: &[T], basis: &[Vec<T>]) -> Vec<T> {
    let mut r = v.to_vec();
    for _ in 0..2 {
        for e in basis {
            let c = dot(&r, e);
            r = axpy(&r, -c, e);
        }
    }
    r
}

fn is_independent<T: Real>(residual: &[T], original: &[T], tol: T) -> bool {
    norm(residual) > tol * T::one().max(norm(original))
}

/// Modified Gram–Schmidt with one re-orthogonalization pass.
///
/// Returns the orthonormal basis and the indices of the input vectors that
/// contributed to it; a vector whose residual norm is at most
/// `tol * max(1, ‖v‖)` is treated as dependent.
pub fn orthonormalize<T: Real>(vectors: &[Vec<T>], tol: T) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut kept = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let r = reorthogonalize(v, &basis);
        if is_independent(&r, v, tol) {
            let len = norm(&r);
            basis.push(scale(&r, T::one() / len));
            kept.push(idx);
        }
    }
    (basis, kept)
}

/// Extends an orthonormal family to an orthonormal basis of `ℝⁿ` using
/// coordinate vectors. At each step the coordinate vector with the largest
/// residual is taken (lowest index on ties), which makes the completion
/// canonical and well conditioned.
pub fn complete_basis<T: Real>(mut basis: Vec<Vec<T>>, n: usize) -> Vec<Vec<T>> {
    let mut used = vec![false; n];
    while basis.len() < n {
        let mut best: Option<(usize, Vec<T>, T)> = None;
        for (i, taken) in used.iter().enumerate() {
            if *taken {
                continue;
            }
            let r = reorthogonalize(&unit_vector(n, i), &basis);
            let len = norm(&r);
            if best.as_ref().is_none_or(|(_, _, l)| len > *l) {
                best = Some((i, r, len));
            }
        }
        let (i, r, len) = best.expect("a coordinate vector remains while basis is incomplete");
        used[i] = true;
        basis.push(scale(&r, T::one() / len));
    }
    basis
}

/// Linear orthogonal map sending each `source[i]` to `target[i]`.
///
/// The two families must have (approximately) equal Gram matrices; the caller
/// checks that. Both families are orthonormalized jointly, keeping an index only
/// when it is independent on both sides, then each basis is completed
/// canonically and `U = F Eᵀ`. Returns the polar-projected matrix and the rank
/// of the source family.
pub fn orthogonal_map<T: Real>(n: usize, source: &[Vec<T>], target: &[Vec<T>], tol: T) -> Result<(Matrix<T>, usize)> {
    check_dims(source.len(), target.len())?;
    let mut e: Vec<Vec<T>> = Vec::new();
    let mut f: Vec<Vec<T>> = Vec::new();
    for (s, t) in source.iter().zip(target) {
        check_dims(n, s.len())?;
        check_dims(n, t.len())?;
        if e.len() == n {
            break;
        }
        let rs = reorthogonalize(s, &e);
        let rt = reorthogonalize(t, &f);
        if is_independent(&rs, s, tol) && is_independent(&rt, t, tol) {
            let ls = norm(&rs);
            let lt = norm(&rt);
            e.push(scale(&rs, T::one() / ls));
            f.push(scale(&rt, T::one() / lt));
        }
    }
    let rank = e.len();
    let e = complete_basis(e, n);
    let f = complete_basis(f, n);
    let mut u = Matrix::zeros(n);
    for (ev, fv) in e.iter().zip(&f) {
        for (i, &fi) in fv.iter().enumerate() {
            for (j, &ej) in ev.iter().enumerate() {
                u.data[i * n + j] = u.data[i * n + j] + fi * ej;
            }
        }
    }
    Ok((u.polar_projection()?, rank))
}

/// Gram matrix of a family of vectors.
pub fn gram<T: Real>(vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    vectors.iter().map(|a| vectors.iter().map(|b| dot(a, b)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_survives_huge_coordinates() {
        let v = [3e200f64, 4e200];
        assert!((norm(&v) / 5e200 - 1.0).abs() < 1e-15);
        assert_eq!(norm::<f64>(&[0.0, 0.0]), 0.0);
    }

    #[test]
    fn orthonormalize_drops_dependent_vectors() {
        let vs = vec![vec![1.0f64, 1.0, 0.0], vec![2.0, 2.0, 0.0], vec![0.0, 1.0, 0.0]];
        let (basis, kept) = orthonormalize(&vs, 1e-12);
        assert_eq!(kept, vec![0, 2]);
        assert_eq!(basis.len(), 2);
        assert!(dot(&basis[0], &basis[1]).abs() < 1e-15);
    }

    #[test]
    fn completion_is_identity_on_coordinate_complement() {
        let basis = vec![vec![1.0, 0.0, 0.0]];
        let full = complete_basis(basis, 3);
        assert_eq!(full[1], vec![0.0, 1.0, 0.0]);
        assert_eq!(full[2], vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn orthogonal_map_rotates_plane() {
        let (u, rank) = orthogonal_map::<f64>(2, &[vec![1.0, 0.0]], &[vec![0.0, 1.0]], 1e-12).unwrap();
        assert_eq!(rank, 1);
        let img = u.mul_vec(&[1.0, 0.0]).unwrap();
        assert!((img[0]).abs() < 1e-15 && (img[1] - 1.0).abs() < 1e-15);
        assert!(u.is_orthogonal(1e-14));
    }

    #[test]
    fn polar_projection_repairs_small_defects() {
        let m = Matrix::from_rows(vec![vec![1.0 + 1e-7, 2e-7], vec![-1e-7, 1.0 - 3e-7]]).unwrap();
        let p = m.polar_projection().unwrap();
        assert!(p.orthogonality_defect() < 1e-15);
        assert!(p.max_abs_diff(&Matrix::identity(2)) < 1e-6);
    }

    #[test]
    fn polar_projection_rejects_far_matrices() {
        let m = Matrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(m.polar_projection(), Err(GeometryError::NotOrthogonal { .. })));
    }
}
