//! Thin adapters between `ndarray` storage and `faer` factorizations.

use crate::error::{Error, Result};
use faer::prelude::*;
use ndarray::{Array1, Array2};
use num_complex::Complex64;

pub(crate) fn to_faer(a: &Array2<f64>) -> Mat<f64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| a[[i, j]])
}

pub(crate) fn from_faer(m: &Mat<f64>) -> Array2<f64> {
    Array2::from_shape_fn((m.nrows(), m.ncols()), |(i, j)| m[(i, j)])
}

/// LU factorization with partial pivoting, kept for repeated solves.
pub struct LuFactors {
    lu: faer::linalg::solvers::PartialPivLu<f64>,
    n: usize,
}

impl LuFactors {
    pub fn new(a: &Array2<f64>) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::Conditioning("LU requires a square matrix".into()));
        }
        let lu = to_faer(a).partial_piv_lu();
        Ok(Self { lu, n: a.nrows() })
    }

    pub fn solve_vec(&self, b: &Array1<f64>) -> Array1<f64> {
        let rhs = Mat::from_fn(self.n, 1, |i, _| b[i]);
        let x = self.lu.solve(&rhs);
        Array1::from_shape_fn(self.n, |i| x[(i, 0)])
    }

    pub fn solve_mat(&self, b: &Array2<f64>) -> Array2<f64> {
        let rhs = Mat::from_fn(b.nrows(), b.ncols(), |i, j| b[[i, j]]);
        let x = self.lu.solve(&rhs);
        from_faer(&x)
    }

    /// Solves with a complex right-hand side through the real factorization.
    pub fn solve_cvec(&self, b: &Array1<Complex64>) -> Array1<Complex64> {
        let rhs = Mat::from_fn(self.n, 2, |i, j| if j == 0 { b[i].re } else { b[i].im });
        let x = self.lu.solve(&rhs);
        Array1::from_shape_fn(self.n, |i| Complex64::new(x[(i, 0)], x[(i, 1)]))
    }
}

/// `A⁻¹` as a dense matrix.
pub fn inverse(a: &Array2<f64>) -> Result<Array2<f64>> {
    let n = a.nrows();
    let lu = LuFactors::new(a)?;
    let eye = Array2::eye(n);
    let inv = lu.solve_mat(&eye);
    if !inv.iter().all(|v| v.is_finite()) {
        return Err(Error::Conditioning("matrix inverse is not finite".into()));
    }
    Ok(inv)
}

/// Complex LU solve for dense complex systems.
pub fn solve_complex(a: &Array2<Complex64>, b: &Array1<Complex64>) -> Result<Array1<Complex64>> {
    if a.nrows() != a.ncols() || a.nrows() != b.len() {
        return Err(Error::Conditioning("complex solve dimension mismatch".into()));
    }
    let n = a.nrows();
    let am = Mat::<c64>::from_fn(n, n, |i, j| c64::new(a[[i, j]].re, a[[i, j]].im));
    let lu = am.partial_piv_lu();
    let rhs = Mat::<c64>::from_fn(n, 1, |i, _| c64::new(b[i].re, b[i].im));
    let x = lu.solve(&rhs);
    Ok(Array1::from_shape_fn(n, |i| Complex64::new(x[(i, 0)].re, x[(i, 0)].im)))
}

/// Eigendecomposition of a symmetric matrix; eigenvalues ascending.
pub fn sym_eig(a: &Array2<f64>) -> Result<(Array1<f64>, Array2<f64>)> {
    if a.nrows() != a.ncols() {
        return Err(Error::Spectral("eigendecomposition requires a square matrix".into()));
    }
    let evd = to_faer(a)
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Spectral(format!("self-adjoint eigendecomposition failed: {e:?}")))?;
    let n = a.nrows();
    let s = evd.S();
    let vals = Array1::from_shape_fn(n, |i| s.column_vector()[i]);
    let vecs = Array2::from_shape_fn((n, n), |(i, j)| evd.U()[(i, j)]);
    Ok((vals, vecs))
}
