use nalgebra::DMatrix;

use super::{GridFunction, GridSpec1D};
use crate::coeffs::kappa_recursion;
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::{riesz_constant, Real};

/// `(M−1)×(M−1)` lower-Hessenberg Toeplitz matrix with entry
/// `(i, j) = κ_{p, i−j+1}` (zero above the first superdiagonal).
pub fn assemble_galpha<T: Real>(alpha: T, p: usize, m: usize) -> Result<DMatrix<T>> {
    if m < 4 {
        return Err(Error::InvalidGrid(format!(
            "M = {m}; at least 4 cells needed"
        )));
    }
    domain::alpha_half_open(alpha)?;
    let kappa = kappa_recursion(p, alpha, m)?.values;
    let n = m - 1;
    Ok(DMatrix::from_fn(n, n, |i, j| {
        if i + 1 >= j {
            kappa[i + 1 - j]
        } else {
            T::zero()
        }
    }))
}

/// Dense Riesz operator `C_α h^{−α} (G_α + G_αᵀ)` on interior nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RieszMatrix<T: Real> {
    pub alpha: T,
    pub order: usize,
    pub grid: GridSpec1D<T>,
    pub entries: DMatrix<T>,
}

pub fn riesz_matrix<T: Real>(alpha: T, p: usize, grid: GridSpec1D<T>) -> Result<RieszMatrix<T>> {
    let g = assemble_galpha(alpha, p, grid.m)?;
    let scale = riesz_constant(alpha) * grid.h().powf(-alpha);
    let n = g.nrows();
    let entries = DMatrix::from_fn(n, n, |i, j| scale * (g[(i, j)] + g[(j, i)]));
    Ok(RieszMatrix {
        alpha,
        order: p,
        grid,
        entries,
    })
}

impl<T: Real> RieszMatrix<T> {
    /// Number of interior unknowns.
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// `A x` for a vector of interior values.
    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: x.len(),
            });
        }
        let mut y = vec![T::zero(); n];
        for (j, &xj) in x.iter().enumerate() {
            for (yi, &a) in y.iter_mut().zip(self.entries.column(j).iter()) {
                *yi = *yi + a * xj;
            }
        }
        Ok(y)
    }

    /// Same as [`super::riesz_apply`] on the matrix's grid.
    pub fn apply(&self, u: &GridFunction<T>) -> Result<GridFunction<T>> {
        if u.grid != self.grid {
            return Err(Error::InvalidGrid(
                "grid function and matrix use different grids".into(),
            ));
        }
        u.check_dirichlet()?;
        GridFunction::from_interior(self.grid, &self.matvec(u.interior())?)
    }
}
