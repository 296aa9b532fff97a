//! Fractional difference operators on a uniform grid.
//!
//! Left and right operators are lower/upper Toeplitz convolutions with a
//! weight table. With shift 1 and the κ_p weights they approximate the left
//! and right Riemann–Liouville derivatives to order p; their combination
//! `C_α (L + R)` approximates the Riesz derivative.

mod apply;
mod matrix;
mod symbol;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use apply::{left_apply, point_riesz_derivative, riesz_apply, right_apply};
pub use matrix::{assemble_galpha, riesz_matrix, RieszMatrix};
pub use symbol::{generating_symbol, spectral_bounds, symbol_extremes, MAX_EIGEN_DIM};

/// Uniform grid `x_j = a + j h`, `j = 0..=m`, `h = (b − a)/m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec1D<T> {
    pub a: T,
    pub b: T,
    pub m: usize,
}

impl<T: Real> GridSpec1D<T> {
    pub fn new(a: T, b: T, m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidGrid(format!(
                "M = {m}; at least 4 cells needed"
            )));
        }
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::InvalidGrid(format!("interval ({a}, {b}) is empty")));
        }
        Ok(Self { a, b, m })
    }

    /// `[0, 1]` split into `m` cells.
    pub fn unit(m: usize) -> Result<Self> {
        Self::new(T::zero(), T::one(), m)
    }

    pub fn h(&self) -> T {
        (self.b - self.a) / T::from_index(self.m)
    }

    /// Node `x_j`; the last node is `b` exactly.
    pub fn x(&self, j: usize) -> T {
        if j == self.m {
            self.b
        } else {
            self.a + T::from_index(j) * self.h()
        }
    }

    pub fn nodes(&self) -> Vec<T> {
        (0..=self.m).map(|j| self.x(j)).collect()
    }

    /// Number of interior nodes, `M − 1`.
    pub fn interior_len(&self) -> usize {
        self.m - 1
    }
}

/// Nodal values on a grid, boundaries included.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    pub grid: GridSpec1D<T>,
    pub values: Vec<T>,
}

impl<T: Real> GridFunction<T> {
    pub fn new(grid: GridSpec1D<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.m + 1 {
            return Err(Error::LengthMismatch {
                expected: grid.m + 1,
                got: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec1D<T>) -> Self {
        Self {
            grid,
            values: vec![T::zero(); grid.m + 1],
        }
    }

    pub fn sample(grid: GridSpec1D<T>, f: impl Fn(T) -> T) -> Self {
        Self {
            grid,
            values: (0..=grid.m).map(|j| f(grid.x(j))).collect(),
        }
    }

    /// Builds a function from interior values with zero boundary entries.
    pub fn from_interior(grid: GridSpec1D<T>, interior: &[T]) -> Result<Self> {
        if interior.len() != grid.interior_len() {
            return Err(Error::LengthMismatch {
                expected: grid.interior_len(),
                got: interior.len(),
            });
        }
        let mut values = Vec::with_capacity(grid.m + 1);
        values.push(T::zero());
        values.extend_from_slice(interior);
        values.push(T::zero());
        Ok(Self { grid, values })
    }

    pub fn interior(&self) -> &[T] {
        &self.values[1..self.grid.m]
    }

    /// Index reversal `u_j ↦ u_{M−j}`.
    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self {
            grid: self.grid,
            values,
        }
    }

    pub(crate) fn check_dirichlet(&self) -> Result<()> {
        let m = self.grid.m;
        if self.values.len() != m + 1 {
            return Err(Error::LengthMismatch {
                expected: m + 1,
                got: self.values.len(),
            });
        }
        if self.values[0] != T::zero() || self.values[m] != T::zero() {
            return Err(Error::InvalidGrid(format!(
                "grid function must vanish at both ends (u_0 = {}, u_M = {})",
                self.values[0], self.values[m]
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_geometry() {
        let g = GridSpec1D::new(-1.0, 2.0, 6).unwrap();
        assert_eq!(g.h(), 0.5);
        assert_eq!(g.x(0), -1.0);
        assert_eq!(g.x(6), 2.0);
        assert_eq!(g.nodes().len(), 7);
        assert_eq!(g.interior_len(), 5);
        // m·h need not round back to b.
        let u = GridSpec1D::<f64>::unit(49).unwrap();
        assert_eq!(u.x(49), 1.0);
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec1D::new(0.0, 1.0, 3).is_err());
        assert!(GridSpec1D::new(1.0, 1.0, 8).is_err());
        assert!(GridSpec1D::new(0.0, f64::NAN, 8).is_err());
    }

    #[test]
    fn grid_function_construction() {
        let g = GridSpec1D::unit(4).unwrap();
        let u = GridFunction::from_interior(g, &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(u.values, vec![0.0, 1.0, 2.0, 3.0, 0.0]);
        assert_eq!(u.interior(), &[1.0, 2.0, 3.0]);
        assert_eq!(u.reversed().interior(), &[3.0, 2.0, 1.0]);
        assert!(GridFunction::new(g, vec![0.0; 4]).is_err());
        let s = GridFunction::sample(g, |x| x * (1.0 - x));
        assert!(s.check_dirichlet().is_ok());
        let bad = GridFunction::sample(g, |x| x);
        assert!(matches!(bad.check_dirichlet(), Err(Error::InvalidGrid(_))));
    }
}
