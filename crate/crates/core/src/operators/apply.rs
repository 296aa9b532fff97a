use super::GridFunction;
use crate::coeffs::{kappa_recursion, CoefficientTable};
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::{riesz_constant, Real};

fn check_shift(shift: usize) -> Result<()> {
    if shift > 1 {
        Err(Error::InvalidShift(shift))
    } else {
        Ok(())
    }
}

fn check_table<T>(table: &CoefficientTable<T>, m: usize) -> Result<()> {
    if table.values.len() < m + 1 {
        Err(Error::TableTooShort {
            len: table.values.len(),
            need: m + 1,
        })
    } else {
        Ok(())
    }
}

// Σ_{ℓ=0}^{j+s} w_ℓ u_{j−ℓ+s}
fn left_sum<T: Real>(u: &[T], w: &[T], j: usize, shift: usize) -> T {
    let top = j + shift;
    (0..=top).fold(T::zero(), |acc, l| acc + w[l] * u[top - l])
}

// Σ_{ℓ=0}^{M−j+s} w_ℓ u_{j+ℓ−s}
fn right_sum<T: Real>(u: &[T], w: &[T], j: usize, shift: usize) -> T {
    let m = u.len() - 1;
    let base = j - shift;
    (0..=m - base).fold(T::zero(), |acc, l| acc + w[l] * u[base + l])
}

fn apply_with<T: Real>(
    u: &GridFunction<T>,
    table: &CoefficientTable<T>,
    shift: usize,
    sum: fn(&[T], &[T], usize, usize) -> T,
) -> Result<GridFunction<T>> {
    check_shift(shift)?;
    u.check_dirichlet()?;
    let m = u.grid.m;
    check_table(table, m)?;
    let scale = u.grid.h().powf(-table.alpha);
    let mut out = GridFunction::zeros(u.grid);
    for j in 1..m {
        out.values[j] = scale * sum(&u.values, &table.values, j, shift);
    }
    Ok(out)
}

/// Left operator `h^{−α} Σ_{ℓ=0}^{j+shift} w_ℓ u_{j−ℓ+shift}` at interior
/// nodes; boundary entries are zero.
pub fn left_apply<T: Real>(
    u: &GridFunction<T>,
    table: &CoefficientTable<T>,
    shift: usize,
) -> Result<GridFunction<T>> {
    apply_with(u, table, shift, left_sum)
}

/// Right operator `h^{−α} Σ_{ℓ=0}^{M−j+shift} w_ℓ u_{j+ℓ−shift}`.
pub fn right_apply<T: Real>(
    u: &GridFunction<T>,
    table: &CoefficientTable<T>,
    shift: usize,
) -> Result<GridFunction<T>> {
    apply_with(u, table, shift, right_sum)
}

/// `C_α (L + R) u` with the κ_p weights and shift 1.
pub fn riesz_apply<T: Real>(u: &GridFunction<T>, alpha: T, p: usize) -> Result<GridFunction<T>> {
    domain::alpha_half_open(alpha)?;
    let table = kappa_recursion(p, alpha, u.grid.m)?;
    let c = riesz_constant(alpha);
    let left = left_apply(u, &table, 1)?;
    let right = right_apply(u, &table, 1)?;
    let values = left
        .values
        .iter()
        .zip(&right.values)
        .map(|(&l, &r)| c * (l + r))
        .collect();
    Ok(GridFunction {
        grid: u.grid,
        values,
    })
}

/// Entry `j` of [`riesz_apply`], computed with two O(M) sums.
pub fn point_riesz_derivative<T: Real>(
    u: &GridFunction<T>,
    alpha: T,
    p: usize,
    j: usize,
) -> Result<T> {
    domain::alpha_half_open(alpha)?;
    u.check_dirichlet()?;
    let m = u.grid.m;
    if j == 0 || j >= m {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: m - 1,
        });
    }
    let table = kappa_recursion(p, alpha, m)?;
    let w = &table.values;
    let sum = left_sum(&u.values, w, j, 1) + right_sum(&u.values, w, j, 1);
    Ok(riesz_constant(alpha) * u.grid.h().powf(-alpha) * sum)
}
