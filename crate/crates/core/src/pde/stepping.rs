use nalgebra::{DMatrix, DVector, Dyn, RealField, LU};
use num_traits::Float;

use super::{AdvectionDiffusionProblem, Keep, SolutionGrid};
use crate::error::{Error, Result};
use crate::operators::{riesz_matrix, GridSpec1D};
use crate::scalar::Real;

// Smallest accepted |pivot| relative to the largest matrix entry.
const PIVOT_FLOOR: f64 = 1e-14;

/// Factorized Crank–Nicolson step
/// `(I + τ/2 A) U^{k+1} = (I − τ/2 A) U^k + τ f^{k+1/2}`, `A = K C − K_α R`.
pub struct SteppingSystem<T: Real + RealField> {
    pub grid: GridSpec1D<T>,
    pub tau: T,
    pub n_steps: usize,
    pub lhs: DMatrix<T>,
    pub rhs: DMatrix<T>,
    problem: AdvectionDiffusionProblem<T>,
    lu: LU<T, Dyn, Dyn>,
    nodes: Vec<T>,
}

/// Builds and factors the stepping matrices for `m` cells and `n` steps.
pub fn assemble_system<T: Real + RealField>(
    problem: &AdvectionDiffusionProblem<T>,
    m: usize,
    n: usize,
) -> Result<SteppingSystem<T>> {
    problem.validate()?;
    if n == 0 {
        return Err(Error::InvalidProblem(
            "at least one time step is required".into(),
        ));
    }
    let grid = GridSpec1D::new(problem.a, problem.b, m)?;
    let tau = problem.t_final / T::from_index(n);
    let riesz = riesz_matrix(problem.alpha, 2, grid)?;
    let dim = grid.interior_len();
    let half = T::lit(0.5);
    let central = half / grid.h();

    // A = K C − K_α R, C the central difference ±1/(2h).
    let op = DMatrix::from_fn(dim, dim, |i, j| {
        let c = if j == i + 1 {
            central
        } else if i == j + 1 {
            -central
        } else {
            T::zero()
        };
        problem.k * c - problem.k_alpha * riesz.entries[(i, j)]
    });
    let scaled = op * (tau * half);
    let eye = DMatrix::<T>::identity(dim, dim);
    let lhs = &eye + &scaled;
    let rhs = &eye - &scaled;

    let lu = lhs.clone().lu();
    let scale = lhs
        .iter()
        .fold(T::zero(), |m, &v| Float::max(m, Float::abs(v)));
    let pivot = lu
        .u()
        .diagonal()
        .iter()
        .fold(Float::infinity(), |m: T, &v| Float::min(m, Float::abs(v)));
    if !(pivot > scale * T::lit(PIVOT_FLOOR)) {
        return Err(Error::SingularSystem {
            pivot: Real::as_f64(pivot),
        });
    }
    let nodes = (1..m).map(|j| grid.x(j)).collect();
    Ok(SteppingSystem {
        grid,
        tau,
        n_steps: n,
        lhs,
        rhs,
        problem: problem.clone(),
        lu,
        nodes,
    })
}

impl<T: Real + RealField> SteppingSystem<T> {
    pub fn problem(&self) -> &AdvectionDiffusionProblem<T> {
        &self.problem
    }

    /// Interior node coordinates `x_1..x_{M−1}`.
    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// Sampled initial data on interior nodes.
    pub fn initial_values(&self) -> Vec<T> {
        self.nodes
            .iter()
            .map(|&x| (self.problem.initial)(x))
            .collect()
    }

    /// Solves `lhs x = b`.
    pub fn solve_linear(&self, b: &[T]) -> Result<Vec<T>> {
        let mut v = DVector::from_column_slice(b);
        if !self.lu.solve_mut(&mut v) {
            return Err(Error::SingularSystem { pivot: 0.0 });
        }
        Ok(v.iter().copied().collect())
    }

    /// Advances interior values from `t_k` to `t_k + τ`, sampling the source at
    /// `t_k + τ/2`.
    pub fn step(&self, u_k: &[T], t_k: T) -> Result<Vec<T>> {
        let dim = self.nodes.len();
        if u_k.len() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: u_k.len(),
            });
        }
        let t_half = t_k + self.tau * T::lit(0.5);
        let mut b = &self.rhs * DVector::from_column_slice(u_k);
        for (bi, &x) in b.iter_mut().zip(&self.nodes) {
            *bi += self.tau * (self.problem.source)(x, t_half);
        }
        if !self.lu.solve_mut(&mut b) {
            return Err(Error::SingularSystem { pivot: 0.0 });
        }
        if b.iter().any(|v| !Float::is_finite(*v)) {
            return Err(Error::NonFinite("time step"));
        }
        Ok(b.iter().copied().collect())
    }

    pub fn time(&self, level: usize) -> T {
        if level == self.n_steps {
            self.problem.t_final
        } else {
            self.tau * T::from_index(level)
        }
    }
}

/// Runs all steps, calling `observer(k, interior values at level k)` for
/// `k = 0..=N`. Returns the final interior values.
pub fn solve_observed<T: Real + RealField>(
    system: &SteppingSystem<T>,
    mut observer: impl FnMut(usize, &[T]),
) -> Result<Vec<T>> {
    let mut u = system.initial_values();
    observer(0, &u);
    for k in 0..system.n_steps {
        u = system.step(&u, system.tau * T::from_index(k))?;
        observer(k + 1, &u);
    }
    Ok(u)
}

/// Assembles, factors once and steps to the final time.
pub fn solve<T: Real + RealField>(
    problem: &AdvectionDiffusionProblem<T>,
    m: usize,
    n: usize,
    keep: Keep,
) -> Result<SolutionGrid<T>> {
    let system = assemble_system(problem, m, n)?;
    let pad = |u: &[T]| {
        let mut row = Vec::with_capacity(m + 1);
        row.push(T::zero());
        row.extend_from_slice(u);
        row.push(T::zero());
        row
    };
    let mut levels = Vec::new();
    let mut snapshots = Vec::new();
    let last = solve_observed(&system, |k, u| {
        if keep == Keep::All {
            levels.push(k);
            snapshots.push(pad(u));
        }
    })?;
    if keep == Keep::Final {
        levels.push(n);
        snapshots.push(pad(&last));
    }
    Ok(SolutionGrid {
        grid: system.grid,
        tau: system.tau,
        n_steps: n,
        levels,
        snapshots,
    })
}
