//! Crank–Nicolson solver for
//! `u_t + K u_x = K_α ∂^α u/∂|x|^α + f` on `(a, b) × (0, T]` with
//! homogeneous Dirichlet data.

mod stepping;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::domain;
use crate::error::{Error, Result};
use crate::operators::GridSpec1D;
use crate::scalar::Real;

pub use stepping::{assemble_system, solve, solve_observed, SteppingSystem};

pub type SpaceTimeFn<T> = Arc<dyn Fn(T, T) -> T + Send + Sync>;
pub type SpaceFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

#[derive(Clone)]
pub struct AdvectionDiffusionProblem<T> {
    pub alpha: T,
    /// Advection speed `K ≥ 0`.
    pub k: T,
    /// Diffusion coefficient `K_α > 0`.
    pub k_alpha: T,
    pub a: T,
    pub b: T,
    pub t_final: T,
    /// `f(x, t)`.
    pub source: SpaceTimeFn<T>,
    pub initial: SpaceFn<T>,
    pub exact: Option<SpaceTimeFn<T>>,
}

impl<T: Real> AdvectionDiffusionProblem<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha: T,
        k: T,
        k_alpha: T,
        (a, b): (T, T),
        t_final: T,
        source: SpaceTimeFn<T>,
        initial: SpaceFn<T>,
    ) -> Result<Self> {
        let problem = Self {
            alpha,
            k,
            k_alpha,
            a,
            b,
            t_final,
            source,
            initial,
            exact: None,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn with_exact(mut self, exact: SpaceTimeFn<T>) -> Self {
        self.exact = Some(exact);
        self
    }

    /// Zero source and zero initial data on `(0, 1)`, `T = 1`.
    pub fn zero(alpha: T, k: T, k_alpha: T) -> Result<Self> {
        Ok(Self::new(
            alpha,
            k,
            k_alpha,
            (T::zero(), T::one()),
            T::one(),
            Arc::new(|_, _| T::zero()),
            Arc::new(|_| T::zero()),
        )?
        .with_exact(Arc::new(|_, _| T::zero())))
    }

    pub fn validate(&self) -> Result<()> {
        domain::alpha_half_open(self.alpha)?;
        if !(self.k >= T::zero()) {
            return Err(Error::InvalidProblem(format!(
                "K = {} must be >= 0",
                self.k
            )));
        }
        if !(self.k_alpha > T::zero()) {
            return Err(Error::InvalidProblem(format!(
                "K_alpha = {} must be > 0",
                self.k_alpha
            )));
        }
        if !(self.a.is_finite() && self.b.is_finite() && self.b > self.a) {
            return Err(Error::InvalidProblem(format!(
                "domain ({}, {}) is empty",
                self.a, self.b
            )));
        }
        if !(self.t_final > T::zero() && self.t_final.is_finite()) {
            return Err(Error::InvalidProblem(format!(
                "final time {} must be positive",
                self.t_final
            )));
        }
        let tol = T::epsilon() * T::lit(64.0);
        let (ua, ub) = ((self.initial)(self.a), (self.initial)(self.b));
        if ua.abs() > tol || ub.abs() > tol {
            return Err(Error::InvalidProblem(format!(
                "initial data must vanish at the boundary (u0(a) = {ua}, u0(b) = {ub})"
            )));
        }
        Ok(())
    }
}

impl<T: Real> fmt::Debug for AdvectionDiffusionProblem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdvectionDiffusionProblem")
            .field("alpha", &self.alpha)
            .field("k", &self.k)
            .field("k_alpha", &self.k_alpha)
            .field("domain", &(self.a, self.b))
            .field("t_final", &self.t_final)
            .field("exact", &self.exact.is_some())
            .finish_non_exhaustive()
    }
}

/// Which time levels [`solve`] retains.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Keep {
    All,
    #[default]
    Final,
}

/// Computed solution levels, boundary columns included.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionGrid<T> {
    pub grid: GridSpec1D<T>,
    pub tau: T,
    pub n_steps: usize,
    /// Time-level index of each stored snapshot.
    pub levels: Vec<usize>,
    pub snapshots: Vec<Vec<T>>,
}

impl<T: Real> SolutionGrid<T> {
    pub fn time(&self, level: usize) -> T {
        if level == self.n_steps {
            // Avoid round-off drift at the final time.
            self.tau * T::from_index(self.n_steps)
        } else {
            self.tau * T::from_index(level)
        }
    }

    pub fn final_values(&self) -> &[T] {
        self.snapshots.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Discrete `L²` norm `sqrt(h Σ u_j²)` of interior values.
pub fn grid_norm<T: Real>(values: &[T], h: T) -> T {
    (h * values.iter().fold(T::zero(), |acc, &v| acc + v * v)).sqrt()
}
