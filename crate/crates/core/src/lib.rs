//! Fractional difference weights, Riesz-derivative operators and a
//! Crank–Nicolson solver for the 1D Riesz space-fractional
//! advection–diffusion equation.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases fix the double-precision types used by the harness and CLI.

// Negated comparisons are deliberate: NaN must fail every check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod domain;
mod error;
mod scalar;

pub mod coeffs;
pub mod harness;
pub mod io;
pub mod operators;
pub mod pde;

pub use error::{Error, Result};
pub use scalar::{gamma, riesz_constant, Real};

/// Double-precision aliases.
pub type CoefficientTable64 = coeffs::CoefficientTable<f64>;
pub type GeneratingPolynomial64 = coeffs::GeneratingPolynomial<f64>;
pub type GridSpec64 = operators::GridSpec1D<f64>;
pub type GridFunction64 = operators::GridFunction<f64>;
pub type RieszMatrix64 = operators::RieszMatrix<f64>;
pub type AdvectionDiffusionProblem64 = pde::AdvectionDiffusionProblem<f64>;
pub type SolutionGrid64 = pde::SolutionGrid<f64>;
pub type SteppingSystem64 = pde::SteppingSystem<f64>;

/// Single-precision aliases.
pub type CoefficientTable32 = coeffs::CoefficientTable<f32>;
pub type GridFunction32 = operators::GridFunction<f32>;
pub type RieszMatrix32 = operators::RieszMatrix<f32>;
