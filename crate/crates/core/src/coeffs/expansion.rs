//! Coefficients `γ_ℓ` of the operator-error expansion
//! `φ(z) = e^z z^{−α} W̃(e^{−z}) = 1 + Σ_{ℓ≥1} γ_ℓ z^ℓ`.
//!
//! An operator with weights from `W̃` applied to a smooth function has error
//! `Σ_ℓ γ_ℓ h^ℓ D^{α+ℓ} u`, so the first non-zero `γ` sets the order.

use serde::{Deserialize, Serialize};

use super::{exp_series, kappa_polynomial, series_fractional_power, series_mul};
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest `n` accepted by [`expansion_coefficients`].
pub const MAX_EXPANSION_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionCoefficients<T> {
    pub alpha: T,
    /// `gammas[k]` holds `γ_{k+1}`.
    pub gammas: Vec<T>,
}

impl<T: Real> ExpansionCoefficients<T> {
    /// `γ_ℓ` for `ℓ ≥ 1`.
    pub fn gamma(&self, ell: usize) -> Option<T> {
        ell.checked_sub(1).and_then(|i| self.gammas.get(i).copied())
    }
}

/// `γ_1..=γ_n` for the second-order κ weights.
pub fn expansion_coefficients<T: Real>(alpha: T, n: usize) -> Result<ExpansionCoefficients<T>> {
    let poly = kappa_polynomial(2, alpha)?;
    expansion_coefficients_of(&poly.coeffs, alpha, n)
}

/// `γ_1..=γ_n` for the weights generated by `(a_0 + a_1 z + ...)^α`, where
/// the polynomial vanishes at `z = 1`.
pub fn expansion_coefficients_of<T: Real>(
    poly: &[T],
    alpha: T,
    n: usize,
) -> Result<ExpansionCoefficients<T>> {
    domain::alpha_half_open(alpha)?;
    if n < 2 {
        return Err(Error::TooFewTerms { got: n, min: 2 });
    }
    if n > MAX_EXPANSION_ORDER {
        return Err(Error::TruncationOrder {
            n,
            max: MAX_EXPANSION_ORDER,
        });
    }
    // P(e^{-z}) = Σ_k (−z)^k/k! Σ_j a_j j^k; the k = 0 term vanishes, so
    // P(e^{-z})/z has coefficients q_k = (−1)^{k+1}/(k+1)! Σ_j a_j j^{k+1}.
    let mut q = Vec::with_capacity(n + 1);
    let mut fact = T::one();
    for k in 0..=n {
        fact = fact * T::from_index(k + 1);
        let moment = poly.iter().enumerate().fold(T::zero(), |acc, (j, &a)| {
            acc + a * T::from_index(j).powi(k as i32 + 1)
        });
        let sign = if k % 2 == 0 { -T::one() } else { T::one() };
        q.push(sign * moment / fact);
    }
    let powered = series_fractional_power(&q, alpha, n)?;
    let phi = series_mul(&exp_series(T::one(), n), &powered, n);
    Ok(ExpansionCoefficients {
        alpha,
        gammas: phi[1..].to_vec(),
    })
}
