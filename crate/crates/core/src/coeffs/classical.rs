//! Grünwald–Letnikov, Lubich and weighted-shifted (WSGD) weights.

use serde::{Deserialize, Serialize};

use super::{series_fractional_power, CoefficientTable, Family, GeneratingPolynomial};
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Coefficients of `(1 − z)^α` up to `z^count`:
/// `ϖ_0 = 1`, `ϖ_ℓ = (1 − (1 + α)/ℓ) ϖ_{ℓ−1}`.
pub fn gl_weights<T: Real>(alpha: T, count: usize) -> Result<CoefficientTable<T>> {
    domain::alpha_half_open(alpha)?;
    domain::min_terms(count, 2)?;
    Ok(CoefficientTable::new(
        Family::Gl,
        1,
        alpha,
        gl_sequence(alpha, count),
    ))
}

/// Unchecked GL recursion, shared with the convolution and contour routes.
pub(crate) fn gl_sequence<T: Real>(alpha: T, count: usize) -> Vec<T> {
    let mut w = Vec::with_capacity(count + 1);
    w.push(T::one());
    let a1 = T::one() + alpha;
    for l in 1..=count {
        let prev = w[l - 1];
        w.push((T::one() - a1 / T::from_index(l)) * prev);
    }
    w
}

/// `Σ_{ℓ=1}^{p} (1 − z)^ℓ / ℓ` expanded in monomials.
pub fn lubich_polynomial<T: Real>(p: usize) -> Result<GeneratingPolynomial<T>> {
    if !(1..=6).contains(&p) {
        return Err(Error::UnsupportedOrder {
            p,
            family: "Lubich",
            supported: "1..=6",
        });
    }
    let mut coeffs = vec![T::zero(); p + 1];
    for ell in 1..=p {
        // (1 - z)^ell = Σ_k C(ell, k) (-1)^k z^k
        let mut binom = T::one();
        for (k, coeff) in coeffs.iter_mut().enumerate().take(ell + 1) {
            if k > 0 {
                binom = binom * T::from_index(ell + 1 - k) / T::from_index(k);
            }
            let sign = if k % 2 == 0 { T::one() } else { -T::one() };
            *coeff = *coeff + sign * binom / T::from_index(ell);
        }
    }
    Ok(GeneratingPolynomial {
        coeffs,
        description: format!("Lubich W_{p}: sum_{{l=1}}^{p} (1-z)^l / l"),
    })
}

/// Order-`p` Lubich weights, the coefficients of `W_p(z)`.
pub fn lubich_weights<T: Real>(p: usize, alpha: T, count: usize) -> Result<CoefficientTable<T>> {
    let poly = lubich_polynomial::<T>(p)?;
    domain::alpha_half_open(alpha)?;
    domain::min_terms(count, 2)?;
    let values = series_fractional_power(&poly.coeffs, alpha, count)?;
    Ok(CoefficientTable::new(Family::Lubich, p, alpha, values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WsgdVariant {
    /// `g_{1,ℓ} = (α/2) ϖ_ℓ + ((2 − α)/2) ϖ_{ℓ−1}`.
    First,
    /// `g_{2,ℓ} = ((2 + α)/4) ϖ_ℓ + ((2 − α)/4) ϖ_{ℓ−2}`.
    Second,
}

/// Second-order weighted combinations of shifted GL weights.
pub fn wsgd_weights<T: Real>(
    variant: WsgdVariant,
    alpha: T,
    count: usize,
) -> Result<CoefficientTable<T>> {
    domain::alpha_half_open(alpha)?;
    domain::min_terms(count, 2)?;
    let w = gl_sequence(alpha, count);
    let two = T::lit(2.0);
    let (family, values) = match variant {
        WsgdVariant::First => {
            let (c0, c1) = (alpha / two, (two - alpha) / two);
            let values = (0..=count)
                .map(|l| {
                    let lag = if l >= 1 { w[l - 1] } else { T::zero() };
                    c0 * w[l] + c1 * lag
                })
                .collect();
            (Family::Wsgd1, values)
        }
        WsgdVariant::Second => {
            let four = T::lit(4.0);
            let (c0, c2) = ((two + alpha) / four, (two - alpha) / four);
            let values = (0..=count)
                .map(|l| {
                    let lag = if l >= 2 { w[l - 2] } else { T::zero() };
                    c0 * w[l] + c2 * lag
                })
                .collect();
            (Family::Wsgd2, values)
        }
    };
    Ok(CoefficientTable::new(family, 2, alpha, values))
}
