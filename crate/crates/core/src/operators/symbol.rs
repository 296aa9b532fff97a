use nalgebra::{RealField, SymmetricEigen};

use super::assemble_galpha;
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest `M` accepted by [`spectral_bounds`].
pub const MAX_EIGEN_DIM: usize = 512;

/// Symbol `f(α, x) = 2 Re[e^{−ix} W̃_2(e^{ix})]` of `G_α + G_αᵀ` for the
/// second-order weights, in magnitude/phase form. Even in `x`; `f(α, 0) = 0`.
pub fn generating_symbol<T: Real>(alpha: T, x: T) -> Result<T> {
    domain::alpha_half_open(alpha)?;
    let x = x.abs();
    if x == T::zero() {
        return Ok(T::zero());
    }
    let one = T::one();
    let two = T::lit(2.0);
    let three_a = T::lit(3.0) * alpha - two;
    let q = (alpha - two) / three_a;
    let (s, c) = x.sin_cos();
    let den = three_a - (alpha - two) * c;
    debug_assert!(den > T::zero(), "phase denominator must stay positive");
    let theta = -((alpha - two) * s / den).atan();
    let bracket = (one - q * c).powi(2) + (q * s).powi(2);
    let magnitude = (two * (x / two).sin()).powf(alpha)
        * (three_a / (two * alpha)).powf(alpha)
        * bracket.powf(alpha / two);
    let phase = alpha * (theta + (x - T::PI()) / two) - x;
    Ok(magnitude * two * phase.cos())
}

/// Minimum and maximum of the symbol over `samples` uniform points of `[0, π]`.
pub fn symbol_extremes<T: Real>(alpha: T, samples: usize) -> Result<(T, T)> {
    let n = samples.max(2);
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for k in 0..n {
        let x = T::PI() * T::from_index(k) / T::from_index(n - 1);
        let f = generating_symbol(alpha, x)?;
        lo = lo.min(f);
        hi = hi.max(f);
    }
    Ok((lo, hi))
}

/// Smallest and largest eigenvalue of `G_α + G_αᵀ` (unscaled, `M − 1`
/// unknowns) by a dense symmetric eigensolve.
pub fn spectral_bounds<T: Real + RealField>(alpha: T, p: usize, m: usize) -> Result<(T, T)> {
    if m > MAX_EIGEN_DIM {
        return Err(Error::SizeLimit {
            size: m,
            limit: MAX_EIGEN_DIM,
        });
    }
    let g = assemble_galpha(alpha, p, m)?;
    let sym = &g + g.transpose();
    let eig = SymmetricEigen::new(sym).eigenvalues;
    let mut lo = <T as num_traits::Float>::infinity();
    let mut hi = <T as num_traits::Float>::neg_infinity();
    for &v in eig.iter() {
        lo = <T as num_traits::Float>::min(lo, v);
        hi = <T as num_traits::Float>::max(hi, v);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    // Direct evaluation from the factored generating function.
    fn symbol_direct(alpha: f64, x: f64) -> f64 {
        let z = Complex::from_polar(1.0, x);
        let a0 = (3.0 * alpha - 2.0) / (2.0 * alpha);
        let q = (alpha - 2.0) / (3.0 * alpha - 2.0);
        let one = Complex::new(1.0, 0.0);
        let w = a0.powf(alpha) * (one - z).powf(alpha) * (one - q * z).powf(alpha);
        2.0 * (Complex::from_polar(1.0, -x) * w).re
    }

    #[test]
    fn matches_direct_evaluation() {
        for alpha in [1.05, 1.3, 1.5, 1.8, 1.95] {
            for k in 1..=50 {
                let x = std::f64::consts::PI * k as f64 / 50.0;
                let f = generating_symbol(alpha, x).unwrap();
                let d = symbol_direct(alpha, x);
                assert!((f - d).abs() < 1e-12, "alpha = {alpha}, x = {x}");
            }
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(generating_symbol(1.3, 0.0).unwrap(), 0.0);
        let f = generating_symbol(1.5, std::f64::consts::PI).unwrap();
        let expected = -2.0 * (4.0f64 / 3.0).powf(1.5);
        assert!((f - expected).abs() < 1e-13);
        assert!((f + 3.0792).abs() < 1e-4);
        for k in 0..100 {
            let x = 0.031 * k as f64;
            assert_eq!(
                generating_symbol(1.7, x).unwrap(),
                generating_symbol(1.7, -x).unwrap()
            );
        }
    }

    #[test]
    fn laplacian_spectrum_at_alpha_two() {
        let (lo, hi) = spectral_bounds(2.0, 2, 8).unwrap();
        // Seven unknowns: eigenvalues 2(2cos(jπ/8) − 2), j = 1..=7.
        let pi8 = std::f64::consts::PI / 8.0;
        assert!((hi - 2.0 * (2.0 * pi8.cos() - 2.0)).abs() < 1e-12);
        assert!((lo - 2.0 * (2.0 * (7.0 * pi8).cos() - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn sandwich_and_semidefinite() {
        let (fmin, fmax) = symbol_extremes(1.5, 10_000).unwrap();
        assert!(fmax <= 0.0);
        for m in [8, 16, 32, 64] {
            let (lo, hi) = spectral_bounds(1.5, 2, m).unwrap();
            assert!(hi <= 1e-10);
            assert!(lo >= fmin - 1e-10 && hi <= fmax + 1e-10);
        }
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            spectral_bounds(1.5, 2, 513),
            Err(Error::SizeLimit {
                size: 513,
                limit: 512
            })
        );
    }
}
