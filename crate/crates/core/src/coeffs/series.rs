//! Truncated power-series arithmetic.
//!
//! Series are stored as coefficient vectors in ascending powers of `z`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Coefficients `c_0..=c_count` of `A(z)^α` for `A(z) = a_0 + a_1 z + ... + a_d z^d`.
///
/// Uses the J.C.P. Miller recurrence obtained from `A (A^α)' = α A' A^α`:
///
/// `c_0 = a_0^α`,
/// `c_ℓ = 1/(ℓ a_0) Σ_{k=1}^{min(ℓ,d)} (k(α+1) − ℓ) a_k c_{ℓ−k}`.
///
/// `a` may also be a truncated series; coefficients up to the truncation
/// order are exact. `a_0` must be positive so that `a_0^α` is real.
pub fn series_fractional_power<T: Real>(a: &[T], alpha: T, count: usize) -> Result<Vec<T>> {
    let a0 = *a.first().ok_or(Error::SingularLeadingCoefficient(0.0))?;
    if !(a0 > T::zero()) {
        return Err(Error::SingularLeadingCoefficient(a0.as_f64()));
    }
    let degree = a.len() - 1;
    let exponent = alpha + T::one();
    let mut c = Vec::with_capacity(count + 1);
    c.push(a0.powf(alpha));
    for l in 1..=count {
        let lf = T::from_index(l);
        let mut acc = T::zero();
        for k in 1..=l.min(degree) {
            acc = acc + (T::from_index(k) * exponent - lf) * a[k] * c[l - k];
        }
        c.push(acc / (lf * a0));
    }
    Ok(c)
}

/// Cauchy product of two series truncated after `count` (inclusive).
pub fn series_mul<T: Real>(a: &[T], b: &[T], count: usize) -> Vec<T> {
    (0..=count)
        .map(|n| {
            (0..=n)
                .filter(|&k| k < a.len() && n - k < b.len())
                .fold(T::zero(), |acc, k| acc + a[k] * b[n - k])
        })
        .collect()
}

/// Taylor coefficients of `e^{s z}` up to `z^count`.
pub fn exp_series<T: Real>(s: T, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(count + 1);
    out.push(T::one());
    for k in 1..=count {
        let prev = out[k - 1];
        out.push(prev * s / T::from_index(k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integer_power_matches_polynomial_square() {
        // (1 - z)^2
        let c = series_fractional_power(&[1.0, -1.0, 0.0], 2.0, 6).unwrap();
        assert_eq!(c, vec![1.0, -2.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn constant_one_is_identity() {
        let c = series_fractional_power(&[1.0], 1.37, 5).unwrap();
        assert_eq!(c, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn square_root_of_square_series() {
        // ((1 + z)^2)^{1/2} = 1 + z
        let c = series_fractional_power(&[1.0f64, 2.0, 1.0], 0.5, 8).unwrap();
        assert_relative_eq!(c[0], 1.0);
        assert_relative_eq!(c[1], 1.0);
        for v in &c[2..] {
            assert!(v.abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_nonpositive_leading_term() {
        assert_eq!(
            series_fractional_power(&[0.0, 1.0], 1.5, 4),
            Err(Error::SingularLeadingCoefficient(0.0))
        );
        assert!(series_fractional_power::<f64>(&[], 1.5, 4).is_err());
        assert!(series_fractional_power(&[-1.0, 1.0], 1.5, 4).is_err());
    }

    #[test]
    fn exp_series_product_adds_exponents() {
        let a = exp_series(0.3, 10);
        let b = exp_series(-1.1, 10);
        let ab = series_mul(&a, &b, 10);
        let expected = exp_series(-0.8, 10);
        for (x, y) in ab.iter().zip(&expected) {
            assert_relative_eq!(*x, *y, max_relative = 1e-14);
        }
    }
}
