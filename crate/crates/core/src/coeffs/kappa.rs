//! The κ_p weights: Taylor coefficients of `W̃_p(z) = (a_{p1} + a_{p2} z + ...)^α`.

use rustfft::FftNum;
use serde::{Deserialize, Serialize};

use super::{
    kappa_weights_convolution, kappa_weights_fft, series_fractional_power, CoefficientTable,
    Family, GeneratingPolynomial,
};
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Orders for which the generating polynomial is known in closed form.
pub const KAPPA_ORDERS: [usize; 3] = [2, 3, 4];

/// How to expand `W̃_p`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Power-series recurrence; O(p·L).
    #[default]
    Recursion,
    /// Closed multinomial sums convolved with the GL weights.
    Convolution,
    /// Contour sampling plus FFT with the default sample count.
    Fft,
}

pub(crate) fn unsupported(p: usize) -> Error {
    Error::UnsupportedOrder {
        p,
        family: "kappa",
        supported: "2, 3, 4",
    }
}

/// Coefficients of the degree-`p` polynomial whose `α`-th power generates κ_p.
pub fn kappa_polynomial<T: Real>(p: usize, alpha: T) -> Result<GeneratingPolynomial<T>> {
    if !KAPPA_ORDERS.contains(&p) {
        return Err(unsupported(p));
    }
    domain::alpha_half_open(alpha)?;
    let a = alpha;
    let a2 = a * a;
    let a3 = a2 * a;
    let c = |x: f64| T::lit(x);
    let coeffs = match p {
        2 => vec![
            (c(3.0) * a - c(2.0)) / (c(2.0) * a),
            -c(2.0) * (a - c(1.0)) / a,
            (a - c(2.0)) / (c(2.0) * a),
        ],
        3 => vec![
            (c(11.0) * a2 - c(12.0) * a + c(3.0)) / (c(6.0) * a2),
            (-c(6.0) * a2 + c(10.0) * a - c(3.0)) / (c(2.0) * a2),
            (c(3.0) * a2 - c(8.0) * a + c(3.0)) / (c(2.0) * a2),
            (-c(2.0) * a2 + c(6.0) * a - c(3.0)) / (c(6.0) * a2),
        ],
        _ => vec![
            (c(25.0) * a3 - c(35.0) * a2 + c(15.0) * a - c(2.0)) / (c(12.0) * a3),
            (-c(24.0) * a3 + c(52.0) * a2 - c(27.0) * a + c(4.0)) / (c(6.0) * a3),
            (c(6.0) * a3 - c(19.0) * a2 + c(12.0) * a - c(2.0)) / (c(2.0) * a3),
            (-c(8.0) * a3 + c(28.0) * a2 - c(21.0) * a + c(4.0)) / (c(6.0) * a3),
            (c(3.0) * a3 - c(11.0) * a2 + c(9.0) * a - c(2.0)) / (c(12.0) * a3),
        ],
    };
    Ok(GeneratingPolynomial {
        coeffs,
        description: format!("kappa_{p} generating polynomial at alpha = {alpha}"),
    })
}

/// κ_{p,0..=count} by the chosen method.
pub fn kappa_weights<T: Real + FftNum>(
    p: usize,
    alpha: T,
    count: usize,
    method: Method,
) -> Result<CoefficientTable<T>> {
    match method {
        Method::Recursion => kappa_recursion(p, alpha, count),
        Method::Convolution => kappa_weights_convolution(p, alpha, count),
        Method::Fft => kappa_weights_fft(p, alpha, count, None),
    }
}

/// Recursion path without the FFT bound, used by the operator code.
pub(crate) fn kappa_recursion<T: Real>(
    p: usize,
    alpha: T,
    count: usize,
) -> Result<CoefficientTable<T>> {
    let poly = kappa_polynomial(p, alpha)?;
    domain::min_terms(count, 2)?;
    let values = series_fractional_power(&poly.coeffs, alpha, count)?;
    Ok(CoefficientTable::new(Family::Kappa, p, alpha, values))
}
