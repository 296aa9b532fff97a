//! Weight sequences for fractional difference operators.
//!
//! Every family is the Taylor expansion of a generating function
//! `W(z) = Σ w_ℓ z^ℓ`:
//!
//! | family   | generating function                          | order |
//! |----------|----------------------------------------------|-------|
//! | `Gl`     | `(1 − z)^α`                                  | 1     |
//! | `Lubich` | `(Σ_{ℓ=1}^{p} (1 − z)^ℓ / ℓ)^α`              | p     |
//! | `Wsgd1/2`| weighted shifts of the `Gl` weights          | 2     |
//! | `Kappa`  | `(a_0 + a_1 z + ... + a_p z^p)^α`, p = 2,3,4 | p     |
//!
//! The `Kappa` weights can be produced by three independent routes (see
//! [`Method`]); they are expected to agree to about `1e-10` relative.

mod classical;
mod contour;
mod convolution;
mod expansion;
mod kappa;
mod properties;
mod series;

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

pub use classical::{gl_weights, lubich_polynomial, lubich_weights, wsgd_weights, WsgdVariant};
pub use contour::{default_fft_samples, kappa_weights_fft};
pub use convolution::kappa_weights_convolution;
pub use expansion::{
    expansion_coefficients, expansion_coefficients_of, ExpansionCoefficients, MAX_EXPANSION_ORDER,
};
pub(crate) use kappa::kappa_recursion;
pub use kappa::{kappa_polynomial, kappa_weights, Method, KAPPA_ORDERS};
pub use properties::{
    critical_alpha, verify_properties, Clause, ClauseCheck, ClauseStatus, PropertyReport,
};
pub use series::{exp_series, series_fractional_power, series_mul};

/// Which generating function a table was expanded from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Gl,
    Lubich,
    Wsgd1,
    Wsgd2,
    Kappa,
}

/// Finite prefix `w_0..=w_L` of a weight sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable<T> {
    pub family: Family,
    pub order: usize,
    pub alpha: T,
    pub values: Vec<T>,
}

impl<T: Real> CoefficientTable<T> {
    pub fn new(family: Family, order: usize, alpha: T, values: Vec<T>) -> Self {
        Self {
            family,
            order,
            alpha,
            values,
        }
    }

    /// Largest stored index `L`.
    pub fn truncation(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, ell: usize) -> Option<T> {
        self.values.get(ell).copied()
    }

    /// `Σ_{ℓ=0}^{L} w_ℓ`.
    pub fn partial_sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &v| acc + v)
    }

    /// Writes `ell,value` CSV with 17 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "ell,value")?;
        for (ell, v) in self.values.iter().enumerate() {
            writeln!(out, "{},{:.16e}", ell, v)?;
        }
        Ok(())
    }
}

/// Polynomial `a_0 + a_1 z + ... + a_d z^d` whose `α`-th power generates a
/// weight family.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingPolynomial<T> {
    pub coeffs: Vec<T>,
    pub description: String,
}

impl<T: Real> GeneratingPolynomial<T> {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, z: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * z + c)
    }

    /// Coefficients of `(this polynomial)^α` up to `z^count`.
    pub fn power_series(&self, alpha: T, count: usize) -> crate::Result<Vec<T>> {
        series_fractional_power(&self.coeffs, alpha, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_export_uses_round_trip_precision() {
        let table = CoefficientTable::new(Family::Gl, 1, 1.5, vec![1.0, -1.5, 0.1 + 0.2]);
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "ell,value");
        assert_eq!(lines[1], "0,1.0000000000000000e0");
        let parsed: f64 = lines[3].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(parsed, 0.1 + 0.2);
    }

    #[test]
    fn polynomial_evaluation() {
        let p = GeneratingPolynomial {
            coeffs: vec![1.0, -2.0, 1.0],
            description: "(1-z)^2".into(),
        };
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(3.0), 4.0);
    }
}
