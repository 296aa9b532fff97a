//! κ_p through closed multinomial sums.
//!
//! `W̃_p(z) = a_0^α (1 − z)^α (1 + b_1 z + ... + b_{p−1} z^{p−1})^α`. The second
//! factor expands into finite sums of factorial ratios times GL weights; the
//! result is convolved once more with the GL weights of `(1 − z)^α`.
//! Terms are formed in the log domain so that factorials up to `L!` never
//! overflow.

use super::classical::gl_sequence;
use super::kappa::{kappa_polynomial, unsupported};
use super::{CoefficientTable, Family};
use crate::domain;
use crate::error::Result;
use crate::scalar::Real;

/// κ_{p,0..=count} via the convolution sums, `p ∈ {2, 3, 4}`.
pub fn kappa_weights_convolution<T: Real>(
    p: usize,
    alpha: T,
    count: usize,
) -> Result<CoefficientTable<T>> {
    let poly = kappa_polynomial(p, alpha)?;
    domain::min_terms(count, 2)?;
    let w = gl_sequence(alpha, count);
    let inner = match p {
        2 => second_order_inner(alpha, &w),
        3 => third_order_inner(alpha, &w),
        4 => fourth_order_inner(alpha, &w),
        _ => return Err(unsupported(p)),
    };
    let scale = poly.coeffs[0].powf(alpha);
    let values = (0..=count)
        .map(|l| {
            let s = (0..=l).fold(T::zero(), |acc, l1| acc + inner[l1] * w[l - l1]);
            scale * s
        })
        .collect();
    Ok(CoefficientTable::new(Family::Kappa, p, alpha, values))
}

fn lit<T: Real>(x: f64) -> T {
    T::lit(x)
}

// (1 − qz)^α with q = (α − 2)/(3α − 2): coefficients q^m ϖ_m.
fn second_order_inner<T: Real>(alpha: T, w: &[T]) -> Vec<T> {
    let q = (alpha - lit(2.0)) / (lit::<T>(3.0) * alpha - lit(2.0));
    let mut qm = T::one();
    w.iter()
        .map(|&wm| {
            let v = qm * wm;
            qm = qm * q;
            v
        })
        .collect()
}

fn third_order_inner<T: Real>(alpha: T, w: &[T]) -> Vec<T> {
    let a = alpha;
    let a2 = a * a;
    let den = lit::<T>(11.0) * a2 - lit::<T>(12.0) * a + lit(3.0);
    let b1 = (lit::<T>(-7.0) * a2 + lit::<T>(18.0) * a - lit(6.0)) / den;
    let b2 = (lit::<T>(2.0) * a2 - lit::<T>(6.0) * a + lit(3.0)) / den;
    let lf = ln_factorials::<T>(w.len());
    let (p1, p2) = (Power::new(b1), Power::new(b2));
    (0..w.len())
        .map(|l1| {
            let mut s = T::zero();
            for l2 in 0..=l1 / 2 {
                let n = l1 - l2;
                let i = l1 - 2 * l2;
                let Some((ln_mag, neg)) = combine(&[p1.pow(i), p2.pow(l2)]) else {
                    continue;
                };
                let ln_p = ln_mag + lf[n] - lf[l2] - lf[i];
                let sign_neg = neg ^ (n % 2 == 1);
                s = s + signed(ln_p.exp(), sign_neg) * w[n];
            }
            s
        })
        .collect()
}

fn fourth_order_inner<T: Real>(alpha: T, w: &[T]) -> Vec<T> {
    let a = alpha;
    let a2 = a * a;
    let a3 = a2 * a;
    let den = lit::<T>(25.0) * a3 - lit::<T>(35.0) * a2 + lit::<T>(15.0) * a - lit(2.0);
    let b1 = (lit::<T>(-23.0) * a3 + lit::<T>(69.0) * a2 - lit::<T>(39.0) * a + lit(6.0)) / den;
    let b2 = (lit::<T>(13.0) * a3 - lit::<T>(45.0) * a2 + lit::<T>(33.0) * a - lit(6.0)) / den;
    let b3 = (lit::<T>(-3.0) * a3 + lit::<T>(11.0) * a2 - lit::<T>(9.0) * a + lit(2.0)) / den;
    let lf = ln_factorials::<T>(w.len());
    let (p1, p2, p3) = (Power::new(b1), Power::new(b2), Power::new(b3));
    (0..w.len())
        .map(|l1| {
            let mut s = T::zero();
            for l2 in 0..=(2 * l1) / 3 {
                let n = l1 - l2;
                let mut t = T::zero();
                for l3 in (2 * l2).saturating_sub(l1)..=l2 / 2 {
                    let j = l2 - 2 * l3;
                    let i = l1 + l3 - 2 * l2;
                    let Some((ln_mag, neg)) = combine(&[p1.pow(i), p2.pow(j), p3.pow(l3)]) else {
                        continue;
                    };
                    let ln_p = ln_mag + lf[n] - lf[l3] - lf[j] - lf[i];
                    t = t + signed(ln_p.exp(), neg);
                }
                let t = if n % 2 == 1 { -t } else { t };
                s = s + t * w[n];
            }
            s
        })
        .collect()
}

/// `ln k!` for `k = 0..n`.
fn ln_factorials<T: Real>(n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(T::zero());
    for k in 1..=n {
        out.push(out[k - 1] + T::from_index(k).ln());
    }
    out
}

/// `b^k` as (ln|b^k|, negative?), with `None` standing for an exact zero.
struct Power<T> {
    ln_abs: T,
    negative: bool,
    zero: bool,
}

impl<T: Real> Power<T> {
    fn new(b: T) -> Self {
        Self {
            ln_abs: b.abs().ln(),
            negative: b < T::zero(),
            zero: b == T::zero(),
        }
    }

    fn pow(&self, k: usize) -> Option<(T, bool)> {
        if k == 0 {
            Some((T::zero(), false))
        } else if self.zero {
            None
        } else {
            Some((self.ln_abs * T::from_index(k), self.negative && k % 2 == 1))
        }
    }
}

fn combine<T: Real>(parts: &[Option<(T, bool)>]) -> Option<(T, bool)> {
    parts.iter().try_fold((T::zero(), false), |(m, s), part| {
        part.map(|(pm, ps)| (m + pm, s ^ ps))
    })
}

fn signed<T: Real>(x: T, negative: bool) -> T {
    if negative {
        -x
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::series_fractional_power;

    fn max_rel(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs() / y.abs().max(1e-300))
            .fold(0.0, f64::max)
    }

    #[test]
    fn matches_recursion() {
        for p in [2, 3, 4] {
            for alpha in [1.15, 1.5, 1.85] {
                let poly = kappa_polynomial(p, alpha).unwrap();
                let rec = series_fractional_power(&poly.coeffs, alpha, 120).unwrap();
                let conv = kappa_weights_convolution(p, alpha, 120).unwrap();
                let err = max_rel(&conv.values, &rec);
                assert!(err < 1e-11, "p = {p}, alpha = {alpha}: {err:e}");
            }
        }
    }

    #[test]
    fn integer_limit_is_a_finite_stencil() {
        // At α = 2 the weights are the squared polynomial coefficients.
        for p in [2, 3, 4] {
            let poly = kappa_polynomial(p, 2.0f64).unwrap();
            let conv = kappa_weights_convolution(p, 2.0, 40).unwrap();
            for (l, v) in conv.values.iter().enumerate() {
                let exact: f64 = (0..=l)
                    .filter(|&k| k <= p && l - k <= p)
                    .map(|k| poly.coeffs[k] * poly.coeffs[l - k])
                    .sum();
                assert!((v - exact).abs() < 1e-13, "p = {p}, l = {l}");
            }
        }
    }

    #[test]
    fn third_order_closed_forms() {
        let a: f64 = 1.4;
        let d = 11.0 * a * a - 12.0 * a + 3.0;
        let t = kappa_weights_convolution(3, a, 4).unwrap();
        let k0 = (d / (6.0 * a * a)).powf(a);
        let k1 = -3.0 * a * (6.0 * a * a - 10.0 * a + 3.0) / d * k0;
        let poly5 = 108.0 * a.powi(5) - 402.0 * a.powi(4) + 520.0 * a.powi(3) - 312.0 * a * a
            + 87.0 * a
            - 9.0;
        let k2 = 3.0 * a * poly5 / (2.0 * d * d) * k0;
        assert!(((t.values[0] - k0) / k0).abs() < 1e-14);
        assert!(((t.values[1] - k1) / k1).abs() < 1e-13);
        assert!(((t.values[2] - k2) / k2).abs() < 1e-12);
    }

    #[test]
    fn ln_factorial_table() {
        let lf = ln_factorials::<f64>(10);
        assert!((lf[10].exp() - 3_628_800.0).abs() < 1e-6);
        assert_eq!(lf[0], 0.0);
        assert_eq!(lf[1], 0.0);
    }
}
