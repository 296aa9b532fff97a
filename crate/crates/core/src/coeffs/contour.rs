//! κ_p from samples of the generating function on a circle.
//!
//! `W̃_p(z) = (1 − z)^α R(z)^α` where `R = a_0 + ... ` is the deflated
//! polynomial. `R^α` is analytic on `|z| < r_min` (its smallest root
//! modulus), so its Taylor coefficients are recovered by an FFT of samples on
//! `|z| = ρ < r_min`: `c_m = ρ^{−m} (1/(2π)) ∫ R(ρe^{iθ})^α e^{−imθ} dθ`.
//! Sampling on the unit circle itself is not used: the `(1 − z)^α` kink there
//! limits aliasing error to `O(N^{−α})`, and for `p ≥ 3` with small `α` a
//! root of `R` lies inside the unit disk.
//!
//! The `(1 − z)^α` factor is reinstated by convolving with the GL weights.

use num_complex::Complex;
use rustfft::{FftNum, FftPlanner};

use super::classical::gl_sequence;
use super::{kappa_polynomial, CoefficientTable, Family};
use crate::domain;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MIN_SAMPLES: usize = 4096;
const MAX_SAMPLES: usize = 1 << 22;
// ρ = r_min·e^{−MARGIN/N}: aliasing decays like e^{−MARGIN} while round-off
// grows by at most e^{MARGIN·count/N}.
const MARGIN: f64 = 36.0;

/// Sample count used when none is given: `256·(count + 1)` rounded up to a
/// power of two and clamped to `[4096, 2^22]`.
pub fn default_fft_samples(count: usize) -> usize {
    (256 * (count + 1))
        .next_power_of_two()
        .clamp(MIN_SAMPLES, MAX_SAMPLES)
}

/// κ_{p,0..=count} by contour sampling and FFT.
pub fn kappa_weights_fft<T: Real + FftNum>(
    p: usize,
    alpha: T,
    count: usize,
    samples: Option<usize>,
) -> Result<CoefficientTable<T>> {
    let poly = kappa_polynomial(p, alpha)?;
    domain::min_terms(count, 2)?;
    let n = samples.unwrap_or_else(|| default_fft_samples(count));
    if n < 2 * count {
        return Err(Error::TooFewSamples {
            got: n,
            need: 2 * count,
        });
    }

    let b = deflate(&poly.coeffs);
    let roots = polynomial_roots(&b);
    let r_min = roots
        .iter()
        .map(|r| r.norm())
        .fold(T::infinity(), |a, b| a.min(b));
    let two = T::lit(2.0);
    let rho = (r_min * T::lit(-MARGIN / n as f64).exp()).min(two);

    let lead = b[0].powf(alpha);
    let step = T::lit(2.0) * T::PI() / T::from_index(n);
    let mut buf: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let z = Complex::from_polar(rho, step * T::from_index(k));
            roots.iter().fold(Complex::new(lead, T::zero()), |acc, &r| {
                // |z/r| < 1 keeps 1 − z/r in the right half plane.
                acc * (Complex::new(T::one(), T::zero()) - z / r).powf(alpha)
            })
        })
        .collect();
    if buf.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::NonFinite("contour samples"));
    }
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let inv_n = T::one() / T::from_index(n);
    let mut scale = T::one();
    let c: Vec<T> = buf
        .iter()
        .take(count + 1)
        .map(|x| {
            let v = x.re * inv_n / scale;
            scale = scale * rho;
            v
        })
        .collect();

    let w = gl_sequence(alpha, count);
    let values = (0..=count)
        .map(|l| (0..=l).fold(T::zero(), |acc, m| acc + c[m] * w[l - m]))
        .collect();
    Ok(CoefficientTable::new(Family::Kappa, p, alpha, values))
}

/// Divides out the root at `z = 1` (the coefficients sum to zero) and drops
/// vanishing trailing terms.
fn deflate<T: Real>(a: &[T]) -> Vec<T> {
    let mut b = Vec::with_capacity(a.len() - 1);
    let mut acc = T::zero();
    for &ak in &a[..a.len() - 1] {
        acc = acc + ak;
        b.push(acc);
    }
    let scale = b.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let tol = scale * T::epsilon() * T::lit(64.0);
    while b.len() > 1 && b.last().is_some_and(|v| v.abs() <= tol) {
        b.pop();
    }
    b
}

/// Roots of `b_0 + b_1 z + ... + b_d z^d` by Durand–Kerner, polished with
/// Newton steps on the original polynomial.
pub(crate) fn polynomial_roots<T: Real>(b: &[T]) -> Vec<Complex<T>> {
    let d = b.len().saturating_sub(1);
    if d == 0 {
        return Vec::new();
    }
    let lead = b[d];
    let monic: Vec<T> = b.iter().map(|&v| v / lead).collect();
    let eval = |z: Complex<T>| {
        monic
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
    };
    let deriv = |z: Complex<T>| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, (k, &c)| {
                acc * z + c * T::from_index(k)
            })
    };

    // Cauchy bound on the root moduli sets the starting circle.
    let bound = T::one() + monic[..d].iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let seed = Complex::new(T::lit(0.4), T::lit(0.9));
    let mut z: Vec<Complex<T>> = (0..d).map(|k| seed.powu(k as u32) * bound).collect();
    let tol = T::epsilon() * T::lit(4.0);
    for _ in 0..500 {
        let mut moved = T::zero();
        for i in 0..d {
            let mut den = Complex::new(T::one(), T::zero());
            for j in 0..d {
                if i != j {
                    den = den * (z[i] - z[j]);
                }
            }
            let delta = eval(z[i]) / den;
            z[i] = z[i] - delta;
            moved = moved.max(delta.norm() / z[i].norm().max(T::one()));
        }
        if moved <= tol {
            break;
        }
    }
    for r in &mut z {
        for _ in 0..3 {
            let dp = deriv(*r);
            if dp.norm() == T::zero() {
                break;
            }
            *r = *r - eval(*r) / dp;
        }
    }
    z
}
