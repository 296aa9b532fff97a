use std::sync::Arc;

use crate::domain;
use crate::error::Result;
use crate::pde::AdvectionDiffusionProblem;
use crate::scalar::{gamma, Real};

/// `u(x) = x²(1 − x)²` on `[0, 1]`.
pub fn example41_function<T: Real>(x: T) -> T {
    let y = x * (T::one() - x);
    y * y
}

/// Riesz derivative of [`example41_function`] at `x = 1/2`:
/// `−sec(πα/2) 2^{α−1} (α² − 4α + 3) / Γ(5 − α)`.
pub fn example41_exact<T: Real>(alpha: T) -> Result<T> {
    domain::alpha_open(alpha)?;
    let two = T::lit(2.0);
    let poly = alpha * alpha - T::lit(4.0) * alpha + T::lit(3.0);
    let sec = T::one() / (T::FRAC_PI_2() * alpha).cos();
    Ok(-sec * two.powf(alpha - T::one()) * poly / gamma(T::lit(5.0) - alpha))
}

/// `u_t + 2u_x = α² ∂^α u/∂|x|^α + f` on `(0, 1) × (0, 1]` with exact
/// solution `cos(αt²) x⁴(1 − x)⁴`.
pub fn example42_problem<T: Real>(alpha: T) -> Result<AdvectionDiffusionProblem<T>> {
    domain::alpha_open(alpha)?;
    // Riesz derivative of x⁴(1−x)⁴ term by term: c_n / Γ(n+1−α) [x^{n−α} + (1−x)^{n−α}].
    let terms: Vec<(T, T)> = [
        (12.0, 4.0),
        (-240.0, 5.0),
        (2160.0, 6.0),
        (-10080.0, 7.0),
        (20160.0, 8.0),
    ]
    .iter()
    .map(|&(c, n)| {
        let e = T::lit(n) - alpha;
        (T::lit(c) / gamma(e + T::one()), e)
    })
    .collect();
    let cos_half = (T::FRAC_PI_2() * alpha).cos();
    let source = move |x: T, t: T| {
        let bump = (x * (T::one() - x)).powi(4);
        let mut riesz = T::zero();
        for &(c, e) in &terms {
            riesz = riesz + c * (x.powf(e) + (T::one() - x).powf(e));
        }
        let at2 = alpha * t * t;
        let (s, c) = at2.sin_cos();
        let poly = T::lit(8.0) * x.powi(7) - T::lit(28.0) * x.powi(6) + T::lit(36.0) * x.powi(5)
            - T::lit(20.0) * x.powi(4)
            + T::lit(4.0) * x.powi(3);
        alpha * alpha * riesz * c / cos_half - T::lit(2.0) * alpha * t * bump * s
            + T::lit(2.0) * c * poly
    };
    let exact = move |x: T, t: T| (alpha * t * t).cos() * (x * (T::one() - x)).powi(4);
    Ok(AdvectionDiffusionProblem::new(
        alpha,
        T::lit(2.0),
        alpha * alpha,
        (T::zero(), T::one()),
        T::one(),
        Arc::new(source),
        Arc::new(|x: T| (x * (T::one() - x)).powi(4)),
    )?
    .with_exact(Arc::new(exact)))
}
