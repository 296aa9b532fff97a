//! Parameter validation shared by the coefficient, operator and solver paths.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `α ∈ (1, 2]`: coefficient paths admit the integer-order limit.
pub(crate) fn alpha_half_open<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::one() && alpha <= T::lit(2.0) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfDomain {
            alpha: alpha.as_f64(),
            domain: "(1, 2]",
        })
    }
}

/// `α ∈ (1, 2)`.
pub(crate) fn alpha_open<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::one() && alpha < T::lit(2.0) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfDomain {
            alpha: alpha.as_f64(),
            domain: "(1, 2)",
        })
    }
}

pub(crate) fn min_terms(count: usize, min: usize) -> Result<()> {
    if count >= min {
        Ok(())
    } else {
        Err(Error::TooFewTerms { got: count, min })
    }
}
