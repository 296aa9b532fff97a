//! Published reference values for the three convergence studies.
//!
//! Each row is `(alpha, divisions, error, order)`; the resolution is
//! `1/divisions` and the first row of every α block carries no order.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub alpha: f64,
    pub divisions: usize,
    pub error: f64,
    pub order: Option<f64>,
}

const fn row(alpha: f64, divisions: usize, error: f64, order: f64) -> ReferenceRow {
    ReferenceRow {
        alpha,
        divisions,
        error,
        order: if order > 0.0 { Some(order) } else { None },
    }
}

/// Operator point error at `x = 0.5`, `h = 1/divisions`.
pub const OPERATOR_REFERENCE: [ReferenceRow; 25] = [
    row(1.1, 20, 2.492284e-3, 0.0),
    row(1.1, 40, 6.462793e-4, 1.9472),
    row(1.1, 80, 1.643881e-4, 1.9751),
    row(1.1, 160, 4.144518e-5, 1.9878),
    row(1.1, 320, 1.040456e-5, 1.9940),
    row(1.3, 20, 3.563949e-3, 0.0),
    row(1.3, 40, 9.146722e-4, 1.9621),
    row(1.3, 80, 2.315235e-4, 1.9821),
    row(1.3, 160, 5.823146e-5, 1.9913),
    row(1.3, 320, 1.460130e-5, 1.9957),
    row(1.5, 20, 4.555022e-3, 0.0),
    row(1.5, 40, 1.157683e-3, 1.9762),
    row(1.5, 80, 2.916709e-4, 1.9888),
    row(1.5, 160, 7.319217e-5, 1.9946),
    row(1.5, 320, 1.833193e-5, 1.9973),
    row(1.7, 20, 5.266851e-3, 0.0),
    row(1.7, 40, 1.326934e-3, 1.9888),
    row(1.7, 80, 3.329312e-4, 1.9948),
    row(1.7, 160, 8.337785e-5, 1.9975),
    row(1.7, 320, 2.086231e-5, 1.9988),
    row(1.9, 20, 5.352412e-3, 0.0),
    row(1.9, 40, 1.339793e-3, 1.9982),
    row(1.9, 80, 3.351414e-4, 1.9992),
    row(1.9, 160, 8.380846e-5, 1.9996),
    row(1.9, 320, 2.095494e-5, 1.9998),
];

/// Solver error with `h = 1/1000`, `τ = 1/divisions`.
pub const TEMPORAL_REFERENCE: [ReferenceRow; 20] = [
    row(1.2, 5, 8.853323e-5, 0.0),
    row(1.2, 10, 2.139870e-5, 2.05),
    row(1.2, 20, 5.374545e-6, 1.99),
    row(1.2, 40, 1.350102e-6, 1.99),
    row(1.2, 80, 3.461897e-7, 1.96),
    row(1.4, 5, 9.968682e-5, 0.0),
    row(1.4, 10, 2.551591e-5, 1.97),
    row(1.4, 20, 6.323861e-6, 2.01),
    row(1.4, 40, 1.591389e-6, 1.99),
    row(1.4, 80, 4.064288e-7, 1.97),
    row(1.6, 5, 1.238098e-4, 0.0),
    row(1.6, 10, 2.974978e-5, 2.06),
    row(1.6, 20, 7.370363e-6, 2.01),
    row(1.6, 40, 1.846014e-6, 2.00),
    row(1.6, 80, 4.695380e-7, 1.98),
    row(1.8, 5, 1.435874e-4, 0.0),
    row(1.8, 10, 3.361038e-5, 2.09),
    row(1.8, 20, 8.398948e-6, 2.00),
    row(1.8, 40, 2.099550e-6, 2.00),
    row(1.8, 80, 5.309125e-7, 1.98),
];

/// Solver error with `τ = 1/2000`, `h = 1/divisions`.
pub const SPATIAL_REFERENCE: [ReferenceRow; 20] = [
    row(1.2, 10, 2.101375e-4, 0.0),
    row(1.2, 20, 5.260133e-5, 2.00),
    row(1.2, 40, 1.334869e-5, 1.98),
    row(1.2, 80, 3.373047e-6, 1.98),
    row(1.2, 160, 8.484737e-7, 1.99),
    row(1.4, 10, 2.015275e-4, 0.0),
    row(1.4, 20, 5.155201e-5, 1.97),
    row(1.4, 40, 1.312357e-5, 1.97),
    row(1.4, 80, 3.315909e-6, 1.97),
    row(1.4, 160, 8.337871e-7, 1.99),
    row(1.6, 10, 1.831026e-4, 0.0),
    row(1.6, 20, 4.672567e-5, 1.97),
    row(1.6, 40, 1.183333e-5, 1.98),
    row(1.6, 80, 2.979178e-6, 1.99),
    row(1.6, 160, 7.475850e-7, 1.99),
    row(1.8, 10, 1.485772e-4, 0.0),
    row(1.8, 20, 3.783943e-5, 1.97),
    row(1.8, 40, 9.534022e-6, 1.99),
    row(1.8, 80, 2.391298e-6, 2.00),
    row(1.8, 160, 5.991744e-7, 2.00),
];
