//! Manufactured problems, convergence studies and error surfaces.

mod examples;
mod reference;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{point_riesz_derivative, GridFunction, GridSpec1D};
use crate::pde::{assemble_system, solve_observed};

pub use examples::{example41_exact, example41_function, example42_problem};
pub use reference::{ReferenceRow, OPERATOR_REFERENCE, SPATIAL_REFERENCE, TEMPORAL_REFERENCE};

/// Fixed `1/h` of the temporal study.
pub const TEMPORAL_FIXED_DIVISIONS: usize = 1000;
/// Fixed `1/τ` of the spatial study.
pub const SPATIAL_FIXED_DIVISIONS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyKind {
    /// Point error of the second-order Riesz operator on `x²(1 − x)²` at `x = 1/2`.
    OperatorTable1,
    /// Solver error, `h` fixed at 1/1000, `τ = 1/divisions`.
    TemporalTable2,
    /// Solver error, `τ` fixed at 1/2000, `h = 1/divisions`.
    SpatialTable3,
}

impl StudyKind {
    pub fn from_table(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::OperatorTable1),
            2 => Some(Self::TemporalTable2),
            3 => Some(Self::SpatialTable3),
            _ => None,
        }
    }

    pub fn reference(self) -> &'static [ReferenceRow] {
        match self {
            Self::OperatorTable1 => &OPERATOR_REFERENCE,
            Self::TemporalTable2 => &TEMPORAL_REFERENCE,
            Self::SpatialTable3 => &SPATIAL_REFERENCE,
        }
    }

    /// α values of the reference table.
    pub fn default_alphas(self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for r in self.reference() {
            if !out.contains(&r.alpha) {
                out.push(r.alpha);
            }
        }
        out
    }

    /// `1/h` or `1/τ` values of the reference table.
    pub fn default_divisions(self) -> Vec<usize> {
        let first = self.reference()[0].alpha;
        self.reference()
            .iter()
            .filter(|r| r.alpha == first)
            .map(|r| r.divisions)
            .collect()
    }

    /// Relative error tolerance against the reference value.
    pub fn error_tolerance(self) -> f64 {
        match self {
            Self::OperatorTable1 => 5e-3,
            _ => 5e-2,
        }
    }
}

/// How a space–time error field is reduced to one number.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorNorm {
    /// Max over interior nodes at `t = T`.
    FinalTime,
    /// Max over interior nodes and all time levels `t_1..t_N`.
    #[default]
    SpaceTimeMax,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub alpha: f64,
    /// `1/h` or `1/τ`.
    pub divisions: usize,
    /// `h` or `τ`.
    pub resolution: f64,
    pub error: f64,
    pub order: Option<f64>,
    pub ref_error: Option<f64>,
    pub ref_order: Option<f64>,
    /// `None` when there is no reference row to compare with.
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub study: StudyKind,
    pub norm: ErrorNorm,
    /// `1/h` (temporal) or `1/τ` (spatial) held fixed; absent for the operator study.
    pub fixed_divisions: Option<usize>,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// True when every row with a reference passed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn rows_for(&self, alpha: f64) -> impl Iterator<Item = &ConvergenceRow> {
        self.rows.iter().filter(move |r| r.alpha == alpha)
    }
}

/// Settings of [`convergence_study_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudyOptions {
    pub norm: ErrorNorm,
    /// Overrides the fixed `1/h` or `1/τ`.
    pub fixed_divisions: Option<usize>,
}

impl Default for StudyOptions {
    fn default() -> Self {
        Self {
            norm: ErrorNorm::SpaceTimeMax,
            fixed_divisions: None,
        }
    }
}

/// Point error `|(Riesz u)_{M/2} − exact|` for the operator study.
pub fn operator_point_error(alpha: f64, m: usize) -> Result<f64> {
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidGrid(format!(
            "M = {m} must be even to hit x = 1/2"
        )));
    }
    let grid = GridSpec1D::unit(m)?;
    let u = GridFunction::sample(grid, example41_function);
    let numeric = point_riesz_derivative(&u, alpha, 2, m / 2)?;
    Ok((numeric - example41_exact(alpha)?).abs())
}

/// Example 4.2 solver error on `m` cells and `n` steps.
pub fn solver_error(alpha: f64, m: usize, n: usize, norm: ErrorNorm) -> Result<f64> {
    let problem = example42_problem(alpha)?;
    let system = assemble_system(&problem, m, n)?;
    let exact = problem
        .exact
        .clone()
        .expect("manufactured problem has an exact solution");
    let nodes = system.nodes().to_vec();
    let mut worst = 0.0f64;
    let last = solve_observed(&system, |k, u| {
        if norm == ErrorNorm::SpaceTimeMax && k > 0 {
            let t = system.time(k);
            for (&x, &v) in nodes.iter().zip(u) {
                worst = worst.max((v - exact(x, t)).abs());
            }
        }
    })?;
    if norm == ErrorNorm::FinalTime {
        let t = system.time(n);
        for (&x, &v) in nodes.iter().zip(&last) {
            worst = worst.max((v - exact(x, t)).abs());
        }
    }
    Ok(worst)
}

/// Runs a study with the default space–time max norm.
pub fn convergence_study(
    kind: StudyKind,
    alphas: &[f64],
    divisions: &[usize],
) -> Result<ConvergenceReport> {
    convergence_study_with(kind, alphas, divisions, StudyOptions::default())
}

/// Errors, observed orders and reference comparison for every
/// `(α, divisions)` cell. Cells run in parallel; rows come back sorted by α
/// then by increasing `divisions`.
pub fn convergence_study_with(
    kind: StudyKind,
    alphas: &[f64],
    divisions: &[usize],
    options: StudyOptions,
) -> Result<ConvergenceReport> {
    if divisions.is_empty() || divisions.contains(&0) {
        return Err(Error::InvalidGrid("divisions must be positive".into()));
    }
    let mut alphas = alphas.to_vec();
    alphas.sort_by(f64::total_cmp);
    alphas.dedup();
    let mut divisions = divisions.to_vec();
    divisions.sort_unstable();
    divisions.dedup();

    let fixed = match kind {
        StudyKind::OperatorTable1 => None,
        StudyKind::TemporalTable2 => {
            Some(options.fixed_divisions.unwrap_or(TEMPORAL_FIXED_DIVISIONS))
        }
        StudyKind::SpatialTable3 => {
            Some(options.fixed_divisions.unwrap_or(SPATIAL_FIXED_DIVISIONS))
        }
    };
    let cells: Vec<(f64, usize)> = alphas
        .iter()
        .flat_map(|&a| divisions.iter().map(move |&d| (a, d)))
        .collect();
    let errors: Vec<f64> = cells
        .par_iter()
        .map(|&(alpha, d)| match (kind, fixed) {
            (StudyKind::OperatorTable1, _) => operator_point_error(alpha, d),
            (StudyKind::TemporalTable2, Some(m)) => solver_error(alpha, m, d, options.norm),
            (StudyKind::SpatialTable3, Some(n)) => solver_error(alpha, d, n, options.norm),
            _ => unreachable!("solver studies always fix the other resolution"),
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(cells.len());
    for (i, (&(alpha, d), &error)) in cells.iter().zip(&errors).enumerate() {
        let order = (i > 0 && cells[i - 1].0 == alpha).then(|| {
            let (prev_d, prev_e) = (cells[i - 1].1, errors[i - 1]);
            (prev_e / error).ln() / (d as f64 / prev_d as f64).ln()
        });
        let reference = kind
            .reference()
            .iter()
            .find(|r| r.alpha == alpha && r.divisions == d);
        let pass = reference.map(|r| row_passes(kind, error, order, r));
        rows.push(ConvergenceRow {
            alpha,
            divisions: d,
            resolution: 1.0 / d as f64,
            error,
            order,
            ref_error: reference.map(|r| r.error),
            ref_order: reference.and_then(|r| r.order),
            pass,
        });
    }
    Ok(ConvergenceReport {
        study: kind,
        norm: options.norm,
        fixed_divisions: fixed,
        rows,
    })
}

fn row_passes(kind: StudyKind, error: f64, order: Option<f64>, r: &ReferenceRow) -> bool {
    let error_ok = ((error - r.error) / r.error).abs() <= kind.error_tolerance();
    let order_ok = match (kind, order, r.order) {
        (StudyKind::OperatorTable1, Some(o), Some(ro)) => (o - ro).abs() <= 0.02,
        (_, Some(o), _) if kind != StudyKind::OperatorTable1 => (o - 2.0).abs() <= 0.1,
        _ => true,
    };
    error_ok && order_ok
}

/// Pointwise errors `|U_j^k − u(x_j, t_k)|` of Example 4.2 over the full
/// space–time grid, `(N + 1) × (M + 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorSurface {
    pub alpha: f64,
    pub grid: GridSpec1D<f64>,
    pub tau: f64,
    pub errors: Vec<Vec<f64>>,
}

impl ErrorSurface {
    pub fn max(&self) -> f64 {
        self.errors.iter().flatten().fold(0.0, |m, &v| m.max(v))
    }
}

pub fn error_surface(alpha: f64, m: usize, n: usize) -> Result<ErrorSurface> {
    let problem = example42_problem(alpha)?;
    let system = assemble_system(&problem, m, n)?;
    let exact = problem
        .exact
        .clone()
        .expect("manufactured problem has an exact solution");
    let nodes = system.nodes().to_vec();
    let mut errors = Vec::with_capacity(n + 1);
    solve_observed(&system, |k, u| {
        let t = system.time(k);
        let mut row = Vec::with_capacity(m + 1);
        row.push(0.0);
        row.extend(nodes.iter().zip(u).map(|(&x, &v)| (v - exact(x, t)).abs()));
        row.push(0.0);
        errors.push(row);
    })?;
    Ok(ErrorSurface {
        alpha,
        grid: system.grid,
        tau: system.tau,
        errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_reference_tables() {
        assert_eq!(
            StudyKind::OperatorTable1.default_alphas(),
            vec![1.1, 1.3, 1.5, 1.7, 1.9]
        );
        assert_eq!(
            StudyKind::TemporalTable2.default_divisions(),
            vec![5, 10, 20, 40, 80]
        );
        assert_eq!(
            StudyKind::SpatialTable3.default_divisions(),
            vec![10, 20, 40, 80, 160]
        );
        assert_eq!(StudyKind::from_table(4), None);
    }

    #[test]
    fn operator_study_row() {
        let r = convergence_study(StudyKind::OperatorTable1, &[1.3], &[40, 80]).unwrap();
        let row = &r.rows[1];
        assert!(((row.error - 2.315235e-4) / 2.315235e-4).abs() < 5e-3);
        assert!((row.order.unwrap() - 1.9821).abs() < 0.02);
        assert_eq!(row.pass, Some(true));
        assert!(r.rows[0].order.is_none());
        assert!(r.passed());
    }

    #[test]
    fn rows_without_reference_are_unjudged() {
        let r = convergence_study(StudyKind::OperatorTable1, &[1.25], &[20, 40]).unwrap();
        assert!(r
            .rows
            .iter()
            .all(|row| row.pass.is_none() && row.ref_error.is_none()));
        assert!(r.passed());
    }

    #[test]
    fn surface_boundaries_and_initial_row() {
        let s = error_surface(1.5, 20, 10).unwrap();
        assert_eq!(s.errors.len(), 11);
        assert!(s
            .errors
            .iter()
            .all(|r| r.len() == 21 && r[0] == 0.0 && r[20] == 0.0));
        assert!(s.errors[0].iter().all(|&v| v == 0.0));
        assert!(s.max() > 0.0 && s.max() < 1e-3);
    }

    #[test]
    fn rejects_odd_operator_grids() {
        assert!(operator_point_error(1.5, 21).is_err());
    }
}
