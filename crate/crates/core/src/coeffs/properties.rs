//! Structural checks on second-order κ tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::classical::gl_sequence;
use super::{CoefficientTable, Family};
use crate::scalar::{gamma, Real};

/// Root in (1, 2) of `8α³ − 21α² + 16α − 4`, where κ_{2,2} changes sign.
pub fn critical_alpha<T: Real>() -> T {
    let c = (T::lit(621.0) + T::lit(48.0) * T::lit(87.0).sqrt()).cbrt();
    T::lit(7.0 / 8.0) + c / T::lit(24.0) + T::lit(19.0) / (T::lit(8.0) * c)
}

// κ_2 values at least this large count as non-negative.
const SIGN_TIE: f64 = -1e-14;
// Boundedness is only claimed away from the first few indices.
const BOUND_RANGE: (usize, usize) = (8, 1000);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// κ_0 > 0 and κ_1 < 0.
    LeadingSigns,
    /// κ_2 < 0 below the critical α and κ_2 ≥ 0 above it.
    SecondSign,
    /// κ_ℓ ≥ 0 for ℓ ≥ 3.
    TailNonnegative,
    /// |κ_ℓ| ≤ M(α) κ_0 ϖ_{1,ℓ}.
    Bounded,
    /// κ_L L^{α+1} → −sin(πα) Γ(α+1)/π.
    Asymptotic,
    /// Σ_{ℓ≤L} κ_ℓ → 0 like L^{−α}.
    ZeroSum,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Clause::LeadingSigns => "leading_signs",
            Clause::SecondSign => "second_sign",
            Clause::TailNonnegative => "tail_nonnegative",
            Clause::Bounded => "bounded",
            Clause::Asymptotic => "asymptotic",
            Clause::ZeroSum => "zero_sum",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    /// The clause has no content for this table (α = 2, or not a κ_2 table).
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClauseCheck {
    pub clause: Clause,
    pub status: ClauseStatus,
    /// Human-readable evidence: the offending index or the measured quantity.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub alpha: f64,
    pub truncation: usize,
    pub kappa2_nonnegative: bool,
    pub checks: Vec<ClauseCheck>,
}

impl PropertyReport {
    pub fn status(&self, clause: Clause) -> Option<ClauseStatus> {
        self.checks
            .iter()
            .find(|c| c.clause == clause)
            .map(|c| c.status)
    }

    /// No clause failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != ClauseStatus::Fail)
    }
}

const ALL_CLAUSES: [Clause; 6] = [
    Clause::LeadingSigns,
    Clause::SecondSign,
    Clause::TailNonnegative,
    Clause::Bounded,
    Clause::Asymptotic,
    Clause::ZeroSum,
];

fn check(clause: Clause, ok: bool, witness: String) -> ClauseCheck {
    ClauseCheck {
        clause,
        status: if ok {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        witness,
    }
}

fn degenerate(clause: Clause, witness: impl Into<String>) -> ClauseCheck {
    ClauseCheck {
        clause,
        status: ClauseStatus::Degenerate,
        witness: witness.into(),
    }
}

/// Checks a κ_2 table against its sign, boundedness, decay and zero-sum
/// properties. Never fails; tables of other families come back degenerate.
pub fn verify_properties<T: Real>(table: &CoefficientTable<T>) -> PropertyReport {
    let alpha = table.alpha.as_f64();
    let truncation = table.truncation();
    let k: Vec<f64> = table.values.iter().map(|v| v.as_f64()).collect();

    if table.family != Family::Kappa || table.order != 2 || k.len() < 3 {
        return PropertyReport {
            alpha,
            truncation,
            kappa2_nonnegative: false,
            checks: ALL_CLAUSES
                .iter()
                .map(|&c| degenerate(c, "requires a kappa_2 table with L >= 2"))
                .collect(),
        };
    }

    let integer_limit = alpha == 2.0;
    let mut checks = Vec::with_capacity(ALL_CLAUSES.len());

    checks.push(check(
        Clause::LeadingSigns,
        k[0] > 0.0 && k[1] < 0.0,
        format!("kappa_0 = {:e}, kappa_1 = {:e}", k[0], k[1]),
    ));

    let a_star = critical_alpha::<f64>();
    let nonneg = k[2] >= SIGN_TIE;
    checks.push(check(
        Clause::SecondSign,
        nonneg == (alpha >= a_star),
        format!("kappa_2 = {:e}, alpha* = {a_star:.6}", k[2]),
    ));

    let floor = -16.0 * f64::EPSILON * k[0];
    let first_negative = (3..k.len()).find(|&l| k[l] < floor);
    checks.push(check(
        Clause::TailNonnegative,
        first_negative.is_none(),
        match first_negative {
            Some(l) => format!("kappa_{l} = {:e}", k[l]),
            None => format!("kappa_l >= 0 for 3 <= l <= {truncation}"),
        },
    ));

    checks.push(bounded(alpha, &k));

    let c = -(std::f64::consts::PI * alpha).sin() * gamma(alpha + 1.0) / std::f64::consts::PI;
    if integer_limit {
        checks.push(degenerate(
            Clause::Asymptotic,
            "alpha = 2: weights terminate",
        ));
    } else {
        let l = truncation as f64;
        let ratio = k[truncation] * l.powf(alpha + 1.0) / c;
        checks.push(check(
            Clause::Asymptotic,
            (0.95..=1.05).contains(&ratio),
            format!("kappa_L L^(alpha+1) / c = {ratio:.6} at L = {truncation}"),
        ));
    }

    let sum: f64 = k.iter().sum();
    if integer_limit {
        checks.push(degenerate(
            Clause::ZeroSum,
            format!("alpha = 2: partial sum = {sum:e}"),
        ));
    } else {
        let bound = 2.0 * c.abs() / alpha * (truncation as f64).powf(-alpha);
        checks.push(check(
            Clause::ZeroSum,
            sum.abs() <= bound,
            format!("|sum| = {:e}, bound = {bound:e}", sum.abs()),
        ));
    }

    PropertyReport {
        alpha,
        truncation,
        kappa2_nonnegative: nonneg,
        checks,
    }
}

fn bounded(alpha: f64, k: &[f64]) -> ClauseCheck {
    let (lo, hi) = BOUND_RANGE;
    let hi = hi.min(k.len() - 1);
    if hi < lo {
        return degenerate(Clause::Bounded, format!("needs L >= {lo}"));
    }
    let m = 2.0 * (1.0 + alpha * (2.0 - alpha) * (10.0 - alpha) / (8.0 * (3.0 * alpha - 2.0)));
    let w = gl_sequence(alpha, hi);
    let worst = (lo..=hi).map(|l| (l, k[l].abs() - m * k[0] * w[l])).fold(
        (lo, f64::NEG_INFINITY),
        |a, b| if b.1 > a.1 { b } else { a },
    );
    check(
        Clause::Bounded,
        worst.1 <= 1e-15 * k[0],
        format!(
            "max(|kappa_l| - M kappa_0 w_l) = {:e} at l = {}, {lo} <= l <= {hi}",
            worst.1, worst.0
        ),
    )
}
