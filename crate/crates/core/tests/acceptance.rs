//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riesz_core::coeffs::{
    critical_alpha, expansion_coefficients, gl_weights, kappa_weights, verify_properties, Clause,
    ClauseStatus, Method,
};
use riesz_core::harness::{convergence_study_with, ErrorNorm, StudyKind, StudyOptions};
use riesz_core::operators::{generating_symbol, spectral_bounds, symbol_extremes};
use riesz_core::pde::{assemble_system, grid_norm, solve, AdvectionDiffusionProblem, Keep};
use std::sync::Arc;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn table(kind: StudyKind, limit: Duration) -> Outcome {
    let start = Instant::now();
    let options = StudyOptions {
        norm: ErrorNorm::SpaceTimeMax,
        fixed_divisions: None,
    };
    let report = match convergence_study_with(
        kind,
        &kind.default_alphas(),
        &kind.default_divisions(),
        options,
    ) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("study failed: {e}")),
    };
    let elapsed = start.elapsed();
    let worst_rel = report
        .rows
        .iter()
        .filter_map(|r| r.ref_error.map(|e| ((r.error - e) / e).abs()))
        .fold(0.0, f64::max);
    let worst_order = report
        .rows
        .iter()
        .filter_map(|r| {
            let o = r.order?;
            Some(match kind {
                StudyKind::OperatorTable1 => (o - r.ref_order?).abs(),
                _ => (o - 2.0).abs(),
            })
        })
        .fold(0.0, f64::max);
    let failed: Vec<String> = report
        .rows
        .iter()
        .filter(|r| r.pass != Some(true))
        .map(|r| format!("alpha={} 1/{}", r.alpha, r.divisions))
        .collect();
    let norm = match kind {
        StudyKind::OperatorTable1 => String::new(),
        _ => ", space-time max norm".to_string(),
    };
    let pass = failed.is_empty() && elapsed <= limit;
    outcome(
        pass,
        format!(
            "{} rows, max rel error dev {:.2e}, max order dev {:.4}{norm}, {:.2}s (limit {}s){}",
            report.rows.len(),
            worst_rel,
            worst_order,
            elapsed.as_secs_f64(),
            limit.as_secs(),
            if failed.is_empty() {
                String::new()
            } else {
                format!(", failing rows: {}", failed.join("; "))
            }
        ),
    )
}

// The final-time norm, printed for comparison only.
fn final_time_diagnostic(kind: StudyKind) -> String {
    let options = StudyOptions {
        norm: ErrorNorm::FinalTime,
        fixed_divisions: None,
    };
    match convergence_study_with(
        kind,
        &kind.default_alphas(),
        &kind.default_divisions(),
        options,
    ) {
        Ok(report) => {
            let worst = report
                .rows
                .iter()
                .filter_map(|r| r.ref_error.map(|e| ((r.error - e) / e).abs()))
                .fold(0.0, f64::max);
            format!(
                "{kind:?} under the final-time norm: max rel deviation from reference {worst:.3}"
            )
        }
        Err(e) => format!("{kind:?} final-time norm study failed: {e}"),
    }
}

fn cross_method() -> Outcome {
    let start = Instant::now();
    let mut worst = (0.0f64, 0usize, 0.0f64, "");
    for p in [2, 3, 4] {
        for alpha in [1.1, 1.3, 1.5, 1.7, 1.9] {
            let rec: Vec<f64> = kappa_weights(p, alpha, 512, Method::Recursion)
                .unwrap()
                .values;
            for (name, method) in [("convolution", Method::Convolution), ("fft", Method::Fft)] {
                let other: Vec<f64> = match kappa_weights(p, alpha, 512, method) {
                    Ok(t) => t.values,
                    Err(e) => return outcome(false, format!("{name} failed: {e}")),
                };
                for (r, o) in rec.iter().zip(&other) {
                    let dev = (r - o).abs() / r.abs().max(1e-300);
                    if dev.is_nan() || dev > worst.0 {
                        worst = (dev, p, alpha, name);
                    }
                }
            }
        }
    }
    outcome(
        worst.0 <= 1e-10,
        format!(
            "max rel deviation {:.2e} (p={}, alpha={}, {}), l <= 512, {:.2}s",
            worst.0,
            worst.1,
            worst.2,
            worst.3,
            start.elapsed().as_secs_f64()
        ),
    )
}

fn properties() -> Outcome {
    let a_star: f64 = critical_alpha();
    let mut problems = Vec::new();
    let mut alphas: Vec<f64> = (1..20).map(|k| 1.0 + 0.05 * k as f64).collect();
    alphas.extend([a_star - 1e-3, a_star + 1e-3]);
    for &alpha in &alphas {
        let t = kappa_weights(2, alpha, 1000, Method::Recursion).unwrap();
        let r = verify_properties(&t);
        for clause in [
            Clause::LeadingSigns,
            Clause::SecondSign,
            Clause::TailNonnegative,
        ] {
            if r.status(clause) != Some(ClauseStatus::Pass) {
                problems.push(format!("{clause} at alpha={alpha}"));
            }
        }
    }
    let below = kappa_weights(2, a_star - 1e-3, 2, Method::Recursion)
        .unwrap()
        .values[2];
    let above = kappa_weights(2, a_star + 1e-3, 2, Method::Recursion)
        .unwrap()
        .values[2];
    if !(below < 0.0 && above > 0.0) {
        problems.push("kappa_2 does not flip sign at alpha*".into());
    }

    let big = kappa_weights(2, 1.5, 100_000, Method::Recursion).unwrap();
    let c = -(std::f64::consts::PI * 1.5).sin() * riesz_core::gamma(2.5) / std::f64::consts::PI;
    let ratio = big.values[100_000] * 1e5f64.powf(2.5) / c;
    if !(0.95..=1.05).contains(&ratio) {
        problems.push(format!("asymptotic ratio {ratio}"));
    }
    let sum: f64 = big.values[..=10_000].iter().sum();
    if sum.is_nan() || sum.abs() >= 1e-3 {
        problems.push(format!("partial sum {sum:e}"));
    }
    outcome(
        problems.is_empty(),
        format!(
            "signs on {} alphas, alpha* = {a_star:.6}, kappa_2 {below:.2e} / {above:.2e} across alpha*, \
             asymptotic ratio {ratio:.6} at l=1e5, |partial sum| {:.2e} at L=1e4{}",
            alphas.len(),
            sum.abs(),
            if problems.is_empty() {
                String::new()
            } else {
                format!(", problems: {}", problems.join("; "))
            }
        ),
    )
}

fn spectral() -> Outcome {
    let alphas: Vec<f64> = (1..=9).map(|k| 1.0 + 0.1 * k as f64).collect();
    let mut max_eig = f64::NEG_INFINITY;
    let mut max_symbol = f64::NEG_INFINITY;
    let mut sandwich_ok = true;
    for &alpha in &alphas {
        let (fmin, fmax) = symbol_extremes(alpha, 10_000).unwrap();
        max_symbol = max_symbol.max(fmax);
        for m in [8, 16, 32, 64, 128] {
            let (lo, hi) = spectral_bounds(alpha, 2, m).unwrap();
            max_eig = max_eig.max(hi);
            sandwich_ok &= lo >= fmin - 1e-10 && hi <= fmax + 1e-10;
        }
    }
    // Negative x samples as well: the symbol is even.
    for &alpha in &alphas {
        for k in 0..10_000 {
            let x = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / 9_999.0;
            max_symbol = max_symbol.max(generating_symbol(alpha, x).unwrap());
        }
    }
    outcome(
        max_eig <= 1e-10 && max_symbol <= 1e-12 && sandwich_ok,
        format!(
            "max eigenvalue {max_eig:.3e}, max symbol {max_symbol:.3e}, sandwich {}",
            if sandwich_ok { "holds" } else { "violated" }
        ),
    )
}

fn stability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = f64::NEG_INFINITY;
    for alpha in [1.1, 1.5, 1.9] {
        let problem = AdvectionDiffusionProblem::new(
            alpha,
            2.0,
            alpha * alpha,
            (0.0, 1.0),
            50.0,
            Arc::new(|_, _| 0.0),
            Arc::new(|_| 0.0),
        )
        .unwrap();
        let system = assemble_system(&problem, 200, 500).unwrap();
        let h = system.grid.h();
        for _ in 0..50 {
            let mut u: Vec<f64> = (0..199).map(|_| rng.random_range(-1.0..1.0)).collect();
            let mut norm = grid_norm(&u, h);
            for k in 0..500 {
                u = system.step(&u, system.tau * k as f64).unwrap();
                let next = grid_norm(&u, h);
                worst = worst.max(next - norm);
                norm = next;
            }
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max norm increase {worst:.3e} over 3 x 50 x 500 steps (tau=0.1, h=1/200)"),
    )
}

fn expansion() -> Outcome {
    let mut worst = 0.0f64;
    let mut gamma1 = 0.0f64;
    for k in 0..17 {
        let a = 1.0 + (k as f64 + 1.0) / 18.0;
        let g = expansion_coefficients(a, 3).unwrap();
        let g2 = -(2.0 * a * a - 6.0 * a + 3.0) / (6.0 * a);
        let g3 = (3.0 * a.powi(3) - 11.0 * a * a + 12.0 * a - 4.0) / (12.0 * a * a);
        gamma1 = gamma1.max(g.gammas[0].abs());
        worst = worst
            .max((g.gammas[1] - g2).abs())
            .max((g.gammas[2] - g3).abs());
    }
    outcome(
        worst <= 1e-10 && gamma1 <= 4.0 * f64::EPSILON,
        format!("17 alphas, max |gamma_2,3 - closed form| {worst:.2e}, max |gamma_1| {gamma1:.2e}"),
    )
}

// Textbook Crank-Nicolson with the three-point Laplacian, Thomas algorithm.
fn classical_reference(m: usize, n: usize, k: f64, d: f64) -> Vec<f64> {
    let h = 1.0 / m as f64;
    let tau = 1.0 / n as f64;
    let dim = m - 1;
    let x: Vec<f64> = (1..m).map(|j| j as f64 * h).collect();
    let f = |x: f64, t: f64| (3.0 * x).sin() * (1.0 + t);
    // A u = K (u_{j+1} − u_{j−1})/(2h) − D (u_{j−1} − 2u_j + u_{j+1})/h².
    let lower = -k / (2.0 * h) - d / (h * h);
    let diag = 2.0 * d / (h * h);
    let upper = k / (2.0 * h) - d / (h * h);
    let half = 0.5 * tau;
    let mut u: Vec<f64> = x
        .iter()
        .map(|&x| (std::f64::consts::PI * x).sin())
        .collect();
    for step in 0..n {
        let t = (step as f64 + 0.5) * tau;
        let mut rhs: Vec<f64> = (0..dim)
            .map(|i| {
                let mut au = diag * u[i];
                if i > 0 {
                    au += lower * u[i - 1];
                }
                if i + 1 < dim {
                    au += upper * u[i + 1];
                }
                u[i] - half * au + tau * f(x[i], t)
            })
            .collect();
        let (a, b, c) = (half * lower, 1.0 + half * diag, half * upper);
        let mut cp = vec![0.0; dim];
        cp[0] = c / b;
        rhs[0] /= b;
        for i in 1..dim {
            let den = b - a * cp[i - 1];
            cp[i] = c / den;
            rhs[i] = (rhs[i] - a * rhs[i - 1]) / den;
        }
        for i in (0..dim - 1).rev() {
            rhs[i] -= cp[i] * rhs[i + 1];
        }
        u = rhs;
    }
    u
}

fn classical_limit() -> Outcome {
    let gl = gl_weights(2.0, 4).unwrap().values;
    let kappa = kappa_weights(2, 2.0, 4, Method::Recursion).unwrap().values;
    let weights_ok = gl == [1.0, -2.0, 1.0, 0.0, 0.0] && kappa == [1.0, -2.0, 1.0, 0.0, 0.0];

    let (m, n, k, d) = (64, 40, 2.0, 0.7);
    let problem = AdvectionDiffusionProblem::new(
        2.0,
        k,
        d,
        (0.0, 1.0),
        1.0,
        Arc::new(|x: f64, t: f64| (3.0 * x).sin() * (1.0 + t)),
        Arc::new(|x: f64| {
            if x == 1.0 {
                0.0
            } else {
                (std::f64::consts::PI * x).sin()
            }
        }),
    )
    .unwrap();
    let ours = solve(&problem, m, n, Keep::Final).unwrap();
    let reference = classical_reference(m, n, k, d);
    let diff = ours.final_values()[1..m]
        .iter()
        .zip(&reference)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    outcome(
        weights_ok && diff <= 1e-12,
        format!(
            "alpha=2 weights {:?}, max |U - U_classical| {diff:.2e} (M={m}, N={n})",
            &kappa[..3]
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Table 1 reproduction", || {
            table(StudyKind::OperatorTable1, Duration::from_secs(5))
        }),
        ("Table 2 reproduction", || {
            table(StudyKind::TemporalTable2, Duration::from_secs(180))
        }),
        ("Table 3 reproduction", || {
            table(StudyKind::SpatialTable3, Duration::from_secs(180))
        }),
        ("coefficient cross-method oracle", cross_method),
        ("coefficient property suite", properties),
        ("spectral certification", spectral),
        ("unconditional stability", stability),
        ("gamma expansion", expansion),
        ("classical limit", classical_limit),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("INFO {}", final_time_diagnostic(StudyKind::TemporalTable2));
    println!("INFO {}", final_time_diagnostic(StudyKind::SpatialTable3));
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
