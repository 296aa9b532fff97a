//! Deterministic CSV and JSON writers.
//!
//! Reals are printed with 17 significant digits (`{:.16e}`), which round-trips
//! binary64 exactly. Missing values are empty CSV fields. Lines end in `\n`.

use std::io::{self, Write};

use serde::Serialize;

use crate::harness::{ConvergenceReport, ErrorSurface};
use crate::pde::{SolutionGrid, SpaceTimeFn};
use crate::scalar::Real;

pub fn fmt_real<T: Real>(x: T) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_real).unwrap_or_default()
}

/// `alpha,resolution,error,order,ref_error,ref_order,pass`
pub fn write_report_csv<W: Write>(report: &ConvergenceReport, mut out: W) -> io::Result<()> {
    writeln!(out, "alpha,resolution,error,order,ref_error,ref_order,pass")?;
    for r in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_real(r.alpha),
            fmt_real(r.resolution),
            fmt_real(r.error),
            fmt_opt(r.order),
            fmt_opt(r.ref_error),
            fmt_opt(r.ref_order),
            r.pass.map(|p| p.to_string()).unwrap_or_default()
        )?;
    }
    Ok(())
}

/// Pretty-printed JSON followed by a newline.
pub fn write_json<W: Write, S: Serialize>(value: &S, mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

/// Long format `t,x,abs_error`, one row per space–time node.
pub fn write_surface_csv<W: Write>(surface: &ErrorSurface, mut out: W) -> io::Result<()> {
    writeln!(out, "t,x,abs_error")?;
    let n = surface.errors.len().saturating_sub(1);
    for (k, row) in surface.errors.iter().enumerate() {
        let t = if k == n {
            surface.tau * n as f64
        } else {
            surface.tau * k as f64
        };
        for (j, &e) in row.iter().enumerate() {
            writeln!(
                out,
                "{},{},{}",
                fmt_real(t),
                fmt_real(surface.grid.x(j)),
                fmt_real(e)
            )?;
        }
    }
    Ok(())
}

/// `t,x,u_numeric`, plus `u_exact,error` when an exact solution is given.
pub fn write_solution_csv<W: Write, T: Real>(
    solution: &SolutionGrid<T>,
    exact: Option<&SpaceTimeFn<T>>,
    mut out: W,
) -> io::Result<()> {
    match exact {
        Some(_) => writeln!(out, "t,x,u_numeric,u_exact,error")?,
        None => writeln!(out, "t,x,u_numeric")?,
    }
    for (&level, row) in solution.levels.iter().zip(&solution.snapshots) {
        let t = solution.time(level);
        for (j, &u) in row.iter().enumerate() {
            let x = solution.grid.x(j);
            match exact {
                Some(f) => {
                    let e = f(x, t);
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        fmt_real(t),
                        fmt_real(x),
                        fmt_real(u),
                        fmt_real(e),
                        fmt_real((u - e).abs())
                    )?
                }
                None => writeln!(out, "{},{},{}", fmt_real(t), fmt_real(x), fmt_real(u))?,
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{ErrorNorm, StudyKind};

    #[test]
    fn empty_report_is_header_only() {
        let report = ConvergenceReport {
            study: StudyKind::OperatorTable1,
            norm: ErrorNorm::SpaceTimeMax,
            fixed_divisions: None,
            rows: Vec::new(),
        };
        let mut buf = Vec::new();
        write_report_csv(&report, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha,resolution,error,order,ref_error,ref_order,pass\n"
        );
        let mut json = Vec::new();
        write_json(&report, &mut json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(v["study"], "operator_table1");
        assert!(v["rows"].as_array().unwrap().is_empty());
    }

    #[test]
    fn real_formatting_round_trips() {
        for x in [0.1 + 0.2, -1.0 / 3.0, 1e-300, 6.02e23] {
            let s = fmt_real(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
        assert_eq!(fmt_real(1.5), "1.5000000000000000e0");
    }
}
