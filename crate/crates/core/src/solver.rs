//! Newton-Raphson on tabulated interpolants: level crossings and extrema.
//!
//! Each iterate re-selects its interpolation window, so the function being
//! solved is the piecewise polynomial seen by [`TabulatedFunction::interpolate_at`].
//! Iterates are clamped to the table's abscissa range.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{Domain, TabulatedFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    /// Converged once `|P(x) - target|` (or `|P'(x)|` for extrema) is at most this.
    pub tol_residual: f64,
    /// Converged once a step moves `x` by at most this.
    pub tol_step: f64,
    pub max_iter: usize,
    /// Smallest `|slope|` a Newton step may divide by.
    pub derivative_floor: f64,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            tol_residual: 1e-10,
            tol_step: 1e-12,
            max_iter: 50,
            derivative_floor: 1e-14,
        }
    }
}

impl SolverSettings {
    /// Defaults with the derivative floor scaled to the table's ordinates.
    pub fn for_table(table: &TabulatedFunction) -> Self {
        SolverSettings {
            derivative_floor: 1e-14 * table.y_scale().max(1.0),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.tol_residual)
            || !positive(self.tol_step)
            || !positive(self.derivative_floor)
        {
            return Err(Error::InvalidConfig(
                "solver tolerances must be positive and finite".into(),
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Minimum,
    Maximum,
    Degenerate,
}

impl std::fmt::Display for ExtremumKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExtremumKind::Minimum => "minimum",
            ExtremumKind::Maximum => "maximum",
            ExtremumKind::Degenerate => "degenerate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremumResult {
    pub x: f64,
    pub value: f64,
    pub kind: ExtremumKind,
    pub iterations: usize,
    pub converged: bool,
}

struct Outcome {
    x: f64,
    /// derivatives 0..=order at x
    values: Vec<f64>,
    iterations: usize,
    converged: bool,
}

/// Drives `g(x) = P^(order)(x) - target` to zero with slope `P^(order+1)`.
fn newton(
    table: &TabulatedFunction,
    degree: usize,
    order: usize,
    target: f64,
    x0: f64,
    settings: &SolverSettings,
) -> Result<Outcome> {
    settings.validate()?;
    if !x0.is_finite() || !target.is_finite() {
        return Err(Error::NonFiniteInput {
            what: "solver start or target",
        });
    }
    let (lo, hi) = table.domain();
    if !table.contains(x0) {
        return Err(Error::OutOfDomain { x: x0, lo, hi });
    }
    let eval = |x: f64| table.interpolate_at(x, degree, order + 1, Domain::Extrapolate);

    let mut x = x0;
    let mut d = eval(x)?;
    let mut iterations = 0;
    loop {
        let residual = d.values[order] - target;
        if residual.abs() <= settings.tol_residual {
            break;
        }
        if iterations == settings.max_iter {
            return Ok(Outcome {
                x,
                values: d.values,
                iterations,
                converged: false,
            });
        }
        let slope = d.values[order + 1];
        if slope.is_nan() || slope.abs() < settings.derivative_floor {
            return Err(Error::DerivativeVanished {
                x,
                derivative: slope,
            });
        }
        let next = (x - residual / slope).clamp(lo, hi);
        let step = next - x;
        x = next;
        d = eval(x)?;
        iterations += 1;
        if step.abs() <= settings.tol_step {
            let converged = (d.values[order] - target).abs() <= settings.tol_residual;
            return Ok(Outcome {
                x,
                values: d.values,
                iterations,
                converged,
            });
        }
    }
    Ok(Outcome {
        x,
        values: d.values,
        iterations,
        converged: true,
    })
}

/// Finds `x` with `P(x) = target` starting from `x0`.
pub fn newton_root(
    table: &TabulatedFunction,
    degree: usize,
    target: f64,
    x0: f64,
    settings: &SolverSettings,
) -> Result<RootResult> {
    let out = newton(table, degree, 0, target, x0, settings)?;
    Ok(RootResult {
        x: out.x,
        residual: (out.values[0] - target).abs(),
        iterations: out.iterations,
        converged: out.converged,
    })
}

/// Finds a stationary point of the interpolant near `x0` and classifies it
/// by the sign of the second derivative.
pub fn find_extremum(
    table: &TabulatedFunction,
    degree: usize,
    x0: f64,
    settings: &SolverSettings,
) -> Result<ExtremumResult> {
    if degree < 2 {
        return Err(Error::InvalidConfig(
            "extremum search needs degree >= 2".into(),
        ));
    }
    let out = newton(table, degree, 1, 0.0, x0, settings)?;
    let curvature = out.values[2];
    let kind = if curvature.abs() <= settings.derivative_floor {
        ExtremumKind::Degenerate
    } else if curvature > 0.0 {
        ExtremumKind::Minimum
    } else {
        ExtremumKind::Maximum
    };
    Ok(ExtremumResult {
        x: out.x,
        value: out.values[0],
        kind,
        iterations: out.iterations,
        converged: out.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::sample_function;
    use crate::tableau::Node;
    use std::f64::consts::PI;

    fn sin_table() -> TabulatedFunction {
        sample_function(f64::sin, 0.0, 2.0 * PI, 21).unwrap()
    }

    #[test]
    fn affine_root_in_one_step() {
        let t = TabulatedFunction::new(vec![Node::new(0.0, 0.0), Node::new(1.0, 2.0)]).unwrap();
        let r = newton_root(&t, 1, 1.0, 0.9, &SolverSettings::default()).unwrap();
        assert_eq!(r.x, 0.5);
        assert_eq!(r.iterations, 1);
        assert!(r.converged);
    }

    #[test]
    fn flat_start_fails() {
        let t = sample_function(|x| x * x, -1.0, 1.0, 5).unwrap();
        let e = newton_root(&t, 2, -1.0, 0.0, &SolverSettings::for_table(&t)).unwrap_err();
        assert!(matches!(e, Error::DerivativeVanished { .. }), "{e:?}");
    }

    #[test]
    fn start_outside_table() {
        let t = sin_table();
        let e = newton_root(&t, 3, 0.0, -0.1, &SolverSettings::default()).unwrap_err();
        assert!(matches!(e, Error::OutOfDomain { .. }));
        let e = find_extremum(&t, 3, 7.0, &SolverSettings::default()).unwrap_err();
        assert!(matches!(e, Error::OutOfDomain { .. }));
    }

    #[test]
    fn sin_root() {
        let t = sin_table();
        let r = newton_root(&t, 5, 0.0, 3.0, &SolverSettings::default()).unwrap();
        assert!(r.converged);
        assert!(r.x.sin().abs() <= 1e-6);
        assert!(r.residual <= 1e-10);
    }

    #[test]
    fn quadratic_minimum() {
        let t = sample_function(|x| x * x, -1.0, 1.0, 5).unwrap();
        let e = find_extremum(&t, 2, 0.3, &SolverSettings::for_table(&t)).unwrap();
        assert!(e.x.abs() <= 1e-12, "{e:?}");
        assert_eq!(e.kind, ExtremumKind::Minimum);
        assert!(e.converged);
    }

    #[test]
    fn sin_maximum() {
        let t = sin_table();
        let e = find_extremum(&t, 4, 1.4, &SolverSettings::for_table(&t)).unwrap();
        assert!((e.x - PI / 2.0).abs() < 1e-4, "{e:?}");
        assert_eq!(e.kind, ExtremumKind::Maximum);
        assert!((e.value - 1.0).abs() < 1e-4);
    }

    #[test]
    fn collinear_window_has_no_extremum() {
        let t = sample_function(|x| 3.0 * x - 1.0, 0.0, 1.0, 6).unwrap();
        let e = find_extremum(&t, 2, 0.5, &SolverSettings::for_table(&t)).unwrap_err();
        assert!(matches!(e, Error::DerivativeVanished { .. }), "{e:?}");
    }

    #[test]
    fn extremum_degree_check() {
        let t = sin_table();
        assert!(matches!(
            find_extremum(&t, 1, 1.0, &SolverSettings::default()),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn bad_settings() {
        let t = sin_table();
        let s = SolverSettings {
            max_iter: 0,
            ..Default::default()
        };
        assert!(newton_root(&t, 3, 0.0, 1.0, &s).is_err());
        let s = SolverSettings {
            tol_step: -1.0,
            ..Default::default()
        };
        assert!(newton_root(&t, 3, 0.0, 1.0, &s).is_err());
    }

    #[test]
    fn iteration_cap() {
        let t = sin_table();
        let s = SolverSettings {
            max_iter: 1,
            ..Default::default()
        };
        let r = newton_root(&t, 5, 0.0, 2.5, &s).unwrap();
        assert_eq!(r.iterations, 1);
        assert!(!r.converged);
    }
}
