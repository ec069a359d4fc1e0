//! Accuracy experiments on a cubic polynomial and on `sin`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::sampling::uniform_at;
use super::stats::{DiffAccumulator, StatsSummary};
use crate::error::{Error, Result};
use crate::table::{sample_function, Domain, TabulatedFunction};

/// Samples per parallel work unit. Fixed so the reduction order never
/// depends on the thread count.
const CHUNK: usize = 4096;

/// Coefficients `a0..a3` of the cubic test polynomial.
pub const CUBIC: [f64; 4] = [1.0, 1.0, 1.0, 1.0];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub sample_count: usize,
    pub table_points: usize,
    pub degrees: Vec<usize>,
    /// Highest derivative order reported for any degree.
    pub max_order: usize,
}

impl ExperimentConfig {
    /// Cubic on 11 points, one global degree-10 interpolant, orders 0..=3.
    pub fn polynomial() -> Self {
        ExperimentConfig {
            seed: 1,
            sample_count: 100_000,
            table_points: 11,
            degrees: vec![10],
            max_order: 3,
        }
    }

    /// `sin` on 21 points, local windows of degree 2..=5, all orders up to the degree.
    pub fn sin() -> Self {
        ExperimentConfig {
            seed: 1,
            sample_count: 100_000,
            table_points: 21,
            degrees: vec![2, 3, 4, 5],
            max_order: 5,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, sample_count: usize) -> Self {
        self.sample_count = sample_count;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.sample_count == 0 {
            return Err(Error::InvalidConfig(
                "sample_count must be at least 1".into(),
            ));
        }
        if self.table_points < 2 {
            return Err(Error::InvalidConfig(
                "table_points must be at least 2".into(),
            ));
        }
        if self.degrees.is_empty() {
            return Err(Error::InvalidConfig("no degrees requested".into()));
        }
        if let Some(&d) = self
            .degrees
            .iter()
            .find(|&&d| d == 0 || d >= self.table_points)
        {
            return Err(Error::InvalidConfig(format!(
                "degree {d} must lie in 1..{}",
                self.table_points
            )));
        }
        Ok(())
    }

    fn orders_for(&self, degree: usize) -> usize {
        degree.min(self.max_order)
    }
}

/// Original and interpolated values at one abscissa and derivative order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpotCheck {
    pub x: f64,
    pub order: usize,
    pub original: f64,
    pub calculated: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: &'static str,
    pub config: ExperimentConfig,
    /// `grid[degree][order]`: statistics of interpolant minus analytic value.
    pub grid: BTreeMap<usize, Vec<StatsSummary>>,
    pub spot_checks: Vec<SpotCheck>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl ExperimentReport {
    pub fn cell(&self, degree: usize, order: usize) -> Option<&StatsSummary> {
        self.grid.get(&degree)?.get(order)
    }
}

/// `n`-th derivative of `sum c_k x^k`.
pub fn polynomial_derivative(coeffs: &[f64], order: usize, x: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .skip(order)
        .rev()
        .fold(0.0, |acc, (k, &c)| {
            let falling: f64 = ((k - order + 1)..=k).map(|f| f as f64).product();
            acc * x + c * falling
        })
}

/// `n`-th derivative of `sin`.
pub fn sin_derivative(order: usize, x: f64) -> f64 {
    match order % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    }
}

fn accumulate<F>(
    table: &TabulatedFunction,
    config: &ExperimentConfig,
    (a, b): (f64, f64),
    analytic: F,
) -> Result<BTreeMap<usize, Vec<StatsSummary>>>
where
    F: Fn(usize, f64) -> f64 + Sync,
{
    // one accumulator per (degree, order) cell, flattened in config order
    let layout: Vec<(usize, usize)> = config
        .degrees
        .iter()
        .map(|&d| (d, config.orders_for(d)))
        .collect();
    let cells: usize = layout.iter().map(|&(_, m)| m + 1).sum();

    let chunks = config.sample_count.div_ceil(CHUNK);
    let partials: Vec<Vec<DiffAccumulator>> = (0..chunks)
        .into_par_iter()
        .map(|c| -> Result<Vec<DiffAccumulator>> {
            let mut acc = vec![DiffAccumulator::default(); cells];
            let end = ((c + 1) * CHUNK).min(config.sample_count);
            for i in c * CHUNK..end {
                let x = uniform_at(config.seed, i as u64, a, b);
                let mut slot = 0;
                for &(degree, max_order) in &layout {
                    let stack = table.interpolate_at(x, degree, max_order, Domain::Extrapolate)?;
                    for (n, v) in stack.values.iter().enumerate() {
                        acc[slot + n].push(v - analytic(n, x));
                    }
                    slot += max_order + 1;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;

    let mut total = vec![DiffAccumulator::default(); cells];
    for part in &partials {
        for (t, p) in total.iter_mut().zip(part) {
            t.merge(p);
        }
    }
    let mut grid = BTreeMap::new();
    let mut slot = 0;
    for &(degree, max_order) in &layout {
        let row = total[slot..=slot + max_order]
            .iter()
            .map(DiffAccumulator::summary)
            .collect::<Result<Vec<_>>>()?;
        grid.insert(degree, row);
        slot += max_order + 1;
    }
    Ok(grid)
}

/// The cubic test: spot check at `x = 0` and residual statistics over
/// uniform abscissas in `[-1, 1)`.
pub fn run_polynomial_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let start = Instant::now();
    let analytic = |n: usize, x: f64| polynomial_derivative(&CUBIC, n, x);
    let table =
        sample_function(|x| analytic(0, x), -1.0, 1.0, config.table_points)?.with_name("cubic");

    let full = config.table_points - 1;
    let spot = table.interpolate_at(0.0, full, 3, Domain::Strict)?;
    let spot_checks = spot
        .values
        .iter()
        .enumerate()
        .map(|(order, &calculated)| SpotCheck {
            x: 0.0,
            order,
            original: analytic(order, 0.0),
            calculated,
        })
        .collect();

    let grid = accumulate(&table, config, (-1.0, 1.0), analytic)?;
    Ok(ExperimentReport {
        experiment: "polynomial",
        config: config.clone(),
        grid,
        spot_checks,
        wall_time: start.elapsed(),
    })
}

/// The `sin` test on `[0, 2pi]` with local windows of each requested degree.
pub fn run_sin_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let start = Instant::now();
    let table = sample_function(f64::sin, 0.0, 2.0 * PI, config.table_points)?.with_name("sin");
    let grid = accumulate(&table, config, (0.0, 2.0 * PI), sin_derivative)?;
    Ok(ExperimentReport {
        experiment: "sin",
        config: config.clone(),
        grid,
        spot_checks: Vec::new(),
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_derivatives() {
        let x = 0.3;
        assert!(
            (polynomial_derivative(&CUBIC, 0, x) - (1.0 + x + x * x + x * x * x)).abs() < 1e-15
        );
        assert!(
            (polynomial_derivative(&CUBIC, 1, x) - (1.0 + 2.0 * x + 3.0 * x * x)).abs() < 1e-15
        );
        assert!((polynomial_derivative(&CUBIC, 2, x) - (2.0 + 6.0 * x)).abs() < 1e-15);
        assert_eq!(polynomial_derivative(&CUBIC, 3, x), 6.0);
        assert_eq!(polynomial_derivative(&CUBIC, 4, x), 0.0);
    }

    #[test]
    fn sin_cycle() {
        assert_eq!(sin_derivative(5, 0.7), 0.7f64.cos());
        assert_eq!(sin_derivative(2, 0.7), -(0.7f64.sin()));
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::sin().with_samples(0).validate().is_err());
        let mut c = ExperimentConfig::sin();
        c.degrees = vec![21];
        assert!(c.validate().is_err());
        c.degrees = vec![0];
        assert!(c.validate().is_err());
        c.degrees.clear();
        assert!(c.validate().is_err());
    }

    #[test]
    fn polynomial_report_shape() {
        let r =
            run_polynomial_experiment(&ExperimentConfig::polynomial().with_samples(5000)).unwrap();
        assert_eq!(r.grid.len(), 1);
        assert_eq!(r.grid[&10].len(), 4);
        assert_eq!(r.spot_checks.len(), 4);
        for (s, want) in r.spot_checks.iter().zip([1.0, 1.0, 2.0, 6.0]) {
            assert_eq!(s.original, want);
            assert!((s.calculated - want).abs() < 1e-12);
        }
        assert!(r.grid[&10].iter().all(|s| s.count == 5000));
    }

    #[test]
    fn sin_report_shape_and_determinism() {
        let cfg = ExperimentConfig::sin().with_samples(10_000).with_seed(9);
        let a = run_sin_experiment(&cfg).unwrap();
        let b = run_sin_experiment(&cfg).unwrap();
        assert_eq!(a.grid, b.grid);
        for d in 2..=5 {
            assert_eq!(a.grid[&d].len(), d + 1);
            for s in &a.grid[&d] {
                assert!(s.rms >= s.average.abs() && s.maximum >= s.rms);
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let cfg = ExperimentConfig::sin().with_samples(20_000);
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let wide = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = serial.install(|| run_sin_experiment(&cfg)).unwrap();
        let b = wide.install(|| run_sin_experiment(&cfg)).unwrap();
        assert_eq!(a.grid, b.grid);
    }
}
