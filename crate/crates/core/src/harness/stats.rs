//! Average / RMS / maximum of a population of differences.

use serde::Serialize;

use crate::error::{Error, Result};

/// Summary statistics of signed differences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StatsSummary {
    pub average: f64,
    pub rms: f64,
    /// Largest absolute difference.
    pub maximum: f64,
    pub count: usize,
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.carry);
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Streaming accumulator behind [`StatsSummary`].
///
/// Merging accumulators in a fixed order gives results independent of how
/// the population was split.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DiffAccumulator {
    sum: CompensatedSum,
    sum_sq: CompensatedSum,
    max_abs: f64,
    count: usize,
}

impl DiffAccumulator {
    pub fn push(&mut self, d: f64) {
        self.sum.add(d);
        self.sum_sq.add(d * d);
        self.max_abs = self.max_abs.max(d.abs());
        self.count += 1;
    }

    pub fn merge(&mut self, other: &DiffAccumulator) {
        self.sum.merge(&other.sum);
        self.sum_sq.merge(&other.sum_sq);
        self.max_abs = self.max_abs.max(other.max_abs);
        self.count += other.count;
    }

    pub fn summary(&self) -> Result<StatsSummary> {
        if self.count == 0 {
            return Err(Error::EmptyPopulation);
        }
        let n = self.count as f64;
        let average = self.sum.total() / n;
        let rms = (self.sum_sq.total() / n).sqrt();
        // mean(d)^2 <= mean(d^2) and mean(d^2) <= max^2 hold exactly, but the
        // rounded quotients can cross by an ulp
        let rms = rms.max(average.abs()).min(self.max_abs);
        Ok(StatsSummary {
            average,
            rms,
            maximum: self.max_abs,
            count: self.count,
        })
    }
}

pub fn diff_stats(differences: &[f64]) -> Result<StatsSummary> {
    let mut acc = DiffAccumulator::default();
    for &d in differences {
        if !d.is_finite() {
            return Err(Error::NonFiniteInput { what: "difference" });
        }
        acc.push(d);
    }
    acc.summary()
}
