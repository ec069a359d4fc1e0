//! Reproducible accuracy experiments and their supporting statistics.

mod experiments;
mod oracle;
mod report;
mod sampling;
mod stats;

pub use experiments::{
    polynomial_derivative, run_polynomial_experiment, run_sin_experiment, sin_derivative,
    ExperimentConfig, ExperimentReport, SpotCheck, CUBIC,
};
pub use oracle::{oracle_derivatives, ORACLE_MAX_DEGREE};
pub use report::{render_rms_grid, render_spot_checks, render_stats, sci};
pub use sampling::{draw_u64, uniform_at, uniform_samples, unit};
pub use stats::{diff_stats, DiffAccumulator, StatsSummary};
