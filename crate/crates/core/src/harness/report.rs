//! Plain-text rendering of experiment reports.

use std::fmt::Write;

use super::experiments::ExperimentReport;

/// Scientific notation with one decimal and a two-digit exponent, e.g. `1.0e-04`.
pub fn sci(v: f64) -> String {
    let s = format!("{v:.1e}");
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let (sign, digits) = match exp.strip_prefix('-') {
                Some(d) => ("-", d),
                None => ("+", exp),
            };
            format!("{mantissa}e{sign}{digits:0>2}")
        }
        None => s,
    }
}

fn label(order: usize) -> String {
    if order == 0 {
        "f(x)".to_string()
    } else {
        format!("f^{order}(x)")
    }
}

/// Original vs. calculated values at the spot-check abscissa.
pub fn render_spot_checks(report: &ExperimentReport) -> String {
    let mut out = String::new();
    let Some(first) = report.spot_checks.first() else {
        return out;
    };
    let _ = writeln!(out, "# {} at x = {}", report.experiment, first.x);
    let _ = write!(out, "{:<12}", "");
    for s in &report.spot_checks {
        let _ = write!(out, "{:>14}", label(s.order));
    }
    out.push('\n');
    for (name, pick) in [("original", true), ("calculated", false)] {
        let _ = write!(out, "{name:<12}");
        for s in &report.spot_checks {
            let v = if pick { s.original } else { s.calculated };
            let _ = write!(
                out,
                "{:>14}",
                format!("{v:.12}")
                    .trim_end_matches('0')
                    .trim_end_matches('.')
            );
        }
        out.push('\n');
    }
    out
}

/// Average, RMS and maximum per derivative order, one block per degree.
pub fn render_stats(report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} seed={} samples={} table_points={}",
        report.experiment,
        report.config.seed,
        report.config.sample_count,
        report.config.table_points
    );
    for (degree, row) in &report.grid {
        let _ = writeln!(out, "degree {degree}");
        let _ = writeln!(
            out,
            "{:<10}{:>10}{:>10}{:>10}",
            "", "average", "RMS", "maximum"
        );
        for (order, s) in row.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:<10}{:>10}{:>10}{:>10}",
                label(order),
                sci(s.average),
                sci(s.rms),
                sci(s.maximum)
            );
        }
    }
    out
}

/// RMS only: orders down the rows, degrees across the columns.
pub fn render_rms_grid(report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} RMS seed={} samples={} table_points={}",
        report.experiment,
        report.config.seed,
        report.config.sample_count,
        report.config.table_points
    );
    let _ = write!(out, "{:<10}", "degree:");
    for degree in report.grid.keys() {
        let _ = write!(out, "{degree:>10}");
    }
    out.push('\n');
    let orders = report.grid.values().map(Vec::len).max().unwrap_or(0);
    for order in 0..orders {
        let _ = write!(out, "{:<10}", label(order));
        for row in report.grid.values() {
            match row.get(order) {
                Some(s) => {
                    let _ = write!(out, "{:>10}", sci(s.rms));
                }
                None => {
                    let _ = write!(out, "{:>10}", "");
                }
            }
        }
        out.push('\n');
    }
    out
}
