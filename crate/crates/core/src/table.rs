//! Sorted sample tables and local windowed interpolation over them.

use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{neville_derivatives, DerivativeStack, Node};

/// Whether [`TabulatedFunction::interpolate_at`] may extrapolate past the table ends.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Domain {
    /// Outside the table, the edge window is used.
    #[default]
    Extrapolate,
    /// Abscissas outside `[first, last]` are rejected with [`Error::OutOfDomain`].
    Strict,
}

/// A consecutive run of `degree + 1` table samples starting at `first_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowSpec {
    pub first_index: usize,
    pub degree: usize,
}

impl WindowSpec {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.first_index..self.first_index + self.degree + 1
    }
}

/// A function sampled at strictly increasing abscissas.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedFunction {
    samples: Vec<Node>,
    pub name: Option<String>,
}

impl TabulatedFunction {
    /// Builds a table from samples in any order. Rows are sorted by abscissa.
    pub fn new(mut samples: Vec<Node>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::TooFewRows {
                found: samples.len(),
            });
        }
        if samples.iter().any(|n| !n.x.is_finite() || !n.y.is_finite()) {
            return Err(Error::NonFiniteInput {
                what: "table sample",
            });
        }
        samples.sort_by(|a, b| a.x.total_cmp(&b.x));
        if let Some(w) = samples.windows(2).find(|w| w[0].x == w[1].x) {
            return Err(Error::DuplicateAbscissa { x: w[0].x });
        }
        Ok(TabulatedFunction {
            samples,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn samples(&self) -> &[Node] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(first abscissa, last abscissa)`.
    pub fn domain(&self) -> (f64, f64) {
        (self.samples[0].x, self.samples[self.samples.len() - 1].x)
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.domain();
        (lo..=hi).contains(&x)
    }

    /// Largest `|y|` in the table.
    pub fn y_scale(&self) -> f64 {
        self.samples
            .iter()
            .fold(0.0, |acc: f64, n| acc.max(n.y.abs()))
    }

    /// The `degree + 1` consecutive samples centred on `x`.
    ///
    /// With `s` the number of abscissas strictly below `x`, the window starts
    /// at `floor(s - (degree + 1) / 2)`, clamped so it stays inside the table.
    pub fn locate_window(&self, x: f64, degree: usize) -> Result<WindowSpec> {
        let len = self.samples.len();
        if degree == 0 || degree >= len {
            return Err(Error::DegreeTooLarge {
                degree,
                points: len,
            });
        }
        let below = self.samples.partition_point(|n| n.x < x);
        // floor(s - (d+1)/2) == s - ceil((d+1)/2)
        let first = below.saturating_sub(degree / 2 + 1).min(len - degree - 1);
        Ok(WindowSpec {
            first_index: first,
            degree,
        })
    }

    /// The samples selected by `window`.
    pub fn window_nodes(&self, window: WindowSpec) -> &[Node] {
        &self.samples[window.range()]
    }

    /// Interpolant of the local window of the given degree, with derivatives
    /// up to `max_order`, evaluated at `x`.
    pub fn interpolate_at(
        &self,
        x: f64,
        degree: usize,
        max_order: usize,
        domain: Domain,
    ) -> Result<DerivativeStack> {
        if !x.is_finite() {
            return Err(Error::NonFiniteInput { what: "abscissa" });
        }
        if domain == Domain::Strict && !self.contains(x) {
            let (lo, hi) = self.domain();
            return Err(Error::OutOfDomain { x, lo, hi });
        }
        let window = self.locate_window(x, degree)?;
        Ok(neville_derivatives(self.window_nodes(window), x, max_order))
    }
}

/// Samples `f` at `count` equidistant abscissas spanning `[a, b]`.
///
/// The first abscissa is exactly `a` and the last exactly `b`.
pub fn sample_function<F>(f: F, a: f64, b: f64, count: usize) -> Result<TabulatedFunction>
where
    F: Fn(f64) -> f64,
{
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidRange { a, b });
    }
    if count < 2 {
        return Err(Error::TooFewRows { found: count });
    }
    let step = (b - a) / (count - 1) as f64;
    let samples = (0..count)
        .map(|k| {
            let x = if k == count - 1 {
                b
            } else {
                a + k as f64 * step
            };
            let y = f(x);
            if y.is_finite() {
                Ok(Node { x, y })
            } else {
                Err(Error::NonFiniteSample { x, y })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    TabulatedFunction::new(samples)
}

/// Parses the two-column text table format.
///
/// One sample per line, `x` then `y`, separated by whitespace or a comma.
/// Blank lines and lines starting with `#` are skipped.
pub fn load_table<R: BufRead>(source: R) -> Result<TabulatedFunction> {
    let mut samples = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        let parse = |s: &str| -> Result<f64> {
            let v: f64 = s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid number {s:?}"),
            })?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Parse {
                    line: line_no,
                    message: format!("non-finite value {s:?}"),
                })
            }
        };
        samples.push(Node {
            x: parse(fields[0])?,
            y: parse(fields[1])?,
        });
    }
    TabulatedFunction::new(samples)
}
