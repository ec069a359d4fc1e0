//! Neville tableau evaluation of an interpolating polynomial and its derivatives.
//!
//! The classic recurrence combines two overlapping partial interpolants of
//! degree `m - 1` into one of degree `m`:
//!
//! ```text
//! P[i,j](x) = ((x_j - x) P[i,j-1](x) + (x - x_i) P[i+1,j](x)) / (x_j - x_i)
//! ```
//!
//! Differentiating `n` times with the Leibniz rule gives the derivative
//! recurrence carried alongside it:
//!
//! ```text
//! P[i,j]^n = ((x_j - x) P[i,j-1]^n + (x - x_i) P[i+1,j]^n
//!             + n (P[i+1,j]^(n-1) - P[i,j-1]^(n-1))) / (x_j - x_i)
//! ```
//!
//! with `P[i,i]^0 = y_i` and `P[i,i]^n = 0` for `n > 0`.
//!
//! A frequently quoted form of this extension, in which the `n`-th order
//! reads the children's order `n + 1` terms, does not reproduce the
//! derivatives of even a two-point interpolant; the form above does.

use serde::Serialize;

use crate::error::{Error, Result};

/// One sample point of a function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Node {
    pub x: f64,
    pub y: f64,
}

impl Node {
    pub fn new(x: f64, y: f64) -> Self {
        Node { x, y }
    }
}

impl From<(f64, f64)> for Node {
    fn from((x, y): (f64, f64)) -> Self {
        Node { x, y }
    }
}

/// A validated set of interpolation nodes with pairwise distinct abscissas.
///
/// The node order is preserved; Neville's scheme does not need sorted input.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    nodes: Vec<Node>,
}

/// Validates `nodes` and wraps them in a [`NodeSet`].
pub fn validate_nodes(nodes: Vec<Node>) -> Result<NodeSet> {
    NodeSet::new(nodes)
}

impl NodeSet {
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        if nodes.iter().any(|n| !n.x.is_finite() || !n.y.is_finite()) {
            return Err(Error::NonFiniteInput {
                what: "node coordinate",
            });
        }
        // Exact representation equality only; near-duplicates are legal.
        let mut xs: Vec<f64> = nodes.iter().map(|n| n.x).collect();
        xs.sort_by(f64::total_cmp);
        if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateAbscissa { x: w[0] });
        }
        Ok(NodeSet { nodes })
    }

    pub fn from_xy(xs: &[f64], ys: &[f64]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidConfig(format!(
                "{} abscissas but {} ordinates",
                xs.len(),
                ys.len()
            )));
        }
        Self::new(xs.iter().zip(ys).map(|(&x, &y)| Node { x, y }).collect())
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of the interpolating polynomial, one less than the node count.
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Value of the interpolating polynomial at `x`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFiniteInput { what: "abscissa" });
        }
        Ok(neville_value(&self.nodes, x))
    }

    /// The interpolant and its first `max_order` derivatives at `x`.
    ///
    /// Orders above the degree are exactly zero. `values[0]` is bitwise
    /// identical to [`NodeSet::evaluate`].
    pub fn evaluate_derivatives(&self, x: f64, max_order: usize) -> Result<DerivativeStack> {
        if !x.is_finite() {
            return Err(Error::NonFiniteInput { what: "abscissa" });
        }
        Ok(neville_derivatives(&self.nodes, x, max_order))
    }
}

/// Values `P(x), P'(x), ..., P^(M)(x)` of an interpolant at one abscissa.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivativeStack {
    pub at: f64,
    pub values: Vec<f64>,
}

impl DerivativeStack {
    pub fn value(&self) -> f64 {
        self.values[0]
    }

    /// The `n`-th derivative, or `None` if it was not requested.
    pub fn derivative(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }
}

#[inline(always)]
fn combine(xi: f64, xj: f64, x: f64, left: f64, right: f64) -> f64 {
    ((xj - x) * left + (x - xi) * right) / (xj - xi)
}

/// Plain Neville sweep. `nodes` must be non-empty with distinct abscissas.
pub(crate) fn neville_value(nodes: &[Node], x: f64) -> f64 {
    let mut p: Vec<f64> = nodes.iter().map(|n| n.y).collect();
    let len = nodes.len();
    for m in 1..len {
        for i in 0..len - m {
            p[i] = combine(nodes[i].x, nodes[i + m].x, x, p[i], p[i + 1]);
        }
    }
    p[0]
}

/// Extended Neville sweep carrying derivative orders `0..=max_order`.
///
/// Storage is one row of `max_order + 1` entries per node, overwritten in
/// place: cell `i` at level `m` holds `P[i, i+m]`. Within a cell the orders
/// are updated from high to low so that order `n` still sees the old order
/// `n - 1` of the same cell.
pub(crate) fn neville_derivatives(nodes: &[Node], x: f64, max_order: usize) -> DerivativeStack {
    let len = nodes.len();
    let width = max_order + 1;
    let mut p = vec![0.0; len * width];
    for (i, node) in nodes.iter().enumerate() {
        p[i * width] = node.y;
    }
    for m in 1..len {
        // a degree-m cell has no non-zero derivative above order m
        let top = m.min(max_order);
        for i in 0..len - m {
            let xi = nodes[i].x;
            let xj = nodes[i + m].x;
            let (lo, hi) = (xj - x, x - xi);
            let h = xj - xi;
            let (cur, next) = p[i * width..(i + 2) * width].split_at_mut(width);
            for n in (1..=top).rev() {
                cur[n] = (lo * cur[n] + hi * next[n] + n as f64 * (next[n - 1] - cur[n - 1])) / h;
            }
            cur[0] = combine(xi, xj, x, cur[0], next[0]);
        }
    }
    p.truncate(width);
    DerivativeStack { at: x, values: p }
}
