//! Independent reference for interpolant derivatives.
//!
//! Solves the Vandermonde system for monomial coefficients in the shifted
//! variable `t = x - mean(x_k)` and differentiates the monomial form
//! analytically. Shares no code with the tableau recurrence.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::tableau::{DerivativeStack, NodeSet};

/// Highest degree the Vandermonde oracle accepts.
pub const ORACLE_MAX_DEGREE: usize = 12;

pub fn oracle_derivatives(nodes: &NodeSet, x: f64, max_order: usize) -> Result<DerivativeStack> {
    let degree = nodes.degree();
    if degree > ORACLE_MAX_DEGREE {
        return Err(Error::IllConditioned {
            degree,
            limit: ORACLE_MAX_DEGREE,
        });
    }
    if !x.is_finite() {
        return Err(Error::NonFiniteInput { what: "abscissa" });
    }
    let pts = nodes.nodes();
    let n = pts.len();
    let center = pts.iter().map(|p| p.x).sum::<f64>() / n as f64;
    let vandermonde = DMatrix::from_fn(n, n, |r, c| (pts[r].x - center).powi(c as i32));
    let rhs = DVector::from_iterator(n, pts.iter().map(|p| p.y));
    let coeffs = vandermonde.lu().solve(&rhs).ok_or(Error::IllConditioned {
        degree,
        limit: ORACLE_MAX_DEGREE,
    })?;

    let t = x - center;
    let values = (0..=max_order)
        .map(|order| {
            (order..n)
                .map(|k| {
                    // k! / (k - order)!
                    let falling: f64 = ((k - order + 1)..=k).map(|f| f as f64).product();
                    coeffs[k] * falling * t.powi((k - order) as i32)
                })
                .sum()
        })
        .collect();
    Ok(DerivativeStack { at: x, values })
}
