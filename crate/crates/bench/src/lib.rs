//! Fixtures shared by the criterion benches.

use std::f64::consts::PI;

use neville::{sample_function, Node, NodeSet, TabulatedFunction};

/// `points` samples of `cos(3x)` on `[-1, 1]` as a node set.
pub fn cosine_nodes(points: usize) -> NodeSet {
    let step = 2.0 / (points - 1) as f64;
    NodeSet::new(
        (0..points)
            .map(|k| {
                let x = -1.0 + k as f64 * step;
                Node::new(x, (3.0 * x).cos())
            })
            .collect(),
    )
    .expect("distinct abscissas")
}

/// The 21-point `sin` table on `[0, 2pi]`.
pub fn sin_table() -> TabulatedFunction {
    sample_function(f64::sin, 0.0, 2.0 * PI, 21).expect("valid range")
}
