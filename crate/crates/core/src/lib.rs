//! Polynomial interpolation by Neville's tableau, extended to produce every
//! derivative of the interpolant in the same sweep.
//!
//! - [`tableau`]: the recurrence over a [`NodeSet`].
//! - [`table`]: sorted sample tables and local windows of a chosen degree.
//! - [`solver`]: Newton-Raphson for level crossings and extrema of a table.
//! - [`harness`]: accuracy experiments, statistics and an independent oracle.

pub mod error;
pub mod harness;
pub mod solver;
pub mod table;
pub mod tableau;

pub use error::{Error, Result};
pub use solver::{
    find_extremum, newton_root, ExtremumKind, ExtremumResult, RootResult, SolverSettings,
};
pub use table::{load_table, sample_function, Domain, TabulatedFunction, WindowSpec};
pub use tableau::{validate_nodes, DerivativeStack, Node, NodeSet};
