//! Stable `C^n` extension of functions across a boundary.
//!
//! A function known on one side of a boundary is continued to the other side
//! by a weighted sum of its values along the inward normal,
//!
//! ```text
//! E[f](x) = sum_j w_j f(-t_j x),
//! ```
//!
//! with nodes `t_j` in `[0, a]` and weights chosen so that the first `n`
//! derivatives match at the boundary. [`scheme`] builds the weights,
//! [`stabilizers`] provides the windows and the shrinking map that tame
//! the extension for large `n`, [`extend1d`] and [`extend2d`] apply it on an
//! interval and across a planar curve, and [`diagnostics`] measures the
//! result.

// `!(x > 0.0)` deliberately rejects NaN along with nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod diagnostics;
pub mod error;
pub mod extend1d;
pub mod extend2d;
pub mod scheme;
pub mod stabilizers;
pub mod testfns;

pub use error::{Error, Result};
pub use extend1d::{extend_point, extend_profile, kappa, Extension1DConfig};
pub use extend2d::{extend_field, Extension2D, Grid2, ParametricCurve, Point2};
pub use scheme::{make_scheme, ExtensionScheme};
pub use stabilizers::{build_shrink_table, ShrinkMap, WindowSpec};
pub use testfns::TestFunction;
