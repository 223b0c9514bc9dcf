//! Exact arithmetic over `Z[q, q^-1]` and its fraction field `Q(q)`.
//!
//! [`LaurentPoly`] stores integer Laurent polynomials, [`RationalFunction`]
//! keeps ratios of them in a canonical form so that equality is structural,
//! and [`QMatrix`] is a dense matrix of rational functions used for the
//! seminormal representations.

mod laurent;
mod matrix;
mod parse;
mod poly;
mod ratfn;

pub use laurent::{q_int, LaurentPoly};
pub use matrix::QMatrix;
pub use ratfn::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left_rows}x{left_cols} * {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
