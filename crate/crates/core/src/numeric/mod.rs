//! High-precision evaluation of the integral identities at real points.

pub mod bigfloat;
pub mod eval;
pub mod quadrature;
pub mod values;

use thiserror::Error;

pub use bigfloat::{BigFloat, DEFAULT_PRECISION};
pub use eval::{eval_eta_quotient, eval_generalized_product, eval_series, tail_estimate, SeriesValue};
pub use quadrature::{gauss_legendre, quadrature, quadrature_check, QuadratureValue};
pub use values::{
    appendix_k_certificate, displayed_row_value, evaluate, integral_reports, k_closed_form, level10_point,
    ramanujan_fine_value, ramanujan_fine_value_with, resolve_row, row_reports, FineValue, Level10Row, NumericReport,
    DEFAULT_TRUNCATION, INTEGRAL_GROUPS, THEOREM_ROWS,
};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("tail estimate {tail:e} exceeds tolerance {tolerance:e}; increase the truncation")]
    InsufficientTruncation { tail: f64, tolerance: f64 },
    #[error("quadrature did not settle: change {change:e} at {nodes} nodes, tolerance {tolerance:e}")]
    ToleranceNotMet { nodes: usize, change: f64, tolerance: f64 },
    #[error("row {0} is not integrable at q = 0")]
    NotIntegrableAtZero(String),
    #[error("unknown row label {0:?}")]
    UnknownRow(String),
    #[error("unknown quantity {0:?}")]
    UnknownQuantity(String),
    #[error("evaluation point {0} is outside (0, 1)")]
    PointOutOfRange(f64),
    #[error("series error: {0}")]
    Series(String),
}
