//! Exact truncated q-series and the product/Lambert constructors built on them.

mod lambert;
mod products;
mod series;

use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::{format_rational, Rational};

pub use lambert::{divisor_power_sum, eisenstein_q, eisenstein_r, lambert_legendre_5, lambert_series, legendre5};
pub use products::{
    euler_coefficients, euler_series, eta_quotient_series, generalized_eta_series, EtaCoefficientStream,
    EtaQuotient, GeneralizedEtaProduct,
};
pub use series::{Mismatch, PuiseuxSeries};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("offsets {} and {} differ by a non-integer", format_rational(.0), format_rational(.1))]
    OffsetMismatch(Rational, Rational),
    #[error("leading coefficient {} has no rational root of order {1}", format_rational(.0))]
    NonUnitLeadingCoefficient(Rational, BigInt),
    #[error("nonzero constant term {}", format_rational(.0))]
    ConstantTermPresent(Rational),
    #[error("exponent {} is not an integer", format_rational(.0))]
    NonIntegerExponent(Rational),
    #[error("residue {residue} is not in 1..{modulus}")]
    InvalidResidue { residue: u32, modulus: u32 },
}
