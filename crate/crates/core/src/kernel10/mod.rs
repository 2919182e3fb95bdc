//! Level-10 calculus: exponent vectors, the golden rows, the rationality decider and
//! the `k`-parametrizations.

mod decide;
mod exponents;
mod modp;
mod param;
pub mod tables;

use thiserror::Error;

use crate::qseries::SeriesError;

pub use decide::{decide_rationality, is_rational, level10_residues, modular_screen, RationalityCertificate, ResidueEntry, Screen};
pub use exponents::{a_to_e, e_to_a, family_exponents, EtaExponents, FamilyLabel, ParamExponents};
pub use modp::Fp;
pub use param::{
    compose_rational_parts_with_k, compose_rational_with_k, k_monomial_series, k_series, poly_of_series,
    rp_identity_series, y10_eta_quotient, y10_series, RP_EXPONENTS,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("exponents {0} give non-integral integrand exponents")]
    NonIntegralParams(EtaExponents),
    #[error("integrand exponents {0:?} do not sum to zero")]
    ParamsDoNotSumToZero([i64; 4]),
    #[error("unknown family {0}")]
    UnknownFamily(u8),
    #[error("unknown parametrization identity {0}")]
    UnknownIdentity(usize),
    #[error("denominator vanishes identically after substituting the k-series")]
    NonInvertibleComposition,
    #[error("rational function has coefficients outside Q")]
    IrrationalCoefficients,
    #[error(transparent)]
    Series(#[from] SeriesError),
}
