//! Ramanujan's parameter `k`, the weight-one form `y₁₀ = q·d/dq log k`, and the
//! parametrizations `η_d²⁴ = y₁₀⁶·R_d(k)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::KernelError;
use crate::field5::{PolyQ, RationalFunction5};
use crate::qseries::{EtaQuotient, GeneralizedEtaProduct, PuiseuxSeries};
use crate::rational::Rational;

/// `k = q·Π(1−q^{10j−9})(1−q^{10j−8})(1−q^{10j−2})(1−q^{10j−1}) / ((1−q^{10j−7})(1−q^{10j−6})(1−q^{10j−4})(1−q^{10j−3}))`.
pub fn k_series(n: usize) -> PuiseuxSeries {
    GeneralizedEtaProduct::ramanujan_k().series(n)
}

/// `η₁η₂²η₅³/η₁₀²`.
pub fn y10_eta_quotient() -> EtaQuotient {
    EtaQuotient::level10([1, 2, 3, -2])
}

/// `y₁₀` as the logarithmic derivative of the `k`-series.
pub fn y10_series(n: usize) -> Result<PuiseuxSeries, KernelError> {
    Ok(k_series(n).q_log_derivative()?)
}

/// `Σ cᵢ sⁱ`; `None` for the zero polynomial.
pub fn poly_of_series(p: &PolyQ, s: &PuiseuxSeries, n: usize) -> Option<PuiseuxSeries> {
    let mut acc: Option<PuiseuxSeries> = None;
    let mut power = PuiseuxSeries::one(n);
    for (i, c) in p.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.multiply(s);
        }
        if c.is_zero() {
            continue;
        }
        let term = power.scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.checked_add(&term).expect("integer exponents"),
        });
    }
    acc
}

/// The `q`-expansion of `num(k)/den(k)`, `n` coefficients from its leading term.
pub fn compose_rational_with_k(g: &RationalFunction5, n: usize) -> Result<PuiseuxSeries, KernelError> {
    let (num, den) = g.to_rational().ok_or(KernelError::IrrationalCoefficients)?;
    compose_rational_parts_with_k(&num, &den, n)
}

pub fn compose_rational_parts_with_k(num: &PolyQ, den: &PolyQ, n: usize) -> Result<PuiseuxSeries, KernelError> {
    let k = k_series(n);
    let d = poly_of_series(den, &k, n).ok_or(KernelError::NonInvertibleComposition)?;
    if d.is_zero() {
        return Err(KernelError::NonInvertibleComposition);
    }
    match poly_of_series(num, &k, n) {
        None => Ok(PuiseuxSeries::zero(Rational::from_integer(BigInt::from(n)))),
        Some(nm) => Ok(nm.checked_div(&d)?.truncate(n)),
    }
}

/// `(d, [c₀, c₁, c₂, c₃])` with `η_d²⁴ = y₁₀⁶·k^{c₀}(1−k²)^{c₁}(1+k−k²)^{c₂}(1−4k−k²)^{c₃}`.
pub const RP_EXPONENTS: [(u32, [i64; 4]); 4] = [
    (1, [1, -4, -1, 4]),
    (2, [2, -5, 4, -1]),
    (5, [5, 4, -5, -4]),
    (10, [10, -1, -4, -5]),
];

/// `k^{c₀}(1−k²)^{c₁}(1+k−k²)^{c₂}(1−4k−k²)^{c₃}` as a series.
pub fn k_monomial_series(c: &[i64; 4], n: usize) -> Result<PuiseuxSeries, KernelError> {
    let k = k_series(n);
    let bases = [
        PolyQ::from_i64(&[0, 1]),
        PolyQ::from_i64(&[1, 0, -1]),
        PolyQ::from_i64(&[1, 1, -1]),
        PolyQ::from_i64(&[1, -4, -1]),
    ];
    let mut acc = PuiseuxSeries::one(n);
    for (base, &e) in bases.iter().zip(c) {
        if e == 0 {
            continue;
        }
        let s = poly_of_series(base, &k, n).expect("nonzero base");
        acc = acc.multiply(&s.pow_int(e)?);
    }
    Ok(acc)
}

/// Both sides of the `index`-th parametrization (1..=4 for `d = 1, 2, 5, 10`).
pub fn rp_identity_series(index: usize, n: usize) -> Result<(PuiseuxSeries, PuiseuxSeries), KernelError> {
    let (d, c) = *RP_EXPONENTS.get(index.wrapping_sub(1)).ok_or(KernelError::UnknownIdentity(index))?;
    let lhs = EtaQuotient::new([(d, 24)]).series(n);
    let rhs = y10_series(n)?.pow_int(6)?.multiply(&k_monomial_series(&c, n)?);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn k_prefix() {
        let k = k_series(3);
        assert_eq!(k.to_string(), "q - q^2 - q^3 + O(q^4)");
    }

    #[test]
    fn y10_matches_eta_quotient() {
        let n = 60;
        assert_eq!(y10_series(n).unwrap(), y10_eta_quotient().series(n));
    }

    #[test]
    fn rp_identities_short() {
        for i in 1..=4 {
            let (l, r) = rp_identity_series(i, 40).unwrap();
            assert_eq!(l, r, "identity {i}");
        }
        let (l, r) = rp_identity_series(2, 1).unwrap();
        assert_eq!(l.offset(), &int(2));
        assert_eq!(r.offset(), &int(2));
        assert!(rp_identity_series(5, 1).is_err());
    }

    #[test]
    fn compose_examples() {
        let g = RationalFunction5::from_rational_parts(&PolyQ::from_i64(&[0, 1]), &PolyQ::one()).unwrap();
        assert_eq!(compose_rational_with_k(&g, 30).unwrap(), k_series(30));
        let g = RationalFunction5::from_rational_parts(&PolyQ::from_i64(&[0, 2, 1]), &PolyQ::from_i64(&[1, -4, -1])).unwrap();
        let s = compose_rational_with_k(&g, 200).unwrap();
        assert!(s.has_integer_coefficients());
        let zero_den = compose_rational_parts_with_k(&PolyQ::one(), &PolyQ::zero(), 5);
        assert_eq!(zero_den, Err(KernelError::NonInvertibleComposition));
    }
}
