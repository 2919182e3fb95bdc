//! Integral identities `u = q·d/dq v` between eta quotients, and the Lambert-series identities.

use num_traits::Zero;

use super::report::{compare_series, order_after, CheckReport};
use crate::qseries::{lambert_legendre_5, lambert_series, EtaQuotient, GeneralizedEtaProduct, PuiseuxSeries, SeriesError};
use crate::rational::{int, rat, Rational};

fn eta(pairs: &[(u32, i64)]) -> EtaQuotient {
    EtaQuotient::new(pairs.iter().copied())
}

/// `(v, u)` with `q·d/dq v = u` for the six weight-one integrals; `None` outside `1..=6`.
pub fn theorem_t1_pair(index: usize, n: usize) -> Option<Result<(PuiseuxSeries, PuiseuxSeries), SeriesError>> {
    let pair = |v: &[(u32, i64)], u: &[(u32, i64)]| Ok((eta(v).series(n), eta(u).series(n)));
    Some(match index {
        1 => GeneralizedEtaProduct::rogers_ramanujan().series(n).pow_int(5).map(|x| {
            let u = x.multiply(&eta(&[(1, 5), (5, -1)]).series(n));
            (x, u)
        }),
        2 => pair(&[(2, 1), (6, 5), (1, -5), (3, -1)], &[(2, 8), (3, 6), (1, -10)]),
        3 => pair(&[(1, 4), (6, 8), (2, -8), (3, -4)], &[(1, 8), (6, 6), (2, -10)]),
        4 => pair(&[(1, 3), (6, 9), (2, -3), (3, -9)], &[(1, 6), (6, 8), (3, -10)]),
        5 => pair(&[(2, 2), (8, 4), (1, -4), (4, -2)], &[(2, 8), (4, 4), (1, -8)]),
        6 => pair(&[(9, 3), (1, -3)], &[(3, 10), (1, -6)]),
        _ => return None,
    })
}

/// `q·d/dq v = u` to `n_terms` coefficients.
pub fn verify_theorem_t1(index: usize, n_terms: usize) -> CheckReport {
    let name = format!("t1.integral{index}");
    match theorem_t1_pair(index, n_terms + 2) {
        None => CheckReport::fail(name, "index must be in 1..=6"),
        Some(Err(e)) => CheckReport::fail(name, e.to_string()),
        Some(Ok((v, u))) => compare_series(name, &v.q_derivative(), &u, &order_after(u.offset(), n_terms)),
    }
}

/// Level 7: `q·d/dq(η₇⁴/η₁⁴) = (η₇⁶/η₁²)·(1/v + 13 + 49v)^{2/3}` with `v = η₇⁴/η₁⁴`.
pub fn verify_level7_integral(n_terms: usize) -> CheckReport {
    let name = "t1.level7";
    let n = n_terms + 2;
    let v = eta(&[(7, 4), (1, -4)]).series(n);
    let rhs = v
        .inverse()
        .and_then(|inv| inv.checked_add(&PuiseuxSeries::constant(int(13), n)))
        .and_then(|s| s.checked_add(&v.scale(&int(49))))
        .and_then(|s| s.pow_rational(&rat(2, 3)))
        .map(|p| eta(&[(7, 6), (1, -2)]).series(n).multiply(&p));
    match rhs {
        Ok(rhs) => compare_series(name, &v.q_derivative(), &rhs, &order_after(rhs.offset(), n_terms)),
        Err(e) => CheckReport::fail(name, e.to_string()),
    }
}

/// `1 − 5Σ(j/5) j qʲ/(1−qʲ) = E(q)⁵/E(q⁵)`.
pub fn verify_quintic_identity(n_terms: usize) -> CheckReport {
    let lhs = lambert_legendre_5(n_terms);
    let rhs = eta(&[(1, 5), (5, -1)]).series(n_terms);
    compare_series("section1.quintic", &lhs, &rhs, &order_after(&Rational::zero(), n_terms))
}

/// `η₂²⁰/(η₁⁸η₄⁸) = 1 + 8Σ j qʲ/(1−qʲ) − 32Σ j q⁴ʲ/(1−q⁴ʲ)`.
pub fn verify_four_squares(n_terms: usize) -> CheckReport {
    let lhs = eta(&[(2, 20), (1, -8), (4, -8)]).series(n_terms);
    let rhs = PuiseuxSeries::one(n_terms)
        .checked_add(&lambert_series(1, 1, n_terms).scale(&int(8)))
        .and_then(|s| s.checked_add(&lambert_series(1, 4, n_terms).scale(&int(-32))));
    match rhs {
        Ok(rhs) => compare_series("section1.four-squares", &lhs, &rhs, &order_after(&Rational::zero(), n_terms)),
        Err(e) => CheckReport::fail("section1.four-squares", e.to_string()),
    }
}

/// `q·d/dq(η₄⁸/η₁⁸) = η₂²⁰/η₁¹⁶`.
pub fn verify_fine_identity(n_terms: usize) -> CheckReport {
    let v = eta(&[(4, 8), (1, -8)]).series(n_terms + 2);
    let u = eta(&[(2, 20), (1, -16)]).series(n_terms + 2);
    compare_series("section1.fine", &v.q_derivative(), &u, &order_after(u.offset(), n_terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrals_hold() {
        for i in 1..=6 {
            let r = verify_theorem_t1(i, 80);
            assert!(r.passed(), "{r:?}");
        }
        assert!(!verify_theorem_t1(7, 10).passed());
        assert!(verify_level7_integral(60).passed());
    }

    #[test]
    fn lambert_identities() {
        assert!(verify_quintic_identity(120).passed());
        assert!(verify_four_squares(120).passed());
        assert!(verify_fine_identity(120).passed());
    }

    #[test]
    fn perturbed_integrand_fails() {
        let v = eta(&[(2, 1), (6, 5), (1, -5), (3, -1)]).series(30);
        let u = eta(&[(2, 8), (3, 6), (1, -9), (6, -1)]).series(30);
        assert!(!compare_series("x", &v.q_derivative(), &u, &int(20)).passed());
    }
}
