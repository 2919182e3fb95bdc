//! Lambert series and the level-1 Eisenstein series.

use num_bigint::BigInt;
use num_traits::Zero;

use super::PuiseuxSeries;
use crate::rational::Rational;

/// `Σ_{j|m} j^s`.
pub fn divisor_power_sum(m: u64, s: u32) -> BigInt {
    let mut total = BigInt::zero();
    let mut j = 1u64;
    while j * j <= m {
        if m % j == 0 {
            total += BigInt::from(j).pow(s);
            if j * j != m {
                total += BigInt::from(m / j).pow(s);
            }
        }
        j += 1;
    }
    total
}

/// Legendre symbol `(j/5)`.
pub fn legendre5(j: u64) -> i64 {
    match j % 5 {
        1 | 4 => 1,
        2 | 3 => -1,
        _ => 0,
    }
}

fn from_coefficients(c: Vec<BigInt>) -> PuiseuxSeries {
    PuiseuxSeries::from_integers(Rational::zero(), c)
}

/// `Σ_{j≥1} j^s q^{cj}/(1 − q^{cj})`, first `n` coefficients.
pub fn lambert_series(s: u32, c: u32, n: usize) -> PuiseuxSeries {
    assert!(c >= 1, "lambert_series: modulus must be positive");
    let c = c as usize;
    let mut coeffs = vec![BigInt::zero(); n];
    for (i, slot) in coeffs.iter_mut().enumerate().skip(1) {
        if i % c == 0 {
            *slot = divisor_power_sum((i / c) as u64, s);
        }
    }
    from_coefficients(coeffs)
}

/// `1 − 5 Σ (j/5) j q^j/(1 − q^j)`.
pub fn lambert_legendre_5(n: usize) -> PuiseuxSeries {
    let mut coeffs = vec![BigInt::zero(); n];
    if n > 0 {
        coeffs[0] = BigInt::from(1);
    }
    for (m, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let m = m as u64;
        let mut acc = 0i64;
        for j in 1..=m {
            if m % j == 0 {
                acc += legendre5(j) * j as i64;
            }
        }
        *slot = BigInt::from(-5 * acc);
    }
    from_coefficients(coeffs)
}

fn eisenstein(scale: i64, s: u32, n: usize) -> PuiseuxSeries {
    let mut coeffs = vec![BigInt::zero(); n];
    if n > 0 {
        coeffs[0] = BigInt::from(1);
    }
    for (m, slot) in coeffs.iter_mut().enumerate().skip(1) {
        *slot = divisor_power_sum(m as u64, s) * scale;
    }
    from_coefficients(coeffs)
}

/// `Q = 1 + 240 Σ j³ q^j/(1 − q^j)`.
pub fn eisenstein_q(n: usize) -> PuiseuxSeries {
    eisenstein(240, 3, n)
}

/// `R = 1 − 504 Σ j⁵ q^j/(1 − q^j)`.
pub fn eisenstein_r(n: usize) -> PuiseuxSeries {
    eisenstein(-504, 5, n)
}
