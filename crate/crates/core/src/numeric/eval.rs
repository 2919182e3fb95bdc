//! Evaluation of truncated series and infinite products at a real point `0 < q < 1`.

use num_traits::{Signed, Zero};

use super::{BigFloat, NumericError};
use crate::qseries::{EtaQuotient, GeneralizedEtaProduct, PuiseuxSeries};
use crate::rational::Rational;

/// A series value together with the estimated size of the discarded tail.
#[derive(Clone, Debug)]
pub struct SeriesValue {
    pub value: BigFloat,
    pub tail_bound: BigFloat,
}

fn check_point(q0: &BigFloat) -> Result<(), NumericError> {
    if !q0.is_positive() || q0 >= &BigFloat::from_i64(1, q0.precision()) {
        return Err(NumericError::PointOutOfRange(q0.to_f64()));
    }
    Ok(())
}

/// `q0^r` for rational `r`.
pub fn rational_power(q0: &BigFloat, r: &Rational) -> BigFloat {
    q0.pow_rational(r)
}

/// Geometric tail estimate `2·A·g¹⁰·q0^P/(1 − g·q0)` where `P` is the precision of `s`, `A` the
/// largest coefficient among the last 20 and `g ≥ 1` the per-term growth across that window.
pub fn tail_estimate(s: &PuiseuxSeries, q0: &BigFloat) -> Option<BigFloat> {
    let prec = q0.precision();
    let mags: Vec<BigFloat> = s.coeffs().iter().map(|c| BigFloat::from_rational(&c.abs(), prec)).collect();
    let len = mags.len();
    let window = &mags[len.saturating_sub(20)..];
    let max_of = |v: &[BigFloat]| v.iter().fold(BigFloat::zero(prec), |m, x| if x > &m { x.clone() } else { m });
    let mut a = max_of(window);
    if a.is_zero() {
        // sparse series: fall back to the last nonzero coefficient
        a = mags.iter().rev().find(|x| !x.is_zero()).cloned().unwrap_or_else(|| BigFloat::zero(prec));
    }
    let one = BigFloat::from_i64(1, prec);
    let mut g = one.clone();
    if window.len() == 20 {
        let (older, newer) = window.split_at(10);
        let (mo, mn) = (max_of(older), max_of(newer));
        if !mo.is_zero() && !mn.is_zero() && mn > mo {
            g = mn.div(&mo).pow_rational(&Rational::new(1.into(), 10.into()));
        }
    }
    let gq = g.mul(q0);
    if gq >= one {
        return None;
    }
    let lead = rational_power(q0, s.precision());
    Some(a.mul_i64(2).mul(&g.powi(10)).mul(&lead).div(&one.sub(&gq)))
}

/// Horner evaluation of `s` at `q0` with a tail estimate; fails when the estimate exceeds `tol`.
pub fn eval_series(s: &PuiseuxSeries, q0: &BigFloat, tol: &BigFloat) -> Result<SeriesValue, NumericError> {
    check_point(q0)?;
    let prec = q0.precision();
    let tail = tail_estimate(s, q0).ok_or(NumericError::InsufficientTruncation {
        tail: f64::INFINITY,
        tolerance: tol.to_f64(),
    })?;
    if &tail > tol {
        return Err(NumericError::InsufficientTruncation { tail: tail.to_f64(), tolerance: tol.to_f64() });
    }
    let mut acc = BigFloat::zero(prec);
    for c in s.coeffs().iter().rev() {
        acc = acc.mul(q0);
        if !c.is_zero() {
            acc = acc.add(&BigFloat::from_rational(c, prec));
        }
    }
    let value = if s.offset().is_zero() { acc } else { acc.mul(&rational_power(q0, s.offset())) };
    Ok(SeriesValue { value, tail_bound: tail })
}

/// `Π_{j≥1}(1 − x^{step·j − shift})` until the factors are 1 to working precision.
fn euler_like(x: &BigFloat, step: u64, shift: u64) -> BigFloat {
    let prec = x.precision();
    let one = BigFloat::from_i64(1, prec);
    let cutoff = -(prec as i64) - 8;
    let x_step = x.powi(step as i64);
    let mut power = x.powi((step - shift) as i64);
    let mut acc = one.clone();
    while !power.is_zero() && power.magnitude().unwrap() >= cutoff {
        acc = acc.mul(&one.sub(&power));
        power = power.mul(&x_step);
    }
    acc
}

/// `Π_d η(d·τ)^{e_d}` at `q = t`, straight from the product definition.
pub fn eval_eta_quotient(e: &EtaQuotient, t: &BigFloat) -> Result<BigFloat, NumericError> {
    check_point(t)?;
    let mut acc = rational_power(t, &e.offset());
    for (&d, &k) in e.factors() {
        acc = acc.mul(&euler_like(&t.powi(d as i64), 1, 0).powi(k));
    }
    Ok(acc)
}

/// A generalized product at `q = t`.
pub fn eval_generalized_product(p: &GeneralizedEtaProduct, t: &BigFloat) -> Result<BigFloat, NumericError> {
    check_point(t)?;
    let mut acc = rational_power(t, p.prefactor());
    for &(r, k) in p.factors() {
        acc = acc.mul(&euler_like(t, p.modulus() as u64, r as u64).powi(k));
    }
    Ok(acc)
}
