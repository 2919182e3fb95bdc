//! Gauss–Legendre quadrature on `[0, q0]` with node doubling.

use super::eval::eval_series;
use super::{BigFloat, NumericError};
use crate::qseries::PuiseuxSeries;

const FIRST_NODES: usize = 8;
const MAX_NODES: usize = 1024;

#[derive(Clone, Debug)]
pub struct QuadratureValue {
    pub value: BigFloat,
    pub nodes: usize,
    /// `|I_n − I_{n/2}|` at the accepted `n`.
    pub last_change: BigFloat,
}

/// `(P_n(x), P_n′(x))`.
fn legendre(n: usize, x: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = x.precision();
    let one = BigFloat::from_i64(1, prec);
    let (mut p0, mut p1) = (one.clone(), x.clone());
    for k in 2..=n as i64 {
        let p2 = x.mul(&p1).mul_i64(2 * k - 1).sub(&p0.mul_i64(k - 1)).div_i64(k);
        p0 = p1;
        p1 = p2;
    }
    let dp = x.mul(&p1).sub(&p0).mul_i64(n as i64).div(&x.mul(x).sub(&one));
    (p1, dp)
}

/// Nodes and weights on `[−1, 1]`.
pub fn gauss_legendre(n: usize, prec: u32) -> Vec<(BigFloat, BigFloat)> {
    let wp = prec + 16;
    let one = BigFloat::from_i64(1, wp);
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = BigFloat::from_f64(guess, wp);
        for _ in 0..100 {
            let (p, dp) = legendre(n, &x);
            let dx = p.div(&dp);
            x = x.sub(&dx);
            if dx.is_zero() || dx.magnitude().unwrap() < -(wp as i64) + 4 {
                break;
            }
        }
        let (_, dp) = legendre(n, &x);
        let w = BigFloat::from_i64(2, wp).div(&one.sub(&x.mul(&x)).mul(&dp).mul(&dp));
        out.push((x.with_precision(prec), w.with_precision(prec)));
    }
    out
}

/// `∫₀^{q0} f(t) dt`, doubling the node count until two successive values differ by less than `tol/10`.
pub fn quadrature<F>(f: F, q0: &BigFloat, tol: &BigFloat) -> Result<QuadratureValue, NumericError>
where
    F: Fn(&BigFloat) -> Result<BigFloat, NumericError>,
{
    let prec = q0.precision();
    let half = q0.ldexp(-1);
    let target = tol.div_i64(10);
    let rule = |n: usize| -> Result<BigFloat, NumericError> {
        let mut acc = BigFloat::zero(prec);
        for (x, w) in gauss_legendre(n, prec) {
            let t = half.mul(&BigFloat::from_i64(1, prec).add(&x));
            acc = acc.add(&w.mul(&f(&t)?));
        }
        Ok(acc.mul(&half))
    };
    let mut n = FIRST_NODES;
    let mut prev = rule(n)?;
    let mut change = BigFloat::zero(prec);
    while n < MAX_NODES {
        n *= 2;
        let next = rule(n)?;
        change = next.sub(&prev).abs();
        if change < target {
            return Ok(QuadratureValue { value: next, nodes: n, last_change: change });
        }
        prev = next;
    }
    Err(NumericError::ToleranceNotMet { nodes: n, change: change.to_f64(), tolerance: tol.to_f64() })
}

/// `∫₀^{q0} s(t) dt` with the integrand evaluated from its truncated series.
pub fn quadrature_check(integrand: &PuiseuxSeries, q0: &BigFloat, tol: &BigFloat) -> Result<QuadratureValue, NumericError> {
    let tiny = tol.div_i64(1000);
    quadrature(|t| Ok(eval_series(integrand, t, &tiny)?.value), q0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::eval::eval_eta_quotient;
    use crate::qseries::EtaQuotient;
    use crate::rational::{int, rat};

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.magnitude().unwrap() < -bits
    }

    #[test]
    fn nodes_integrate_polynomials_exactly() {
        let prec = 192;
        let rule = gauss_legendre(6, prec);
        // degree 10 is within 2n − 1
        let mut s = BigFloat::zero(prec);
        for (x, w) in &rule {
            s = s.add(&w.mul(&x.powi(10)));
        }
        assert!(close(&s, &BigFloat::from_rational(&rat(2, 11), prec), 180));
        let wsum = rule.iter().fold(BigFloat::zero(prec), |a, (_, w)| a.add(w));
        assert!(close(&wsum, &BigFloat::from_i64(2, prec), 180));
    }

    #[test]
    fn exponential_integral() {
        let prec = 256;
        let one = BigFloat::from_i64(1, prec);
        let tol = BigFloat::from_i64(10, prec).powi(-40);
        let v = quadrature(|t| Ok(t.exp()), &one, &tol).unwrap();
        let exact = one.exp().sub(&one);
        assert!(v.value.sub(&exact).abs() < tol);
    }

    #[test]
    fn fine_integral_by_series_and_product() {
        let prec = 256;
        let q0 = BigFloat::pi(prec).neg().exp();
        let tol = BigFloat::from_i64(10, prec).powi(-20);
        // the integrand is the bare product, i.e. the eta quotient divided by q
        let e = EtaQuotient::new([(2, 20), (1, -16)]);
        let by_series = quadrature_check(&e.series(300).shift(&int(-1)), &q0, &tol).unwrap();
        let by_product = quadrature(|t| Ok(eval_eta_quotient(&e, t)?.div(t)), &q0, &tol).unwrap();
        let sixteenth = BigFloat::from_rational(&rat(1, 16), prec);
        assert!(by_series.value.sub(&sixteenth).abs() < tol);
        assert!(by_product.value.sub(&sixteenth).abs() < tol);
    }
}
