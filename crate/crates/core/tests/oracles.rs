//! Naive reference implementations compared against the library.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use etaforge::field5::Sqrt5Number;
use etaforge::numeric::{eval_eta_quotient, quadrature, BigFloat};
use etaforge::qseries::{divisor_power_sum, euler_series, lambert_series, EtaQuotient, GeneralizedEtaProduct};
use etaforge::rational::rat;

/// Coefficients of `Π (1 − q^{a})^{e}` over the listed `(a, e)` up to `q^{n−1}`, by repeated
/// multiplication with truncated binomial expansions.
fn brute_product(factors: &[(usize, i64)], n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n];
    acc[0] = BigInt::one();
    for &(a, e) in factors {
        if a >= n || e == 0 {
            continue;
        }
        let times = e.unsigned_abs();
        for _ in 0..times {
            if e > 0 {
                // multiply by (1 − q^a)
                for i in (a..n).rev() {
                    let t = acc[i - a].clone();
                    acc[i] -= t;
                }
            } else {
                // divide by (1 − q^a): multiply by 1 + q^a + q^{2a} + …
                for i in a..n {
                    let t = acc[i - a].clone();
                    acc[i] += t;
                }
            }
        }
    }
    acc
}

fn int_coeffs(s: &etaforge::qseries::PuiseuxSeries) -> Vec<BigInt> {
    s.coeffs().iter().map(|c| {
        assert!(c.is_integer());
        c.to_integer()
    }).collect()
}

fn is_generalized_pentagonal(n: i64) -> bool {
    (-100..=100).any(|k: i64| k * (3 * k - 1) / 2 == n)
}

#[test]
fn euler_pentagonal_sparsity_and_brute_force() {
    let s = euler_series(1, 1000);
    for (n, c) in s.coeffs().iter().enumerate() {
        let c = c.to_integer().to_i64().unwrap();
        assert!((-1..=1).contains(&c), "coefficient {n}");
        assert_eq!(c != 0, is_generalized_pentagonal(n as i64), "position {n}");
    }
    let n = 200;
    let brute = brute_product(&(1..n).map(|a| (a, 1)).collect::<Vec<_>>(), n);
    assert_eq!(int_coeffs(&euler_series(1, n)), brute);
}

#[test]
fn eta_quotients_match_brute_force() {
    let n = 120;
    for e in [[8, -7, 0, 3], [0, 3, 8, -7], [3, 0, -7, 8], [-7, 8, 3, 0], [5, -2, -17, 18], [1, 2, 3, -2]] {
        let mut factors = Vec::new();
        for (d, k) in [1usize, 2, 5, 10].into_iter().zip(e) {
            for j in 1..n {
                factors.push((d * j, k));
            }
        }
        let q = EtaQuotient::level10(e);
        assert_eq!(int_coeffs(&q.series(n)), brute_product(&factors, n), "{e:?}");
    }
}

#[test]
fn k_and_rogers_ramanujan_match_brute_force() {
    let n = 150;
    for (p, residues) in [
        (GeneralizedEtaProduct::ramanujan_k(), vec![(9usize, 1i64), (8, 1), (2, 1), (1, 1), (7, -1), (6, -1), (4, -1), (3, -1)]),
        (GeneralizedEtaProduct::rogers_ramanujan(), vec![(4, 1), (1, 1), (3, -1), (2, -1)]),
    ] {
        let m = p.modulus() as usize;
        let mut factors = Vec::new();
        for j in 1..=n / m + 1 {
            for &(r, e) in &residues {
                factors.push((m * j - r, e));
            }
        }
        assert_eq!(int_coeffs(&p.series(n)), brute_product(&factors, n));
    }
}

#[test]
fn lambert_series_matches_divisor_sums() {
    let n = 200;
    for (s, c) in [(1u32, 1u32), (3, 1), (1, 4), (5, 2)] {
        let l = lambert_series(s, c, n);
        for m in 1..n as u64 {
            let expected: BigInt = if m % c as u64 == 0 {
                (1..=m / c as u64).filter(|d| (m / c as u64) % d == 0).map(|d| BigInt::from(d).pow(s)).sum()
            } else {
                BigInt::zero()
            };
            let exponent = BigRational::from_integer(BigInt::from(m));
            let got = l.coeff_at(&exponent).unwrap_or_else(BigRational::zero);
            assert_eq!(got, BigRational::from_integer(expected), "s={s} c={c} m={m}");
        }
    }
    for m in 1..300u64 {
        let naive: BigInt = (1..=m).filter(|d| m % d == 0).map(|d| BigInt::from(d).pow(2)).sum();
        assert_eq!(divisor_power_sum(m, 2), naive);
    }
}

#[test]
fn sqrt5_arithmetic_matches_floats() {
    let vals = [Sqrt5Number::alpha(), Sqrt5Number::beta(), Sqrt5Number::gamma(), Sqrt5Number::delta(), Sqrt5Number::from_int(3)];
    for x in &vals {
        for y in &vals {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            assert!(((x * y).to_f64() - fx * fy).abs() < 1e-12);
            assert!(((x + y).to_f64() - (fx + fy)).abs() < 1e-12);
            if let Ok(q) = x.checked_div(y) {
                assert!((q.to_f64() - fx / fy).abs() < 1e-9 * (fx / fy).abs().max(1.0));
            }
        }
    }
    let s5 = 5f64.sqrt();
    assert!((Sqrt5Number::alpha().to_f64() - (1.0 + s5) / 2.0).abs() < 1e-15);
    assert!((Sqrt5Number::gamma().to_f64() * Sqrt5Number::delta().to_f64() + 1.0).abs() < 1e-12);
}

#[test]
fn bigfloat_matches_f64_library() {
    let prec = 200;
    for x in [0.1f64, 0.5, 1.0, 2.5, 7.25, 30.0] {
        let b = BigFloat::from_f64(x, prec);
        assert!((b.exp().to_f64() / x.exp() - 1.0).abs() < 1e-14, "exp {x}");
        assert!((b.ln().to_f64() - x.ln()).abs() < 1e-14, "ln {x}");
        assert!((b.sqrt().to_f64() - x.sqrt()).abs() < 1e-14, "sqrt {x}");
        assert!((b.neg().exp().to_f64() / (-x).exp() - 1.0).abs() < 1e-14, "exp -{x}");
    }
    assert!((BigFloat::pi(prec).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    let third = BigFloat::from_rational(&rat(1, 3), prec);
    assert_eq!(third.to_fixed_string(20), "0.33333333333333333333");
}

#[test]
fn quadrature_of_a_product_against_termwise_integration() {
    // ∫₀^{1/5} E(t)³ dt computed termwise from Jacobi's identity E³ = Σ (−1)^m (2m+1) t^{m(m+1)/2}
    let prec = 256;
    let q0 = BigFloat::from_rational(&rat(1, 5), prec);
    let mut termwise = BigFloat::zero(prec);
    for m in 0..40i64 {
        let p = m * (m + 1) / 2 + 1;
        let c = if m % 2 == 0 { 2 * m + 1 } else { -(2 * m + 1) };
        termwise = termwise.add(&q0.powi(p).mul_i64(c).div_i64(p));
    }
    let cube = EtaQuotient::new([(1, 3)]);
    let tol = BigFloat::from_i64(10, prec).powi(-30);
    // η³ carries q^{1/8}; strip it to integrate E³ itself
    let v = quadrature(|t| Ok(eval_eta_quotient(&cube, t)?.div(&t.pow_rational(&rat(1, 8)))), &q0, &tol).unwrap();
    assert!(v.value.sub(&termwise).abs() < tol);
    assert!(termwise.is_positive());
}
