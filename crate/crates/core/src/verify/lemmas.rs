//! The polynomial `g(z)` in its five equivalent forms, and terminating ₂F₁ sums.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::report::CheckReport;
use super::rules::binomial;
use crate::field5::PolyQ;
use crate::rational::{from_bigint, int, rat, Rational};

fn nonpositive_integer(x: &Rational) -> Option<u64> {
    (x.is_integer() && !x.is_positive()).then(|| (-x.to_integer()).to_u64()).flatten()
}

/// `₂F₁(a, b; c; x)` as a finite sum; `None` unless `a` or `b` is a non-positive integer,
/// or when `(c)_t` vanishes before the sum terminates.
pub fn hyp2f1_terminating(a: &Rational, b: &Rational, c: &Rational, x: &PolyQ) -> Option<PolyQ> {
    let n = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(p), Some(q)) => p.min(q),
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => return None,
    };
    let mut sum = PolyQ::zero();
    let mut power = PolyQ::one();
    let mut coeff = Rational::one();
    for t in 0..=n {
        if t > 0 {
            let tt = int(t as i64 - 1);
            let denom = (c + &tt) * int(t as i64);
            if denom.is_zero() {
                return None;
            }
            coeff = coeff * (a + &tt) * (b + &tt) / denom;
            power = power.mul(x);
        }
        sum = sum.add(&power.scale(&coeff));
    }
    Some(sum)
}

/// Scalar version of [`hyp2f1_terminating`].
pub fn hyp2f1_value(a: &Rational, b: &Rational, c: &Rational, x: &Rational) -> Option<Rational> {
    Some(hyp2f1_terminating(a, b, c, &PolyQ::constant(x.clone()))?.coeff(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GForm {
    G1,
    G2,
    G3,
    G4,
    GFinal,
    /// `0` for odd `n`, `(−1)^{n/2} 2^{−n} C(n, n/2) (z−1)ⁿ` for even `n`.
    Closed,
}

impl GForm {
    pub const ALL: [GForm; 6] = [GForm::G1, GForm::G2, GForm::G3, GForm::G4, GForm::GFinal, GForm::Closed];
}

fn b(n: u64, k: u64) -> Rational {
    from_bigint(binomial(n as i64, k as i64))
}

fn z_pow(k: u64) -> PolyQ {
    PolyQ::monomial(Rational::one(), k as usize)
}

/// `g(z)` evaluated exactly in the requested form.
pub fn lemma_g_forms(n: u64, form: GForm) -> PolyQ {
    let one_plus_z = PolyQ::from_i64(&[1, 1]);
    let half_one_plus_z = one_plus_z.scale(&rat(1, 2));
    let half_one_minus_z = PolyQ::from_i64(&[1, -1]).scale(&rat(1, 2));
    let z_minus_one = PolyQ::from_i64(&[-1, 1]);
    let ni = n as i64;
    let f = |a: Rational, b: Rational, c: Rational, x: &PolyQ| {
        hyp2f1_terminating(&a, &b, &c, x).expect("terminating by construction")
    };
    let mut g = PolyQ::zero();
    match form {
        GForm::G1 => {
            for t in 0..=n {
                let mut inner = PolyQ::zero();
                for s in 0..=n - t {
                    inner = inner.add(&z_pow(s).scale(&(b(n, s) * b(n, s + t))));
                }
                let c = b(t + n, t) * num_traits::pow(rat(-1, 2), t as usize);
                g = g.add(&one_plus_z.pow(t as u32).mul(&inner).scale(&c));
            }
        }
        GForm::G2 => {
            for s in 0..=n {
                let si = s as i64;
                let h = f(int(ni + 1), int(si - ni), int(si + 1), &half_one_plus_z);
                g = g.add(&z_pow(s).mul(&h).scale(&b(n, s).pow(2)));
            }
        }
        GForm::G3 => {
            for s in 0..=n {
                let si = s as i64;
                let h = f(int(ni + 1), int(-si), int(ni + 1 - si), &half_one_plus_z);
                g = g.add(&z_pow(n - s).mul(&h).scale(&b(n, s).pow(2)));
            }
        }
        GForm::G4 => {
            for s in 0..=n {
                let h = f(int(ni + 1), int(-(s as i64)), int(1), &half_one_minus_z);
                let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                g = g.add(&z_pow(n - s).mul(&h).scale(&(b(n, s) * sign)));
            }
        }
        GForm::GFinal => {
            let v = hyp2f1_value(&int(-ni), &int(ni + 1), &int(1), &rat(1, 2)).expect("terminating");
            g = z_minus_one.pow(n as u32).scale(&v);
        }
        GForm::Closed => {
            if n % 2 == 0 {
                let sign = if (n / 2) % 2 == 0 { int(1) } else { int(-1) };
                let c = sign * b(n, n / 2) / from_bigint(BigInt::from(2).pow(n as u32));
                g = z_minus_one.pow(n as u32).scale(&c);
            }
        }
    }
    g
}

/// All forms agree for `1 ≤ n ≤ n_max`.
pub fn verify_g_forms(n_max: u64) -> CheckReport {
    let name = "lemmas.g-forms";
    for n in 1..=n_max {
        let reference = lemma_g_forms(n, GForm::G1);
        for form in GForm::ALL {
            if lemma_g_forms(n, form) != reference {
                return CheckReport::fail(name, format!("n = {n}: {form:?} differs from G1"));
            }
        }
    }
    CheckReport::pass(name).with_detail(format!("n <= {n_max}"))
}

/// `₂F₁(−2m, 2m+1; 1; 1/2) = (−1)^m 2^{−2m} C(2m, m)` and the odd case vanishes.
pub fn verify_gauss_special_case(n_max: u64) -> CheckReport {
    let name = "lemmas.gauss-half";
    for n in 0..=n_max {
        let ni = n as i64;
        let v = hyp2f1_value(&int(-ni), &int(ni + 1), &int(1), &rat(1, 2)).expect("terminating");
        let expected = if n % 2 == 1 {
            Rational::zero()
        } else {
            let m = n / 2;
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            sign * b(n, m) / from_bigint(BigInt::from(2).pow(n as u32))
        };
        if v != expected {
            return CheckReport::fail(name, format!("n = {n}: {v} != {expected}"));
        }
    }
    CheckReport::pass(name).with_detail(format!("n <= {n_max}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `(x)_t`.
    fn rising(x: &Rational, t: u64) -> Rational {
        (0..t).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
    }

    #[test]
    fn hypergeometric_examples() {
        assert_eq!(hyp2f1_value(&int(-2), &int(3), &int(1), &rat(1, 2)), Some(rat(-1, 2)));
        assert_eq!(hyp2f1_value(&int(0), &int(3), &int(1), &rat(7, 2)), Some(int(1)));
        assert_eq!(hyp2f1_value(&rat(1, 2), &int(3), &int(1), &rat(1, 2)), None);
        // (c)_t vanishes inside the sum
        assert_eq!(hyp2f1_value(&int(-3), &int(1), &int(-1), &rat(1, 2)), None);
        // Chu–Vandermonde: ₂F₁(−n, b; c; 1) = (c−b)_n/(c)_n
        let v = hyp2f1_value(&int(-4), &rat(1, 3), &rat(5, 2), &int(1)).unwrap();
        assert_eq!(v, rising(&(rat(5, 2) - rat(1, 3)), 4) / rising(&rat(5, 2), 4));
    }

    #[test]
    fn small_forms() {
        assert!(lemma_g_forms(1, GForm::G1).is_zero());
        assert_eq!(lemma_g_forms(2, GForm::Closed), PolyQ::from_i64(&[1, -2, 1]).scale(&rat(-1, 2)));
        assert_eq!(lemma_g_forms(2, GForm::G1), lemma_g_forms(2, GForm::Closed));
    }

    #[test]
    fn all_forms_agree() {
        assert!(verify_g_forms(12).passed());
        assert!(verify_gauss_special_case(30).passed());
    }
}
