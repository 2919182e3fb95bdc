//! Euler products, eta quotients and generalized eta products.
//!
//! Products are expanded through their logarithmic derivative: if
//! `q·d/dq log f = Σ Lₘ qᵐ` with integer `Lₘ` and `f₀ = 1`, then
//! `n·fₙ = Σ_{m=1..n} Lₘ·f_{n−m}`, which keeps everything in the integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{PuiseuxSeries, SeriesError};
use crate::rational::Rational;

/// Integer coefficients of `E(q^d) = Π (1 − q^{dj})`, first `n` of them.
pub fn euler_coefficients(d: u32, n: usize) -> Vec<i64> {
    assert!(d >= 1, "euler_coefficients: d must be positive");
    let d = d as i64;
    let n_i = n as i64;
    let mut c = vec![0i64; n];
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let ks: &[i64] = if k == 0 { &[0] } else { &[k, -k] };
        for &j in ks {
            let p = d * (j * (3 * j - 1) / 2);
            if p < n_i {
                c[p as usize] += sign;
                any = true;
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    c
}

/// `E(q^d)` truncated to `n` coefficients.
pub fn euler_series(d: u32, n: usize) -> PuiseuxSeries {
    let c = euler_coefficients(d, n);
    PuiseuxSeries::from_integers(Rational::zero(), c.into_iter().map(BigInt::from).collect())
}

fn sigma(n: u64) -> i64 {
    let mut s = 0i64;
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            s += i as i64;
            if i * i != n {
                s += (n / i) as i64;
            }
        }
        i += 1;
    }
    s
}

/// `Π_d η(dτ)^{e_d}` over an arbitrary set of scalings `d ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaQuotient {
    factors: BTreeMap<u32, i64>,
}

impl EtaQuotient {
    /// Builds the quotient from `(d, e_d)` pairs; repeated `d` accumulate, zero exponents drop.
    pub fn new<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut factors = BTreeMap::new();
        for (d, e) in pairs {
            assert!(d >= 1, "eta scaling must be positive");
            *factors.entry(d).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        EtaQuotient { factors }
    }

    /// `η₁^{e₁} η₂^{e₂} η₅^{e₅} η₁₀^{e₁₀}`.
    pub fn level10(e: [i64; 4]) -> Self {
        Self::new([(1, e[0]), (2, e[1]), (5, e[2]), (10, e[3])])
    }

    pub fn factors(&self) -> &BTreeMap<u32, i64> {
        &self.factors
    }

    /// The leading exponent `Σ d·e_d / 24`.
    pub fn offset(&self) -> Rational {
        let s: i64 = self.factors.iter().map(|(&d, &e)| d as i64 * e).sum();
        Rational::new(BigInt::from(s), BigInt::from(24))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.factors.iter().map(|(&d, &e)| (d, -e)))
    }

    pub fn product(&self, other: &Self) -> Self {
        Self::new(self.factors.iter().chain(other.factors.iter()).map(|(&d, &e)| (d, e)))
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::new(self.factors.iter().map(|(&d, &e)| (d, e * k)))
    }

    /// `Lₘ = −Σ_{d|m} e_d·d·σ(m/d)`.
    fn log_derivative_coefficient(&self, m: u64) -> i64 {
        let mut l = 0i64;
        for (&d, &e) in &self.factors {
            let d = d as u64;
            if m % d == 0 {
                l -= e * d as i64 * sigma(m / d);
            }
        }
        l
    }

    /// Unbounded stream of the integer coefficients of the unit part.
    pub fn stream(&self) -> EtaCoefficientStream {
        let quotient = self.clone();
        EtaCoefficientStream::new(move |m| quotient.log_derivative_coefficient(m))
    }

    pub fn unit_coefficients(&self, n: usize) -> Vec<BigInt> {
        self.stream().take(n).collect()
    }

    pub fn series(&self, n: usize) -> PuiseuxSeries {
        PuiseuxSeries::from_integers(self.offset(), self.unit_coefficients(n))
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|(d, e)| format!("eta{d}^{e}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `q^{Σ d·e_d/24} Π E(q^d)^{e_d}` truncated to `n` coefficients.
pub fn eta_quotient_series(quotient: &EtaQuotient, n: usize) -> PuiseuxSeries {
    quotient.series(n)
}

/// Integer coefficients `f₀, f₁, …` of `exp(Σ Lₘ qᵐ/m)`, produced one at a time.
pub struct EtaCoefficientStream {
    log_coeff: Box<dyn Fn(u64) -> i64 + Send + Sync>,
    l: Vec<i64>,
    f: Vec<BigInt>,
}

impl EtaCoefficientStream {
    fn new<F: Fn(u64) -> i64 + Send + Sync + 'static>(log_coeff: F) -> Self {
        EtaCoefficientStream { log_coeff: Box::new(log_coeff), l: vec![0], f: Vec::new() }
    }

    /// Coefficients produced so far.
    pub fn produced(&self) -> &[BigInt] {
        &self.f
    }
}

impl Iterator for EtaCoefficientStream {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let n = self.f.len();
        let value = if n == 0 {
            BigInt::one()
        } else {
            self.l.push((self.log_coeff)(n as u64));
            let mut acc = BigInt::zero();
            for m in 1..=n {
                let lm = self.l[m];
                if lm != 0 && !self.f[n - m].is_zero() {
                    acc += &self.f[n - m] * lm;
                }
            }
            acc / BigInt::from(n)
        };
        self.f.push(value.clone());
        Some(value)
    }
}

/// `q^prefactor · Π_{j≥1} Π_{(r,e)} (1 − q^{mj−r})^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedEtaProduct {
    modulus: u32,
    factors: Vec<(u32, i64)>,
    prefactor: Rational,
}

impl GeneralizedEtaProduct {
    pub fn new(modulus: u32, factors: Vec<(u32, i64)>, prefactor: Rational) -> Result<Self, SeriesError> {
        for &(r, _) in &factors {
            if r == 0 || r >= modulus {
                return Err(SeriesError::InvalidResidue { residue: r, modulus });
            }
        }
        Ok(GeneralizedEtaProduct { modulus, factors, prefactor })
    }

    /// Ramanujan's level-10 parameter `k`.
    pub fn ramanujan_k() -> Self {
        let factors = vec![(9, 1), (8, 1), (2, 1), (1, 1), (7, -1), (6, -1), (4, -1), (3, -1)];
        Self::new(10, factors, Rational::one()).expect("valid residues")
    }

    /// The Rogers–Ramanujan continued fraction `r(q)` in product form.
    pub fn rogers_ramanujan() -> Self {
        let factors = vec![(4, 1), (1, 1), (3, -1), (2, -1)];
        Self::new(5, factors, Rational::new(BigInt::from(1), BigInt::from(5))).expect("valid residues")
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn factors(&self) -> &[(u32, i64)] {
        &self.factors
    }

    pub fn prefactor(&self) -> &Rational {
        &self.prefactor
    }

    /// `Lₙ = −Σ e·a` over factors `(r, e)` and divisors `a | n` with `a ≡ −r (mod m)`.
    fn log_derivative_coefficient(modulus: u64, factors: &[(u32, i64)], n: u64) -> i64 {
        let mut divisors = Vec::new();
        let mut a = 1u64;
        while a * a <= n {
            if n % a == 0 {
                divisors.push(a);
                if a * a != n {
                    divisors.push(n / a);
                }
            }
            a += 1;
        }
        let mut l = 0i64;
        for div in divisors {
            for &(r, e) in factors {
                if (div + r as u64) % modulus == 0 {
                    l -= e * div as i64;
                }
            }
        }
        l
    }

    pub fn stream(&self) -> EtaCoefficientStream {
        let modulus = self.modulus as u64;
        let factors = self.factors.clone();
        EtaCoefficientStream::new(move |n| Self::log_derivative_coefficient(modulus, &factors, n))
    }

    pub fn series(&self, n: usize) -> PuiseuxSeries {
        PuiseuxSeries::from_integers(self.prefactor.clone(), self.stream().take(n).collect())
    }
}

pub fn generalized_eta_series(product: &GeneralizedEtaProduct, n: usize) -> PuiseuxSeries {
    product.series(n)
}
