//! The limit theorem for quartets satisfying `(α+β)(γ+δ) = 2(αβ+γδ)` and its two-point lemma.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::report::CheckReport;
use crate::field5::{FieldError, Poly5, RationalFunction5, Sqrt5Number};
use crate::rational::{factorial, from_bigint, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("quartet {0} violates (α+β)(γ+δ) = 2(αβ+γδ)")]
    QuartetViolatesRelation(String),
    #[error("quartet {0} has repeated entries")]
    QuartetNotDistinct(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quartet {
    pub alpha: Sqrt5Number,
    pub beta: Sqrt5Number,
    pub gamma: Sqrt5Number,
    pub delta: Sqrt5Number,
}

impl std::fmt::Display for Quartet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {}; {}; {})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

impl Quartet {
    /// `α, β = (1 ± √5)/2`, `γ, δ = −2 ± √5`.
    pub fn golden() -> Self {
        Quartet {
            alpha: Sqrt5Number::alpha(),
            beta: Sqrt5Number::beta(),
            gamma: Sqrt5Number::gamma(),
            delta: Sqrt5Number::delta(),
        }
    }

    /// Solves the relation for `δ`; `None` if that is impossible or the entries collide.
    pub fn from_rational(alpha: Rational, beta: Rational, gamma: Rational) -> Option<Self> {
        let den = &alpha + &beta - &gamma * rat(2, 1);
        if den.is_zero() {
            return None;
        }
        let delta = (rat(2, 1) * &alpha * &beta - &gamma * (&alpha + &beta)) / den;
        let q = Quartet {
            alpha: Sqrt5Number::from_rational(alpha),
            beta: Sqrt5Number::from_rational(beta),
            gamma: Sqrt5Number::from_rational(gamma),
            delta: Sqrt5Number::from_rational(delta),
        };
        q.is_distinct().then_some(q)
    }

    fn entries(&self) -> [&Sqrt5Number; 4] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta]
    }

    pub fn is_distinct(&self) -> bool {
        let e = self.entries();
        (0..4).all(|i| (i + 1..4).all(|j| e[i] != e[j]))
    }

    pub fn satisfies_relation(&self) -> bool {
        let lhs = &(&self.alpha + &self.beta) * &(&self.gamma + &self.delta);
        let rhs = &(&self.alpha * &self.beta) + &(&self.gamma * &self.delta);
        lhs == &rhs + &rhs
    }

    pub fn validate(&self) -> Result<(), LimitError> {
        if !self.is_distinct() {
            return Err(LimitError::QuartetNotDistinct(self.to_string()));
        }
        if !self.satisfies_relation() {
            return Err(LimitError::QuartetViolatesRelation(self.to_string()));
        }
        Ok(())
    }
}

/// `1²·3²·5²⋯(n−1)²`.
fn odd_square_product(n: u64) -> BigInt {
    (1..n).step_by(2).fold(BigInt::one(), |acc, i| acc * BigInt::from(i * i))
}

fn even_sign(n: u64) -> Sqrt5Number {
    if (n / 2) % 2 == 0 {
        Sqrt5Number::one()
    } else {
        -Sqrt5Number::one()
    }
}

/// Closed form of `lim_{k→α} dⁿ/dkⁿ (k−γ)ⁿ(k−δ)ⁿ/(k−β)^{n+1}`.
pub fn theorem_closed_form(q: &Quartet, n: u64) -> Result<Sqrt5Number, LimitError> {
    if n % 2 == 1 {
        return Ok(Sqrt5Number::zero());
    }
    let num = (&q.gamma - &q.delta).pow(n as u32);
    let den = (&q.alpha - &q.beta).pow(n as u32 + 1);
    let v = num.checked_div(&den)?.scale(&from_bigint(odd_square_product(n)));
    Ok(&even_sign(n) * &v)
}

/// `n!·[tⁿ] f(p + t)`.
fn nth_derivative_at(f: &RationalFunction5, p: &Sqrt5Number, n: u64) -> Result<Sqrt5Number, LimitError> {
    let taylor = f.taylor_at_point(p, n as usize)?;
    Ok(taylor[n as usize].scale(&from_bigint(factorial(n))))
}

/// The same limit from an exact Taylor expansion at `α`.
pub fn theorem_taylor(q: &Quartet, n: u64) -> Result<Sqrt5Number, LimitError> {
    let e = n as u32;
    let num = Poly5::linear_root(&q.gamma).pow(e).mul(&Poly5::linear_root(&q.delta).pow(e));
    let den = Poly5::linear_root(&q.beta).pow(e + 1);
    let f = RationalFunction5::new(num, den)?;
    nth_derivative_at(&f, &q.alpha, n)
}

/// `x₀ = 2ab/(a+b)`.
pub fn lemma_point(a: &Sqrt5Number, b: &Sqrt5Number) -> Result<Sqrt5Number, LimitError> {
    let two_ab = (a * b).scale(&rat(2, 1));
    Ok(two_ab.checked_div(&(a + b))?)
}

/// Closed form of `lim_{x→x₀} dⁿ/dxⁿ (x−a)ⁿ(x−b)ⁿ/x^{n+1}`.
pub fn lemma_closed_form(a: &Sqrt5Number, b: &Sqrt5Number, n: u64) -> Result<Sqrt5Number, LimitError> {
    if n % 2 == 1 {
        return Ok(Sqrt5Number::zero());
    }
    let ratio = (a + b).checked_div(&(a * b).scale(&rat(2, 1)))?;
    let v = &(a - b).pow(n as u32) * &ratio.pow(n as u32 + 1);
    Ok(&even_sign(n) * &v.scale(&from_bigint(odd_square_product(n))))
}

pub fn lemma_taylor(a: &Sqrt5Number, b: &Sqrt5Number, n: u64) -> Result<Sqrt5Number, LimitError> {
    let e = n as u32;
    let num = Poly5::linear_root(a).pow(e).mul(&Poly5::linear_root(b).pow(e));
    let den = Poly5::x().pow(e + 1);
    let f = RationalFunction5::new(num, den)?;
    nth_derivative_at(&f, &lemma_point(a, b)?, n)
}

/// Deterministic rational quartets with small entries.
pub fn random_rational_quartets(count: usize, seed: u64) -> Vec<Quartet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut r = || rat(rng.gen_range(-12..=12), rng.gen_range(1..=6));
        let (a, b, c) = (r(), r(), r());
        if let Some(q) = Quartet::from_rational(a, b, c) {
            out.push(q);
        }
    }
    out
}

/// Compares both closed forms with the Taylor oracle for `1 ≤ n ≤ n_max`.
pub fn verify_limit_theorems(n_max: u64, quartets: &[Quartet]) -> Result<Vec<CheckReport>, LimitError> {
    let mut out = Vec::new();
    for (i, q) in quartets.iter().enumerate() {
        q.validate()?;
        let a = &q.gamma - &q.beta;
        let b = &q.delta - &q.beta;
        let mut theorem = CheckReport::pass(format!("limits.theorem.{i}")).with_detail(format!("n <= {n_max}"));
        let mut lemma = CheckReport::pass(format!("limits.lemma.{i}")).with_detail(format!("n <= {n_max}"));
        for n in 1..=n_max {
            if theorem.passed() {
                let (c, t) = (theorem_closed_form(q, n)?, theorem_taylor(q, n)?);
                if c != t {
                    theorem = CheckReport::fail(theorem.name, format!("{q}, n = {n}: closed {c}, Taylor {t}"));
                }
            }
            if lemma.passed() {
                let (c, t) = (lemma_closed_form(&a, &b, n)?, lemma_taylor(&a, &b, n)?);
                if c != t {
                    lemma = CheckReport::fail(lemma.name, format!("a = {a}, b = {b}, n = {n}: closed {c}, Taylor {t}"));
                }
            }
        }
        out.push(theorem);
        out.push(lemma);
    }
    Ok(out)
}
