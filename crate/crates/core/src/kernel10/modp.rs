//! Arithmetic modulo the Mersenne prime `2⁶¹ − 1`, used to screen residues quickly.
//!
//! The prime is `≡ 1 (mod 5)` and `≡ 3 (mod 4)`, so 5 is a square and its root is
//! `5^{(p+1)/4}`. Every denominator met in a local expansion (powers of 2 and 5,
//! small integers, differences of the golden roots) is invertible here.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::field5::Scalar;

pub const P: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub fn new(x: u64) -> Self {
        Fp(x % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn sqrt5() -> Self {
        Fp(5).pow((P + 1) / 4)
    }

    /// Images of `0, 1, −1, α, β, γ, δ`.
    pub fn level10_roots() -> [Fp; 7] {
        let s = Self::sqrt5();
        let half = Fp(2).try_inv().expect("2 is invertible");
        let alpha = (Fp(1) + s) * half;
        let beta = Fp(1).sub_ref(&s) * half;
        let gamma = Fp::from_i64(-2) + s;
        let delta = Fp::from_i64(-2).sub_ref(&s);
        [Fp(0), Fp(1), Fp::from_i64(-1), alpha, beta, gamma, delta]
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod p", self.0)
    }
}

impl Scalar for Fp {
    fn add_ref(&self, o: &Self) -> Self {
        *self + *o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        *self + o.neg_ref()
    }
    fn mul_ref(&self, o: &Self) -> Self {
        *self * *o
    }
    fn neg_ref(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_five() {
        let s = Fp::sqrt5();
        assert_eq!(s * s, Fp(5));
    }

    #[test]
    fn golden_relations_hold_mod_p() {
        let r = Fp::level10_roots();
        assert_eq!(r[3] * r[4], Fp::from_i64(-1));
        assert_eq!(r[5] * r[6], Fp::from_i64(-1));
        assert_eq!(r[3] + r[4], Fp(1));
        assert_eq!(r[5] + r[6], Fp::from_i64(-4));
        for i in 0..7 {
            for j in 0..7 {
                if i != j {
                    assert!(r[i].sub_ref(&r[j]).try_inv().is_some());
                }
            }
        }
    }
}
