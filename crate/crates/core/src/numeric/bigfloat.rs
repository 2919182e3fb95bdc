//! Binary floating point `m·2^e` with a per-value precision in bits.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

pub const DEFAULT_PRECISION: u32 = 256;

#[derive(Clone, Debug)]
pub struct BigFloat {
    /// Zero, or exactly `prec` bits.
    man: BigInt,
    exp: i64,
    prec: u32,
}

fn shift_round(m: &BigInt, shift: u64) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let neg = m.is_negative();
    let a = m.abs();
    let half = BigInt::one() << (shift - 1);
    let r = (a + half) >> shift;
    if neg {
        -r
    } else {
        r
    }
}

impl BigFloat {
    fn normalize(man: BigInt, exp: i64, prec: u32) -> Self {
        let prec = prec.max(8);
        if man.is_zero() {
            return BigFloat { man, exp: 0, prec };
        }
        let bits = man.bits();
        let (mut man, mut exp) = if bits > prec as u64 {
            let s = bits - prec as u64;
            (shift_round(&man, s), exp + s as i64)
        } else {
            let s = prec as u64 - bits;
            (man << s, exp - s as i64)
        };
        if man.bits() > prec as u64 {
            man = shift_round(&man, 1);
            exp += 1;
        }
        BigFloat { man, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::normalize(BigInt::zero(), 0, prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::normalize(n.clone(), 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let p = prec + 8;
        let v = Self::from_bigint(r.numer(), p).div(&Self::from_bigint(r.denom(), p));
        v.with_precision(prec)
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero(prec);
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if e == 0 { (frac, -1074) } else { (frac | (1u64 << 52), e - 1075) };
        Self::normalize(BigInt::from(m) * sign, e, prec)
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::normalize(self.man.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// `floor(log₂|x|) + 1`, or `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.exp + self.man.bits() as i64)
    }

    pub fn neg(&self) -> Self {
        BigFloat { man: -&self.man, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        BigFloat { man: self.man.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            return o.with_precision(prec);
        }
        if o.is_zero() {
            return self.with_precision(prec);
        }
        let (ma, mb) = (self.magnitude().unwrap(), o.magnitude().unwrap());
        // the smaller operand cannot affect the rounded result
        if ma - mb > prec as i64 + 4 {
            return self.with_precision(prec);
        }
        if mb - ma > prec as i64 + 4 {
            return o.with_precision(prec);
        }
        let e = self.exp.min(o.exp);
        let m = (&self.man << (self.exp - e) as u64) + (&o.man << (o.exp - e) as u64);
        Self::normalize(m, e, prec)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalize(&self.man * &o.man, self.exp + o.exp, self.prec.max(o.prec))
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + o.man.bits() as i64 - self.man.bits() as i64 + 4).max(0) as u64;
        let m = (&self.man << shift) / &o.man;
        Self::normalize(m, self.exp - o.exp - shift as i64, prec)
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        Self::normalize(&self.man * n, self.exp, self.prec)
    }

    pub fn div_i64(&self, n: i64) -> Self {
        self.div(&Self::from_i64(n, self.prec))
    }

    /// Multiplication by `2^k`.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { man: self.man.clone(), exp: self.exp + k, prec: self.prec }
    }

    /// Panics for negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of a negative number");
        if self.is_zero() {
            return self.clone();
        }
        let want = 2 * self.prec as i64 + 4;
        let mut s = (want - self.man.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let r = (&self.man << s as u64).sqrt();
        Self::normalize(r, (self.exp - s) / 2, self.prec)
    }

    pub fn powi(&self, n: i64) -> Self {
        let mut result = Self::from_i64(1, self.prec);
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        if n < 0 {
            Self::from_i64(1, self.prec).div(&result)
        } else {
            result
        }
    }

    /// Nearest integer.
    pub fn round_to_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            shift_round(&self.man, (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits() as i64;
        let keep = bits.min(60);
        let top = shift_round(&self.man, (bits - keep) as u64).to_f64().unwrap_or(f64::NAN);
        let e = self.exp + bits - keep;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2000 {
            return 0.0;
        }
        top * 2f64.powi(e as i32)
    }

    pub fn exp(&self) -> Self {
        let prec = self.prec;
        if self.is_zero() {
            return Self::from_i64(1, prec);
        }
        let k = ((prec as f64).sqrt() as i64).max(4);
        let s = (self.magnitude().unwrap() + k).max(0);
        let wp = prec + s as u32 + 24;
        let r = self.with_precision(wp).ldexp(-s);
        let mut sum = Self::from_i64(1, wp);
        let mut term = Self::from_i64(1, wp);
        let cutoff = -(wp as i64) - 4;
        let mut n = 1i64;
        loop {
            term = term.mul(&r).div_i64(n);
            if term.is_zero() || term.magnitude().unwrap() < cutoff {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..s {
            sum = sum.mul(&sum);
        }
        sum.with_precision(prec)
    }

    /// Natural logarithm by Halley iteration on `exp`; panics for non-positive input.
    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "BigFloat ln of a non-positive number");
        let prec = self.prec;
        let wp = prec + 32;
        let x = self.with_precision(wp);
        // scale into f64 range for the starting guess
        let m = self.magnitude().unwrap();
        let reduced = x.ldexp(-m).to_f64();
        let guess = reduced.ln() + m as f64 * std::f64::consts::LN_2;
        let mut y = Self::from_f64(guess, wp);
        for _ in 0..64 {
            let ey = y.exp();
            let delta = x.sub(&ey).div(&x.add(&ey)).mul_i64(2);
            y = y.add(&delta);
            if delta.is_zero() || delta.magnitude().unwrap() < y.magnitude().unwrap_or(0) - wp as i64 + 8 {
                break;
            }
        }
        y.with_precision(prec)
    }

    /// `x^r = exp(r·ln x)` for `x > 0`.
    pub fn pow_rational(&self, r: &Rational) -> Self {
        if r.is_integer() {
            if let Some(n) = r.to_integer().to_i64() {
                return self.powi(n);
            }
        }
        let wp = self.prec + 16;
        self.with_precision(wp).ln().mul(&Self::from_rational(r, wp)).exp().with_precision(self.prec)
    }

    /// `π` by Machin's formula.
    pub fn pi(prec: u32) -> Self {
        let wp = prec + 16;
        let atan_inv = |n: i64| {
            let n2 = Self::from_i64(n * n, wp);
            let mut power = Self::from_i64(1, wp).div_i64(n);
            let mut sum = power.clone();
            let mut k = 1i64;
            loop {
                power = power.div(&n2);
                let term = power.div_i64(2 * k + 1);
                if term.is_zero() || term.magnitude().unwrap() < -(wp as i64) - 4 {
                    break;
                }
                sum = if k % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
                k += 1;
            }
            sum
        };
        atan_inv(5).mul_i64(16).sub(&atan_inv(239).mul_i64(4)).with_precision(prec)
    }

    /// Scientific notation with `digits` significant digits, e.g. `1.2345e-7`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1);
        let wp = self.prec.max((digits as f64 * 3.33) as u32 + 16) + 16;
        let x = self.abs().with_precision(wp);
        let ten = Self::from_i64(10, wp);
        let mut e10 = ((self.magnitude().unwrap() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let scaled = |e10: i64| -> BigInt { x.mul(&ten.powi(digits as i64 - 1 - e10)).round_to_bigint() };
        let lo = BigInt::from(10).pow(digits as u32 - 1);
        let hi = BigInt::from(10).pow(digits as u32);
        let mut n = scaled(e10);
        for _ in 0..4 {
            if n >= hi {
                e10 += 1;
            } else if n < lo {
                e10 -= 1;
            } else {
                break;
            }
            n = scaled(e10);
        }
        let s = n.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }

    /// Fixed notation with `frac` digits after the point.
    pub fn to_fixed_string(&self, frac: usize) -> String {
        let wp = self.prec + (frac as f64 * 3.33) as u32 + 16;
        let n = self.abs().with_precision(wp).mul(&Self::from_i64(10, wp).powi(frac as i64)).round_to_bigint();
        let mut s = n.to_string();
        if s.len() <= frac {
            s = "0".repeat(frac + 1 - s.len()) + &s;
        }
        let (int_part, frac_part) = s.split_at(s.len() - frac);
        let sign = if self.is_negative() && n.sign() != Sign::NoSign { "-" } else { "" };
        if frac == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Decimal digits the precision can carry.
    pub fn decimal_digits(&self) -> usize {
        ((self.prec as f64) * std::f64::consts::LOG10_2).floor() as usize
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, o: &Self) -> bool {
        self.cmp_value(o) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp_value(o))
    }
}

impl BigFloat {
    fn cmp_value(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string(self.decimal_digits().saturating_sub(2).max(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.magnitude().unwrap() < -bits
    }

    #[test]
    fn arithmetic() {
        let p = 256;
        let third = BigFloat::from_rational(&rat(1, 3), p);
        let one = third.mul_i64(3);
        assert!(close(&one, &BigFloat::from_i64(1, p), 250));
        let two = BigFloat::from_i64(2, p);
        let r = two.sqrt();
        assert!(close(&r.mul(&r), &two, 250));
        assert_eq!(BigFloat::from_f64(0.375, 64).to_fixed_string(3), "0.375");
        assert_eq!(BigFloat::from_i64(-42, 64).to_fixed_string(0), "-42");
        assert!(BigFloat::from_i64(3, 64) > BigFloat::from_i64(2, 64));
    }

    #[test]
    fn constants() {
        let pi = BigFloat::pi(256);
        assert!(pi.to_fixed_string(50).starts_with("3.1415926535897932384626433832795028841971"));
        let e = BigFloat::from_i64(1, 256).exp();
        assert!(e.to_fixed_string(50).starts_with("2.7182818284590452353602874713526624977572"));
        let l = BigFloat::from_i64(10, 256).ln();
        assert!(l.to_fixed_string(50).starts_with("2.3025850929940456840179914546843642076011"));
        assert!(close(&l.exp(), &BigFloat::from_i64(10, 256), 245));
        assert!(close(&BigFloat::from_i64(-3, 256).exp().ln(), &BigFloat::from_i64(-3, 256), 248));
    }

    #[test]
    fn formatting() {
        let x = BigFloat::from_rational(&rat(-1, 7), 128);
        assert_eq!(x.to_sci_string(5), "-1.4286e-1");
        let tiny = BigFloat::from_i64(3, 256).ldexp(-300);
        assert!(tiny.to_sci_string(3).ends_with("e-90"));
        assert_eq!(BigFloat::from_i64(1000, 64).to_sci_string(1), "1e3");
        let c = BigFloat::from_rational(&rat(1, 4), 64).pow_rational(&rat(1, 2));
        assert!(close(&c, &BigFloat::from_rational(&rat(1, 2), 64), 58));
    }
}
