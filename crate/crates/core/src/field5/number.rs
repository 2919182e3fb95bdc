//! Elements `a + b√5` of ℚ(√5).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FieldError;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sqrt5Number {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt5Number {
    pub fn new(a: Rational, b: Rational) -> Self {
        Sqrt5Number { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Sqrt5Number { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn sqrt5() -> Self {
        Sqrt5Number { a: Rational::zero(), b: Rational::one() }
    }

    fn half(n: i64, m: i64) -> Self {
        let two = BigInt::from(2);
        Sqrt5Number {
            a: Rational::new(BigInt::from(n), two.clone()),
            b: Rational::new(BigInt::from(m), two),
        }
    }

    /// `(1 + √5)/2`.
    pub fn alpha() -> Self {
        Self::half(1, 1)
    }

    /// `(1 − √5)/2`.
    pub fn beta() -> Self {
        Self::half(1, -1)
    }

    /// `−2 + √5`.
    pub fn gamma() -> Self {
        Self::half(-4, 2)
    }

    /// `−2 − √5`.
    pub fn delta() -> Self {
        Self::half(-4, -2)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Sqrt5Number { a: self.a.clone(), b: -&self.b }
    }

    /// `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Sqrt5Number { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Sqrt5Number { a: &self.a * c, b: &self.b * c }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self, FieldError> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Approximate value, for display and sorting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

impl Zero for Sqrt5Number {
    fn zero() -> Self {
        Sqrt5Number { a: Rational::zero(), b: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt5Number {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl<'a> Add<&'a Sqrt5Number> for &'a Sqrt5Number {
    type Output = Sqrt5Number;
    fn add(self, o: &Sqrt5Number) -> Sqrt5Number {
        Sqrt5Number { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl<'a> Sub<&'a Sqrt5Number> for &'a Sqrt5Number {
    type Output = Sqrt5Number;
    fn sub(self, o: &Sqrt5Number) -> Sqrt5Number {
        Sqrt5Number { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl<'a> Mul<&'a Sqrt5Number> for &'a Sqrt5Number {
    type Output = Sqrt5Number;
    fn mul(self, o: &Sqrt5Number) -> Sqrt5Number {
        if self.b.is_zero() {
            return o.scale(&self.a);
        }
        if o.b.is_zero() {
            return self.scale(&o.a);
        }
        let five = Rational::from_integer(BigInt::from(5));
        Sqrt5Number {
            a: &self.a * &o.a + five * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for &Sqrt5Number {
    type Output = Sqrt5Number;
    fn neg(self) -> Sqrt5Number {
        Sqrt5Number { a: -&self.a, b: -&self.b }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Sqrt5Number {
            type Output = Sqrt5Number;
            fn $m(self, o: Sqrt5Number) -> Sqrt5Number {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Sqrt5Number {
    type Output = Sqrt5Number;
    fn neg(self) -> Sqrt5Number {
        -&self
    }
}

impl fmt::Display for Sqrt5Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.a)),
            (true, false) => write!(f, "{}*sqrt5", format_rational(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*sqrt5", format_rational(&self.a), sign, format_rational(&self.b.abs()))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Sqrt5Json {
    a: String,
    b: String,
}

impl Serialize for Sqrt5Number {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Sqrt5Json { a: format_rational(&self.a), b: format_rational(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sqrt5Number {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = Sqrt5Json::deserialize(d)?;
        let a = parse_rational(&raw.a).ok_or_else(|| D::Error::custom("bad rational a"))?;
        let b = parse_rational(&raw.b).ok_or_else(|| D::Error::custom("bad rational b"))?;
        Ok(Sqrt5Number { a, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn golden_quartet_facts() {
        let (al, be, ga, de) = (Sqrt5Number::alpha(), Sqrt5Number::beta(), Sqrt5Number::gamma(), Sqrt5Number::delta());
        assert_eq!(&al * &be, Sqrt5Number::from_int(-1));
        assert_eq!(al.conjugate(), be);
        assert_eq!(ga.conjugate(), de);
        assert_eq!(Sqrt5Number::new(int(2), int(1)).norm(), int(-1));
        // (α+β)(γ+δ) = 2(αβ+γδ)
        let lhs = &(&al + &be) * &(&ga + &de);
        let rhs = (&(&al * &be) + &(&ga * &de)).scale(&int(2));
        assert_eq!(lhs, rhs);
        // (α−γ)(α−δ) = 5α
        assert_eq!(&(&al - &ga) * &(&al - &de), al.scale(&int(5)));
    }

    #[test]
    fn inverse() {
        let x = Sqrt5Number::new(rat(3, 2), rat(-1, 7));
        assert_eq!(&x * &x.inv().unwrap(), Sqrt5Number::one());
        assert_eq!(Sqrt5Number::zero().inv(), Err(FieldError::DivisionByZero));
        assert_eq!(Sqrt5Number::sqrt5().inv().unwrap(), Sqrt5Number::new(int(0), rat(1, 5)));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(Sqrt5Number::alpha().to_string(), "1/2 + 1/2*sqrt5");
        assert_eq!(Sqrt5Number::delta().to_string(), "-2 - 1*sqrt5");
        let j = serde_json::to_string(&Sqrt5Number::gamma()).unwrap();
        assert_eq!(j, r#"{"a":"-2","b":"1"}"#);
        let back: Sqrt5Number = serde_json::from_str(&j).unwrap();
        assert_eq!(back, Sqrt5Number::gamma());
    }
}
