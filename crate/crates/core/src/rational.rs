//! Small helpers around `BigRational`, the coefficient type used everywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    BigRational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators together with the scaled integer numerators.
pub fn common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for v in values {
        if !v.denom().is_one() {
            den = den.lcm(v.denom());
        }
    }
    let ints = values
        .iter()
        .map(|v| {
            if den.is_one() {
                v.numer().clone()
            } else {
                v.numer() * (&den / v.denom())
            }
        })
        .collect();
    (ints, den)
}

/// Exact `n`-th root of a rational when one exists (sign allowed for odd `n`).
pub fn exact_root(r: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let root_int = |x: &BigInt| -> Option<BigInt> {
        let mag = x.abs();
        let cand = mag.nth_root(n);
        if num_traits::pow(cand.clone(), n as usize) == mag {
            Some(if x.is_negative() { -cand } else { cand })
        } else {
            None
        }
    };
    Some(BigRational::new(root_int(r.numer())?, root_int(r.denom())?))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-3", "7/2", "-15/4"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(exact_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(exact_root(&rat(2, 1), 2), None);
        assert_eq!(exact_root(&rat(-4, 1), 2), None);
    }

    #[test]
    fn common_denominators() {
        let (ints, den) = common_denominator(&[rat(1, 2), rat(1, 3), int(2)]);
        assert_eq!(den, BigInt::from(6));
        assert_eq!(ints, vec![BigInt::from(3), BigInt::from(2), BigInt::from(12)]);
    }
}
