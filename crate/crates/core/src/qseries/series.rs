//! Truncated series `q^r · Σ cₙ qⁿ` with exact rational coefficients.
//!
//! A nonzero series with offset `r` and `N` retained coefficients is known
//! modulo `q^(r+N)`; that absolute order is its [`precision`](PuiseuxSeries::precision).
//! Arithmetic only ever shrinks the precision.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SeriesError;
use crate::rational::{common_denominator, exact_root, format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    offset: Rational,
    coeffs: Vec<Rational>,
    /// Absolute order `O(q^precision)`. Equals `offset + coeffs.len()` unless the series is zero.
    precision: Rational,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

impl PuiseuxSeries {
    /// Builds `q^offset · Σ coeffs[n] qⁿ`, known modulo `q^(offset + coeffs.len())`.
    pub fn new(offset: Rational, coeffs: Vec<Rational>) -> Self {
        let precision = &offset + Rational::from_integer(BigInt::from(coeffs.len()));
        Self::normalized(offset, coeffs, precision)
    }

    pub fn from_integers(offset: Rational, coeffs: Vec<BigInt>) -> Self {
        Self::new(offset, coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// The zero series known modulo `q^precision`.
    pub fn zero(precision: Rational) -> Self {
        PuiseuxSeries { offset: Rational::zero(), coeffs: Vec::new(), precision }
    }

    /// `1 + O(q^truncation)`.
    pub fn one(truncation: usize) -> Self {
        Self::constant(Rational::one(), truncation)
    }

    pub fn constant(c: Rational, truncation: usize) -> Self {
        Self::monomial(c, Rational::zero(), truncation)
    }

    /// `c·q^exponent + O(q^(exponent + truncation))`.
    pub fn monomial(c: Rational, exponent: Rational, truncation: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); truncation];
        if truncation > 0 {
            coeffs[0] = c;
        }
        Self::new(exponent, coeffs)
    }

    fn normalized(mut offset: Rational, mut coeffs: Vec<Rational>, precision: Rational) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(precision),
            Some(k) => {
                if k > 0 {
                    coeffs.drain(..k);
                    offset += Rational::from_integer(BigInt::from(k));
                }
                PuiseuxSeries { offset, coeffs, precision }
            }
        }
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of retained coefficients.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn precision(&self) -> &Rational {
        &self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Coefficient at relative index `n` (exponent `offset + n`), zero past the end.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `q^exponent`; `None` when the exponent is at or beyond the precision.
    pub fn coeff_at(&self, exponent: &Rational) -> Option<Rational> {
        if exponent >= &self.precision {
            return None;
        }
        if self.is_zero() || exponent < &self.offset {
            return Some(Rational::zero());
        }
        let rel = exponent - &self.offset;
        if !rel.is_integer() {
            return Some(Rational::zero());
        }
        let n = rel.to_integer().to_usize()?;
        Some(self.coeff(n))
    }

    /// Integer exponents `offset + n` paired with coefficients; `None` if the offset is fractional.
    pub fn integer_terms(&self) -> Option<impl Iterator<Item = (i64, &Rational)>> {
        if !self.offset.is_integer() {
            return None;
        }
        let start = self.offset.to_integer().to_i64()?;
        Some(self.coeffs.iter().enumerate().map(move |(n, c)| (start + n as i64, c)))
    }

    /// Keeps at most `n` coefficients.
    pub fn truncate(&self, n: usize) -> Self {
        if n >= self.truncation() {
            return self.clone();
        }
        Self::new(self.offset.clone(), self.coeffs[..n].to_vec())
    }

    /// Drops every term at or beyond `q^precision`.
    pub fn truncate_to_precision(&self, precision: &Rational) -> Self {
        if precision >= &self.precision {
            return self.clone();
        }
        if self.is_zero() {
            return Self::zero(precision.clone());
        }
        let keep = ceil_nonneg(&(precision - &self.offset));
        if keep == 0 {
            return Self::zero(precision.clone());
        }
        self.truncate(keep)
    }

    /// Multiplication by `q^r`.
    pub fn shift(&self, r: &Rational) -> Self {
        if self.is_zero() {
            return Self::zero(&self.precision + r);
        }
        PuiseuxSeries {
            offset: &self.offset + r,
            coeffs: self.coeffs.clone(),
            precision: &self.precision + r,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.precision.clone());
        }
        PuiseuxSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            precision: self.precision.clone(),
        }
    }

    /// The substitution `q → q^d`.
    pub fn substitute_power(&self, d: u32) -> Self {
        let d_rat = Rational::from_integer(BigInt::from(d));
        if self.is_zero() {
            return Self::zero(&self.precision * &d_rat);
        }
        let d = d as usize;
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() * d];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * d] = c.clone();
        }
        Self::new(&self.offset * &d_rat, coeffs)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        let precision = if self.precision < other.precision {
            self.precision.clone()
        } else {
            other.precision.clone()
        };
        if self.is_zero() {
            return Ok(other.truncate_to_precision(&precision));
        }
        if other.is_zero() {
            return Ok(self.truncate_to_precision(&precision));
        }
        let gap = &other.offset - &self.offset;
        if !gap.is_integer() {
            return Err(SeriesError::OffsetMismatch(self.offset.clone(), other.offset.clone()));
        }
        let offset = if gap.is_negative() { other.offset.clone() } else { self.offset.clone() };
        let len = ceil_nonneg(&(&precision - &offset));
        let mut coeffs = vec![Rational::zero(); len];
        for s in [self, other] {
            let start = (&s.offset - &offset).to_integer().to_usize().unwrap_or(0);
            for (n, c) in s.coeffs.iter().enumerate() {
                if start + n >= len {
                    break;
                }
                coeffs[start + n] += c;
            }
        }
        let precision = &offset + Rational::from_integer(BigInt::from(len));
        Ok(Self::normalized(offset, coeffs, precision))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&-other)
    }

    /// Product; the result keeps `min` of the two truncations.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let p = match (self.is_zero(), other.is_zero()) {
                (true, true) => &self.precision + &other.precision,
                (true, false) => &self.precision + &other.offset,
                _ => &other.precision + &self.offset,
            };
            return Self::zero(p);
        }
        let len = self.truncation().min(other.truncation());
        let (a, da) = common_denominator(&self.coeffs[..len]);
        let (b, db) = common_denominator(&other.coeffs[..len]);
        let prod = convolve(&a, &b, len);
        let den = da * db;
        let coeffs = prod.into_iter().map(|c| BigRational::new(c, den.clone())).collect();
        Self::new(&self.offset + &other.offset, coeffs)
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let c0 = self.coeffs[0].clone();
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c / &c0).collect();
        let inv = unit_power_scaled(&unit, &BigInt::from(-1));
        let c0_inv = c0.recip();
        let coeffs = inv.into_iter().map(|c| c * &c0_inv).collect();
        Ok(Self::new(-&self.offset, coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.multiply(&other.inverse()?))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.truncation().max(1)));
        }
        if self.is_zero() {
            if e < 0 {
                return Err(SeriesError::DivisionByZeroSeries);
            }
            return Ok(Self::zero(&self.precision * Rational::from_integer(BigInt::from(e))));
        }
        let c0 = self.coeffs[0].clone();
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c / &c0).collect();
        let powered = unit_power_scaled(&unit, &BigInt::from(e));
        let lead = num_traits::pow::pow(c0.clone(), e.unsigned_abs() as usize);
        let lead = if e < 0 { lead.recip() } else { lead };
        let coeffs = powered.into_iter().map(|c| c * &lead).collect();
        Ok(Self::new(&self.offset * Rational::from_integer(BigInt::from(e)), coeffs))
    }

    /// `s^(p/q)` via the binomial series of the unit part.
    ///
    /// The leading coefficient must have an exact rational `q`-th root.
    pub fn pow_rational(&self, exponent: &Rational) -> Result<Self, SeriesError> {
        if exponent.is_integer() {
            if let Some(e) = exponent.to_integer().to_i64() {
                return self.pow_int(e);
            }
        }
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let c0 = self.coeffs[0].clone();
        let q = exponent.denom().to_u32().ok_or_else(|| {
            SeriesError::NonUnitLeadingCoefficient(c0.clone(), exponent.denom().clone())
        })?;
        let root = exact_root(&c0, q)
            .ok_or_else(|| SeriesError::NonUnitLeadingCoefficient(c0.clone(), exponent.denom().clone()))?;
        let p = exponent.numer().to_i64().ok_or_else(|| {
            SeriesError::NonUnitLeadingCoefficient(c0.clone(), exponent.denom().clone())
        })?;
        let lead = num_traits::pow::pow(root, p.unsigned_abs() as usize);
        let lead = if p < 0 { lead.recip() } else { lead };
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c / &c0).collect();
        let coeffs = unit_power_rational(&unit, exponent).into_iter().map(|c| c * &lead).collect();
        Ok(Self::new(&self.offset * exponent, coeffs))
    }

    /// `q·d/dq`: each term `c·q^m` becomes `m·c·q^m`.
    pub fn q_derivative(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * (&self.offset + Rational::from_integer(BigInt::from(n))))
            .collect();
        Self::normalized(self.offset.clone(), coeffs, self.precision.clone())
    }

    /// `q·d/dq log s = r + q·U'/U` for `s = q^r·U`.
    pub fn q_log_derivative(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let unit = PuiseuxSeries::new(Rational::zero(), self.coeffs.clone());
        let ratio = unit.q_derivative().checked_div(&unit)?;
        let log_deriv = ratio.checked_add(&Self::constant(self.offset.clone(), self.truncation()))?;
        Ok(log_deriv.truncate_to_precision(&Rational::from_integer(BigInt::from(self.truncation()))))
    }

    /// Inverse of [`q_derivative`](Self::q_derivative): `c·qⁿ ↦ (c/n)·qⁿ`.
    pub fn antiderivative_dq_over_q(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if !self.offset.is_integer() {
            return Err(SeriesError::NonIntegerExponent(self.offset.clone()));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            let m = &self.offset + Rational::from_integer(BigInt::from(n));
            if m.is_zero() {
                if !c.is_zero() {
                    return Err(SeriesError::ConstantTermPresent(c.clone()));
                }
                coeffs.push(Rational::zero());
            } else {
                coeffs.push(c / m);
            }
        }
        Ok(Self::normalized(self.offset.clone(), coeffs, self.precision.clone()))
    }

    /// Compares the two series on their common precision.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let diff = match self.checked_sub(other) {
            Ok(d) => d,
            Err(_) => {
                return Some(Mismatch {
                    exponent: format_rational(&self.offset),
                    lhs: format!("offset {}", format_rational(&self.offset)),
                    rhs: format!("offset {}", format_rational(&other.offset)),
                })
            }
        };
        if diff.is_zero() {
            return None;
        }
        let e = diff.offset.clone();
        let show = |s: &Self| s.coeff_at(&e).map(|c| format_rational(&c)).unwrap_or_else(|| "?".into());
        Some(Mismatch { exponent: format_rational(&e), lhs: show(self), rhs: show(other) })
    }

    /// True when both series agree on their common precision and that precision reaches `order`.
    pub fn agrees_to_order(&self, other: &Self, order: i64) -> bool {
        let target = Rational::from_integer(BigInt::from(order));
        self.precision >= target && other.precision >= target && self.first_mismatch(other).is_none()
    }

    /// True when every retained coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

fn ceil_nonneg(r: &Rational) -> usize {
    if r.is_negative() || r.is_zero() {
        0
    } else {
        r.ceil().to_integer().to_usize().unwrap_or(usize::MAX)
    }
}

pub(crate) fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// `unit^e` for a unit series (`unit[0] == 1`) and integer `e`.
///
/// Writing `unit[j] = U_j / D` with a common denominator `D`, the series in
/// `y = q/D` has integer coefficients `U_j·D^(j-1)`, so the power recurrence
/// `n·G_n = Σ ((e+1)j − n)·W_j·G_(n−j)` stays in the integers.
pub(crate) fn unit_power_scaled(unit: &[Rational], e: &BigInt) -> Vec<Rational> {
    let len = unit.len();
    if len == 0 {
        return Vec::new();
    }
    let (ints, den) = common_denominator(unit);
    // `ints[0] == den` because the unit starts with 1.
    let mut weights = vec![BigInt::zero(); len];
    let mut den_pow = BigInt::one();
    for j in 1..len {
        weights[j] = &ints[j] * &den_pow;
        den_pow *= &den;
    }
    let e1 = e + BigInt::one();
    let mut g: Vec<BigInt> = Vec::with_capacity(len);
    g.push(BigInt::one());
    for n in 1..len {
        let mut acc = BigInt::zero();
        let nn = BigInt::from(n);
        for j in 1..=n {
            if weights[j].is_zero() {
                continue;
            }
            let factor = &e1 * BigInt::from(j) - &nn;
            if factor.is_zero() {
                continue;
            }
            acc += factor * &weights[j] * &g[n - j];
        }
        g.push(acc / &nn);
    }
    let mut out = Vec::with_capacity(len);
    let mut scale = BigInt::one();
    for gn in g {
        out.push(BigRational::new(gn, scale.clone()));
        scale *= &den;
    }
    out
}

/// `unit^e` for rational `e` by the same recurrence over the rationals.
fn unit_power_rational(unit: &[Rational], e: &Rational) -> Vec<Rational> {
    let len = unit.len();
    if len == 0 {
        return Vec::new();
    }
    let e1 = e + Rational::one();
    let mut g: Vec<Rational> = Vec::with_capacity(len);
    g.push(Rational::one());
    for n in 1..len {
        let nn = Rational::from_integer(BigInt::from(n));
        let mut acc = Rational::zero();
        for j in 1..=n {
            if unit[j].is_zero() {
                continue;
            }
            let factor = &e1 * Rational::from_integer(BigInt::from(j)) - &nn;
            acc += factor * &unit[j] * &g[n - j];
        }
        g.push(acc / nn);
    }
    g
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        PuiseuxSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision.clone(),
        }
    }
}

impl Neg for PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        -&self
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self.multiply(rhs)
    }
}

impl Mul for PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: PuiseuxSeries) -> PuiseuxSeries {
        self.multiply(&rhs)
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = &self.offset + Rational::from_integer(BigInt::from(n));
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let is_unit = mag.is_one();
            if exp.is_zero() {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !is_unit {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                if exp.is_one() {
                    write!(f, "q")?;
                } else if exp.is_integer() {
                    write!(f, "q^{}", exp)?;
                } else {
                    write!(f, "q^({})", format_rational(&exp))?;
                }
            }
        }
        if first {
            write!(f, "O(q^{})", format_rational(&self.precision))
        } else {
            write!(f, " + O(q^{})", format_rational(&self.precision))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    offset: String,
    coeffs: Vec<String>,
    truncation: usize,
}

impl Serialize for PuiseuxSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            offset: format_rational(&self.offset),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
            truncation: self.truncation(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PuiseuxSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = SeriesJson::deserialize(deserializer)?;
        let offset = parse_rational(&raw.offset).ok_or_else(|| D::Error::custom("bad offset"))?;
        let mut coeffs = raw
            .coeffs
            .iter()
            .map(|c| parse_rational(c).ok_or_else(|| D::Error::custom(format!("bad coefficient {c}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() > raw.truncation {
            return Err(D::Error::custom("more coefficients than the truncation"));
        }
        coeffs.resize(raw.truncation, Rational::zero());
        Ok(PuiseuxSeries::new(offset, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let s = PuiseuxSeries::new(int(0), ints(&[0, 0, 3, 1]));
        assert_eq!(s.offset(), &int(2));
        assert_eq!(s.truncation(), 2);
        assert_eq!(s.precision(), &int(4));
        let z = PuiseuxSeries::new(rat(1, 5), ints(&[0, 0]));
        assert!(z.is_zero());
        assert_eq!(z.offset(), &int(0));
    }

    #[test]
    fn identity_and_inverse() {
        let s = PuiseuxSeries::new(int(1), ints(&[1, -4, 9, -14]));
        assert_eq!(s.multiply(&PuiseuxSeries::one(10)), s);
        let inv = s.inverse().unwrap();
        assert_eq!(s.multiply(&inv), PuiseuxSeries::one(4));
    }

    #[test]
    fn division_by_zero_series() {
        let s = PuiseuxSeries::one(4);
        let z = PuiseuxSeries::zero(int(4));
        assert_eq!(s.checked_div(&z), Err(SeriesError::DivisionByZeroSeries));
        assert_eq!(z.q_log_derivative(), Err(SeriesError::DivisionByZeroSeries));
    }

    #[test]
    fn offset_mismatch_is_rejected() {
        let a = PuiseuxSeries::new(rat(1, 5), ints(&[1, 1]));
        let b = PuiseuxSeries::new(int(0), ints(&[1, 1]));
        assert!(matches!(a.checked_add(&b), Err(SeriesError::OffsetMismatch(_, _))));
    }

    #[test]
    fn binomial_square_root() {
        // (1+q)^(1/2) = 1 + q/2 - q^2/8 + q^3/16 + O(q^4)
        let s = PuiseuxSeries::new(int(0), ints(&[1, 1, 0, 0]));
        let r = s.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(r.coeffs(), &[int(1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
        assert_eq!(s.pow_rational(&int(1)).unwrap(), s);
    }

    #[test]
    fn rational_power_needs_rational_root() {
        let s = PuiseuxSeries::new(int(0), ints(&[2, 1]));
        assert!(matches!(
            s.pow_rational(&rat(1, 2)),
            Err(SeriesError::NonUnitLeadingCoefficient(_, _))
        ));
        let t = PuiseuxSeries::new(int(2), ints(&[4, 4]));
        let r = t.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(r.offset(), &int(1));
        assert_eq!(r.coeffs(), &[int(2), int(1)]);
    }

    #[test]
    fn derivatives() {
        let q = PuiseuxSeries::monomial(int(1), int(1), 5);
        assert_eq!(q.q_log_derivative().unwrap(), PuiseuxSeries::one(5));
        let s = PuiseuxSeries::new(int(1), ints(&[1, -4]));
        assert_eq!(s.q_derivative().coeffs(), &[int(1), int(-8)]);
        assert_eq!(q.antiderivative_dq_over_q().unwrap(), q);
    }

    #[test]
    fn antiderivative_errors() {
        let s = PuiseuxSeries::new(int(0), ints(&[1, 1]));
        assert_eq!(s.antiderivative_dq_over_q(), Err(SeriesError::ConstantTermPresent(int(1))));
        let t = PuiseuxSeries::new(rat(1, 2), ints(&[1]));
        assert!(matches!(t.antiderivative_dq_over_q(), Err(SeriesError::NonIntegerExponent(_))));
        // zero constant term is fine
        let u = PuiseuxSeries::new(int(-1), ints(&[2, 0, 3]));
        let v = u.antiderivative_dq_over_q().unwrap();
        assert_eq!(v.coeffs(), &[int(-2), int(0), int(3)]);
    }

    #[test]
    fn truncation_never_grows() {
        let a = PuiseuxSeries::new(int(0), ints(&[1, 2, 3, 4, 5]));
        let b = PuiseuxSeries::new(int(0), ints(&[1, 1, 1]));
        assert_eq!(a.multiply(&b).truncation(), 3);
        assert_eq!(a.checked_add(&b).unwrap().precision(), &int(3));
        let c = PuiseuxSeries::new(int(2), ints(&[1, 1, 1]));
        let sum = a.checked_add(&c).unwrap();
        assert_eq!(sum.precision(), &int(5));
        assert_eq!(sum.coeffs(), &ints(&[1, 2, 4, 5, 6]));
    }

    #[test]
    fn json_shape() {
        let s = PuiseuxSeries::new(rat(1, 5), vec![int(1), rat(-1, 2)]);
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j, serde_json::json!({"offset": "1/5", "coeffs": ["1", "-1/2"], "truncation": 2}));
        let back: PuiseuxSeries = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display() {
        let s = PuiseuxSeries::new(int(-1), ints(&[-1, 0, -3]));
        assert_eq!(s.to_string(), "-q^-1 - 3*q + O(q^2)");
    }
}
