//! Dense univariate polynomials over ℚ or ℚ(√5), coefficients in ascending degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Sqrt5Number;
use crate::rational::{format_rational, Rational};

/// Exact field scalars usable as polynomial coefficients.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;

    fn div_ref(&self, o: &Self) -> Option<Self> {
        Some(self.mul_ref(&o.try_inv()?))
    }
}

impl Scalar for Rational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Scalar for Sqrt5Number {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_i64(n: i64) -> Self {
        Sqrt5Number::from_int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type Poly5 = Poly<Sqrt5Number>;
pub type PolyQ = Poly<Rational>;

impl<C: Scalar> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// `k − p`.
    pub fn linear_root(p: &C) -> Self {
        Self::new(vec![p.neg_ref(), C::one()])
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut v = vec![C::zero(); degree + 1];
        v[degree] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add_ref(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub_ref(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&C::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead_inv = d.leading()?.try_inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![C::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul_ref(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].sub_ref(&c.mul_ref(dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.try_inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Coefficients of `f(p + t)` in powers of `t`.
    pub fn taylor_shift(&self, p: &C) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = c[j + 1].mul_ref(p);
                c[j] = c[j].add_ref(&add);
            }
        }
        Self::new(c)
    }

    /// Largest `m` with `(k − p)^m` dividing `self`, and the cofactor.
    pub fn split_root(&self, p: &C) -> (u32, Self) {
        let mut m = 0;
        let mut f = self.clone();
        if f.is_zero() {
            return (0, f);
        }
        let lin = Self::linear_root(p);
        loop {
            let (q, r) = f.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return (m, f);
            }
            m += 1;
            f = q;
        }
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl PolyQ {
    pub fn to_poly5(&self) -> Poly5 {
        self.map(|c| Sqrt5Number::from_rational(c.clone()))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl Poly5 {
    /// The rational polynomial when every coefficient is conjugation-fixed.
    pub fn to_rational(&self) -> Option<PolyQ> {
        if self.coeffs.iter().all(|c| c.is_rational()) {
            Some(self.map(|c| c.a.clone()))
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        self.map(|c| c.conjugate())
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match i {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}*k")?,
                _ => write!(f, "{cs}*k^{i}")?,
            }
        }
        Ok(())
    }
}

/// Formats a rational polynomial with signs folded in, e.g. `1 - 4*k - k^2`.
pub fn format_rational_poly(p: &PolyQ) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && i > 0;
        if !unit {
            s.push_str(&format_rational(&mag));
            if i > 0 {
                s.push('*');
            }
        }
        match i {
            0 => {}
            1 => s.push('k'),
            _ => s.push_str(&format!("k^{i}")),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn division_and_gcd() {
        let a = PolyQ::from_i64(&[-1, 0, 1]); // k² − 1
        let b = PolyQ::from_i64(&[1, 1]); // k + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, PolyQ::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(PolyQ::gcd(&a, &PolyQ::from_i64(&[2, 2])), b);
    }

    #[test]
    fn shift_and_roots() {
        // (k−1)²(k+2) at p = 1
        let f = PolyQ::from_i64(&[-1, 1]).pow(2).mul(&PolyQ::from_i64(&[2, 1]));
        let (m, rest) = f.split_root(&int(1));
        assert_eq!(m, 2);
        assert_eq!(rest, PolyQ::from_i64(&[2, 1]));
        let g = f.taylor_shift(&int(1));
        assert_eq!(g, PolyQ::from_i64(&[0, 0, 3, 1]));
    }

    #[test]
    fn golden_quadratics_split() {
        let q1 = Poly5::from_i64(&[-1, -1, 1]);
        let prod = Poly5::linear_root(&Sqrt5Number::alpha()).mul(&Poly5::linear_root(&Sqrt5Number::beta()));
        assert_eq!(q1, prod);
        let q2 = Poly5::from_i64(&[-1, 4, 1]);
        let prod = Poly5::linear_root(&Sqrt5Number::gamma()).mul(&Poly5::linear_root(&Sqrt5Number::delta()));
        assert_eq!(q2, prod);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational_poly(&PolyQ::from_i64(&[1, -4, -1])), "1 - 4*k - k^2");
        assert_eq!(format_rational_poly(&PolyQ::from_i64(&[0, 2, 1])), "2*k + k^2");
    }
}
