//! Rational functions over ℚ(√5): residues, partial fractions, local expansions.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{FieldError, Poly5, PolyQ, Scalar, Sqrt5Number};
use crate::rational::rat;

/// `num/den` with `gcd(num, den) = 1` and a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction5 {
    num: Poly5,
    den: Poly5,
}

/// First `n` coefficients of `a/b` as power series in `t`; `b₀` must be nonzero.
pub fn series_divide<C: Scalar>(a: &[C], b: &[C], n: usize) -> Vec<C> {
    let b0_inv = b[0].try_inv().expect("series divisor with nonzero constant term");
    let mut out: Vec<C> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = a.get(i).cloned().unwrap_or_else(C::zero);
        for j in 1..=i.min(b.len().saturating_sub(1)) {
            if !b[j].is_zero() {
                acc = acc.sub_ref(&b[j].mul_ref(&out[i - j]));
            }
        }
        out.push(acc.mul_ref(&b0_inv));
    }
    out
}

impl RationalFunction5 {
    pub fn new(num: Poly5, den: Poly5) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let g = Poly5::gcd(&num, &den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).expect("gcd").0, den.div_rem(&g).expect("gcd").0)
        } else {
            (num, den)
        };
        Ok(Self::new_coprime(num, den))
    }

    /// Skips the gcd; callers guarantee `num` and `den` share no root.
    pub(crate) fn new_coprime(num: Poly5, den: Poly5) -> Self {
        let lead = den.leading().expect("nonzero denominator").inv().expect("nonzero");
        if num.is_zero() {
            return RationalFunction5 { num, den: Poly5::one() };
        }
        RationalFunction5 { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: Poly5) -> Self {
        RationalFunction5 { num: p, den: Poly5::one() }
    }

    pub fn from_rational_parts(num: &PolyQ, den: &PolyQ) -> Result<Self, FieldError> {
        Self::new(num.to_poly5(), den.to_poly5())
    }

    pub fn num(&self) -> &Poly5 {
        &self.num
    }

    pub fn den(&self) -> &Poly5 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Both parts over ℚ when every coefficient is conjugation-fixed.
    pub fn to_rational(&self) -> Option<(PolyQ, PolyQ)> {
        Some((self.num.to_rational()?, self.den.to_rational()?))
    }

    pub fn conjugate(&self) -> Self {
        RationalFunction5 { num: self.num.conjugate(), den: self.den.conjugate() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::new(num, self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction5 { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn div(&self, o: &Self) -> Result<Self, FieldError> {
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn derivative(&self) -> Self {
        let num = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(num, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// `d/dk self == f`, checked by cross-multiplication without reducing.
    pub fn derivative_equals(&self, f: &Self) -> bool {
        let num = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        num.mul(&f.den) == f.num.mul(&self.den).mul(&self.den)
    }

    pub fn eval(&self, x: &Sqrt5Number) -> Result<Sqrt5Number, FieldError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(FieldError::PoleAtExpansionPoint(x.clone()));
        }
        self.num.eval(x).checked_div(&d)
    }

    pub fn pole_order(&self, p: &Sqrt5Number) -> u32 {
        self.den.split_root(p).0
    }

    /// First `order + 1` coefficients of `f(p + t)`.
    pub fn taylor_at_point(&self, p: &Sqrt5Number, order: usize) -> Result<Vec<Sqrt5Number>, FieldError> {
        if self.den.eval(p).is_zero() {
            return Err(FieldError::PoleAtExpansionPoint(p.clone()));
        }
        let n = self.num.taylor_shift(p);
        let d = self.den.taylor_shift(p);
        Ok(series_divide(n.coeffs(), d.coeffs(), order + 1))
    }

    /// Laurent coefficients at `p` for `(k−p)^{−m} … (k−p)^{−1}` (in that order), `m` the pole order.
    pub fn principal_part(&self, p: &Sqrt5Number) -> Vec<Sqrt5Number> {
        let (m, rest) = self.den.split_root(p);
        if m == 0 {
            return Vec::new();
        }
        let n = self.num.taylor_shift(p);
        let d = rest.taylor_shift(p);
        series_divide(n.coeffs(), d.coeffs(), m as usize)
    }

    /// Coefficient of `(k − p)^{−1}` in the expansion at `p`; zero when `p` is not a pole.
    pub fn residue_at(&self, p: &Sqrt5Number) -> Sqrt5Number {
        self.principal_part(p).pop().unwrap_or_else(Sqrt5Number::zero)
    }

    /// Minus the coefficient of `k^{−1}` in the expansion at infinity.
    pub fn residue_at_infinity(&self) -> Sqrt5Number {
        let (_, r) = self.num.div_rem(&self.den).expect("nonzero denominator");
        match (r.degree(), self.den.degree()) {
            (Some(dr), Some(dd)) if dd == dr + 1 => {
                -(r.leading().expect("nonzero").checked_div(self.den.leading().expect("nonzero")).expect("nonzero"))
            }
            _ => Sqrt5Number::zero(),
        }
    }

    /// Decomposes over the given candidate poles.
    pub fn partial_fractions(&self, poles: &[Sqrt5Number]) -> Result<PartialFractionForm, FieldError> {
        let mut rest = self.den.clone();
        let mut terms = Vec::new();
        for p in poles {
            let (m, cofactor) = rest.split_root(p);
            if m == 0 {
                continue;
            }
            rest = cofactor;
            let principal = self.principal_part(p);
            for (i, c) in principal.into_iter().enumerate() {
                let order = m - i as u32;
                if !c.is_zero() {
                    terms.push(PoleTerm { pole: p.clone(), order, coefficient: c });
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            return Err(FieldError::UnsplitDenominator(rest.to_string()));
        }
        let (polynomial, _) = self.num.div_rem(&self.den).expect("nonzero denominator");
        Ok(PartialFractionForm { polynomial, terms })
    }
}

impl fmt::Display for RationalFunction5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleTerm {
    pub pole: Sqrt5Number,
    pub order: u32,
    pub coefficient: Sqrt5Number,
}

/// `polynomial + Σ coefficient/(k − pole)^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionForm {
    pub polynomial: Poly5,
    pub terms: Vec<PoleTerm>,
}

/// Largest order per pole among terms with a nonzero coefficient, in first-seen order.
fn max_orders(terms: &[PoleTerm]) -> Vec<(Sqrt5Number, u32)> {
    let mut out: Vec<(Sqrt5Number, u32)> = Vec::new();
    for t in terms.iter().filter(|t| !t.coefficient.is_zero()) {
        match out.iter_mut().find(|(p, _)| *p == t.pole) {
            Some(entry) => entry.1 = entry.1.max(t.order),
            None => out.push((t.pole.clone(), t.order)),
        }
    }
    out
}

/// `polynomial + Σ c·(k − p)^{−j}` over the common denominator `Π (k − p)^{max order}`.
///
/// The top-order term at each pole is nonzero, so the assembled fraction is already reduced.
fn assemble(polynomial: &Poly5, terms: &[(Sqrt5Number, u32, Sqrt5Number)], orders: &[(Sqrt5Number, u32)]) -> RationalFunction5 {
    let full: Vec<Poly5> = orders.iter().map(|(p, m)| Poly5::linear_root(p).pow(*m)).collect();
    let den = full.iter().fold(Poly5::one(), |acc, f| acc.mul(f));
    let mut num = polynomial.mul(&den);
    for (i, (p, m)) in orders.iter().enumerate() {
        let mut by_order = vec![Sqrt5Number::zero(); *m as usize + 1];
        for (q, j, c) in terms {
            if q == p {
                debug_assert!(*j >= 1 && j <= m);
                by_order[*j as usize] = &by_order[*j as usize] + c;
            }
        }
        // Σ_j c_j (k − p)^{m−j} by Horner in (k − p)
        let lin = Poly5::linear_root(p);
        let mut local = Poly5::zero();
        for c in &by_order[1..] {
            local = local.mul(&lin).add(&Poly5::constant(c.clone()));
        }
        if local.is_zero() {
            continue;
        }
        let others = full.iter().enumerate().filter(|(j, _)| *j != i).fold(Poly5::one(), |acc, (_, f)| acc.mul(f));
        num = num.add(&local.mul(&others));
    }
    RationalFunction5::new_coprime(num, den)
}

impl PartialFractionForm {
    pub fn reassemble(&self) -> RationalFunction5 {
        let orders = max_orders(&self.terms);
        let terms: Vec<_> = self.terms.iter().map(|t| (t.pole.clone(), t.order, t.coefficient.clone())).collect();
        assemble(&self.polynomial, &terms, &orders)
    }
}

/// Termwise antiderivative with zero constant of integration.
pub fn integrate_partial_fractions(pf: &PartialFractionForm) -> Result<RationalFunction5, FieldError> {
    if let Some(t) = pf.terms.iter().find(|t| t.order == 1 && !t.coefficient.is_zero()) {
        return Err(FieldError::LogTermPresent(t.pole.clone()));
    }
    let integrated: Vec<Sqrt5Number> = std::iter::once(Sqrt5Number::zero())
        .chain(pf.polynomial.coeffs().iter().enumerate().map(|(i, c)| c.scale(&rat(1, i as i64 + 1))))
        .collect();
    // a/(k−p)^j  ↦  −a/((j−1)(k−p)^{j−1})
    let terms: Vec<_> = pf
        .terms
        .iter()
        .filter(|t| !t.coefficient.is_zero())
        .map(|t| (t.pole.clone(), t.order - 1, t.coefficient.scale(&rat(-1, t.order as i64 - 1))))
        .collect();
    let orders: Vec<_> = max_orders(&pf.terms).into_iter().map(|(p, m)| (p, m - 1)).filter(|(_, m)| *m > 0).collect();
    Ok(assemble(&Poly5::new(integrated), &terms, &orders))
}

impl RationalFunction5 {
    pub fn one() -> Self {
        Self::from_poly(Poly5::one())
    }

    pub fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num == Poly5::constant(Sqrt5Number::one())
    }
}
