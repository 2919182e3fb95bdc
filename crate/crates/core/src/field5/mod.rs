//! Exact arithmetic in ℚ(√5), polynomials and rational functions over it, and the
//! residue calculus for the level-10 integrands.

mod number;
mod poly;
mod ratfunc;

use serde::Serialize;
use thiserror::Error;

use crate::kernel10::ParamExponents;

pub use number::Sqrt5Number;
pub use poly::{format_rational_poly, Poly, Poly5, PolyQ, Scalar};
pub use ratfunc::{integrate_partial_fractions, series_divide, PartialFractionForm, PoleTerm, RationalFunction5};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator factor {0} does not split over the candidate poles")]
    UnsplitDenominator(String),
    #[error("nonzero simple-pole coefficient at {0}: the antiderivative has a logarithm")]
    LogTermPresent(Sqrt5Number),
    #[error("expansion point {0} is a pole")]
    PoleAtExpansionPoint(Sqrt5Number),
}

/// The finite poles of every level-10 integrand: `0, 1, −1, α, β, γ, δ`.
pub fn level10_poles() -> Vec<(&'static str, Sqrt5Number)> {
    vec![
        ("0", Sqrt5Number::from_int(0)),
        ("1", Sqrt5Number::from_int(1)),
        ("-1", Sqrt5Number::from_int(-1)),
        ("alpha", Sqrt5Number::alpha()),
        ("beta", Sqrt5Number::beta()),
        ("gamma", Sqrt5Number::gamma()),
        ("delta", Sqrt5Number::delta()),
    ]
}

/// Pole orders of `k^{a₀−1}(1−k²)^{a₁}(1+k−k²)^{a₂}(1−4k−k²)^{a₃}` in the order of
/// [`level10_poles`], zero entries included.
pub fn level10_pole_orders(a: &ParamExponents) -> [u32; 7] {
    let neg = |x: i64| (-x).max(0) as u32;
    let at0 = (1 - a.a0).max(0) as u32;
    [at0, neg(a.a1), neg(a.a1), neg(a.a2), neg(a.a2), neg(a.a3), neg(a.a3)]
}

/// The poles actually present, with their orders.
pub fn factor_level10_denominator(a: &ParamExponents) -> Vec<(Sqrt5Number, u32)> {
    level10_poles()
        .into_iter()
        .zip(level10_pole_orders(a))
        .filter(|(_, m)| *m > 0)
        .map(|((_, p), m)| (p, m))
        .collect()
}

/// `k^{a₀−1}(1−k²)^{a₁}(1+k−k²)^{a₂}(1−4k−k²)^{a₃}` as a reduced rational function.
pub fn level10_integrand(a: &ParamExponents) -> RationalFunction5 {
    let factors: [(PolyQ, i64); 4] = [
        (PolyQ::from_i64(&[0, 1]), a.a0 - 1),
        (PolyQ::from_i64(&[1, 0, -1]), a.a1),
        (PolyQ::from_i64(&[1, 1, -1]), a.a2),
        (PolyQ::from_i64(&[1, -4, -1]), a.a3),
    ];
    let mut num = PolyQ::one();
    let mut den = PolyQ::one();
    for (p, e) in &factors {
        let pw = p.pow(e.unsigned_abs() as u32);
        if *e >= 0 {
            num = num.mul(&pw);
        } else {
            den = den.mul(&pw);
        }
    }
    // The four factors have pairwise distinct roots, so num and den are coprime.
    RationalFunction5::new_coprime(num.to_poly5(), den.to_poly5())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleEntry {
    pub label: String,
    pub pole: Sqrt5Number,
    pub order: u32,
}

/// Simple-pole coefficients at each candidate pole; rational iff all vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueCertificate {
    pub poles: Vec<PoleEntry>,
    pub residues: Vec<Sqrt5Number>,
    pub rational: bool,
}

impl ResidueCertificate {
    pub fn build(f: &RationalFunction5, poles: &[(&str, Sqrt5Number)]) -> Self {
        let mut entries = Vec::new();
        let mut residues = Vec::new();
        for (label, p) in poles {
            let order = f.pole_order(p);
            if order == 0 {
                continue;
            }
            entries.push(PoleEntry { label: label.to_string(), pole: p.clone(), order });
            residues.push(f.residue_at(p));
        }
        let rational = residues.iter().all(num_traits::Zero::is_zero);
        ResidueCertificate { poles: entries, residues, rational }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pa(a1: i64, a2: i64, a3: i64) -> ParamExponents {
        ParamExponents::from_triple(a1, a2, a3)
    }

    #[test]
    fn denominator_factorization_examples() {
        assert_eq!(factor_level10_denominator(&pa(0, 0, 0)), vec![(Sqrt5Number::from_int(0), 1)]);
        assert_eq!(
            factor_level10_denominator(&pa(0, -2, 1)),
            vec![(Sqrt5Number::alpha(), 2), (Sqrt5Number::beta(), 2)]
        );
        assert_eq!(factor_level10_denominator(&pa(1, 0, 0)), vec![(Sqrt5Number::from_int(0), 2)]);
    }

    #[test]
    fn integrand_pole_orders_match_factorization() {
        for (a1, a2, a3) in [(0, -2, 1), (3, 1, -5), (-4, 1, 2), (2, 2, -4), (0, 0, 0)] {
            let a = pa(a1, a2, a3);
            let f = level10_integrand(&a);
            for (p, m) in factor_level10_denominator(&a) {
                assert_eq!(f.pole_order(&p), m);
            }
        }
    }

    #[test]
    fn certificates() {
        let c = ResidueCertificate::build(&level10_integrand(&pa(0, 0, 0)), &level10_poles());
        assert!(!c.rational);
        assert_eq!(c.residues, vec![Sqrt5Number::from_int(1)]);
        let c = ResidueCertificate::build(&level10_integrand(&pa(0, -2, 1)), &level10_poles());
        assert!(c.rational);
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(j["rational"], serde_json::json!(true));
        assert_eq!(j["poles"][0]["label"], serde_json::json!("alpha"));
    }
}
