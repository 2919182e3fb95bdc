//! Rationality decider for `∫ k^{a₀−1}(1−k²)^{a₁}(1+k−k²)^{a₂}(1−4k−k²)^{a₃} dk`.
//!
//! Over ℚ(√5) the integrand is `±Π (k − r)^{n_r}` with `r ∈ {0, ±1, α, β, γ, δ}`.
//! At a pole `p` of order `m` the residue is
//! `C·Π_{r≠p}(p−r)^{n_r} · [t^{m−1}] Π_{r≠p}(1 + t/(p−r))^{n_r}`,
//! so only a short product of binomial series is needed. The antiderivative is
//! rational iff every residue vanishes.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::modp::Fp;
use super::ParamExponents;
use crate::field5::{
    integrate_partial_fractions, level10_integrand, level10_poles, RationalFunction5, Scalar, Sqrt5Number,
};

/// `(label, pole, order, residue)` for each pole actually present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueEntry {
    pub pole: Sqrt5Number,
    pub order: u32,
    pub residue: Sqrt5Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityCertificate {
    pub a: ParamExponents,
    pub rational: bool,
    pub residues: BTreeMap<String, ResidueEntry>,
    /// Antiderivative with zero constant of integration, present iff `rational`.
    #[serde(serialize_with = "serialize_g")]
    pub g: Option<RationalFunction5>,
}

fn coefficient_strings(p: &crate::field5::Poly5) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn serialize_g<S: Serializer>(g: &Option<RationalFunction5>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct G {
        num: Vec<String>,
        den: Vec<String>,
    }
    g.as_ref()
        .map(|g| G { num: coefficient_strings(g.num()), den: coefficient_strings(g.den()) })
        .serialize(s)
}

/// Exponent of each root in the order `0, 1, −1, α, β, γ, δ`, and the sign in front.
fn root_exponents(a: &ParamExponents) -> ([i64; 7], bool) {
    let n = [a.a0 - 1, a.a1, a.a1, a.a2, a.a2, a.a3, a.a3];
    // 1−k² = −(k−1)(k+1), 1+k−k² = −(k−α)(k−β), 1−4k−k² = −(k−γ)(k−δ)
    let negative = (a.a1 + a.a2 + a.a3).rem_euclid(2) == 1;
    (n, negative)
}

/// `[t^{m−1}] Π_{j≠i}(1 + t/(r_i − r_j))^{n_j}`; `None` if some difference is not invertible.
fn local_coefficient<C: Scalar>(roots: &[C; 7], n: &[i64; 7], i: usize, m: usize) -> Option<C> {
    let mut series = vec![C::zero(); m];
    series[0] = C::one();
    for j in 0..7 {
        if j == i || n[j] == 0 {
            continue;
        }
        let inv_diff = roots[i].sub_ref(&roots[j]).try_inv()?;
        // binomial series of (1 + x)^{n_j} with x = t·inv_diff
        let mut factor = Vec::with_capacity(m);
        let mut c = C::one();
        let mut xp = C::one();
        factor.push(C::one());
        let nj = n[j];
        for l in 1..m {
            c = c.mul_ref(&C::from_i64(nj - l as i64 + 1)).div_ref(&C::from_i64(l as i64))?;
            xp = xp.mul_ref(&inv_diff);
            factor.push(c.mul_ref(&xp));
        }
        let mut next = vec![C::zero(); m];
        for (u, su) in series.iter().enumerate() {
            if su.is_zero() {
                continue;
            }
            for (v, fv) in factor.iter().enumerate().take(m - u) {
                next[u + v] = next[u + v].add_ref(&su.mul_ref(fv));
            }
        }
        series = next;
    }
    series.pop()
}

/// `C·Π_{j≠i}(r_i − r_j)^{n_j}`.
fn local_prefactor(roots: &[Sqrt5Number; 7], n: &[i64; 7], negative: bool, i: usize) -> Sqrt5Number {
    let mut pre = if negative { -Sqrt5Number::one() } else { Sqrt5Number::one() };
    for j in 0..7 {
        if j == i || n[j] == 0 {
            continue;
        }
        let d = &roots[i] - &roots[j];
        pre = &pre * &d.powi(n[j]).expect("distinct roots");
    }
    pre
}

fn exact_roots() -> [Sqrt5Number; 7] {
    let v: Vec<Sqrt5Number> = level10_poles().into_iter().map(|(_, p)| p).collect();
    v.try_into().expect("seven poles")
}

/// Exact residues at every finite pole, keyed by pole label.
pub fn level10_residues(a: &ParamExponents) -> BTreeMap<String, ResidueEntry> {
    let roots = exact_roots();
    let (n, negative) = root_exponents(a);
    let mut out = BTreeMap::new();
    for (i, (label, _)) in level10_poles().into_iter().enumerate() {
        if n[i] >= 0 {
            continue;
        }
        let m = (-n[i]) as usize;
        let coeff = local_coefficient(&roots, &n, i, m).expect("distinct roots");
        let residue = if coeff.is_zero() { coeff } else { &local_prefactor(&roots, &n, negative, i) * &coeff };
        out.insert(label.to_string(), ResidueEntry { pole: roots[i].clone(), order: m as u32, residue });
    }
    out
}

/// Decides rationality exactly and, when rational, constructs `g` with `g′ = integrand`.
pub fn decide_rationality(a: &ParamExponents) -> RationalityCertificate {
    let residues = level10_residues(a);
    let rational = residues.values().all(|r| r.residue.is_zero());
    let g = if rational {
        let f = level10_integrand(a);
        let poles: Vec<Sqrt5Number> = level10_poles().into_iter().map(|(_, p)| p).collect();
        let pf = f.partial_fractions(&poles).expect("level-10 denominators split");
        Some(integrate_partial_fractions(&pf).expect("no simple-pole terms"))
    } else {
        None
    };
    RationalityCertificate { a: *a, rational, residues, g }
}

/// Outcome of the modular screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Screen {
    /// Some residue is nonzero modulo the prime, hence nonzero.
    NotRational,
    /// Every residue vanishes modulo the prime; an exact check is still required.
    Inconclusive,
}

/// Residues reduced modulo the prime `2⁶¹ − 1` (in which 5 is a square).
pub fn modular_screen(a: &ParamExponents) -> Screen {
    let roots = Fp::level10_roots();
    let (n, _) = root_exponents(a);
    for i in 0..7 {
        if n[i] >= 0 {
            continue;
        }
        // conjugate poles have conjugate residues
        if i == 4 || i == 6 {
            continue;
        }
        match local_coefficient(&roots, &n, i, (-n[i]) as usize) {
            Some(c) if !c.is_zero() => return Screen::NotRational,
            _ => {}
        }
    }
    Screen::Inconclusive
}

/// Rationality without building the certificate: modular screen, then exact residues.
pub fn is_rational(a: &ParamExponents) -> bool {
    if modular_screen(a) == Screen::NotRational {
        return false;
    }
    let roots = exact_roots();
    let (n, _) = root_exponents(a);
    (0..7).filter(|&i| n[i] < 0 && i != 4 && i != 6).all(|i| {
        local_coefficient(&roots, &n, i, (-n[i]) as usize).expect("distinct roots").is_zero()
    })
}
