//! Level-10 identities: the parametrizations by `k`, the golden table rows and families,
//! and the four displayed expansions found by the search.

use num_bigint::BigInt;

use super::report::{compare_series, order_after, CheckReport};
use crate::field5::{level10_integrand, RationalFunction5};
use crate::kernel10::{
    compose_rational_with_k, decide_rationality, family_exponents, k_series, rp_identity_series, tables,
    y10_eta_quotient, y10_series, EtaExponents, FamilyLabel,
};
use crate::qseries::{GeneralizedEtaProduct, PuiseuxSeries};
use crate::rational::{parse_rational, Rational};
use crate::search::required_multiplier;

/// `η_d²⁴ = y₁₀⁶·R_d(k)` for `d = 1, 2, 5, 10`, `y₁₀` as an eta quotient, and `k = r(q)·r(q²)²`.
pub fn rp_checks(n_terms: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (i, d) in [1, 2, 5, 10].into_iter().enumerate() {
        let name = format!("rp.eta{d}");
        out.push(match rp_identity_series(i + 1, n_terms + 2) {
            Ok((l, r)) => compare_series(name, &l, &r, &order_after(l.offset(), n_terms)),
            Err(e) => CheckReport::fail(name, e.to_string()),
        });
    }
    let y = y10_eta_quotient().series(n_terms + 2);
    out.push(match y10_series(n_terms + 2) {
        Ok(ld) => compare_series("rp.y10", &ld, &y, &order_after(y.offset(), n_terms)),
        Err(e) => CheckReport::fail("rp.y10", e.to_string()),
    });
    let r = GeneralizedEtaProduct::rogers_ramanujan().series(n_terms + 2);
    let r2 = r.substitute_power(2);
    let k = k_series(n_terms + 2);
    out.push(compare_series("rp.k-product", &r.multiply(&r2).multiply(&r2), &k, &order_after(k.offset(), n_terms)));
    out
}

/// `q·d/dq g(k(q))` against the eta quotient with exponents `e`.
fn derivative_identity(name: String, e: &EtaExponents, g: &RationalFunction5, n_terms: usize) -> CheckReport {
    let u = e.quotient().series(n_terms + 2);
    // g(k) may carry a constant term ahead of q^{j0}
    let extra = e.leading_exponent().max(0) as usize;
    match compose_rational_with_k(g, n_terms + 2 + extra) {
        Ok(v) => compare_series(name, &v.q_derivative(), &u, &order_after(u.offset(), n_terms)),
        Err(err) => CheckReport::fail(name, err.to_string()),
    }
}

/// The twelve sporadic rows: `g′ = integrand` exactly and the `q`-series identity.
pub fn sporadic_checks(n_terms: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for row in tables::sporadic_rows() {
        let g = row.g();
        let exact = g.derivative_equals(&level10_integrand(&row.a));
        out.push(CheckReport::from_bool(format!("table8.{}.exact", row.label), exact, "g' differs from the integrand"));
        out.push(derivative_identity(format!("table8.{}.series", row.label), &row.e, &g, n_terms));
    }
    out
}

/// Members `m ≤ m_max` of one family: rational by the decider and the `q`-series identity for its `g`.
pub fn family_checks(family: u8, m_max: u32, n_terms: usize) -> Vec<CheckReport> {
    if let Err(e) = FamilyLabel::new(family, 0) {
        return vec![CheckReport::fail(format!("table9.{family}"), e.to_string())];
    }
    (0..=m_max)
        .map(|m| {
            let label = FamilyLabel { family, m };
            let (e, a) = family_exponents(&label);
            let name = format!("table9.{}", label.label());
            match decide_rationality(&a).g {
                Some(g) => derivative_identity(name, &e, &g, n_terms),
                None => CheckReport::fail(name, "decider reports a logarithmic term"),
            }
        })
        .collect()
}

/// Displayed prefixes of `v` with `u = q·d/dq v`, with the expected minimal multiplier.
const DISPLAYED: [(&str, [i64; 4], i64, &[&str], u64); 4] = [
    ("e10a", [8, -7, 0, 3], 1, &["1", "-4", "9", "-14", "21", "-36", "58", "-84"], 1),
    ("e10b", [0, 3, 8, -7], -1, &["-1", "0", "-3", "0", "0", "-2", "1", "4", "0", "0", "3", "-4", "-8"], 1),
    ("e10c", [3, 0, -7, 8], 2, &["1/2", "-1", "0", "1", "0", "1", "-7/2", "0", "7/2", "0", "3", "-10"], 2),
    ("e10d", [-7, 8, 3, 0], 1, &["1", "7/2", "9", "21", "46", "94", "183", "687/2"], 2),
];

/// The four expansions and their integrality: `b·v` has integer coefficients exactly for the stated `b`.
pub fn displayed_expansion_checks(n_terms: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (label, e, start, coeffs, b) in DISPLAYED {
        let e = EtaExponents::from(e);
        let u = e.quotient().series(coeffs.len() + 2);
        let name = format!("tables89.{label}.prefix");
        match u.antiderivative_dq_over_q() {
            Ok(v) => {
                let expected = PuiseuxSeries::new(
                    Rational::from_integer(BigInt::from(start)),
                    coeffs.iter().map(|c| parse_rational(c).expect("displayed coefficient")).collect(),
                );
                out.push(compare_series(name, &v, &expected, expected.precision()));
            }
            Err(err) => out.push(CheckReport::fail(name, err.to_string())),
        }
        let got = required_multiplier(&e, None, n_terms);
        out.push(CheckReport::from_bool(
            format!("tables89.{label}.multiplier"),
            got == Some(BigInt::from(b)),
            format!("minimal multiplier {got:?}, expected {b}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::all_pass;

    #[test]
    fn rp_suite_short() {
        let r = rp_checks(50);
        assert_eq!(r.len(), 6);
        assert!(all_pass(&r), "{r:?}");
    }

    #[test]
    fn golden_rows_and_families_short() {
        let r = sporadic_checks(40);
        assert!(all_pass(&r), "{:?}", r.iter().find(|c| !c.passed()));
        let r: Vec<_> = (1..=4).flat_map(|f| family_checks(f, 3, 40)).collect();
        assert!(all_pass(&r), "{:?}", r.iter().find(|c| !c.passed()));
    }

    #[test]
    fn displayed_expansions() {
        let r = displayed_expansion_checks(300);
        assert!(all_pass(&r), "{:?}", r.iter().find(|c| !c.passed()));
    }

    #[test]
    fn wrong_g_fails() {
        let row = tables::sporadic_row("3.0").unwrap();
        let k = crate::field5::PolyQ::from_i64(&[0, 1]);
        let g = row.g().add(&RationalFunction5::from_rational_parts(&k, &crate::field5::PolyQ::one()).unwrap());
        assert!(!derivative_identity("x".into(), &row.e, &g, 20).passed());
    }
}
