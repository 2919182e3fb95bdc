use etaforge::field5::level10_integrand;
use etaforge::kernel10::{decide_rationality, family_exponents, tables, FamilyLabel};

#[test]
fn golden_rows_and_families_are_rational_with_rational_g() {
    let mut rows: Vec<_> = tables::sporadic_rows().iter().map(|r| (r.label.clone(), r.a)).collect();
    for f in 1..=4 {
        for m in 0..=20 {
            let label = FamilyLabel::new(f, m).unwrap();
            rows.push((label.label(), family_exponents(&label).1));
        }
    }
    for (label, a) in rows {
        let cert = decide_rationality(&a);
        assert!(cert.rational, "{label}");
        let g = cert.g.expect("certificate carries g");
        assert!(g.to_rational().is_some(), "{label}: g is not conjugation-fixed");
        assert!(g.derivative_equals(&level10_integrand(&a)), "{label}");
    }
}

#[test]
fn sporadic_g_column_matches_certificate_up_to_a_constant() {
    for row in tables::sporadic_rows() {
        let g = decide_rationality(&row.a).g.unwrap();
        let diff = g.sub(&row.g());
        assert!(diff.derivative().is_zero(), "{}", row.label);
    }
}
