//! The two searches: eta exponents whose quotient is `q·d/dq` of an integer series
//! (up to a multiplier `b`), and integrand exponents with rational `k`-integrals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel10::{a_to_e, e_to_a, is_rational, tables, EtaExponents, ParamExponents};

/// Default truncation for searches.
pub const DEFAULT_TRUNCATION: usize = 500;
/// Truncation used with `--deep`.
pub const DEEP_TRUNCATION: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no divisor of {bound} passes for {e} at truncation {truncation}")]
    NoPassingMultiplier { e: EtaExponents, bound: u64, truncation: usize },
    #[error("exponents {0} are not admissible")]
    NotAdmissible(EtaExponents),
}

/// Result of checking `j | b·c(j)` for the exponents `j < N` of `b·u(q) = Σ c(j) qʲ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityOutcome {
    pub pass: bool,
    /// First exponent at which the test failed.
    pub failing_exponent: Option<i64>,
    /// The failure happened at a prime exponent coprime to `b`.
    pub failed_at_coprime_prime: bool,
    /// Prime exponents coprime to `b` that were checked and passed.
    pub coprime_primes_checked: usize,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Walks the coefficients of `u(q)` for exponents below `n`, calling `visit(j, c)` until it
/// returns `false`. Returns the exponent at which the walk stopped, if any.
fn walk_coefficients<F: FnMut(i64, &BigInt) -> bool>(e: &EtaExponents, n: usize, mut visit: F) -> Option<i64> {
    let j0 = e.leading_exponent();
    let mut stream = e.quotient().stream();
    let mut j = j0;
    while j < n as i64 {
        let c = stream.next().expect("unbounded stream");
        if !visit(j, &c) {
            return Some(j);
        }
        j += 1;
    }
    None
}

/// Checks that `b·u(q)` has no constant term and `j | b·c(j)` for every exponent `j < n`.
pub fn divisibility_test(e: &EtaExponents, b: u64, n: usize) -> Result<DivisibilityOutcome, SearchError> {
    if !e.is_admissible() {
        return Err(SearchError::NotAdmissible(*e));
    }
    let bb = BigInt::from(b);
    let mut primes = 0usize;
    let failing = walk_coefficients(e, n, |j, c| {
        if j == 0 {
            return c.is_zero();
        }
        let ok = (&bb * c).is_multiple_of(&BigInt::from(j));
        if ok && j > 0 && is_prime(j as u64) && b % j as u64 != 0 {
            primes += 1;
        }
        ok
    });
    let failed_at_coprime_prime =
        failing.is_some_and(|j| j > 0 && is_prime(j as u64) && b % j as u64 != 0);
    Ok(DivisibilityOutcome {
        pass: failing.is_none(),
        failing_exponent: failing,
        failed_at_coprime_prime,
        coprime_primes_checked: primes,
    })
}

/// Smallest `b` that makes `b·u(q)` pass at truncation `n`, if it divides `bound`.
///
/// `b` passes iff `j/gcd(j, c(j))` divides `b` for every exponent, so the minimum is the
/// lcm of those quotients; the walk stops as soon as it no longer divides `bound`.
pub fn required_multiplier(e: &EtaExponents, bound: Option<u64>, n: usize) -> Option<BigInt> {
    let bound = bound.map(BigInt::from);
    let mut l = BigInt::one();
    let stopped = walk_coefficients(e, n, |j, c| {
        if j == 0 {
            return c.is_zero();
        }
        let jj = BigInt::from(j.abs());
        let need = &jj / jj.gcd(c);
        l = l.lcm(&need);
        match &bound {
            Some(b) => b.is_multiple_of(&l),
            None => true,
        }
    });
    match stopped {
        Some(_) => None,
        None => Some(l),
    }
}

/// Smallest divisor of `bound` for which [`divisibility_test`] passes.
pub fn minimal_multiplier(e: &EtaExponents, bound: u64, n: usize) -> Result<u64, SearchError> {
    if !e.is_admissible() {
        return Err(SearchError::NotAdmissible(*e));
    }
    required_multiplier(e, Some(bound), n)
        .and_then(|l| l.to_u64())
        .ok_or(SearchError::NoPassingMultiplier { e: *e, bound, truncation: n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HitStatus {
    /// Passes the series test only.
    Candidate,
    /// The exact decider confirms a rational antiderivative.
    Certified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub e: EtaExponents,
    /// `None` when the integrand exponents are not integral.
    pub a: Option<ParamExponents>,
    pub minimal_b: u64,
    pub truncation: usize,
    pub status: HitStatus,
}

/// Admissible vectors with `|e_d| ≤ e_max`, in lexicographic order.
///
/// With `e₁₀ = 4 − e₁ − e₂ − e₅` the congruence reads `9e₁ ≡ 40 − 8e₂ − 5e₅ (mod 24)`,
/// which fixes `e₁` modulo 8 (or has no solution).
pub fn admissible_vectors(e_max: i64) -> Vec<EtaExponents> {
    let mut out = Vec::new();
    for e2 in -e_max..=e_max {
        for e5 in -e_max..=e_max {
            let rhs = (40 - 8 * e2 - 5 * e5).rem_euclid(24);
            if rhs % 3 != 0 {
                continue;
            }
            // 3e₁ ≡ rhs/3 (mod 8), and 3 is its own inverse mod 8
            let r = (3 * (rhs / 3)).rem_euclid(8);
            let mut e1 = -e_max + (r - (-e_max)).rem_euclid(8);
            while e1 <= e_max {
                let e10 = 4 - e1 - e2 - e5;
                if e10.abs() <= e_max {
                    out.push(EtaExponents::new(e1, e2, e5, e10));
                }
                e1 += 8;
            }
        }
    }
    out.sort();
    out
}

/// Vectors with `|e_d| ≤ e_max` passing the divisibility test with multiplier `b`.
pub fn search_level10(e_max: i64, b: u64, n: usize) -> Vec<SearchHit> {
    admissible_vectors(e_max)
        .into_par_iter()
        .filter_map(|e| {
            let minimal_b = minimal_multiplier(&e, b, n).ok()?;
            let a = e_to_a(&e).ok();
            let status = match &a {
                Some(a) if is_rational(a) => HitStatus::Certified,
                _ => HitStatus::Candidate,
            };
            Some(SearchHit { e, a, minimal_b, truncation: n, status })
        })
        .collect()
}

/// Every `(a₁, a₂, a₃)` in `[−r, r]³`, lexicographically.
pub fn triples_in_box(r: i64) -> Vec<ParamExponents> {
    let mut out = Vec::new();
    for a1 in -r..=r {
        for a2 in -r..=r {
            for a3 in -r..=r {
                out.push(ParamExponents::from_triple(a1, a2, a3));
            }
        }
    }
    out
}

/// All `(a₁, a₂, a₃)` in `[−r, r]³` with a rational integral, in lexicographic order.
pub fn scan_a(r: i64) -> Vec<ParamExponents> {
    triples_in_box(r).into_par_iter().filter(is_rational).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub range: i64,
    pub found: Vec<ParamExponents>,
    /// Golden triples not found by the scan.
    pub missing: Vec<[i64; 3]>,
    /// Triples found that are not golden.
    pub extra: Vec<[i64; 3]>,
    pub empty_diff: bool,
}

/// Runs [`scan_a`] and compares with the golden rows and families.
pub fn scan_a_report(r: i64) -> ScanReport {
    let found = scan_a(r);
    let got: Vec<(i64, i64, i64)> = found.iter().map(|a| a.triple()).collect();
    let golden = tables::golden_triples_in_range(r);
    let to_arr = |t: &(i64, i64, i64)| [t.0, t.1, t.2];
    let missing: Vec<[i64; 3]> = golden.iter().filter(|t| !got.contains(t)).map(to_arr).collect();
    let extra: Vec<[i64; 3]> = got.iter().filter(|t| !golden.contains(t)).map(to_arr).collect();
    let empty_diff = missing.is_empty() && extra.is_empty();
    ScanReport { range: r, found, missing, extra, empty_diff }
}

/// Multiplier bound used by the series side of the dual-oracle check: `lcm(1..30)`.
pub const SMALL_PRIME_BOUND: u64 = 2_329_089_562_800;

/// One row of the decider-versus-series comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualOracleRow {
    pub a: ParamExponents,
    pub e: EtaExponents,
    pub decider: bool,
    /// Minimal multiplier dividing the bound, when one exists.
    pub minimal_b: Option<u64>,
}

impl DualOracleRow {
    pub fn agrees(&self) -> bool {
        self.decider == self.minimal_b.is_some()
    }
}

/// Compares the exact decider with the series test for every triple in `[−r, r]³`.
pub fn dual_oracle(r: i64, n: usize) -> Vec<DualOracleRow> {
    triples_in_box(r)
        .into_par_iter()
        .map(|a| {
            let e = a_to_e(&a);
            let minimal_b = required_multiplier(&e, Some(SMALL_PRIME_BOUND), n).and_then(|l| l.to_u64());
            DualOracleRow { a, e, decider: is_rational(&a), minimal_b }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: [i64; 4]) -> EtaExponents {
        EtaExponents::from(e)
    }

    #[test]
    fn divisibility_examples() {
        assert!(divisibility_test(&ev([8, -7, 0, 3]), 1, 400).unwrap().pass);
        assert!(!divisibility_test(&ev([3, 0, -7, 8]), 1, 200).unwrap().pass);
        assert!(divisibility_test(&ev([3, 0, -7, 8]), 2, 200).unwrap().pass);
        let out = divisibility_test(&ev([-7, 8, 3, 0]), 1, 200).unwrap();
        assert_eq!(out.failing_exponent, Some(2));
        assert!(divisibility_test(&ev([-7, 8, 3, 0]), 2, 200).unwrap().pass);
        assert!(divisibility_test(&ev([1, 1, 1, 1]), 1, 60).is_err());
    }

    #[test]
    fn minimal_multiplier_examples() {
        assert_eq!(minimal_multiplier(&ev([8, -7, 0, 3]), 210, 500), Ok(1));
        assert_eq!(minimal_multiplier(&ev([3, 0, -7, 8]), 210, 500), Ok(2));
        assert!(matches!(
            minimal_multiplier(&ev([1, 2, 3, -2]), 210, 100),
            Err(SearchError::NoPassingMultiplier { .. })
        ));
    }

    #[test]
    fn enumeration_is_complete() {
        let fast = admissible_vectors(5);
        let mut brute = Vec::new();
        for e1 in -5..=5 {
            for e2 in -5..=5 {
                for e5 in -5..=5 {
                    for e10 in -5..=5 {
                        let e = EtaExponents::new(e1, e2, e5, e10);
                        if e.is_admissible() {
                            brute.push(e);
                        }
                    }
                }
            }
        }
        assert_eq!(fast, brute);
        assert!(admissible_vectors(0).is_empty());
    }

    #[test]
    fn small_search() {
        let hits = search_level10(8, 1, 400);
        let es: Vec<[i64; 4]> = hits.iter().map(|h| h.e.as_array()).collect();
        assert!(es.contains(&[8, -7, 0, 3]));
        assert!(es.contains(&[0, 3, 8, -7]));
        assert!(!es.contains(&[3, 0, -7, 8]));
        assert!(!es.contains(&[-7, 8, 3, 0]));
        let hits = search_level10(8, 2, 400);
        let es: Vec<[i64; 4]> = hits.iter().map(|h| h.e.as_array()).collect();
        assert!(es.contains(&[3, 0, -7, 8]));
        assert!(es.contains(&[-7, 8, 3, 0]));
        for h in &hits {
            if h.status == HitStatus::Certified {
                assert!(is_rational(h.a.as_ref().unwrap()));
            }
        }
    }

    #[test]
    fn scan_small_range() {
        let found: Vec<(i64, i64, i64)> = scan_a(2).iter().map(|a| a.triple()).collect();
        assert!(found.contains(&(0, -2, 1)));
        assert!(found.contains(&(1, 0, 0)));
        assert!(found.contains(&(-2, 0, 0)));
        assert!(!found.contains(&(0, 0, 0)));
        assert!(scan_a_report(2).empty_diff);
    }
}
