//! Named suites over the individual verifiers.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::integrals::{
    verify_fine_identity, verify_four_squares, verify_level7_integral, verify_quintic_identity, verify_theorem_t1,
};
use super::lemmas::{verify_g_forms, verify_gauss_special_case};
use super::level10::{displayed_expansion_checks, family_checks, rp_checks, sporadic_checks};
use super::limits::{random_rational_quartets, verify_limit_theorems, Quartet};
use super::report::{CheckReport, SuiteReport};
use super::rules::{Table1Level, Table2Level};
use super::table_rows::{verify_table1_row, verify_table2_row, Table1Row, Table2Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Section1,
    Table1,
    Table2,
    T1,
    Lemmas,
    Limits,
    Rp,
    Tables89,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["all", "section1", "table1", "table2", "t1", "lemmas", "limits", "rp", "tables89"];
    const PARTS: [Suite; 8] = [
        Suite::Section1,
        Suite::Table1,
        Suite::Table2,
        Suite::T1,
        Suite::Lemmas,
        Suite::Limits,
        Suite::Rp,
        Suite::Tables89,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Section1 => "section1",
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::T1 => "t1",
            Suite::Lemmas => "lemmas",
            Suite::Limits => "limits",
            Suite::Rp => "rp",
            Suite::Tables89 => "tables89",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        [Suite::All]
            .into_iter()
            .chain(Suite::PARTS)
            .find(|x| x.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Sizes used by the suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub section1_terms: usize,
    pub table_terms: usize,
    pub t1_terms: usize,
    pub rp_terms: usize,
    pub tables89_terms: usize,
    pub family_max_m: u32,
    pub g_forms_max_n: u64,
    pub golden_limit_max_n: u64,
    pub random_quartets: usize,
    pub random_limit_max_n: u64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            section1_terms: 500,
            table_terms: 60,
            t1_terms: 300,
            rp_terms: 200,
            tables89_terms: 200,
            family_max_m: 8,
            g_forms_max_n: 30,
            golden_limit_max_n: 16,
            random_quartets: 20,
            random_limit_max_n: 10,
            seed: 2024,
        }
    }
}

type Task<'a> = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync + 'a>;

fn tasks(suite: Suite, c: &VerifyConfig) -> Vec<Task<'_>> {
    let mut t: Vec<Task<'_>> = Vec::new();
    match suite {
        Suite::All => {
            for part in Suite::PARTS {
                t.extend(tasks(part, c));
            }
        }
        Suite::Section1 => {
            t.push(Box::new(|| vec![verify_quintic_identity(c.section1_terms)]));
            t.push(Box::new(|| vec![verify_four_squares(c.section1_terms)]));
            t.push(Box::new(|| vec![verify_fine_identity(c.section1_terms)]));
        }
        Suite::Table1 => {
            for level in Table1Level::ALL {
                t.push(Box::new(move || verify_table1_row(&Table1Row::get(level), c.table_terms)));
            }
        }
        Suite::Table2 => {
            for level in Table2Level::ALL {
                t.push(Box::new(move || verify_table2_row(&Table2Row::get(level), c.table_terms)));
            }
        }
        Suite::T1 => {
            for i in 1..=6 {
                t.push(Box::new(move || vec![verify_theorem_t1(i, c.t1_terms)]));
            }
            t.push(Box::new(|| vec![verify_level7_integral(c.t1_terms)]));
        }
        Suite::Lemmas => {
            t.push(Box::new(|| vec![verify_g_forms(c.g_forms_max_n)]));
            t.push(Box::new(|| vec![verify_gauss_special_case(2 * c.g_forms_max_n)]));
        }
        Suite::Limits => {
            t.push(Box::new(|| limit_reports(&[Quartet::golden()], c.golden_limit_max_n, "golden")));
            t.push(Box::new(|| {
                limit_reports(&random_rational_quartets(c.random_quartets, c.seed), c.random_limit_max_n, "random")
            }));
        }
        Suite::Rp => t.push(Box::new(|| rp_checks(c.rp_terms))),
        Suite::Tables89 => {
            t.push(Box::new(|| sporadic_checks(c.tables89_terms)));
            for family in 1..=4u8 {
                t.push(Box::new(move || family_checks(family, c.family_max_m, c.tables89_terms)));
            }
            t.push(Box::new(|| displayed_expansion_checks(c.tables89_terms)));
        }
    }
    t
}

fn limit_reports(quartets: &[Quartet], n_max: u64, tag: &str) -> Vec<CheckReport> {
    match verify_limit_theorems(n_max, quartets) {
        Ok(reports) => reports
            .into_iter()
            .map(|mut r| {
                r.name = r.name.replacen("limits.", &format!("limits.{tag}."), 1);
                r
            })
            .collect(),
        Err(e) => vec![CheckReport::fail(format!("limits.{tag}"), e.to_string())],
    }
}

/// Runs every check of `suite`; report order does not depend on scheduling.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let checks: Vec<CheckReport> = tasks(suite, config).par_iter().map(|f| f()).collect::<Vec<_>>().concat();
    SuiteReport::new(suite.name(), checks)
}
