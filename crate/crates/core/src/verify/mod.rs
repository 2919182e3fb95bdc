//! Series-level and exact certification of the classical identities.

pub mod integrals;
pub mod lemmas;
pub mod level10;
pub mod limits;
pub mod report;
pub mod rules;
pub mod suite;
pub mod table_rows;

pub use report::{all_pass, compare_series, CheckReport, Status, SuiteReport};
pub use rules::{binomial, coefficient_rule, RuleTag, Table1Level, Table2Level, UnknownLevel};
pub use table_rows::{check_recurrence, verify_table1_row, verify_table2_row, Descriptor, Table1Row, Table2Row};
pub use integrals::{
    theorem_t1_pair, verify_fine_identity, verify_four_squares, verify_level7_integral, verify_quintic_identity,
    verify_theorem_t1,
};
pub use lemmas::{hyp2f1_terminating, hyp2f1_value, lemma_g_forms, verify_g_forms, verify_gauss_special_case, GForm};
pub use limits::{random_rational_quartets, verify_limit_theorems, LimitError, Quartet};
pub use level10::{displayed_expansion_checks, family_checks, rp_checks, sporadic_checks};
pub use suite::{run_suite, Suite, UnknownSuite, VerifyConfig};
