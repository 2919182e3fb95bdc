//! Golden level-10 data: the twelve sporadic rows and the four infinite families.

use std::sync::OnceLock;

use serde::Deserialize;

use super::{EtaExponents, FamilyLabel, ParamExponents};
use crate::field5::{PolyQ, RationalFunction5};
use crate::rational::parse_rational;

const TABLES_JSON: &str = include_str!("../../data/level10_tables.json");

#[derive(Debug, Deserialize)]
struct TablesFile {
    version: u32,
    table8: Vec<RawRow>,
    table9: Vec<RawFamily>,
}

#[derive(Debug, Deserialize)]
struct RawRow {
    label: String,
    e: [i64; 4],
    a: [i64; 4],
    g: RawG,
}

#[derive(Debug, Deserialize)]
struct RawG {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct RawFamily {
    family: u8,
    e: [[i64; 2]; 4],
    a: [[i64; 2]; 4],
}

/// A sporadic row with its closed-form antiderivative `g(k) = num/den`.
#[derive(Clone, Debug)]
pub struct SporadicRow {
    pub label: String,
    pub e: EtaExponents,
    pub a: ParamExponents,
    pub g_num: PolyQ,
    pub g_den: PolyQ,
}

impl SporadicRow {
    pub fn g(&self) -> RationalFunction5 {
        RationalFunction5::from_rational_parts(&self.g_num, &self.g_den).expect("nonzero denominator")
    }
}

/// Entries are `[coefficient of m, constant]` per component.
#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub family: u8,
    pub e: [[i64; 2]; 4],
    pub a: [[i64; 2]; 4],
}

pub struct GoldenTables {
    pub version: u32,
    pub sporadic: Vec<SporadicRow>,
    pub families: Vec<FamilyRow>,
}

fn parse_poly(v: &[String]) -> PolyQ {
    PolyQ::new(v.iter().map(|s| parse_rational(s).expect("golden table coefficient")).collect())
}

pub fn golden_tables() -> &'static GoldenTables {
    static TABLES: OnceLock<GoldenTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let raw: TablesFile = serde_json::from_str(TABLES_JSON).expect("embedded tables parse");
        let sporadic = raw
            .table8
            .into_iter()
            .map(|r| SporadicRow {
                label: r.label,
                e: EtaExponents::from(r.e),
                a: ParamExponents::try_from(r.a).expect("golden a sums to zero"),
                g_num: parse_poly(&r.g.num),
                g_den: parse_poly(&r.g.den),
            })
            .collect();
        let families = raw.table9.into_iter().map(|f| FamilyRow { family: f.family, e: f.e, a: f.a }).collect();
        GoldenTables { version: raw.version, sporadic, families }
    })
}

pub fn sporadic_rows() -> &'static [SporadicRow] {
    &golden_tables().sporadic
}

pub fn sporadic_row(label: &str) -> Option<&'static SporadicRow> {
    sporadic_rows().iter().find(|r| r.label == label)
}

pub(crate) fn family(index: u8) -> Option<&'static FamilyRow> {
    golden_tables().families.iter().find(|f| f.family == index)
}

/// Every golden triple `(a₁, a₂, a₃)` with all entries in `[−r, r]`, sorted and deduplicated.
pub fn golden_triples_in_range(r: i64) -> Vec<(i64, i64, i64)> {
    let mut out: Vec<(i64, i64, i64)> = sporadic_rows().iter().map(|row| row.a.triple()).collect();
    for f in 1..=4u8 {
        // entries grow linearly in m, so stop once every bounded entry has left the box
        for m in 0.. {
            let (_, a) = super::family_exponents(&FamilyLabel { family: f, m });
            let t = a.triple();
            if t.0.abs().max(t.1.abs()).max(t.2.abs()) > r {
                break;
            }
            out.push(t);
        }
    }
    out.retain(|t| t.0.abs() <= r && t.1.abs() <= r && t.2.abs() <= r);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_load() {
        let t = golden_tables();
        assert_eq!(t.version, 1);
        assert_eq!(t.sporadic.len(), 12);
        assert_eq!(t.families.len(), 4);
        for row in &t.sporadic {
            assert!(row.e.is_admissible(), "{}", row.label);
            assert_eq!(super::super::e_to_a(&row.e).unwrap(), row.a, "{}", row.label);
        }
    }

    #[test]
    fn family_zero_members_are_sporadic_rows() {
        for f in 1..=4u8 {
            let (e, a) = super::super::family_exponents(&FamilyLabel { family: f, m: 0 });
            let row = sporadic_row(&format!("{f}.0")).unwrap();
            assert_eq!((e, a), (row.e, row.a));
        }
    }

    #[test]
    fn golden_triples_r10() {
        assert_eq!(golden_triples_in_range(10).len(), 28);
    }
}
