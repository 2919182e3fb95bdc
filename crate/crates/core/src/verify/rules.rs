//! Binomial-sum coefficient rules `s(n)` and `T(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::rational::factorial;

/// `u(u−1)⋯(u−k+1)/k!` for any integer `u`, zero for `k < 0`.
pub fn binomial(u: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if u >= 0 && k > u {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= u - i;
    }
    num / factorial(k as u64)
}

fn c(u: i64, k: i64) -> BigInt {
    binomial(u, k)
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn central(n: i64) -> BigInt {
    c(2 * n, n)
}

/// Rows of the weight-one table, which carry `(α, β, γ)` and a three-term recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Table1Level {
    L5,
    L6A,
    L6B,
    L6C,
    L8,
    L9,
}

/// Rows of the `Z = Σ T(n) Xⁿ` table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Table2Level {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6A,
    L6B,
    L6C,
    L7,
    L8,
    L9,
    L10,
}

impl Table1Level {
    pub const ALL: [Table1Level; 6] =
        [Table1Level::L5, Table1Level::L6A, Table1Level::L6B, Table1Level::L6C, Table1Level::L8, Table1Level::L9];

    pub fn tag(self) -> &'static str {
        match self {
            Table1Level::L5 => "5",
            Table1Level::L6A => "6A",
            Table1Level::L6B => "6B",
            Table1Level::L6C => "6C",
            Table1Level::L8 => "8",
            Table1Level::L9 => "9",
        }
    }
}

impl Table2Level {
    pub const ALL: [Table2Level; 12] = [
        Table2Level::L1,
        Table2Level::L2,
        Table2Level::L3,
        Table2Level::L4,
        Table2Level::L5,
        Table2Level::L6A,
        Table2Level::L6B,
        Table2Level::L6C,
        Table2Level::L7,
        Table2Level::L8,
        Table2Level::L9,
        Table2Level::L10,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Table2Level::L1 => "1",
            Table2Level::L2 => "2",
            Table2Level::L3 => "3",
            Table2Level::L4 => "4",
            Table2Level::L5 => "5",
            Table2Level::L6A => "6A",
            Table2Level::L6B => "6B",
            Table2Level::L6C => "6C",
            Table2Level::L7 => "7",
            Table2Level::L8 => "8",
            Table2Level::L9 => "9",
            Table2Level::L10 => "10",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown level tag {0:?}")]
pub struct UnknownLevel(pub String);

impl FromStr for Table1Level {
    type Err = UnknownLevel;
    fn from_str(s: &str) -> Result<Self, UnknownLevel> {
        Table1Level::ALL.into_iter().find(|l| l.tag().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownLevel(s.into()))
    }
}

impl FromStr for Table2Level {
    type Err = UnknownLevel;
    fn from_str(s: &str) -> Result<Self, UnknownLevel> {
        Table2Level::ALL.into_iter().find(|l| l.tag().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownLevel(s.into()))
    }
}

impl fmt::Display for Table1Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl fmt::Display for Table2Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which sequence to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RuleTag {
    /// `s(n)` of the weight-one table.
    S(Table1Level),
    /// `T(n)` of the `Z`-table.
    T(Table2Level),
}

/// Evaluates the binomial sum exactly.
pub fn coefficient_rule(tag: RuleTag, n: u64) -> BigInt {
    match tag {
        RuleTag::S(l) => s_rule(l, n as i64),
        RuleTag::T(l) => t_rule(l, n as i64),
    }
}

fn s_rule(level: Table1Level, n: i64) -> BigInt {
    let mut total = BigInt::zero();
    match level {
        Table1Level::L5 => {
            for j in 0..=n {
                total += sign(j + n) * c(n, j).pow(3) * c(4 * n - 5 * j, 3 * n);
            }
        }
        Table1Level::L6A => {
            for j in 0..=n {
                total += (c(n, j) * c(n + j, j)).pow(2);
            }
        }
        Table1Level::L6B => {
            for j in 0..=n {
                total += c(n, j).pow(2) * c(2 * j, j) * c(2 * n - 2 * j, n - j);
            }
            total *= sign(n);
        }
        Table1Level::L6C => {
            for j in 0..=n / 3 {
                let multinomial =
                    factorial((n + j) as u64) / (factorial(j as u64).pow(4) * factorial((n - 3 * j) as u64));
                total += BigInt::from(-3).pow((n - 3 * j) as u32) * multinomial;
            }
        }
        Table1Level::L8 => {
            for j in 0..=n {
                total += (c(n, j) * c(2 * j, n)).pow(2);
            }
        }
        Table1Level::L9 => {
            for j in 0..=n {
                for l in 0..=n {
                    total += c(n, j).pow(2) * c(n, l) * c(j, l) * c(j + l, n);
                }
            }
        }
    }
    total
}

fn t_rule(level: Table2Level, n: i64) -> BigInt {
    let sum = |f: &dyn Fn(i64) -> BigInt| (0..=n).map(f).fold(BigInt::zero(), |a, b| a + b);
    match level {
        Table2Level::L1 => c(6 * n, 3 * n) * c(3 * n, n) * central(n),
        Table2Level::L2 => c(4 * n, 2 * n) * central(n).pow(2),
        Table2Level::L3 => c(3 * n, n) * central(n).pow(2),
        Table2Level::L4 => central(n).pow(3),
        Table2Level::L5 => central(n) * sum(&|j| c(n, j).pow(2) * c(n + j, j)),
        Table2Level::L6A => {
            central(n)
                * sum(&|j| {
                    let inner = (0..=j).map(|l| c(j, l).pow(3)).fold(BigInt::zero(), |a, b| a + b);
                    BigInt::from(-8).pow((n - j) as u32) * c(n, j) * inner
                })
        }
        Table2Level::L6B => central(n) * sum(&|j| c(n, j).pow(2) * c(2 * j, j)),
        Table2Level::L6C => central(n) * sum(&|j| c(n, j).pow(3)),
        Table2Level::L7 => sum(&|j| c(n, j).pow(2) * c(2 * j, n) * c(n + j, j)),
        Table2Level::L8 => central(n) * sign(n) * sum(&|j| c(n, j) * c(2 * j, j) * c(2 * n - 2 * j, n - j)),
        Table2Level::L9 => {
            let mut total = BigInt::zero();
            for j in 0..=n / 3 {
                total += BigInt::from(-3).pow((n - 3 * j) as u32) * c(n, j) * c(n - j, j) * c(n - 2 * j, j);
            }
            central(n) * total
        }
        Table2Level::L10 => sum(&|j| c(n, j).pow(4)),
    }
}
