//! Eta exponent vectors `(e₁, e₂, e₅, e₁₀)` and integrand exponents `(a₀, a₁, a₂, a₃)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::KernelError;
use crate::qseries::EtaQuotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct EtaExponents {
    pub e1: i64,
    pub e2: i64,
    pub e5: i64,
    pub e10: i64,
}

impl EtaExponents {
    pub fn new(e1: i64, e2: i64, e5: i64, e10: i64) -> Self {
        EtaExponents { e1, e2, e5, e10 }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.e1, self.e2, self.e5, self.e10]
    }

    /// Weight 2 (`Σe = 4`) and an integral leading exponent (`Σ d·e_d ≡ 0 mod 24`).
    pub fn is_admissible(&self) -> bool {
        self.e1 + self.e2 + self.e5 + self.e10 == 4 && self.weighted_sum().rem_euclid(24) == 0
    }

    pub fn weighted_sum(&self) -> i64 {
        self.e1 + 2 * self.e2 + 5 * self.e5 + 10 * self.e10
    }

    /// The leading exponent of the eta quotient (exact when admissible).
    pub fn leading_exponent(&self) -> i64 {
        self.weighted_sum().div_euclid(24)
    }

    pub fn quotient(&self) -> EtaQuotient {
        EtaQuotient::level10(self.as_array())
    }

    /// `(e₁, e₂, e₅, e₁₀) ↦ (e₁₀, e₅, e₂, e₁)`.
    pub fn reverse_involution(&self) -> Self {
        EtaExponents::new(self.e10, self.e5, self.e2, self.e1)
    }
}

impl From<[i64; 4]> for EtaExponents {
    fn from(e: [i64; 4]) -> Self {
        EtaExponents::new(e[0], e[1], e[2], e[3])
    }
}

impl From<EtaExponents> for [i64; 4] {
    fn from(e: EtaExponents) -> Self {
        e.as_array()
    }
}

impl fmt::Display for EtaExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.e1, self.e2, self.e5, self.e10)
    }
}

/// Exponents of `k^{a₀−1}(1−k²)^{a₁}(1+k−k²)^{a₂}(1−4k−k²)^{a₃}`; always `Σaᵢ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct ParamExponents {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl ParamExponents {
    pub fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Result<Self, KernelError> {
        if a0 + a1 + a2 + a3 != 0 {
            return Err(KernelError::ParamsDoNotSumToZero([a0, a1, a2, a3]));
        }
        Ok(ParamExponents { a0, a1, a2, a3 })
    }

    /// `(a₁, a₂, a₃)` with `a₀ = −(a₁ + a₂ + a₃)`.
    pub fn from_triple(a1: i64, a2: i64, a3: i64) -> Self {
        ParamExponents { a0: -(a1 + a2 + a3), a1, a2, a3 }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    pub fn triple(&self) -> (i64, i64, i64) {
        (self.a1, self.a2, self.a3)
    }
}

impl TryFrom<[i64; 4]> for ParamExponents {
    type Error = KernelError;
    fn try_from(a: [i64; 4]) -> Result<Self, KernelError> {
        ParamExponents::new(a[0], a[1], a[2], a[3])
    }
}

impl From<ParamExponents> for [i64; 4] {
    fn from(a: ParamExponents) -> Self {
        a.as_array()
    }
}

impl fmt::Display for ParamExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a0, self.a1, self.a2, self.a3)
    }
}

/// Maps eta exponents to integrand exponents; each entry is a multiple of 1/24.
pub fn e_to_a(e: &EtaExponents) -> Result<ParamExponents, KernelError> {
    let EtaExponents { e1, e2, e5, e10 } = *e;
    let raw = [
        e1 + 2 * e2 + 5 * e5 + 10 * e10,
        -4 * e1 - 5 * e2 + 4 * e5 - e10,
        -e1 + 4 * e2 - 5 * e5 - 4 * e10,
        4 * e1 - e2 - 4 * e5 - 5 * e10,
    ];
    if raw.iter().any(|x| x.rem_euclid(24) != 0) {
        return Err(KernelError::NonIntegralParams(*e));
    }
    let a = ParamExponents::new(raw[0] / 24, raw[1] / 24, raw[2] / 24, raw[3] / 24)?;
    Ok(a)
}

/// Inverse of [`e_to_a`] on vectors with `Σe = 4`.
pub fn a_to_e(a: &ParamExponents) -> EtaExponents {
    let ParamExponents { a1, a2, a3, .. } = *a;
    EtaExponents::new(
        -a1 - 2 * a2 + 3 * a3 + 1,
        a1 + 4 * a2 - a3 + 2,
        5 * a1 + 2 * a2 + a3 + 3,
        -5 * a1 - 4 * a2 - 3 * a3 - 2,
    )
}

/// Member `m ≥ 0` of one of the four infinite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyLabel {
    pub family: u8,
    pub m: u32,
}

impl FamilyLabel {
    pub fn new(family: u8, m: u32) -> Result<Self, KernelError> {
        if !(1..=4).contains(&family) {
            return Err(KernelError::UnknownFamily(family));
        }
        Ok(FamilyLabel { family, m })
    }

    pub fn label(&self) -> String {
        format!("{}.{}", self.family, self.m)
    }
}

/// The family member's eta exponents and integrand exponents.
pub fn family_exponents(f: &FamilyLabel) -> (EtaExponents, ParamExponents) {
    let fam = super::tables::family(f.family).expect("validated family index");
    let m = f.m as i64;
    let lin = |v: &[[i64; 2]; 4]| -> [i64; 4] { std::array::from_fn(|i| v[i][0] * m + v[i][1]) };
    let e = EtaExponents::from(lin(&fam.e));
    let a = lin(&fam.a);
    let a = ParamExponents::new(a[0], a[1], a[2], a[3]).expect("family rows sum to zero");
    (e, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_to_a_examples() {
        let cases = [
            ([8, -7, 0, 3], [1, 0, -2, 1]),
            ([-13, 8, 9, 0], [2, 2, 0, -4]),
            ([14, -19, -6, 15], [4, 0, -5, 1]),
        ];
        for (e, a) in cases {
            let got = e_to_a(&EtaExponents::from(e)).unwrap();
            assert_eq!(got.as_array(), a);
            assert_eq!(a_to_e(&got), EtaExponents::from(e));
        }
    }

    #[test]
    fn non_integral_params() {
        // admissible but the a-formulas are not integral
        let e = EtaExponents::new(-4, -2, 4, 6);
        assert!(e.is_admissible());
        assert_eq!(e_to_a(&e), Err(KernelError::NonIntegralParams(e)));
    }

    #[test]
    fn family_examples() {
        let (e, a) = family_exponents(&FamilyLabel::new(1, 0).unwrap());
        assert_eq!((e.as_array(), a.as_array()), ([8, -7, 0, 3], [1, 0, -2, 1]));
        let (e, a) = family_exponents(&FamilyLabel::new(2, 1).unwrap());
        assert_eq!((e.as_array(), a.as_array()), ([-2, 5, 18, -17], [-3, 3, 0, 0]));
        let (e, a) = family_exponents(&FamilyLabel::new(4, 0).unwrap());
        assert_eq!((e.as_array(), a.as_array()), ([-7, 8, 3, 0], [1, 0, 1, -2]));
        assert!(FamilyLabel::new(5, 0).is_err());
    }

    #[test]
    fn involution_maps_row_one_to_row_three() {
        let row1 = EtaExponents::new(8, -7, 0, 3);
        assert_eq!(row1.reverse_involution(), EtaExponents::new(3, 0, -7, 8));
    }

    #[test]
    fn json_as_arrays() {
        let a = ParamExponents::from_triple(0, -2, 1);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,0,-2,1]");
        assert!(serde_json::from_str::<ParamExponents>("[1,1,1,1]").is_err());
    }
}
