//! JSON form of a symmetric function, shared by the CLI output and the disk
//! cache:
//!
//! ```json
//! {"basis":"schur","terms":[{"partition":[2,1],"coeff":"2"}]}
//! ```
//!
//! Coefficients are decimal strings of exact rationals, `"p"` or `"p/q"`.
//! Deserialization validates partitions, rejects zero denominators, and
//! accumulates duplicate keys.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, SymFunc};
use crate::partitions::Partition;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: String,
    terms: Vec<TermRepr>,
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| format!("invalid integer {s:?}")),
        Some((num, den)) => {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("invalid numerator in {s:?}"))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("invalid denominator in {s:?}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = SymFuncRepr {
            basis: self.basis().name().to_string(),
            terms: self
                .terms()
                .map(|(key, coeff)| TermRepr {
                    partition: key.parts().to_vec(),
                    coeff: format_rational(coeff),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let basis = Basis::from_name(&repr.basis)
            .ok_or_else(|| D::Error::custom(format!("unknown basis {:?}", repr.basis)))?;
        let mut f = SymFunc::zero(basis);
        for term in repr.terms {
            let key = Partition::new(term.partition).map_err(D::Error::custom)?;
            let coeff = parse_rational(&term.coeff).map_err(D::Error::custom)?;
            f.add_term(key, coeff);
        }
        Ok(f)
    }
}
