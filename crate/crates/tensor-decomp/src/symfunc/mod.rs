//! Exact symmetric-function arithmetic over the Schur, power-sum, and
//! complete homogeneous bases.
//!
//! A [`SymFunc`] is a sparse map from partitions to exact big rationals,
//! tagged with the basis the keys index. Terms of different degrees may
//! coexist (truncated series such as [`SymFunc::truncated_h`] rely on this).
//! Conversions route through the power-sum basis; products in the
//! multiplicative bases are key unions, and the Schur product converts,
//! multiplies, and converts back, with [`SymFunc::pieri`] as the direct fast
//! path for `s_λ·h_r`.

mod convert;
mod plethysm;
mod serde_impl;

pub(crate) use plethysm::{
    pleth_cache_preload, pleth_cache_snapshot, plethysm_power, schur_pleth_h, PlethKey,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    PowerSum,
    Homogeneous,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::PowerSum => "power_sum",
            Basis::Homogeneous => "homogeneous",
        }
    }

    pub fn from_name(name: &str) -> Option<Basis> {
        match name {
            "schur" => Some(Basis::Schur),
            "power_sum" => Some(Basis::PowerSum),
            "homogeneous" => Some(Basis::Homogeneous),
            _ => None,
        }
    }

    fn letter(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::PowerSum => 'p',
            Basis::Homogeneous => 'h',
        }
    }
}

/// A basis-tagged sparse linear combination of partition-indexed basis
/// elements with exact rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 (the empty-partition basis element in any basis).
    pub fn one(basis: Basis) -> Self {
        SymFunc::term(basis, Partition::empty(), BigRational::one())
    }

    pub fn term(basis: Basis, key: Partition, coeff: BigRational) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(key, coeff);
        f
    }

    pub fn basis_element(basis: Basis, key: Partition) -> Self {
        SymFunc::term(basis, key, BigRational::one())
    }

    /// s_λ.
    pub fn schur(key: Partition) -> Self {
        SymFunc::basis_element(Basis::Schur, key)
    }

    /// p_λ.
    pub fn power_sum(key: Partition) -> Self {
        SymFunc::basis_element(Basis::PowerSum, key)
    }

    /// h_λ = h_{λ_1}·h_{λ_2}·….
    pub fn homogeneous(key: Partition) -> Self {
        SymFunc::basis_element(Basis::Homogeneous, key)
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Self {
        let mut f = SymFunc::zero(basis);
        for (key, coeff) in terms {
            f.add_term(key, coeff);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Partition) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Set of degrees |λ| with a nonzero coefficient.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        ds.dedup();
        ds
    }

    pub(crate) fn add_term(&mut self, key: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Semantic equality: converts both sides to the power-sum basis.
    pub fn equivalent(&self, other: &SymFunc) -> bool {
        self.convert(Basis::PowerSum) == other.convert(Basis::PowerSum)
    }

    /// Product, returned in the basis of `self`. In the Schur basis the
    /// structure constants are the Littlewood–Richardson coefficients.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        match self.basis {
            Basis::PowerSum | Basis::Homogeneous => {
                let rhs = other.convert(self.basis);
                convolve(self, &rhs)
            }
            Basis::Schur => {
                let lhs = self.convert(Basis::PowerSum);
                let rhs = other.convert(Basis::PowerSum);
                convolve(&lhs, &rhs).convert(Basis::Schur)
            }
        }
    }

    /// Hall inner product, computed in the power-sum basis where
    /// ⟨p_λ, p_μ⟩ = z_λ δ_{λμ}.
    pub fn inner_product(&self, other: &SymFunc) -> BigRational {
        let a = self.convert(Basis::PowerSum);
        let b = other.convert(Basis::PowerSum);
        let (small, large) = if a.num_terms() <= b.num_terms() {
            (&a, &b)
        } else {
            (&b, &a)
        };
        let mut total = BigRational::zero();
        for (key, ca) in small.terms() {
            let cb = large.coeff(key);
            if cb.is_zero() {
                continue;
            }
            total += ca * cb * BigRational::from_integer(BigInt::from(key.centralizer_order()));
        }
        total
    }

    /// Pieri rule: s_λ·h_r = Σ s_η over η ⊇ λ with η/λ a horizontal strip of
    /// size r. Enumerated directly; agrees with [`SymFunc::multiply`].
    pub fn pieri(lambda: &Partition, r: u32) -> SymFunc {
        fn go(
            lambda: &Partition,
            row: usize,
            remaining: u32,
            eta: &mut Vec<u32>,
            out: &mut SymFunc,
        ) {
            if row > lambda.len() {
                if remaining == 0 {
                    let parts: Vec<u32> = eta.iter().copied().filter(|&v| v > 0).collect();
                    let key = Partition::new(parts).expect("strip rows stay ordered");
                    out.add_term(key, BigRational::one());
                }
                return;
            }
            let base = lambda.part(row);
            let hi = if row == 0 {
                base + remaining
            } else {
                lambda.part(row - 1).min(base + remaining)
            };
            for v in base..=hi {
                eta.push(v);
                go(lambda, row + 1, remaining - (v - base), eta, out);
                eta.pop();
            }
        }
        let mut out = SymFunc::zero(Basis::Schur);
        go(lambda, 0, r, &mut Vec::new(), &mut out);
        out
    }

    /// Σ_{j=0}^{N} h_j, in the homogeneous basis.
    pub fn truncated_h(n: u32) -> SymFunc {
        let mut f = SymFunc::one(Basis::Homogeneous);
        for j in 1..=n {
            f.add_term(Partition::new(vec![j]).unwrap(), BigRational::one());
        }
        f
    }

    /// Plethysm f[g], returned in the basis of `self`: express f in power
    /// sums, substitute p_n ↦ p_n[g] (every part of g's power-sum keys scaled
    /// by n), and extend multiplicatively. The shape s_λ[h_j] goes through
    /// the process-wide memo table.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        if self.basis == Basis::Schur
            && g.basis == Basis::Homogeneous
            && self.num_terms() == 1
            && g.num_terms() == 1
        {
            let (lam, cf) = self.terms().next().expect("one term");
            let (key, cg) = g.terms().next().expect("one term");
            if cf.is_one() && cg.is_one() && key.len() == 1 {
                return schur_pleth_h(lam, key.part(0));
            }
        }
        plethysm_power(self, g, None).convert(self.basis)
    }

    /// The terms as nonnegative integers, or an integrity error. Used at the
    /// boundaries where representation theory guarantees integrality.
    pub fn integer_terms(&self) -> Result<Vec<(Partition, u64)>, Error> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (key, coeff) in &self.terms {
            if !coeff.is_integer() || coeff.is_negative() {
                return Err(Error::Integrity(format!(
                    "coefficient of {key} is {coeff}, expected a nonnegative integer"
                )));
            }
            let m = u64::try_from(coeff.to_integer())
                .map_err(|_| Error::Integrity(format!("coefficient of {key} overflows u64")))?;
            out.push((key.clone(), m));
        }
        Ok(out)
    }
}

/// Key-union product for the multiplicative bases (p_λ·p_μ = p_{λ∪μ}, same
/// shape for h).
fn convolve(a: &SymFunc, b: &SymFunc) -> SymFunc {
    debug_assert_eq!(a.basis, b.basis);
    let mut out = SymFunc::zero(a.basis);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            out.add_term(union_parts(ka, kb), ca * cb);
        }
    }
    out
}

pub(crate) fn union_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(a.len() + b.len());
    parts.extend_from_slice(a.parts());
    parts.extend_from_slice(b.parts());
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("merged parts are sorted")
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        let rhs = rhs.convert(self.basis());
        for (key, coeff) in rhs.terms {
            out.add_term(key, coeff);
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        let rhs = rhs.convert(self.basis());
        for (key, coeff) in rhs.terms {
            out.add_term(key, -coeff);
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&-BigRational::one())
    }
}

impl std::ops::AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        let rhs = rhs.convert(self.basis);
        for (key, coeff) in rhs.terms {
            self.add_term(key, coeff);
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if key.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{letter}{key}")?;
            } else {
                write!(f, "{mag}·{letter}{key}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
pub(crate) mod test_util {
    use super::*;

    pub fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    pub fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    pub fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Schur-basis combination with unit coefficients.
    pub fn schur_sum(keys: &[&[u32]]) -> SymFunc {
        SymFunc::from_terms(
            Basis::Schur,
            keys.iter().map(|k| (p(k), BigRational::one())),
        )
    }
}
