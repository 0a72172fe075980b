//! Symmetric-group class data and character arithmetic.
//!
//! Irreducible character values come from the Murnaghan–Nakayama border-strip
//! recursion over beta-number sets, memoized process-wide. No character table
//! is ever hardcoded; the orthogonality tests validate every value.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::partitions::{enumerate, factorial, Partition};
use crate::symfunc::{Basis, SymFunc};

/// A conjugacy class of 𝔖_m, given by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassIndex {
    cycle_type: Partition,
}

impl ClassIndex {
    pub fn new(cycle_type: Partition) -> Self {
        ClassIndex { cycle_type }
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    /// m, the degree of the group the class lives in.
    pub fn degree(&self) -> u32 {
        self.cycle_type.size()
    }

    /// Centralizer order z_λ.
    pub fn z(&self) -> u128 {
        self.cycle_type.centralizer_order()
    }

    /// m!/z_λ.
    pub fn class_size(&self) -> u128 {
        let nf = factorial(self.degree() as u64);
        let z = self.z();
        debug_assert_eq!(nf % z, 0);
        nf / z
    }
}

/// The conjugacy classes of 𝔖_m, in canonical cycle-type order.
pub fn classes(m: u32) -> Vec<ClassIndex> {
    enumerate(m).into_iter().map(ClassIndex::new).collect()
}

fn mn_cache() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// χ^λ(ρ): the irreducible character of 𝔖_m indexed by `lambda`, evaluated on
/// the class of cycle type `rho`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64, Error> {
    if lambda.size() != rho.size() {
        return Err(Error::size_mismatch(lambda, rho));
    }
    Ok(mn_rec(lambda, rho))
}

/// Border-strip recursion. Removing a strip of length r from λ is subtracting
/// r from one beta number b_i = λ_i + l − i while keeping the set distinct;
/// the strip height is the number of beta numbers jumped over.
fn mn_rec(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1; // lambda is empty too: sizes agree along the recursion
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = mn_cache().lock().unwrap().get(&key) {
        return v;
    }

    let r = rho.part(0) as i64;
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix stays canonical");
    let l = lambda.len();
    let beta: Vec<i64> = (0..l)
        .map(|i| lambda.part(i) as i64 + (l - 1 - i) as i64)
        .collect();

    let mut total = 0i64;
    for idx in 0..l {
        let b = beta[idx];
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &c)| (c - (l - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = Partition::new(parts).expect("beta numbers give a valid shape");
        let term = mn_rec(&sub, &rest);
        total += if height % 2 == 0 { term } else { -term };
    }

    mn_cache().lock().unwrap().insert(key, total);
    total
}

/// An exact-rational class function on 𝔖_m, stored by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: u32,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Builds a class function by evaluating `f` on every class of 𝔖_m.
    pub fn from_fn(degree: u32, f: impl Fn(&ClassIndex) -> BigRational) -> Self {
        let values = classes(degree)
            .into_iter()
            .map(|c| {
                let v = f(&c);
                (c.cycle_type().clone(), v)
            })
            .collect();
        ClassFunction { degree, values }
    }

    /// The irreducible character χ^λ.
    pub fn irreducible(lambda: &Partition) -> Self {
        ClassFunction::from_fn(lambda.size(), |c| {
            BigRational::from_integer(BigInt::from(
                mn_character(lambda, c.cycle_type()).expect("sizes match"),
            ))
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn value(&self, cycle_type: &Partition) -> BigRational {
        self.values.get(cycle_type).cloned().unwrap_or_else(BigRational::zero)
    }

    /// ch f = Σ_ρ z_ρ⁻¹ f(ρ) p_ρ, in the power-sum basis.
    pub fn characteristic(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::PowerSum,
            self.values.iter().map(|(rho, v)| {
                let z = BigRational::from_integer(BigInt::from(rho.centralizer_order()));
                (rho.clone(), v / z)
            }),
        )
    }

    /// ⟨f, g⟩ = Σ_ρ z_ρ⁻¹ f(ρ) g(ρ) (characters here are real).
    pub fn class_inner(&self, other: &ClassFunction) -> Result<BigRational, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut total = BigRational::zero();
        for (rho, v) in &self.values {
            let z = BigRational::from_integer(BigInt::from(rho.centralizer_order()));
            total += v * other.value(rho) / z;
        }
        Ok(total)
    }

    /// Multiplicity of π_λ in the representation with this character.
    pub fn multiplicity(&self, lambda: &Partition) -> Result<u64, Error> {
        multiplicity(&self.characteristic(), lambda)
    }
}

/// ⟨f, s_λ⟩, asserted to be a nonnegative integer: the multiplicity of the
/// irreducible π_λ in the representation whose characteristic is `f`.
pub fn multiplicity(f: &SymFunc, lambda: &Partition) -> Result<u64, Error> {
    let ip = f.inner_product(&SymFunc::schur(lambda.clone()));
    if !ip.is_integer() || ip.is_negative() {
        return Err(Error::Integrity(format!(
            "multiplicity of {lambda} is {ip}, expected a nonnegative integer"
        )));
    }
    u64::try_from(ip.to_integer())
        .map_err(|_| Error::Integrity(format!("multiplicity of {lambda} overflows u64")))
}
