//! Basis conversion engines. Everything routes through the power-sum basis:
//! Schur rows come from characters (s_λ = Σ_ρ z_ρ⁻¹ χ^λ(ρ) p_ρ and its
//! inverse), h_r expands as Σ_ρ z_ρ⁻¹ p_ρ, and the way back to the
//! homogeneous basis is the Newton recursion p_r = r·h_r − Σ h_i·p_{r−i}.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{union_parts, Basis, SymFunc};
use crate::characters::mn_character;
use crate::partitions::{enumerate, Partition};

impl SymFunc {
    /// The same element expressed in `target`, exactly. Conversions are
    /// mutually inverse.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_power_sum();
        match target {
            Basis::PowerSum => p,
            Basis::Schur => power_to_schur(&p),
            Basis::Homogeneous => power_to_homogeneous(&p),
        }
    }

    fn to_power_sum(&self) -> SymFunc {
        match self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Schur => {
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (lam, c) in self.terms() {
                    for rho in enumerate(lam.size()) {
                        let chi = mn_character(lam, &rho).expect("equal sizes");
                        if chi == 0 {
                            continue;
                        }
                        let z = BigInt::from(rho.centralizer_order());
                        out.add_term(rho, c * BigRational::new(BigInt::from(chi), z));
                    }
                }
                out
            }
            Basis::Homogeneous => {
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (key, c) in self.terms() {
                    let mut term = SymFunc::one(Basis::PowerSum);
                    for &r in key.parts() {
                        term = mul_power(&term, &homog_to_power(r));
                    }
                    for (rho, v) in term.terms {
                        out.add_term(rho, c * v);
                    }
                }
                out
            }
        }
    }
}

fn mul_power(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            out.add_term(union_parts(ka, kb), ca * cb);
        }
    }
    out
}

/// h_r = Σ_{ρ⊢r} z_ρ⁻¹ p_ρ, memoized.
fn homog_to_power(r: u32) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<u32, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&r) {
        return f.clone();
    }
    let f = SymFunc::from_terms(
        Basis::PowerSum,
        enumerate(r).into_iter().map(|rho| {
            let z = BigInt::from(rho.centralizer_order());
            (rho, BigRational::new(BigInt::from(1), z))
        }),
    );
    cache.lock().unwrap().insert(r, f.clone());
    f
}

/// Inverse character transform: the s_λ coefficient of Σ_ρ c_ρ p_ρ is
/// Σ_ρ c_ρ χ^λ(ρ), degree by degree.
fn power_to_schur(f: &SymFunc) -> SymFunc {
    let mut by_degree: BTreeMap<u32, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
    for (rho, c) in f.terms() {
        by_degree.entry(rho.size()).or_default().push((rho, c));
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (d, rows) in by_degree {
        for lam in enumerate(d) {
            let mut coeff = BigRational::zero();
            for &(rho, c) in &rows {
                let chi = mn_character(&lam, rho).expect("equal sizes");
                if chi != 0 {
                    coeff += c * BigRational::from_integer(BigInt::from(chi));
                }
            }
            out.add_term(lam, coeff);
        }
    }
    out
}

/// p_r in the homogeneous basis via Newton's identity, memoized.
fn power_part_to_homog(r: u32) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<u32, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&r) {
        return f.clone();
    }
    let f = if r == 0 {
        SymFunc::one(Basis::Homogeneous)
    } else {
        let mut acc = SymFunc::term(
            Basis::Homogeneous,
            Partition::new(vec![r]).unwrap(),
            BigRational::from_integer(BigInt::from(r)),
        );
        for i in 1..r {
            let h_i = Partition::new(vec![i]).unwrap();
            for (key, c) in power_part_to_homog(r - i).terms {
                acc.add_term(union_parts(&key, &h_i), -c);
            }
        }
        acc
    };
    cache.lock().unwrap().insert(r, f.clone());
    f
}

fn power_to_homogeneous(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Homogeneous);
    for (rho, c) in f.terms() {
        let mut term = SymFunc::one(Basis::Homogeneous);
        for &r in rho.parts() {
            let factor = power_part_to_homog(r);
            let mut next = SymFunc::zero(Basis::Homogeneous);
            for (ka, ca) in term.terms() {
                for (kb, cb) in factor.terms() {
                    next.add_term(union_parts(ka, kb), ca * cb);
                }
            }
            term = next;
        }
        for (key, v) in term.terms {
            out.add_term(key, c * v);
        }
    }
    out
}
