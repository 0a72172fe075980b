//! Per-(n,k) characteristic identities: the type-μ multiplicity space, the
//! restriction of GL irreducibles to 𝔖_n, the full tensor-space character,
//! and the exact-equality checks tying them together.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{compute_rho, lambda_tuples, q_lambda, r_lambda};
use crate::error::Error;
use crate::partitions::{enumerate, factorial, Partition};
use crate::symfunc::{plethysm_power, Basis, SymFunc};

/// k!/Π_i (i!)^{m_i}·m_i!: the multiplicity with which the induced module
/// Ind(Reg_l × Id) occurs in the type-μ subspace.
fn type_space_multiplicity(mu: &Partition) -> u128 {
    let mut denom = 1u128;
    for (v, m) in mu.multiplicities() {
        denom *= factorial(v as u64).pow(m);
        denom *= factorial(m as u64);
    }
    let num = factorial(mu.size() as u64);
    debug_assert_eq!(num % denom, 0);
    num / denom
}

/// Characteristic of the whole type-μ subspace as a 𝔖_n representation:
/// the arrangement coefficient times h_1^{l}·h_{n−l}, in the Schur basis.
/// Zero when n < l(μ).
pub fn mult_space_characteristic(mu: &Partition, n: u32) -> SymFunc {
    let l = mu.len() as u32;
    if n < l {
        return SymFunc::zero(Basis::Schur);
    }
    let mut parts = vec![1u32; l as usize];
    if n > l {
        parts.insert(0, n - l);
    }
    let key = Partition::new(parts).expect("ordered by construction");
    let coeff = BigRational::from_integer(BigInt::from(type_space_multiplicity(mu)));
    SymFunc::term(Basis::Homogeneous, key, coeff).convert(Basis::Schur)
}

/// Degree-≤cap part of s_ν[h_0 + h_1 + … + h_cap], in the power-sum basis,
/// memoized. Only this truncation enters the restriction formula.
fn schur_pleth_truncated_h(nu: &Partition, cap: u32) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (nu.clone(), cap);
    if let Some(f) = cache.lock().unwrap().get(&key) {
        return f.clone();
    }
    let f = plethysm_power(
        &SymFunc::schur(nu.clone()),
        &SymFunc::truncated_h(cap),
        Some(cap),
    );
    cache.lock().unwrap().insert(key, f.clone());
    f
}

/// Characteristic of the restriction to 𝔖_n of the GL irreducible with
/// signature λ: Σ_{ν⊢n} ⟨s_λ, s_ν[h]⟩ s_ν, with h truncated to degree |λ|.
pub fn restriction_characteristic(lambda: &Partition, n: u32) -> SymFunc {
    let cap = lambda.size();
    let s_lam = SymFunc::schur(lambda.clone()).convert(Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::Schur);
    for nu in enumerate(n) {
        let coeff = s_lam.inner_product(&schur_pleth_truncated_h(&nu, cap));
        if !coeff.is_zero() {
            out.add_term(nu, coeff);
        }
    }
    out
}

/// Characteristic of the 𝔖_n action on the whole k-th tensor power, computed
/// directly from the permutation character g ↦ fix(g)^k:
/// Σ_{ρ⊢n} z_ρ⁻¹ m_1(ρ)^k p_ρ, in the Schur basis.
pub fn xi_direct(n: u32, k: u32) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::PowerSum);
    for rho in enumerate(n) {
        let fix = BigInt::from(rho.multiplicity(1)).pow(k);
        if fix.is_zero() {
            continue;
        }
        let z = BigInt::from(rho.centralizer_order());
        acc.add_term(rho, BigRational::new(fix, z));
    }
    acc.convert(Basis::Schur)
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: String,
    pub passed: bool,
    /// Both sides, rendered, when the check failed.
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub n: u32,
    pub k: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(label: String, lhs: &SymFunc, rhs: &SymFunc) -> IdentityCheck {
    let passed = lhs.equivalent(rhs);
    IdentityCheck {
        detail: (!passed).then(|| {
            format!(
                "lhs = {}, rhs = {}",
                lhs.convert(Basis::Schur),
                rhs.convert(Basis::Schur)
            )
        }),
        label,
        passed,
    }
}

/// Exact-equality verification of the three characteristic identities at
/// fixed (n, k):
///
/// (a) Σ_{ν⊢k} ch ρ_{μ,ν} equals the type-μ space characteristic, per μ;
/// (b) Σ_Λ ⟨h_1^k, Q_Λ⟩ R_Λ equals the arrangement coefficient times h_1^l,
///     per μ;
/// (c) the direct tensor-space characteristic equals both the dimension-
///     weighted sum of restrictions and the sum of all ch ρ_{μ,ν}.
pub fn verify_identities(n: u32, k: u32) -> Result<IdentityReport, Error> {
    let mus = enumerate(k);
    let mut checks = Vec::new();

    for mu in &mus {
        let mut lhs = SymFunc::zero(Basis::Schur);
        for nu in &mus {
            lhs += &compute_rho(mu, nu, n)?.characteristic();
        }
        let rhs = mult_space_characteristic(mu, n);
        checks.push(check(format!("(a) type sum, mu = {mu}"), &lhs, &rhs));
    }

    let h1k = SymFunc::homogeneous(Partition::new(vec![1; k as usize]).unwrap());
    for mu in &mus {
        let mut lhs = SymFunc::zero(Basis::Schur);
        for tuple in lambda_tuples(mu) {
            let ip = h1k.inner_product(&q_lambda(&tuple));
            if !ip.is_zero() {
                lhs += &r_lambda(&tuple).scale(&ip);
            }
        }
        let l = mu.len();
        let rhs = SymFunc::term(
            Basis::Homogeneous,
            Partition::new(vec![1; l]).unwrap(),
            BigRational::from_integer(BigInt::from(type_space_multiplicity(mu))),
        );
        checks.push(check(format!("(b) dimension sum, mu = {mu}"), &lhs, &rhs));
    }

    let xi = xi_direct(n, k);
    let mut by_restriction = SymFunc::zero(Basis::Schur);
    for lam in &mus {
        let dim = BigRational::from_integer(BigInt::from(lam.dim()));
        by_restriction += &restriction_characteristic(lam, n).scale(&dim);
    }
    let mut by_rho = SymFunc::zero(Basis::Schur);
    for mu in &mus {
        for nu in &mus {
            by_rho += &compute_rho(mu, nu, n)?.characteristic();
        }
    }
    checks.push(check(
        "(c) tensor space vs restrictions".to_string(),
        &xi,
        &by_restriction,
    ));
    checks.push(check(
        "(c) tensor space vs type/symmetry sum".to_string(),
        &xi,
        &by_rho,
    ));

    Ok(IdentityReport { n, k, checks })
}
