//! Plethysm. The workhorse is `plethysm_power`: express the outer function in
//! power sums, substitute p_n[g] (the inner function with every power-sum
//! part scaled by n), and extend multiplicatively. An optional degree cap
//! discards high-degree terms as the products are formed, which keeps
//! plethysms against truncated series small.
//!
//! The inner plethysms p_n[h_j] and s_λ[h_j] are memoized process-wide; the
//! two memo tables back the optional on-disk cache.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{Basis, SymFunc};
use crate::partitions::{enumerate, Partition};

/// Identifier for a memoized plethysm, as persisted by the disk cache.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum PlethKey {
    /// p_n[h_j]
    PowerH { n: u32, j: u32 },
    /// s_λ[h_j]
    SchurH { lambda: Partition, j: u32 },
}

fn power_h_cache() -> &'static Mutex<HashMap<(u32, u32), SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn schur_h_cache() -> &'static Mutex<HashMap<(Partition, u32), SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// f[g] in the power-sum basis, keeping only terms of degree ≤ `cap` when a
/// cap is given.
pub(crate) fn plethysm_power(f: &SymFunc, g: &SymFunc, cap: Option<u32>) -> SymFunc {
    let fp = f.convert(Basis::PowerSum);
    let gp = g.convert(Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (rho, c) in fp.terms() {
        let mut term = SymFunc::one(Basis::PowerSum);
        for &m in rho.parts() {
            term = convolve_capped(&term, &stretch(&gp, m, cap), cap);
            if term.is_zero() {
                break;
            }
        }
        for (key, v) in term.terms() {
            out.add_term(key.clone(), c * v);
        }
    }
    out
}

/// p_m[g]: every part of every power-sum key multiplied by m.
fn stretch(g: &SymFunc, m: u32, cap: Option<u32>) -> SymFunc {
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (key, c) in g.terms() {
        if let Some(cap) = cap {
            if key.size().saturating_mul(m) > cap {
                continue;
            }
        }
        let scaled = Partition::new(key.parts().iter().map(|&v| v * m).collect())
            .expect("scaling preserves order");
        out.add_term(scaled, c.clone());
    }
    out
}

fn convolve_capped(a: &SymFunc, b: &SymFunc, cap: Option<u32>) -> SymFunc {
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            if let Some(cap) = cap {
                if ka.size() + kb.size() > cap {
                    continue;
                }
            }
            out.add_term(super::union_parts(ka, kb), ca * cb);
        }
    }
    out
}

/// p_n[h_j], memoized.
pub(crate) fn power_pleth_h(n: u32, j: u32) -> SymFunc {
    if let Some(f) = power_h_cache().lock().unwrap().get(&(n, j)) {
        return f.clone();
    }
    let h_j = SymFunc::homogeneous(Partition::from_unsorted([j]));
    let f = stretch(&h_j.convert(Basis::PowerSum), n, None);
    power_h_cache().lock().unwrap().insert((n, j), f.clone());
    f
}

/// s_λ[h_j] in the Schur basis, memoized. This is the characteristic of the
/// wreath-product induction that builds the Q_Λ factors, so it is queried
/// heavily by the tuple enumeration in `decomp`.
pub(crate) fn schur_pleth_h(lambda: &Partition, j: u32) -> SymFunc {
    if j == 1 || lambda.is_empty() {
        return SymFunc::schur(lambda.clone());
    }
    let key = (lambda.clone(), j);
    if let Some(f) = schur_h_cache().lock().unwrap().get(&key) {
        return f.clone();
    }
    let mut acc = SymFunc::zero(Basis::PowerSum);
    for rho in enumerate(lambda.size()) {
        let chi = crate::characters::mn_character(lambda, &rho).expect("equal sizes");
        if chi == 0 {
            continue;
        }
        let mut term = SymFunc::one(Basis::PowerSum);
        for &m in rho.parts() {
            term = convolve_capped(&term, &power_pleth_h(m, j), None);
        }
        let c = BigRational::new(BigInt::from(chi), BigInt::from(rho.centralizer_order()));
        for (k, v) in term.terms() {
            acc.add_term(k.clone(), &c * v);
        }
    }
    let f = acc.convert(Basis::Schur);
    debug_assert!(
        f.terms().all(|(_, c)| c.is_integer() && !c.is_negative()),
        "s_{lambda}[h_{j}] must be Schur-positive"
    );
    schur_h_cache().lock().unwrap().insert(key, f.clone());
    f
}

/// Snapshot of both memo tables, for persistence.
pub(crate) fn pleth_cache_snapshot() -> Vec<(PlethKey, SymFunc)> {
    let mut out = Vec::new();
    for ((n, j), f) in power_h_cache().lock().unwrap().iter() {
        out.push((PlethKey::PowerH { n: *n, j: *j }, f.clone()));
    }
    for ((lambda, j), f) in schur_h_cache().lock().unwrap().iter() {
        out.push((
            PlethKey::SchurH {
                lambda: lambda.clone(),
                j: *j,
            },
            f.clone(),
        ));
    }
    out
}

/// Inserts a previously persisted entry after shape checks (basis tag and
/// homogeneous degree). Returns false for entries that fail the checks.
pub(crate) fn pleth_cache_preload(key: PlethKey, f: SymFunc) -> bool {
    match key {
        PlethKey::PowerH { n, j } => {
            let degree = n * j;
            if f.basis() != Basis::PowerSum || f.terms().any(|(k, _)| k.size() != degree) {
                return false;
            }
            power_h_cache().lock().unwrap().insert((n, j), f);
            true
        }
        PlethKey::SchurH { lambda, j } => {
            let degree = lambda.size() * j;
            if f.basis() != Basis::Schur
                || f.terms()
                    .any(|(k, c)| k.size() != degree || !c.is_integer() || c.is_negative())
            {
                return false;
            }
            schur_h_cache().lock().unwrap().insert((lambda, j), f);
            true
        }
    }
}
