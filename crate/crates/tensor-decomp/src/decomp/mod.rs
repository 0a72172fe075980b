//! The core engine: the length-l(μ) representation Π(μ,ν) built from
//! wreath-product plethysms, the 𝔖_n representation ρ_{μ,ν} carried by the
//! tensors of type μ and symmetry ν, its stable decomposition symbol, and the
//! infinite-symmetric-group coefficients.
//!
//! Everything is realized at the level of characteristics: inductions become
//! products of symmetric functions and wreath-product inductions become
//! plethysms, so no group element is ever instantiated. The independent
//! fixed-point-counting oracle in [`crate::oracle`] validates the results.

mod identities;
mod table;

pub use identities::{
    mult_space_characteristic, restriction_characteristic, verify_identities, xi_direct,
    IdentityCheck, IdentityReport,
};
pub use table::{reference_symbols, symbol_table, ReferenceSymbol, SymbolTable};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::partitions::{enumerate, Partition};
use crate::symfunc::{schur_pleth_h, Basis, SymFunc};

/// A decomposed representation of some 𝔖_m: a multiset of partitions of m
/// with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepDecomposition {
    degree: u32,
    mults: BTreeMap<Partition, u64>,
}

impl RepDecomposition {
    pub fn empty(degree: u32) -> Self {
        RepDecomposition {
            degree,
            mults: BTreeMap::new(),
        }
    }

    /// Reads a Schur-positive symmetric function of homogeneous degree
    /// `degree` as a decomposition, asserting integrality.
    pub fn from_symfunc(degree: u32, f: &SymFunc) -> Result<Self, Error> {
        let schur = f.convert(Basis::Schur);
        let mut mults = BTreeMap::new();
        for (key, m) in schur.integer_terms()? {
            if key.size() != degree {
                return Err(Error::Integrity(format!(
                    "term {key} has degree {} in a degree-{degree} decomposition",
                    key.size()
                )));
            }
            if m > 0 {
                mults.insert(key, m);
            }
        }
        Ok(RepDecomposition { degree, mults })
    }

    /// Builds a decomposition from explicit multiplicities, checking that
    /// every key is a partition of `degree`.
    pub fn from_mults(degree: u32, mults: BTreeMap<Partition, u64>) -> Result<Self, Error> {
        for (key, &m) in &mults {
            if key.size() != degree {
                return Err(Error::Integrity(format!(
                    "term {key} has degree {} in a degree-{degree} decomposition",
                    key.size()
                )));
            }
            debug_assert!(m > 0);
        }
        let mults = mults.into_iter().filter(|&(_, m)| m > 0).collect();
        Ok(RepDecomposition { degree, mults })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mults(&self) -> &BTreeMap<Partition, u64> {
        &self.mults
    }

    pub fn get(&self, key: &Partition) -> u64 {
        self.mults.get(key).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Σ mult·dim.
    pub fn dimension(&self) -> BigUint {
        self.mults
            .iter()
            .map(|(key, &m)| key.dim() * BigUint::from(m))
            .sum()
    }

    /// Σ mult·s_η, the characteristic of the decomposed representation.
    pub fn characteristic(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::Schur,
            self.mults.iter().map(|(key, &m)| {
                (key.clone(), BigRational::from_integer(BigInt::from(m)))
            }),
        )
    }
}

impl fmt::Display for RepDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, m)) in self.mults.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "{key}")?;
            } else {
                write!(f, "{m}·{key}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for RepDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a [u32],
            mult: u64,
        }
        let mut st = serializer.serialize_struct("RepDecomposition", 2)?;
        st.serialize_field("degree", &self.degree)?;
        let terms: Vec<Term> = self
            .mults
            .iter()
            .map(|(key, &m)| Term {
                partition: key.parts(),
                mult: m,
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The normalized stable symbol T_{μν}: partitions λ with |λ| ≤ k mapped to
/// T_{μν}^λ / dim ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompSymbol {
    k: u32,
    mu: Partition,
    nu: Partition,
    entries: BTreeMap<Partition, u64>,
}

impl DecompSymbol {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn entries(&self) -> &BTreeMap<Partition, u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rendering used in table cells: `∅+2·(1)+(2)+(1^2)`.
    pub fn render(&self) -> String {
        let mut pieces = Vec::with_capacity(self.entries.len());
        for (key, &m) in &self.entries {
            let shape = key.compact();
            pieces.push(if m == 1 {
                shape
            } else {
                format!("{m}·{shape}")
            });
        }
        pieces.join("+")
    }
}

impl fmt::Display for DecompSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Serialize for DecompSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            partition: &'a [u32],
            mult: u64,
        }
        let mut st = serializer.serialize_struct("DecompSymbol", 4)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("mu", self.mu.parts())?;
        st.serialize_field("nu", self.nu.parts())?;
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(key, &m)| Entry {
                partition: key.parts(),
                mult: m,
            })
            .collect();
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// A collection Λ = (λ_1, λ_2, …) with λ_i ⊢ m_i, for μ = (1^{m_1} 2^{m_2} …).
/// Indices with m_i = 0 carry the empty partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTuple {
    components: Vec<Partition>,
}

impl LambdaTuple {
    /// components()[i] is λ_{i+1} ⊢ m_{i+1}.
    pub fn components(&self) -> &[Partition] {
        &self.components
    }
}

impl fmt::Display for LambdaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All collections Λ for the multiplicity pattern of μ, in lexicographic
/// order over the per-index canonical partition orders.
pub fn lambda_tuples(mu: &Partition) -> Vec<LambdaTuple> {
    let max = mu.part(0);
    let choices: Vec<Vec<Partition>> = (1..=max)
        .map(|i| enumerate(mu.multiplicity(i)))
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::with_capacity(choices.len());
    fn go(
        choices: &[Vec<Partition>],
        current: &mut Vec<Partition>,
        out: &mut Vec<LambdaTuple>,
    ) {
        if current.len() == choices.len() {
            out.push(LambdaTuple {
                components: current.clone(),
            });
            return;
        }
        for c in &choices[current.len()] {
            current.push(c.clone());
            go(choices, current, out);
            current.pop();
        }
    }
    go(&choices, &mut current, &mut out);
    out
}

/// ch Q_Λ = Π_i s_{λ_i}[h_i], the characteristic of the wreath-product
/// induction; homogeneous of degree k.
pub fn q_lambda(tuple: &LambdaTuple) -> SymFunc {
    let mut acc = SymFunc::one(Basis::Schur);
    for (idx, lam) in tuple.components().iter().enumerate() {
        if lam.is_empty() {
            continue;
        }
        acc = acc.multiply(&schur_pleth_h(lam, idx as u32 + 1));
    }
    acc
}

/// ch R_Λ = Π_i s_{λ_i}, homogeneous of degree l(μ).
pub fn r_lambda(tuple: &LambdaTuple) -> SymFunc {
    let mut acc = SymFunc::one(Basis::Schur);
    for lam in tuple.components() {
        if lam.is_empty() {
            continue;
        }
        acc = acc.multiply(&SymFunc::schur(lam.clone()));
    }
    acc
}

fn pi_cache() -> &'static Mutex<HashMap<(Partition, Partition), RepDecomposition>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), RepDecomposition>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Π(μ,ν) = dim ν · Σ_Λ ⟨π_ν, Q_Λ⟩ R_Λ, decomposed as a representation of
/// 𝔖_{l(μ)}. All multiplicities are nonnegative integers by construction;
/// this is asserted.
pub fn compute_pi(mu: &Partition, nu: &Partition) -> Result<RepDecomposition, Error> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu, nu));
    }
    let key = (mu.clone(), nu.clone());
    if let Some(dec) = pi_cache().lock().unwrap().get(&key) {
        return Ok(dec.clone());
    }

    let l = mu.len() as u32;
    let dim_nu = BigRational::from_integer(BigInt::from(nu.dim()));
    let s_nu = SymFunc::schur(nu.clone());
    let mut acc = SymFunc::zero(Basis::Schur);
    for tuple in lambda_tuples(mu) {
        let mult = s_nu.inner_product(&q_lambda(&tuple));
        if mult.is_zero() {
            continue;
        }
        acc += &r_lambda(&tuple).scale(&(&mult * &dim_nu));
    }
    let dec = RepDecomposition::from_symfunc(l, &acc)?;
    pi_cache().lock().unwrap().insert(key, dec.clone());
    Ok(dec)
}

/// ρ_{μ,ν} as a representation of 𝔖_n: the induction of Π(μ,ν) × Id_{n−l},
/// expanded with the Pieri rule. For n < l(μ) the carrying space is zero and
/// the empty decomposition is returned.
pub fn compute_rho(mu: &Partition, nu: &Partition, n: u32) -> Result<RepDecomposition, Error> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu, nu));
    }
    let l = mu.len() as u32;
    if n < l {
        return Ok(RepDecomposition::empty(n));
    }
    let pi = compute_pi(mu, nu)?;
    let mut mults: BTreeMap<Partition, u64> = BTreeMap::new();
    for (lam, &d) in pi.mults() {
        for (eta, _) in SymFunc::pieri(lam, n - l).terms() {
            *mults.entry(eta.clone()).or_insert(0) += d;
        }
    }
    Ok(RepDecomposition { degree: n, mults })
}

/// The stable symbol T_{μν}: computed at n = 2k where every coefficient has
/// reached its stable value, normalized by dim ν (exact divisibility is
/// asserted), and cross-checked against n = 2k + 1.
pub fn stable_symbol(mu: &Partition, nu: &Partition) -> Result<DecompSymbol, Error> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu, nu));
    }
    let k = mu.size();

    let strip = |dec: &RepDecomposition| -> BTreeMap<Partition, u64> {
        dec.mults()
            .iter()
            .map(|(eta, &m)| (eta.strip_first_row(), m))
            .collect()
    };
    let at_2k = strip(&compute_rho(mu, nu, 2 * k)?);
    let at_2k1 = strip(&compute_rho(mu, nu, 2 * k + 1)?);
    if at_2k != at_2k1 {
        return Err(Error::Integrity(format!(
            "symbol of ({mu},{nu}) differs between n = {} and n = {}",
            2 * k,
            2 * k + 1
        )));
    }

    let dim_nu = nu
        .dim()
        .to_u64()
        .ok_or_else(|| Error::Integrity(format!("dim {nu} overflows u64")))?;
    let mut entries = BTreeMap::new();
    for (lam, m) in at_2k {
        if m % dim_nu != 0 {
            return Err(Error::Integrity(format!(
                "T[{mu},{nu}]^{lam} = {m} is not divisible by dim {nu} = {dim_nu}"
            )));
        }
        entries.insert(lam, m / dim_nu);
    }

    let dominated = nu.dominates(mu)?;
    if entries.is_empty() == dominated {
        return Err(Error::Integrity(format!(
            "triangularity violated for ({mu},{nu})"
        )));
    }

    Ok(DecompSymbol {
        k,
        mu: mu.clone(),
        nu: nu.clone(),
        entries,
    })
}

/// The decomposition of ρ^∞_{μ,ν} into irreducible 𝔖_∞ representations
/// π^∞_λ, λ ⊢ l(μ): exactly the multiplicities of Π(μ,ν).
pub fn infinite_symbol(mu: &Partition, nu: &Partition) -> Result<RepDecomposition, Error> {
    compute_pi(mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn dec(degree: u32, entries: &[(&[u32], u64)]) -> RepDecomposition {
        RepDecomposition {
            degree,
            mults: entries.iter().map(|(k, m)| (p(k), *m)).collect(),
        }
    }

    #[test]
    fn lambda_tuples_for_mixed_mu() {
        // μ = (2,1): m_1 = m_2 = 1, a single tuple ((1),(1)).
        let ts = lambda_tuples(&p(&[2, 1]));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].components(), &[p(&[1]), p(&[1])]);
        // μ = (2,2): m_2 = 2, tuples (∅, λ) for λ ⊢ 2 in canonical order.
        let ts = lambda_tuples(&p(&[2, 2]));
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].components(), &[Partition::empty(), p(&[2])]);
        assert_eq!(ts[1].components(), &[Partition::empty(), p(&[1, 1])]);
        // μ = ∅: the single empty tuple.
        assert_eq!(lambda_tuples(&Partition::empty()).len(), 1);
    }

    #[test]
    fn q_lambda_examples() {
        // μ = (1^k): Q_λ = s_λ.
        let single = LambdaTuple {
            components: vec![p(&[2, 1])],
        };
        assert_eq!(q_lambda(&single), SymFunc::schur(p(&[2, 1])));
        // μ = (2²), Λ = (∅,(1,1)): s_{(1,1)}[h_2] = s_{(3,1)}.
        let t = LambdaTuple {
            components: vec![Partition::empty(), p(&[1, 1])],
        };
        assert_eq!(q_lambda(&t), SymFunc::schur(p(&[3, 1])));
        // μ = (2,1), Λ = ((1),(1)): h_1·h_2 = s_3 + s_{2,1}.
        let t = LambdaTuple {
            components: vec![p(&[1]), p(&[1])],
        };
        let want = &SymFunc::schur(p(&[3])) + &SymFunc::schur(p(&[2, 1]));
        assert_eq!(q_lambda(&t), want);
    }

    #[test]
    fn r_lambda_examples() {
        let t = LambdaTuple {
            components: vec![p(&[1]), p(&[1])],
        };
        let want = &SymFunc::schur(p(&[2])) + &SymFunc::schur(p(&[1, 1]));
        assert_eq!(r_lambda(&t), want);
        let single = LambdaTuple {
            components: vec![p(&[3, 1])],
        };
        assert_eq!(r_lambda(&single), SymFunc::schur(p(&[3, 1])));
        let t = LambdaTuple {
            components: vec![Partition::empty(), p(&[2])],
        };
        assert_eq!(r_lambda(&t), SymFunc::schur(p(&[2])));
    }

    #[test]
    fn compute_pi_examples() {
        assert_eq!(
            compute_pi(&p(&[3]), &p(&[3])).unwrap(),
            dec(1, &[(&[1], 1)])
        );
        assert_eq!(
            compute_pi(&p(&[2, 2]), &p(&[3, 1])).unwrap(),
            dec(2, &[(&[1, 1], 3)])
        );
        assert_eq!(
            compute_pi(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            dec(2, &[(&[2], 2), (&[1, 1], 2)])
        );
        assert_eq!(
            compute_pi(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap(),
            dec(3, &[(&[3], 3), (&[2, 1], 6), (&[1, 1, 1], 3)])
        );
        assert!(compute_pi(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap().is_empty());
    }

    #[test]
    fn compute_rho_examples() {
        assert_eq!(
            compute_rho(&p(&[2]), &p(&[2]), 5).unwrap(),
            dec(5, &[(&[5], 1), (&[4, 1], 1)])
        );
        assert_eq!(
            compute_rho(&p(&[1, 1]), &p(&[2]), 5).unwrap(),
            dec(5, &[(&[5], 1), (&[4, 1], 1), (&[3, 2], 1)])
        );
        assert_eq!(
            compute_rho(&p(&[1, 1, 1]), &p(&[1, 1, 1]), 6).unwrap(),
            dec(6, &[(&[4, 1, 1], 1), (&[3, 1, 1, 1], 1)])
        );
        assert!(compute_rho(&p(&[2, 1]), &p(&[1, 1, 1]), 6).unwrap().is_empty());
        // n below the length of μ carries no tensors at all.
        assert!(compute_rho(&p(&[1, 1, 1]), &p(&[3]), 2).unwrap().is_empty());
        assert!(compute_rho(&p(&[2]), &p(&[3]), 5).is_err());
    }

    #[test]
    fn stable_symbol_examples_from_reference_tables() {
        let sym = stable_symbol(&p(&[2, 1]), &p(&[3])).unwrap();
        let want: BTreeMap<Partition, u64> = [
            (Partition::empty(), 1),
            (p(&[1]), 2),
            (p(&[2]), 1),
            (p(&[1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(sym.entries(), &want);

        let sym = stable_symbol(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap();
        let want: BTreeMap<Partition, u64> = [
            (p(&[1]), 1),
            (p(&[2]), 1),
            (p(&[1, 1]), 1),
            (p(&[2, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(sym.entries(), &want);

        let sym = stable_symbol(&p(&[2, 2]), &p(&[3, 1])).unwrap();
        let want: BTreeMap<Partition, u64> =
            [(p(&[1]), 1), (p(&[1, 1]), 1)].into_iter().collect();
        assert_eq!(sym.entries(), &want);

        let sym = stable_symbol(&p(&[1, 1, 1, 1]), &p(&[2, 2])).unwrap();
        let want: BTreeMap<Partition, u64> = [
            (p(&[2]), 1),
            (p(&[2, 1]), 1),
            (p(&[2, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(sym.entries(), &want);
    }

    #[test]
    fn infinite_symbol_examples() {
        for k in 1..=4u32 {
            let mu = Partition::new(vec![1; k as usize]).unwrap();
            for nu in enumerate(k) {
                let inf = infinite_symbol(&mu, &nu).unwrap();
                let dim = nu.dim().to_u64().unwrap();
                assert_eq!(inf.mults().len(), 1);
                assert_eq!(inf.get(&nu), dim, "ρ^∞ for μ=(1^{k}), ν={nu}");
            }
            assert_eq!(
                infinite_symbol(&p(&[k]), &p(&[k])).unwrap(),
                dec(1, &[(&[1], 1)])
            );
        }
        assert_eq!(
            infinite_symbol(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(),
            dec(3, &[(&[2, 1], 2)])
        );
    }

    #[test]
    fn degenerate_k0_anchor() {
        let empty = Partition::empty();
        let rho = compute_rho(&empty, &empty, 5).unwrap();
        assert_eq!(rho, dec(5, &[(&[5], 1)]));
        let sym = stable_symbol(&empty, &empty).unwrap();
        assert_eq!(sym.entries().len(), 1);
        assert_eq!(sym.entries()[&Partition::empty()], 1);
    }

    #[test]
    fn triangularity_and_stability_small() {
        for k in 0..=4u32 {
            let ps = enumerate(k);
            for mu in &ps {
                for nu in &ps {
                    let rho = compute_rho(mu, nu, 2 * k).unwrap();
                    assert_eq!(
                        !rho.is_empty(),
                        nu.dominates(mu).unwrap(),
                        "triangularity at ({mu},{nu})"
                    );
                    let stripped: Vec<BTreeMap<Partition, u64>> = (0..3)
                        .map(|d| {
                            compute_rho(mu, nu, 2 * k + d)
                                .unwrap()
                                .mults()
                                .iter()
                                .map(|(eta, &m)| (eta.strip_first_row(), m))
                                .collect()
                        })
                        .collect();
                    assert_eq!(stripped[0], stripped[1]);
                    assert_eq!(stripped[1], stripped[2]);
                    // No η̃ can exceed the length of μ.
                    for eta in rho.mults().keys() {
                        assert!(eta.strip_first_row().size() as usize <= mu.len());
                    }
                }
            }
        }
    }

    /// Recomputing the symbol from Π via horizontal strips must agree with
    /// the strip-first-row path: T^κ·dim ν = Σ_{λ ⊇ κ horizontally} d^λ.
    #[test]
    fn symbol_consistent_with_pi_via_strips() {
        use crate::partitions::horizontal_strip;
        for k in 1..=4u32 {
            let ps = enumerate(k);
            for mu in &ps {
                for nu in &ps {
                    let pi = compute_pi(mu, nu).unwrap();
                    let sym = stable_symbol(mu, nu).unwrap();
                    let dim_nu = nu.dim().to_u64().unwrap();
                    let mut from_pi: BTreeMap<Partition, u64> = BTreeMap::new();
                    for (lam, &d) in pi.mults() {
                        for kappa_size in 0..=lam.size() {
                            for kappa in enumerate(kappa_size) {
                                if horizontal_strip(lam, &kappa) {
                                    *from_pi.entry(kappa).or_insert(0) += d;
                                }
                            }
                        }
                    }
                    from_pi.retain(|_, m| *m > 0);
                    let scaled: BTreeMap<Partition, u64> = sym
                        .entries()
                        .iter()
                        .map(|(k2, &m)| (k2.clone(), m * dim_nu))
                        .collect();
                    assert_eq!(from_pi, scaled, "({mu},{nu})");
                }
            }
        }
    }

    #[test]
    fn symbol_dimension_cross_check() {
        // Σ entries · dim(2k−|λ|, λ) · dim ν reproduces dim ρ at n = 2k.
        for k in 1..=4u32 {
            let ps = enumerate(k);
            for mu in &ps {
                for nu in &ps {
                    let sym = stable_symbol(mu, nu).unwrap();
                    let rho = compute_rho(mu, nu, 2 * k).unwrap();
                    let dim_nu = BigUint::from(nu.dim().to_u64().unwrap());
                    let total: BigUint = sym
                        .entries()
                        .iter()
                        .map(|(lam, &m)| {
                            lam.pad_to(2 * k).unwrap().dim() * BigUint::from(m)
                        })
                        .sum();
                    assert_eq!(total * dim_nu, rho.dimension());
                }
            }
        }
    }

    #[test]
    fn serialization_shapes() {
        let rho = compute_rho(&p(&[1, 1]), &p(&[2]), 4).unwrap();
        let json = serde_json::to_value(&rho).unwrap();
        assert_eq!(json["degree"], 4);
        assert_eq!(json["terms"][0]["partition"], serde_json::json!([4]));
        assert_eq!(json["terms"][0]["mult"], 1);

        let sym = stable_symbol(&p(&[2, 1]), &p(&[3])).unwrap();
        let json = serde_json::to_value(&sym).unwrap();
        assert_eq!(json["entries"][0]["partition"], serde_json::json!([]));
        assert_eq!(json["mu"], serde_json::json!([2, 1]));
    }
}
