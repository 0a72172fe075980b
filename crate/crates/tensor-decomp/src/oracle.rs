//! Independent brute-force computation of the multiplicities a_{μν}^η by
//! fixed-point counting over conjugacy classes of 𝔖_n × 𝔖_k.
//!
//! The two commuting actions on basis tensors are realized on raw index
//! tuples: a value permutation g relabels entries, a position permutation σ
//! permutes slots. Counting the tuples of content type μ fixed by a class
//! pair gives the joint character trace, and orthogonality recovers every
//! multiplicity. Nothing here shares code with the formula path in
//! [`crate::decomp`] beyond characters and partitions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::characters::{classes, mn_character};
use crate::decomp::RepDecomposition;
use crate::error::Error;
use crate::partitions::{enumerate, factorial, Partition};

/// Size limits guarding the n^k enumeration; override explicitly to go
/// beyond.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_n: u32,
    pub max_k: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds { max_n: 7, max_k: 4 }
    }
}

impl OracleBounds {
    pub fn unlimited() -> Self {
        OracleBounds {
            max_n: u32::MAX,
            max_k: u32::MAX,
        }
    }

    pub fn check(&self, n: u32, k: u32) -> Result<(), Error> {
        if n > self.max_n || k > self.max_k {
            return Err(Error::OracleBounds {
                n,
                k,
                max_n: self.max_n,
                max_k: self.max_k,
            });
        }
        Ok(())
    }
}

/// A permutation of {0, …, n−1}, stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPartition(
                    "image vector is not a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Canonical class representative: cycles in decreasing length laid out
    /// on consecutive points.
    pub fn from_cycle_type(cycle_type: &Partition) -> Self {
        let n = cycle_type.size() as usize;
        let mut images = vec![0usize; n];
        let mut start = 0usize;
        for &len in cycle_type.parts() {
            let len = len as usize;
            for offset in 0..len {
                images[start + offset] = start + (offset + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// h·self·h⁻¹.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        let n = self.degree();
        let mut images = vec![0usize; n];
        for i in 0..n {
            images[h.image(i)] = h.image(self.image(i));
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

/// Number of index tuples (i_1, …, i_k) over {1, …, n} of content type μ with
/// g(i_{σ⁻¹(t)}) = i_t for every position t, by exhaustive enumeration of all
/// n^k tuples.
pub fn count_fixed(mu: &Partition, g: &Permutation, sigma: &Permutation) -> Result<u64, Error> {
    let k = sigma.degree();
    if mu.size() as usize != k {
        return Err(Error::size_mismatch(mu, &sigma.cycle_type()));
    }
    let n = g.degree();
    if k == 0 {
        return Ok(1);
    }
    if n == 0 {
        return Ok(0);
    }

    let sigma_inv = sigma.inverse();
    let mut mu_counts = mu.parts().to_vec();
    mu_counts.sort_unstable();

    let mut tuple = vec![0usize; k];
    let mut count = 0u64;
    let mut value_counts = vec![0u32; n];
    'outer: loop {
        let fixed = (0..k).all(|t| g.image(tuple[sigma_inv.image(t)]) == tuple[t]);
        if fixed {
            value_counts.iter_mut().for_each(|c| *c = 0);
            for &i in &tuple {
                value_counts[i] += 1;
            }
            let mut content: Vec<u32> =
                value_counts.iter().copied().filter(|&c| c > 0).collect();
            content.sort_unstable();
            if content == mu_counts {
                count += 1;
            }
        }
        // odometer increment
        for slot in (0..k).rev() {
            tuple[slot] += 1;
            if tuple[slot] < n {
                continue 'outer;
            }
            tuple[slot] = 0;
        }
        break;
    }
    Ok(count)
}

/// Fix_μ(g,σ) for every pair of conjugacy classes of 𝔖_n × 𝔖_k.
#[derive(Clone, Debug)]
pub struct FixedCountTable {
    mu: Partition,
    n: u32,
    counts: BTreeMap<(Partition, Partition), u64>,
}

impl FixedCountTable {
    pub fn build(mu: &Partition, n: u32) -> Self {
        let k = mu.size();
        let g_types = enumerate(n);
        let s_types = enumerate(k);
        let pairs: Vec<(Partition, Partition)> = g_types
            .iter()
            .flat_map(|g| s_types.iter().map(move |s| (g.clone(), s.clone())))
            .collect();
        let counts: BTreeMap<(Partition, Partition), u64> = pairs
            .into_par_iter()
            .map(|(gt, st)| {
                let g = Permutation::from_cycle_type(&gt);
                let s = Permutation::from_cycle_type(&st);
                let fix = count_fixed(mu, &g, &s).expect("sizes agree");
                ((gt, st), fix)
            })
            .collect();
        FixedCountTable {
            mu: mu.clone(),
            n,
            counts,
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn count(&self, g_type: &Partition, sigma_type: &Partition) -> u64 {
        self.counts
            .get(&(g_type.clone(), sigma_type.clone()))
            .copied()
            .unwrap_or(0)
    }
}

type FixCache = Mutex<HashMap<(Partition, u32), Arc<FixedCountTable>>>;

fn fix_cache() -> &'static FixCache {
    static CACHE: OnceLock<FixCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn fixed_counts(mu: &Partition, n: u32) -> Arc<FixedCountTable> {
    let key = (mu.clone(), n);
    if let Some(t) = fix_cache().lock().unwrap().get(&key) {
        return Arc::clone(t);
    }
    let table = Arc::new(FixedCountTable::build(mu, n));
    fix_cache().lock().unwrap().insert(key, Arc::clone(&table));
    table
}

/// Ground-truth decomposition of ρ_{μ,ν} by character orthogonality:
/// a^η = dim ν · (n!·k!)⁻¹ Σ |C_g||C_σ| χ^η(g) χ^ν(σ) Fix_μ(g,σ).
/// Every multiplicity is asserted to come out a nonnegative integer.
pub fn oracle_rho(
    mu: &Partition,
    nu: &Partition,
    n: u32,
    bounds: &OracleBounds,
) -> Result<RepDecomposition, Error> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu, nu));
    }
    let k = mu.size();
    bounds.check(n, k)?;

    let table = fixed_counts(mu, n);
    let g_classes = classes(n);
    let s_classes = classes(k);
    let dim_nu = i128::try_from(nu.dim())
        .map_err(|_| Error::Integrity(format!("dim {nu} overflows i128")))?;
    let order = (factorial(n as u64) * factorial(k as u64)) as i128;

    // Weighted fixed counts per g-class; the η loop reuses them.
    let mut sigma_weighted: Vec<(Partition, u128, i128)> = Vec::with_capacity(g_classes.len());
    for gc in &g_classes {
        let mut acc = 0i128;
        for sc in &s_classes {
            let fix = table.count(gc.cycle_type(), sc.cycle_type());
            if fix == 0 {
                continue;
            }
            let chi_nu = mn_character(nu, sc.cycle_type())? as i128;
            acc += sc.class_size() as i128 * chi_nu * fix as i128;
        }
        sigma_weighted.push((gc.cycle_type().clone(), gc.class_size(), acc));
    }

    let mut mults = BTreeMap::new();
    for eta in enumerate(n) {
        let mut total = 0i128;
        for (g_type, g_size, weighted) in &sigma_weighted {
            if *weighted == 0 {
                continue;
            }
            let chi_eta = mn_character(&eta, g_type)? as i128;
            total += *g_size as i128 * chi_eta * weighted;
        }
        let numerator = dim_nu * total;
        if numerator % order != 0 || numerator < 0 {
            return Err(Error::Integrity(format!(
                "oracle multiplicity of {eta} in ρ[{mu},{nu}] is {numerator}/{order}"
            )));
        }
        let mult = (numerator / order) as u64;
        if mult > 0 {
            mults.insert(eta, mult);
        }
    }
    RepDecomposition::from_mults(n, mults)
}

/// dim ℋ_{μ,ν} from the σ-sum alone (g = identity):
/// dim ν · (k!)⁻¹ Σ_σ |C_σ| χ^ν(σ) Fix_μ(id, σ).
pub fn oracle_dim(
    mu: &Partition,
    nu: &Partition,
    n: u32,
    bounds: &OracleBounds,
) -> Result<u64, Error> {
    if mu.size() != nu.size() {
        return Err(Error::size_mismatch(mu, nu));
    }
    let k = mu.size();
    bounds.check(n, k)?;

    let table = fixed_counts(mu, n);
    let id_type = Partition::new(vec![1; n as usize]).expect("identity cycle type");
    let mut total = 0i128;
    for sc in classes(k) {
        let fix = table.count(&id_type, sc.cycle_type());
        if fix == 0 {
            continue;
        }
        let chi_nu = mn_character(nu, sc.cycle_type())? as i128;
        total += sc.class_size() as i128 * chi_nu * fix as i128;
    }
    let dim_nu = i128::try_from(nu.dim())
        .map_err(|_| Error::Integrity(format!("dim {nu} overflows i128")))?;
    let kf = factorial(k as u64) as i128;
    let numerator = dim_nu * total;
    if numerator % kf != 0 || numerator < 0 {
        return Err(Error::Integrity(format!(
            "oracle dimension of ({mu},{nu}) is {numerator}/{kf}"
        )));
    }
    Ok((numerator / kf) as u64)
}

/// Fix_μ at (identity, identity): the number of type-μ tuples, in closed
/// form. Used to cross-check the enumeration.
pub fn tuple_count(mu: &Partition, n: u32) -> u64 {
    let l = mu.len() as u32;
    if l > n {
        return 0;
    }
    let falling: u128 = (0..l).map(|i| (n - i) as u128).product();
    let mut denom = 1u128;
    let mut arrangements = factorial(mu.size() as u64);
    for (v, m) in mu.multiplicities() {
        denom *= factorial(m as u64);
        for _ in 0..m {
            arrangements /= factorial(v as u64);
        }
    }
    (falling / denom * arrangements) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::compute_rho;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let g = Permutation::from_cycle_type(&p(&[3, 2, 2]));
        assert_eq!(g.degree(), 7);
        assert_eq!(g.cycle_type(), p(&[3, 2, 2]));
        assert_eq!(g.inverse().cycle_type(), p(&[3, 2, 2]));
        let id = Permutation::identity(5);
        assert_eq!(id.cycle_type(), p(&[1, 1, 1, 1, 1]));
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn count_fixed_examples() {
        let id3 = Permutation::identity(3);
        let id2 = Permutation::identity(2);
        assert_eq!(count_fixed(&p(&[1, 1]), &id3, &id2).unwrap(), 6);

        let swap = Permutation::from_cycle_type(&p(&[2]));
        assert_eq!(count_fixed(&p(&[1, 1]), &id3, &swap).unwrap(), 0);

        // g = (12) in 𝔖₃, σ = id, μ = (2): only the tuple (3,3) survives.
        let g = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(count_fixed(&p(&[2]), &g, &id2).unwrap(), 1);
    }

    #[test]
    fn identity_counts_match_closed_form() {
        for n in 0..=5u32 {
            for k in 0..=3u32 {
                for mu in enumerate(k) {
                    let id_n = Permutation::identity(n as usize);
                    let id_k = Permutation::identity(k as usize);
                    assert_eq!(
                        count_fixed(&mu, &id_n, &id_k).unwrap(),
                        tuple_count(&mu, n),
                        "mu = {mu}, n = {n}"
                    );
                }
            }
        }
    }

    /// Fix is a class function in each argument: canonical representatives
    /// and conjugated ones must agree.
    #[test]
    fn fixed_count_is_a_class_function() {
        let reverse = |n: usize| {
            Permutation::from_images((0..n).rev().collect()).unwrap()
        };
        for n in 1..=5u32 {
            for mu in enumerate(3) {
                for gt in enumerate(n) {
                    for st in enumerate(3) {
                        let g = Permutation::from_cycle_type(&gt);
                        let s = Permutation::from_cycle_type(&st);
                        let g2 = g.conjugate_by(&reverse(n as usize));
                        let s2 = s.conjugate_by(&reverse(3));
                        assert_eq!(g2.cycle_type(), gt);
                        assert_eq!(
                            count_fixed(&mu, &g, &s).unwrap(),
                            count_fixed(&mu, &g2, &s2).unwrap(),
                            "mu={mu}, g={gt}, s={st}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_rho_examples() {
        let bounds = OracleBounds::default();
        let got = oracle_rho(&p(&[1, 1]), &p(&[2]), 4, &bounds).unwrap();
        assert_eq!(got, compute_rho(&p(&[1, 1]), &p(&[2]), 4).unwrap());
        assert_eq!(got.get(&p(&[2, 2])), 1);

        let got = oracle_rho(&p(&[3]), &p(&[3]), 5, &bounds).unwrap();
        assert_eq!(got.mults().len(), 2);
        assert_eq!(got.get(&p(&[5])), 1);
        assert_eq!(got.get(&p(&[4, 1])), 1);

        assert!(oracle_rho(&p(&[2, 1]), &p(&[1, 1, 1]), 5, &bounds)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn oracle_dim_examples() {
        let bounds = OracleBounds::default();
        assert_eq!(oracle_dim(&p(&[1, 1]), &p(&[1, 1]), 3, &bounds).unwrap(), 3);
        assert_eq!(oracle_dim(&p(&[2]), &p(&[1, 1]), 4, &bounds).unwrap(), 0);
        let total: u64 = enumerate(2)
            .iter()
            .flat_map(|mu| {
                enumerate(2)
                    .into_iter()
                    .map(|nu| oracle_dim(mu, &nu, 3, &bounds).unwrap())
            })
            .sum();
        assert_eq!(total, 9);
    }

    #[test]
    fn oracle_agrees_with_formula_at_small_sizes() {
        let bounds = OracleBounds::default();
        for k in 0..=2u32 {
            for n in 1..=5u32 {
                for mu in enumerate(k) {
                    for nu in enumerate(k) {
                        assert_eq!(
                            oracle_rho(&mu, &nu, n, &bounds).unwrap(),
                            compute_rho(&mu, &nu, n).unwrap(),
                            "(mu,nu,n) = ({mu},{nu},{n})"
                        );
                    }
                }
            }
        }
    }

    /// The symbol's dimension bookkeeping against the independent path:
    /// dim ν · Σ T[λ]·dim(2k−|λ|, λ) must equal the oracle dimension at 2k.
    #[test]
    fn symbol_weights_reproduce_oracle_dimension() {
        use num_traits::ToPrimitive;
        let bounds = OracleBounds::default();
        for k in 1..=3u32 {
            for mu in enumerate(k) {
                for nu in enumerate(k) {
                    let sym = crate::decomp::stable_symbol(&mu, &nu).unwrap();
                    let dim_nu = nu.dim().to_u64().unwrap();
                    let weighted: u64 = sym
                        .entries()
                        .iter()
                        .map(|(lam, &m)| {
                            m * lam.pad_to(2 * k).unwrap().dim().to_u64().unwrap()
                        })
                        .sum();
                    let reference = oracle_dim(&mu, &nu, 2 * k, &bounds).unwrap();
                    assert_eq!(weighted * dim_nu, reference, "({mu},{nu})");
                }
            }
        }
    }

    #[test]
    fn bounds_are_enforced_and_overridable() {
        let bounds = OracleBounds::default();
        assert!(matches!(
            oracle_rho(&p(&[1]), &p(&[1]), 8, &bounds),
            Err(Error::OracleBounds { .. })
        ));
        assert!(oracle_rho(&p(&[1]), &p(&[1]), 8, &OracleBounds::unlimited()).is_ok());
    }
}
