//! Integer partitions in canonical form, with the orderings, statistics, and
//! enumerations the rest of the engine is built on.
//!
//! A [`Partition`] is an immutable, weakly decreasing sequence of positive
//! integers; the empty sequence is the unique partition of 0. `Ord` follows
//! the canonical enumeration order (by size, then reverse-lexicographic), so
//! `BTreeMap<Partition, _>` iterates canonically everywhere in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// Hard cap on the number of parts the text parser will produce. Exponential
/// syntax would otherwise let a short string allocate an enormous partition.
const MAX_PARSED_PARTS: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and out-of-order sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, 0-based, padded with zeros past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// m_v(λ), the number of parts equal to `v`.
    pub fn multiplicity(&self, v: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == v).count() as u32
    }

    /// Nonzero `(part value, multiplicity)` pairs, ascending in part value.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Column-transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut j = 0u32;
        loop {
            let count = self.parts.iter().filter(|&&p| p > j).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            j += 1;
        }
        Partition { parts }
    }

    /// Diagram containment: every row of `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Dominance order: `self ⊵ other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`. Only defined between
    /// partitions of the same integer.
    pub fn dominates(&self, other: &Partition) -> Result<bool, Error> {
        if self.size() != other.size() {
            return Err(Error::size_mismatch(self, other));
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula; equals the dimension of the corresponding irreducible.
    pub fn dim(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = (row as u64 - j as u64) + (conj.part(j) as u64 - i as u64) - 1;
                hooks *= BigUint::from(hook);
            }
        }
        let nf = factorial_big(self.size() as u64);
        debug_assert!((&nf % &hooks) == BigUint::from(0u32));
        nf / hooks
    }

    /// Frobenius coordinates `(arms | legs)`: a_i = λ_i − i, b_i = λ'_i − i
    /// (1-based) for i up to the Durfee square size.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        let mut i = 0usize;
        while self.part(i) as usize > i {
            arms.push(self.part(i) - i as u32 - 1);
            legs.push(conj.part(i) - i as u32 - 1);
            i += 1;
        }
        (arms, legs)
    }

    /// Rebuilds the partition with the given Frobenius coordinates.
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition, Error> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(
                "Frobenius coordinates need equally many arms and legs".into(),
            ));
        }
        for seq in [arms, legs] {
            if !seq.windows(2).all(|w| w[0] > w[1]) {
                return Err(Error::InvalidPartition(
                    "Frobenius coordinates must be strictly decreasing".into(),
                ));
            }
        }
        let d = arms.len();
        let mut parts: Vec<u32> = (0..d).map(|i| arms[i] + i as u32 + 1).collect();
        let mut r = d;
        loop {
            let len = legs
                .iter()
                .enumerate()
                .filter(|&(j, &b)| b as usize + j + 1 > r)
                .count() as u32;
            if len == 0 {
                break;
            }
            parts.push(len);
            r += 1;
        }
        Partition::new(parts)
    }

    /// η̃: the diagram with its first row removed.
    pub fn strip_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.get(1..).map(<[u32]>::to_vec).unwrap_or_default(),
        }
    }

    /// `(n − |λ|, λ)`: prepends a first row so that the total size is `n`.
    /// Fails when the new row would be shorter than the current first row.
    pub fn pad_to(&self, n: u32) -> Result<Partition, Error> {
        let first = n
            .checked_sub(self.size())
            .ok_or_else(|| Error::InvalidPartition(format!("{self} does not fit inside {n}")))?;
        if self.is_empty() {
            return if first == 0 {
                Ok(Partition::empty())
            } else {
                Partition::new(vec![first])
            };
        }
        if first < self.part(0) {
            return Err(Error::InvalidPartition(format!(
                "first row {first} shorter than {} in ({first}, {self})",
                self.part(0)
            )));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Centralizer order z_λ = Π_i i^{m_i} · m_i! of a permutation with this
    /// cycle type.
    pub fn centralizer_order(&self) -> u128 {
        assert!(self.size() <= 33, "centralizer order overflows u128");
        let mut z = 1u128;
        for (v, m) in self.multiplicities() {
            z *= (v as u128).pow(m);
            z *= factorial(m as u64);
        }
        z
    }

    /// Compressed exponential rendering mirroring the table layout:
    /// `(21^2)` for (2,1,1), `(2^2)` for (2,2), `∅` for the empty partition.
    /// Falls back to comma separators when a part has several digits.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let sep = if self.parts.iter().all(|&p| p <= 9) {
            ""
        } else {
            ","
        };
        let pieces: Vec<String> = self
            .multiplicities()
            .into_iter()
            .rev()
            .map(|(v, m)| {
                if m == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{m}")
                }
            })
            .collect();
        format!("({})", pieces.join(sep))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Partition {
    /// Canonical order: by size first, then reverse-lexicographic on parts,
    /// matching the order produced by [`enumerate`].
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| {
            for (a, b) in self.parts.iter().zip(&other.parts) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            self.parts.len().cmp(&other.parts.len())
        })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text syntax accepted everywhere in the CLI: a comma list `3,1,1`, the
/// exponential form `1^2,3` (meaning (3,1,1)), and `0` or the empty string
/// for the empty partition. Parts are sorted into canonical order.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts: Vec<u32> = Vec::new();
        for item in t.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(err("empty entry"));
            }
            let (value, count) = match item.split_once('^') {
                Some((base, exp)) => {
                    let base: u32 = base
                        .trim()
                        .parse()
                        .map_err(|_| err("exponential entry needs the form part^count"))?;
                    let exp: usize = exp
                        .trim()
                        .parse()
                        .map_err(|_| err("exponential entry needs the form part^count"))?;
                    (base, exp)
                }
                None => {
                    let v: u32 = item.parse().map_err(|_| err("not a positive integer"))?;
                    (v, 1)
                }
            };
            if value == 0 {
                return Err(err("parts must be positive (∅ is written \"0\" alone)"));
            }
            if count > MAX_PARSED_PARTS || parts.len() + count > MAX_PARSED_PARTS {
                return Err(err("too many parts"));
            }
            parts.extend(std::iter::repeat_n(value, count));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// All partitions of `n`, exactly once, in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last. The count equals p(n).
pub fn enumerate(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// True iff `kappa ⊆ lambda` and `lambda/kappa` has at most one cell per
/// column, i.e. the rows interlace: λ_1 ≥ κ_1 ≥ λ_2 ≥ κ_2 ≥ ….
pub fn horizontal_strip(lambda: &Partition, kappa: &Partition) -> bool {
    for i in 0..lambda.len().max(kappa.len()) {
        if lambda.part(i) < kappa.part(i) || kappa.part(i) < lambda.part(i + 1) {
            return false;
        }
    }
    true
}

pub(crate) fn factorial(n: u64) -> u128 {
    assert!(n <= 33, "factorial overflows u128");
    (1..=n as u128).product()
}

pub(crate) fn factorial_big(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 1..=n {
        out *= BigUint::from(i);
    }
    out
}
