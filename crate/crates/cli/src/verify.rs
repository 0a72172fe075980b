//! The named verification suites behind `tensor-decomp verify`.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use tensor_decomp::decomp::{
    compute_rho, reference_symbols, stable_symbol, symbol_table, verify_identities,
};
use tensor_decomp::oracle::{oracle_dim, oracle_rho, OracleBounds};
use tensor_decomp::partitions::{enumerate, Partition};
use tensor_decomp::Error;

pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn pass(label: String) -> Self {
        Check {
            label,
            passed: true,
            detail: None,
        }
    }

    fn fail(label: String, detail: String) -> Self {
        Check {
            label,
            passed: false,
            detail: Some(detail),
        }
    }

    fn from_eq<T: PartialEq + std::fmt::Debug>(label: String, got: T, want: T) -> Self {
        if got == want {
            Check::pass(label)
        } else {
            Check::fail(label, format!("got {got:?}, expected {want:?}"))
        }
    }
}

/// Cell-for-cell comparison of the computed k = 3 and k = 4 tables against
/// the tabulated known answers.
pub fn tables() -> Vec<Check> {
    let mut checks = Vec::new();
    for k in [3u32, 4] {
        let reference = reference_symbols(k).expect("reference data for k = 3, 4");
        let table = match symbol_table(k) {
            Ok(t) => t,
            Err(e) => {
                checks.push(Check::fail(format!("table k={k}"), e.to_string()));
                continue;
            }
        };
        checks.push(Check::from_eq(
            format!("table k={k}: nonzero cell count"),
            table.nonzero_count(),
            reference.len(),
        ));
        for (mu, nu, symbol) in reference {
            let label = format!("table k={k}: cell ({mu},{nu})");
            let i = table.labels().iter().position(|l| *l == mu).unwrap();
            let j = table.labels().iter().position(|l| *l == nu).unwrap();
            let want: BTreeMap<Partition, u64> = symbol.into_iter().collect();
            match table.cell(i, j) {
                Some(cell) => checks.push(Check::from_eq(label, cell.entries().clone(), want)),
                None => checks.push(Check::fail(label, "cell is zero".to_string())),
            }
        }
    }
    checks
}

/// Formula vs brute force for every (μ,ν,n) with k' ≤ k and n' ≤ n, plus the
/// total-dimension count n^k on both paths.
pub fn oracle(k: u32, n: u32, force: bool) -> Result<Vec<Check>, Error> {
    let bounds = if force {
        OracleBounds::unlimited()
    } else {
        OracleBounds::default()
    };
    let mut checks = Vec::new();
    for k_cur in 0..=k {
        let shapes = enumerate(k_cur);
        for n_cur in 1..=n {
            let mut all_match = true;
            let mut first_failure = None;
            let mut formula_total = BigUint::from(0u32);
            let mut oracle_total = 0u64;
            for mu in &shapes {
                for nu in &shapes {
                    let formula = compute_rho(mu, nu, n_cur)?;
                    let reference = oracle_rho(mu, nu, n_cur, &bounds)?;
                    if formula != reference {
                        all_match = false;
                        first_failure.get_or_insert(format!(
                            "({mu},{nu}): formula {formula}, oracle {reference}"
                        ));
                    }
                    formula_total += formula.dimension();
                    oracle_total += oracle_dim(mu, nu, n_cur, &bounds)?;
                }
            }
            let label = format!("oracle agreement k={k_cur}, n={n_cur}");
            checks.push(if all_match {
                Check::pass(label)
            } else {
                Check::fail(label, first_failure.unwrap_or_default())
            });
            let expected = BigUint::from(n_cur).pow(k_cur);
            checks.push(Check::from_eq(
                format!("total dimension n^k at k={k_cur}, n={n_cur}"),
                (formula_total, BigUint::from(oracle_total)),
                (expected.clone(), expected),
            ));
        }
    }
    Ok(checks)
}

/// The per-(n,k) characteristic identities for all k' ≤ k, k' ≤ n' ≤ n.
pub fn identities(k: u32, n: u32) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for k_cur in 0..=k {
        for n_cur in k_cur..=n {
            let report = verify_identities(n_cur, k_cur)?;
            for c in report.checks {
                checks.push(Check {
                    label: format!("identities (n={n_cur},k={k_cur}) {}", c.label),
                    passed: c.passed,
                    detail: c.detail,
                });
            }
        }
    }
    Ok(checks)
}

/// Upper triangularity at n = 2k' and coefficient stability across
/// n ∈ {2k', 2k'+1, 2k'+2}, for all k' ≤ k; the symbol computation also
/// asserts dim-ν divisibility internally.
pub fn stability(k: u32) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for k_cur in 0..=k {
        let shapes = enumerate(k_cur);
        let mut triangular = true;
        let mut stable = true;
        let mut detail = None;
        for mu in &shapes {
            for nu in &shapes {
                let rho = compute_rho(mu, nu, 2 * k_cur)?;
                if !rho.is_empty() != nu.dominates(mu)? {
                    triangular = false;
                    detail.get_or_insert(format!("triangularity fails at ({mu},{nu})"));
                }
                let stripped: Vec<BTreeMap<Partition, u64>> = (0..3)
                    .map(|d| {
                        compute_rho(mu, nu, 2 * k_cur + d).map(|dec| {
                            dec.mults()
                                .iter()
                                .map(|(eta, &m)| (eta.strip_first_row(), m))
                                .collect()
                        })
                    })
                    .collect::<Result<_, _>>()?;
                if stripped[0] != stripped[1] || stripped[1] != stripped[2] {
                    stable = false;
                    detail.get_or_insert(format!("stability fails at ({mu},{nu})"));
                }
                // Exercises the divisibility and cross-n integrity checks.
                stable_symbol(mu, nu)?;
            }
        }
        checks.push(if triangular {
            Check::pass(format!("upper triangularity k={k_cur}"))
        } else {
            Check::fail(
                format!("upper triangularity k={k_cur}"),
                detail.clone().unwrap_or_default(),
            )
        });
        checks.push(if stable {
            Check::pass(format!("stability across 2k..2k+2, k={k_cur}"))
        } else {
            Check::fail(
                format!("stability across 2k..2k+2, k={k_cur}"),
                detail.unwrap_or_default(),
            )
        });
    }
    Ok(checks)
}

pub fn all(k: u32, n: u32, force: bool) -> Result<Vec<Check>, Error> {
    let mut checks = tables();
    checks.extend(oracle(k, n, force)?);
    checks.extend(identities(k, n)?);
    checks.extend(stability(k)?);
    Ok(checks)
}
