//! The full matrix of stable symbols over μ,ν ⊢ k, with Markdown, TeX, and
//! JSON renderings, plus the independently tabulated k = 3 and k = 4 symbol
//! tables used as known answers by the verification suite.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{stable_symbol, DecompSymbol};
use crate::error::Error;
use crate::partitions::{enumerate, Partition};

/// Stable symbols T_{μν} for all μ,ν ⊢ k; `None` marks the zero cells below
/// the dominance diagonal.
#[derive(Clone, Debug)]
pub struct SymbolTable {
    k: u32,
    labels: Vec<Partition>,
    cells: Vec<Vec<Option<DecompSymbol>>>,
}

/// Computes the whole table; rows are independent and run in parallel.
pub fn symbol_table(k: u32) -> Result<SymbolTable, Error> {
    let labels = enumerate(k);
    let cells: Vec<Vec<Option<DecompSymbol>>> = labels
        .par_iter()
        .map(|mu| {
            labels
                .iter()
                .map(|nu| {
                    stable_symbol(mu, nu).map(|s| if s.is_empty() { None } else { Some(s) })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SymbolTable { k, labels, cells })
}

impl SymbolTable {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Row and column labels, in canonical order.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn cell(&self, mu_idx: usize, nu_idx: usize) -> Option<&DecompSymbol> {
        self.cells[mu_idx][nu_idx].as_ref()
    }

    pub fn nonzero_count(&self) -> usize {
        self.cells
            .iter()
            .flat_map(|row| row.iter())
            .filter(|c| c.is_some())
            .count()
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| μ\\ν |");
        for nu in &self.labels {
            out.push_str(&format!(" {} |", nu.compact()));
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in &self.labels {
            out.push_str("---|");
        }
        out.push('\n');
        for (i, mu) in self.labels.iter().enumerate() {
            out.push_str(&format!("| {} |", mu.compact()));
            for j in 0..self.labels.len() {
                match &self.cells[i][j] {
                    Some(sym) => out.push_str(&format!(" {} |", sym.render())),
                    None => out.push_str("  |"),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_tex(&self) -> String {
        let tex_shape = |p: &Partition| {
            if p.is_empty() {
                return r"\emptyset".to_string();
            }
            let body: String = p
                .multiplicities()
                .into_iter()
                .rev()
                .map(|(v, m)| {
                    if m == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{{{m}}}")
                    }
                })
                .collect();
            format!("({body})")
        };
        let cell = |sym: &DecompSymbol| {
            sym.entries()
                .iter()
                .map(|(key, &m)| {
                    let shape = tex_shape(key);
                    if m == 1 {
                        shape
                    } else {
                        format!(r"{m}\cdot {shape}")
                    }
                })
                .collect::<Vec<_>>()
                .join("+")
        };
        let mut out = String::new();
        out.push_str(&format!(
            "\\begin{{tabular}}{{|c|{}}}\n\\hline\n",
            "c|".repeat(self.labels.len())
        ));
        out.push_str("$\\mu\\backslash\\nu$");
        for nu in &self.labels {
            out.push_str(&format!("&${}$", tex_shape(nu)));
        }
        out.push_str("\\\\\\hline\n");
        for (i, mu) in self.labels.iter().enumerate() {
            out.push_str(&format!("${}$", tex_shape(mu)));
            for j in 0..self.labels.len() {
                match &self.cells[i][j] {
                    Some(sym) => out.push_str(&format!("&${}$", cell(sym))),
                    None => out.push('&'),
                }
            }
            out.push_str("\\\\\\hline\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

impl Serialize for SymbolTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            mu: &'a [u32],
            cells: Vec<Option<&'a DecompSymbol>>,
        }
        let mut st = serializer.serialize_struct("SymbolTable", 3)?;
        st.serialize_field("k", &self.k)?;
        let labels: Vec<&[u32]> = self.labels.iter().map(Partition::parts).collect();
        st.serialize_field("labels", &labels)?;
        let rows: Vec<Row> = self
            .labels
            .iter()
            .zip(&self.cells)
            .map(|(mu, row)| Row {
                mu: mu.parts(),
                cells: row.iter().map(Option::as_ref).collect(),
            })
            .collect();
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// One tabulated cell: (μ, ν, normalized symbol entries).
pub type ReferenceSymbol = (Partition, Partition, Vec<(Partition, u64)>);

/// Independently tabulated stable symbols for k = 3 and k = 4. Each entry is
/// (μ, ν, normalized symbol); pairs not listed are zero. These are the fixed
/// expected values behind `verify --suite tables`.
pub fn reference_symbols(k: u32) -> Option<Vec<ReferenceSymbol>> {
    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn entry(
        mu: &[u32],
        nu: &[u32],
        symbol: &[(&[u32], u64)],
    ) -> (Partition, Partition, Vec<(Partition, u64)>) {
        (
            p(mu),
            p(nu),
            symbol.iter().map(|(s, m)| (p(s), *m)).collect(),
        )
    }

    match k {
        3 => Some(vec![
            entry(&[3], &[3], &[(&[], 1), (&[1], 1)]),
            entry(&[2, 1], &[3], &[(&[], 1), (&[1], 2), (&[2], 1), (&[1, 1], 1)]),
            entry(&[2, 1], &[2, 1], &[(&[], 1), (&[1], 2), (&[2], 1), (&[1, 1], 1)]),
            entry(
                &[1, 1, 1],
                &[3],
                &[(&[], 1), (&[1], 1), (&[2], 1), (&[3], 1)],
            ),
            entry(
                &[1, 1, 1],
                &[2, 1],
                &[(&[1], 1), (&[2], 1), (&[1, 1], 1), (&[2, 1], 1)],
            ),
            entry(&[1, 1, 1], &[1, 1, 1], &[(&[1, 1], 1), (&[1, 1, 1], 1)]),
        ]),
        4 => Some(vec![
            entry(&[4], &[4], &[(&[], 1), (&[1], 1)]),
            entry(&[3, 1], &[4], &[(&[], 1), (&[1], 2), (&[2], 1), (&[1, 1], 1)]),
            entry(
                &[3, 1],
                &[3, 1],
                &[(&[], 1), (&[1], 2), (&[2], 1), (&[1, 1], 1)],
            ),
            entry(&[2, 2], &[4], &[(&[], 1), (&[1], 1), (&[2], 1)]),
            entry(&[2, 2], &[3, 1], &[(&[1], 1), (&[1, 1], 1)]),
            entry(&[2, 2], &[2, 2], &[(&[], 1), (&[1], 1), (&[2], 1)]),
            entry(
                &[2, 1, 1],
                &[4],
                &[
                    (&[], 1),
                    (&[1], 2),
                    (&[2], 2),
                    (&[1, 1], 1),
                    (&[3], 1),
                    (&[2, 1], 1),
                ],
            ),
            entry(
                &[2, 1, 1],
                &[3, 1],
                &[
                    (&[], 1),
                    (&[1], 3),
                    (&[2], 3),
                    (&[1, 1], 3),
                    (&[3], 1),
                    (&[2, 1], 2),
                    (&[1, 1, 1], 1),
                ],
            ),
            entry(
                &[2, 1, 1],
                &[2, 2],
                &[
                    (&[], 1),
                    (&[1], 2),
                    (&[2], 2),
                    (&[1, 1], 1),
                    (&[3], 1),
                    (&[2, 1], 1),
                ],
            ),
            entry(
                &[2, 1, 1],
                &[2, 1, 1],
                &[
                    (&[1], 1),
                    (&[2], 1),
                    (&[1, 1], 2),
                    (&[2, 1], 1),
                    (&[1, 1, 1], 1),
                ],
            ),
            entry(
                &[1, 1, 1, 1],
                &[4],
                &[(&[], 1), (&[1], 1), (&[2], 1), (&[3], 1), (&[4], 1)],
            ),
            entry(
                &[1, 1, 1, 1],
                &[3, 1],
                &[
                    (&[1], 1),
                    (&[2], 1),
                    (&[1, 1], 1),
                    (&[3], 1),
                    (&[2, 1], 1),
                    (&[3, 1], 1),
                ],
            ),
            entry(
                &[1, 1, 1, 1],
                &[2, 2],
                &[(&[2], 1), (&[2, 1], 1), (&[2, 2], 1)],
            ),
            entry(
                &[1, 1, 1, 1],
                &[2, 1, 1],
                &[
                    (&[1, 1], 1),
                    (&[2, 1], 1),
                    (&[1, 1, 1], 1),
                    (&[2, 1, 1], 1),
                ],
            ),
            entry(
                &[1, 1, 1, 1],
                &[1, 1, 1, 1],
                &[(&[1, 1, 1], 1), (&[1, 1, 1, 1], 1)],
            ),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn computed_tables_match_reference() {
        for k in [3u32, 4] {
            let table = symbol_table(k).unwrap();
            let reference = reference_symbols(k).unwrap();
            assert_eq!(table.nonzero_count(), reference.len(), "k = {k}");
            for (mu, nu, symbol) in reference {
                let i = table.labels().iter().position(|l| *l == mu).unwrap();
                let j = table.labels().iter().position(|l| *l == nu).unwrap();
                let cell = table.cell(i, j).unwrap_or_else(|| {
                    panic!("expected nonzero cell at ({mu},{nu})")
                });
                let want: BTreeMap<Partition, u64> = symbol.into_iter().collect();
                assert_eq!(cell.entries(), &want, "cell ({mu},{nu})");
            }
        }
    }

    #[test]
    fn k1_has_a_single_cell() {
        let table = symbol_table(1).unwrap();
        assert_eq!(table.nonzero_count(), 1);
        let cell = table.cell(0, 0).unwrap();
        assert_eq!(cell.render(), "∅+(1)");
    }

    #[test]
    fn renderings_contain_expected_cells() {
        let table = symbol_table(3).unwrap();
        let md = table.to_markdown();
        assert!(md.contains("∅+2·(1)+(2)+(1^2)"));
        assert!(md.contains("(1^2)+(1^3)"));
        let tex = table.to_tex();
        assert!(tex.contains(r"\emptyset+2\cdot (1)+(2)+(1^{2})"));
        assert!(tex.starts_with(r"\begin{tabular}"));
    }
}
