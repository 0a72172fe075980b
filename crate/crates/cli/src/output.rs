//! The versioned JSON envelope and shared human-output helpers.

use serde::Serialize;
use serde_json::Value;

use tensor_decomp::decomp::RepDecomposition;

/// Top-level JSON document: `{"schema":"tensor-decomp/1","command":…,
/// "result":…}`. Timing is opt-in so that identical runs stay byte-identical.
#[derive(Serialize)]
pub struct OutputDocument {
    pub schema: &'static str,
    pub command: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl OutputDocument {
    pub fn new(command: Value, result: Value, timing_ms: Option<u128>) -> Self {
        OutputDocument {
            schema: tensor_decomp::SCHEMA,
            command,
            result,
            timing_ms,
        }
    }
}

/// One `  η: mult` line per irreducible, plus the total dimension.
pub fn decomposition_human(dec: &RepDecomposition) -> String {
    if dec.is_empty() {
        return "  (empty)".to_string();
    }
    let mut out: Vec<String> = dec
        .mults()
        .iter()
        .map(|(eta, m)| format!("  {eta}: {m}"))
        .collect();
    out.push(format!("  dimension: {}", dec.dimension()));
    out.join("\n")
}
