//! Fuzzes the JSON decoder for symmetric functions (the CLI/cache wire
//! format).
//!
//! Run with:
//!   cargo +nightly fuzz run symfunc_json
#![no_main]

use libfuzzer_sys::fuzz_target;
use tensor_decomp::SymFunc;

fuzz_target!(|data: &[u8]| {
    // Must never panic on arbitrary bytes; accepted documents must survive a
    // serialize/deserialize round trip unchanged.
    if let Ok(f) = serde_json::from_slice::<SymFunc>(data) {
        let json = serde_json::to_string(&f).unwrap();
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
});
