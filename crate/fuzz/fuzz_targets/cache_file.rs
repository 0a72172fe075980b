//! Fuzzes the cache-file decoder and the preload sanity checks that gate
//! entries before they reach the in-process memo tables.
//!
//! Run with:
//!   cargo +nightly fuzz run cache_file
#![no_main]

use libfuzzer_sys::fuzz_target;
use tensor_decomp::cache;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = cache::parse(data) {
        // Preloading untrusted entries must at worst skip them.
        let accepted = doc.preload();
        assert!(accepted <= doc.entries.len());
    }
});
