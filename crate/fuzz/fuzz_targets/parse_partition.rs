//! Fuzzes the partition text parser (comma and exponential syntax).
//!
//! Run with:
//!   cargo +nightly fuzz run parse_partition
#![no_main]

use libfuzzer_sys::fuzz_target;
use tensor_decomp::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Errors are expected on arbitrary text; panics and runaway allocation
    // are not. A successful parse must be canonical and re-parseable.
    if let Ok(p) = text.parse::<Partition>() {
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        assert!(p.parts().iter().all(|&v| v > 0));
        let comma = if p.is_empty() {
            "0".to_string()
        } else {
            p.to_string().trim_matches(['(', ')']).to_string()
        };
        let round: Partition = comma.parse().unwrap();
        assert_eq!(round, p);
    }
});
