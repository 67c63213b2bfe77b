#![no_main]

use libfuzzer_sys::fuzz_target;
use pretzel_core::verify::VerificationResult;

fuzz_target!(|data: &[u8]| {
    // Reports written by `pretzel verify --format json` read back unchanged.
    if let Ok(v) = serde_json::from_slice::<VerificationResult>(data) {
        let text = serde_json::to_vec(&v).unwrap();
        let again: VerificationResult = serde_json::from_slice(&text).unwrap();
        assert_eq!(again, v);
    }
});
