#![no_main]

use libfuzzer_sys::fuzz_target;
use pretzel_core::verify::parse_range;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(values) = parse_range(text) {
            assert!(values.iter().all(|v| v % 2 != 0));
            assert!(values.windows(2).all(|w| w[0] < w[1]));
        }
    }
});
