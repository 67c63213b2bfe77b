#![no_main]

use libfuzzer_sys::fuzz_target;
use pretzel_core::arith::HalfLaurent;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<HalfLaurent>() {
        let back: HalfLaurent = p.to_string().parse().expect("printed form parses");
        assert_eq!(back, p);
    }
});
