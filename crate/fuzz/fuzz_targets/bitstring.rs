#![no_main]

use libfuzzer_sys::fuzz_target;
use pathcirc::BitVector;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(bits) = text.parse::<BitVector>() {
        assert_eq!(bits.to_string(), text);
        assert_eq!(bits.width(), text.len());
    }
});
