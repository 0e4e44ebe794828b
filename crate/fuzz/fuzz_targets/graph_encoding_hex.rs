#![no_main]

use libfuzzer_sys::fuzz_target;
use pathcirc::GraphEncoding;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(enc) = text.parse::<GraphEncoding>() {
        let again: GraphEncoding = enc.to_string().parse().expect("printed form parses");
        assert_eq!(again, enc);
    }
});
