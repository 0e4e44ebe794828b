#![no_main]

use libfuzzer_sys::fuzz_target;
use pathcirc::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::from_json(text) {
        let again = Graph::from_json(&g.to_json()).expect("canonical form parses");
        assert_eq!(again, g);
    }
});
