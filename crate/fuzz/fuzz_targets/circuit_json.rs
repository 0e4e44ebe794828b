#![no_main]

use libfuzzer_sys::fuzz_target;
use pathcirc::emit::{to_bristol, CircuitDocument};
use pathcirc::BitVector;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = CircuitDocument::from_json(text) else {
        return;
    };
    let Ok(circuit) = doc.circuit() else { return };
    let reparsed = CircuitDocument::from_json(&doc.to_json()).expect("emitted document parses");
    assert_eq!(reparsed, doc);
    assert_eq!(reparsed.circuit().expect("still valid"), circuit);
    if circuit.gates().len() < 10_000 {
        let out = circuit
            .eval(&BitVector::zeros(circuit.n_inputs()))
            .expect("width matches");
        assert_eq!(out.width(), circuit.n_outputs());
        to_bristol(&circuit);
    }
});
