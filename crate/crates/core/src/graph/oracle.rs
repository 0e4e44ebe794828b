use super::{Enumeration, Graph};
use crate::bits::BitVector;

/// Outcome of checking a coded path directly against the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    /// Code of the final vertex when valid, the all-zero code otherwise.
    pub end: BitVector,
}

/// Walk the graph along coded steps without building any circuit.
///
/// Valid iff the start code names a vertex, every step code names an edge
/// or identity, and each step leaves from the vertex reached so far. Codes
/// of the wrong width are simply invalid.
pub fn path_oracle(g: &Graph, en: &Enumeration, start: &BitVector, steps: &[BitVector]) -> Verdict {
    let invalid = || Verdict {
        valid: false,
        end: en.undefined_vertex(),
    };
    if start.width() != en.v_bits() || steps.iter().any(|s| s.width() != en.e_bits()) {
        return invalid();
    }
    let Some(mut at) = start.value().and_then(|c| en.decode_vertex(c)) else {
        return invalid();
    };
    for code in steps {
        let Some(step) = code.value().and_then(|c| en.decode_step(c)) else {
            return invalid();
        };
        if g.step_source(step) != at {
            return invalid();
        }
        at = g.step_target(step);
    }
    Verdict {
        valid: true,
        end: en.vertex_code(at),
    }
}
