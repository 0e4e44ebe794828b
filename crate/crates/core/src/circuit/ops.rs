//! Monoidal combinators and the named derived gates.

use super::{Circuit, CircuitBuilder, GateKind, WireId};
use crate::bits::BitVector;
use crate::error::{Error, Result};

/// A single gate as a circuit.
pub fn primitive(kind: GateKind) -> Circuit {
    let mut b = CircuitBuilder::new(kind.n_inputs());
    let inputs = b.inputs();
    let outputs = match kind {
        GateKind::Nand => vec![b.nand(inputs[0], inputs[1])],
        GateKind::Copy => {
            let (x, y) = b.copy(inputs[0]);
            vec![x, y]
        }
        GateKind::True => vec![b.constant(true)],
        GateKind::False => vec![b.constant(false)],
    };
    b.finish(outputs)
}

pub fn identity(width: usize) -> Circuit {
    Circuit::new_unchecked(width, Vec::new(), (0..width).collect())
}

/// Zero-gate circuit presenting input `outputs[i]` as output `i`. Inputs not
/// listed are discarded; listing an input twice is an error.
pub fn wiring(n_inputs: usize, outputs: &[usize]) -> Result<Circuit> {
    Circuit::new(n_inputs, Vec::new(), outputs.to_vec())
}

/// The swap `x ++ y -> y ++ x` with `|x| = w1`, `|y| = w2`.
pub fn symmetry(w1: usize, w2: usize) -> Circuit {
    let outputs = (w1..w1 + w2).chain(0..w1).collect();
    Circuit::new_unchecked(w1 + w2, Vec::new(), outputs)
}

/// `width` inputs, no outputs.
pub fn discard(width: usize) -> Circuit {
    Circuit::new_unchecked(width, Vec::new(), Vec::new())
}

/// Sequential composition: `c1` then `c2`.
pub fn seq(c1: &Circuit, c2: &Circuit) -> Result<Circuit> {
    if c1.n_outputs() != c2.n_inputs() {
        return Err(Error::width("seq", c1.n_outputs(), c2.n_inputs()));
    }
    let mut b = CircuitBuilder::new(c1.n_inputs());
    let mid = b.inline(c1, &b.inputs());
    let out = b.inline(c2, &mid);
    Ok(b.finish(out))
}

/// Parallel composition: inputs and outputs of `c1` come first.
pub fn tensor(c1: &Circuit, c2: &Circuit) -> Circuit {
    tensor_all([c1, c2])
}

pub fn tensor_all<'a>(circuits: impl IntoIterator<Item = &'a Circuit>) -> Circuit {
    let circuits: Vec<&Circuit> = circuits.into_iter().collect();
    let n_inputs = circuits.iter().map(|c| c.n_inputs()).sum();
    let mut b = CircuitBuilder::new(n_inputs);
    let mut outputs = Vec::new();
    let mut start = 0;
    for c in circuits {
        let inputs: Vec<WireId> = (start..start + c.n_inputs()).collect();
        outputs.extend(b.inline(c, &inputs));
        start += c.n_inputs();
    }
    b.finish(outputs)
}

/// `copies` copies of a `width`-wire bus, laid out block after block.
pub fn copy_bus(width: usize, copies: usize) -> Circuit {
    let mut b = CircuitBuilder::new(width);
    let per_wire: Vec<Vec<WireId>> = (0..width).map(|w| b.fan_out(w, copies)).collect();
    let outputs = (0..copies)
        .flat_map(|copy| per_wire.iter().map(move |c| c[copy]))
        .collect();
    b.finish(outputs)
}

/// Zero-input circuit emitting `value`.
pub fn constant(value: &BitVector) -> Circuit {
    let mut b = CircuitBuilder::new(0);
    let outputs = value.bits().iter().map(|&bit| b.constant(bit)).collect();
    b.finish(outputs)
}

/// Boolean functions expressed as circuits over the primitive gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedGate {
    Not,
    And,
    Or,
    Xor,
    /// AND of `n` inputs.
    AndN(usize),
    /// OR of `n` inputs.
    OrN(usize),
    /// One input fanned out to `n` outputs.
    CopyN(usize),
}

impl DerivedGate {
    pub fn n_inputs(self) -> usize {
        match self {
            DerivedGate::Not | DerivedGate::CopyN(_) => 1,
            DerivedGate::And | DerivedGate::Or | DerivedGate::Xor => 2,
            DerivedGate::AndN(n) | DerivedGate::OrN(n) => n,
        }
    }

    pub fn n_outputs(self) -> usize {
        match self {
            DerivedGate::CopyN(n) => n,
            _ => 1,
        }
    }
}

pub fn derived_gate(gate: DerivedGate) -> Circuit {
    let mut b = CircuitBuilder::new(gate.n_inputs());
    let inputs = b.inputs();
    let outputs = match gate {
        DerivedGate::Not => vec![b.not(inputs[0])],
        DerivedGate::And => vec![b.and(inputs[0], inputs[1])],
        DerivedGate::Or => vec![b.or(inputs[0], inputs[1])],
        DerivedGate::Xor => vec![b.xor(inputs[0], inputs[1])],
        DerivedGate::AndN(_) => vec![b.and_all(&inputs)],
        DerivedGate::OrN(_) => vec![b.or_all(&inputs)],
        DerivedGate::CopyN(n) => b.fan_out(inputs[0], n),
    };
    b.finish(outputs)
}
