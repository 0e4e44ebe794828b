use super::{Circuit, Gate, GateKind, WireId};
use crate::error::{Error, Result};

/// Incremental construction of a [`Circuit`].
///
/// The builder hands out fresh wire ids for gate outputs. It does not stop a
/// wire from being read twice; [`CircuitBuilder::build`] rejects that.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    n_inputs: usize,
    gates: Vec<Gate>,
    next: WireId,
}

impl CircuitBuilder {
    pub fn new(n_inputs: usize) -> Self {
        CircuitBuilder {
            n_inputs,
            gates: Vec::new(),
            next: n_inputs,
        }
    }

    pub fn inputs(&self) -> Vec<WireId> {
        (0..self.n_inputs).collect()
    }

    fn push(&mut self, kind: GateKind, inputs: &[WireId]) -> [WireId; 2] {
        let first = self.next;
        let outputs = [first, first + 1];
        self.next += kind.n_outputs();
        self.gates.push(
            Gate::new(kind, inputs, &outputs[..kind.n_outputs()])
                .expect("builder passes the kind's arity"),
        );
        outputs
    }

    pub fn nand(&mut self, a: WireId, b: WireId) -> WireId {
        self.push(GateKind::Nand, &[a, b])[0]
    }

    pub fn copy(&mut self, a: WireId) -> (WireId, WireId) {
        let [x, y] = self.push(GateKind::Copy, &[a]);
        (x, y)
    }

    pub fn constant(&mut self, value: bool) -> WireId {
        let kind = if value {
            GateKind::True
        } else {
            GateKind::False
        };
        self.push(kind, &[])[0]
    }

    pub fn not(&mut self, a: WireId) -> WireId {
        let (x, y) = self.copy(a);
        self.nand(x, y)
    }

    pub fn and(&mut self, a: WireId, b: WireId) -> WireId {
        let n = self.nand(a, b);
        self.not(n)
    }

    pub fn or(&mut self, a: WireId, b: WireId) -> WireId {
        let na = self.not(a);
        let nb = self.not(b);
        self.nand(na, nb)
    }

    pub fn xor(&mut self, a: WireId, b: WireId) -> WireId {
        let (a1, a2) = self.copy(a);
        let (b1, b2) = self.copy(b);
        let either = self.or(a1, b1);
        let not_both = self.nand(a2, b2);
        self.and(either, not_both)
    }

    /// `n` copies of `a` through a left-leaning tree of binary COPY gates.
    /// With `n == 0` the wire is dropped.
    pub fn fan_out(&mut self, a: WireId, n: usize) -> Vec<WireId> {
        if n == 0 {
            return Vec::new();
        }
        let mut copies = Vec::with_capacity(n);
        let mut rest = a;
        for _ in 1..n {
            let (left, right) = self.copy(rest);
            copies.push(right);
            rest = left;
        }
        copies.push(rest);
        copies.reverse();
        copies
    }

    /// Left-leaning AND of all wires; TRUE when empty.
    pub fn and_all(&mut self, wires: &[WireId]) -> WireId {
        match wires.split_first() {
            None => self.constant(true),
            Some((&first, rest)) => rest.iter().fold(first, |acc, &w| self.and(acc, w)),
        }
    }

    /// Left-leaning OR of all wires; FALSE when empty.
    pub fn or_all(&mut self, wires: &[WireId]) -> WireId {
        match wires.split_first() {
            None => self.constant(false),
            Some((&first, rest)) => rest.iter().fold(first, |acc, &w| self.or(acc, w)),
        }
    }

    /// Inline `circuit` reading from `inputs`; returns the wires carrying its
    /// outputs.
    pub fn instantiate(&mut self, circuit: &Circuit, inputs: &[WireId]) -> Result<Vec<WireId>> {
        if inputs.len() != circuit.n_inputs() {
            return Err(Error::width(
                "instantiate",
                circuit.n_inputs(),
                inputs.len(),
            ));
        }
        Ok(self.inline(circuit, inputs))
    }

    pub(crate) fn inline(&mut self, circuit: &Circuit, inputs: &[WireId]) -> Vec<WireId> {
        debug_assert_eq!(inputs.len(), circuit.n_inputs());
        let offset = self.next;
        self.gates
            .extend(circuit.gates().iter().map(|g| g.shifted(offset, inputs)));
        self.next += circuit.n_wires() - circuit.n_inputs();
        circuit
            .outputs()
            .iter()
            .map(|&w| super::remap(w, offset, inputs))
            .collect()
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    pub fn build(self, outputs: Vec<WireId>) -> Result<Circuit> {
        Circuit::new(self.n_inputs, self.gates, outputs)
    }

    pub(crate) fn finish(self, outputs: Vec<WireId>) -> Circuit {
        Circuit::new_unchecked(self.n_inputs, self.gates, outputs)
    }
}
