//! Gate-list circuits over NAND, COPY, TRUE and FALSE.
//!
//! Wires are numbered densely: the inputs are `0..n_inputs`, and each gate
//! allocates the next free ids for its outputs in list order. Every wire is
//! read at most once, by one gate or by one output slot, so fan-out always
//! goes through an explicit COPY. Wires nobody reads are discarded.

mod builder;
mod equiv;
mod ops;

pub use builder::CircuitBuilder;
pub use equiv::{ext_equal, ext_equal_with_budget};
pub use ops::{
    constant, copy_bus, derived_gate, discard, identity, primitive, seq, symmetry, tensor,
    tensor_all, wiring, DerivedGate,
};

use std::fmt;

use crate::bits::{lane_mask, packed_inputs, BitVector};
use crate::error::{Error, Result};

pub type WireId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Nand,
    Copy,
    True,
    False,
}

impl GateKind {
    pub const ALL: [GateKind; 4] = [
        GateKind::Nand,
        GateKind::Copy,
        GateKind::True,
        GateKind::False,
    ];

    /// Number of input wires.
    pub fn n_inputs(self) -> usize {
        match self {
            GateKind::Nand => 2,
            GateKind::Copy => 1,
            GateKind::True | GateKind::False => 0,
        }
    }

    /// Number of output wires.
    pub fn n_outputs(self) -> usize {
        match self {
            GateKind::Copy => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Nand => "NAND",
            GateKind::Copy => "COPY",
            GateKind::True => "TRUE",
            GateKind::False => "FALSE",
        }
    }

    pub fn from_name(name: &str) -> Option<GateKind> {
        GateKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One primitive gate with its wire connections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    inputs: [WireId; 2],
    outputs: [WireId; 2],
}

impl Gate {
    pub fn new(kind: GateKind, inputs: &[WireId], outputs: &[WireId]) -> Result<Self> {
        if inputs.len() != kind.n_inputs() {
            return Err(Error::Validation(format!(
                "{kind} takes {} inputs, got {}",
                kind.n_inputs(),
                inputs.len()
            )));
        }
        if outputs.len() != kind.n_outputs() {
            return Err(Error::Validation(format!(
                "{kind} has {} outputs, got {}",
                kind.n_outputs(),
                outputs.len()
            )));
        }
        let mut gate = Gate {
            kind,
            inputs: [0; 2],
            outputs: [0; 2],
        };
        gate.inputs[..inputs.len()].copy_from_slice(inputs);
        gate.outputs[..outputs.len()].copy_from_slice(outputs);
        Ok(gate)
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn inputs(&self) -> &[WireId] {
        &self.inputs[..self.kind.n_inputs()]
    }

    pub fn outputs(&self) -> &[WireId] {
        &self.outputs[..self.kind.n_outputs()]
    }

    fn shifted(&self, offset: WireId, input_map: &[WireId]) -> Gate {
        let mut gate = *self;
        for w in gate.inputs.iter_mut().take(self.kind.n_inputs()) {
            *w = remap(*w, offset, input_map);
        }
        for w in gate.outputs.iter_mut().take(self.kind.n_outputs()) {
            *w = remap(*w, offset, input_map);
        }
        gate
    }
}

/// Renumber a wire of a circuit being inlined: its inputs go to `input_map`,
/// its internal wires are shifted past the host's existing wires.
fn remap(w: WireId, offset: WireId, input_map: &[WireId]) -> WireId {
    if w < input_map.len() {
        input_map[w]
    } else {
        w - input_map.len() + offset
    }
}

/// An immutable boolean circuit: a topologically ordered gate list plus the
/// wires presented as outputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    n_inputs: usize,
    gates: Vec<Gate>,
    outputs: Vec<WireId>,
}

impl Circuit {
    /// Build a circuit, checking numbering, topological order and that no
    /// wire is read twice.
    pub fn new(n_inputs: usize, gates: Vec<Gate>, outputs: Vec<WireId>) -> Result<Self> {
        let circuit = Circuit {
            n_inputs,
            gates,
            outputs,
        };
        circuit.validate()?;
        Ok(circuit)
    }

    pub(crate) fn new_unchecked(n_inputs: usize, gates: Vec<Gate>, outputs: Vec<WireId>) -> Self {
        let circuit = Circuit {
            n_inputs,
            gates,
            outputs,
        };
        debug_assert_eq!(circuit.validate(), Ok(()));
        circuit
    }

    fn validate(&self) -> Result<()> {
        let mut consumed = vec![false; self.n_wires_unchecked()];
        let mut next = self.n_inputs;
        let mut read = |w: WireId, defined: usize, who: &dyn Fn() -> String| -> Result<()> {
            if w >= defined {
                return Err(Error::Validation(format!(
                    "{} reads undefined wire {w}",
                    who()
                )));
            }
            if std::mem::replace(&mut consumed[w], true) {
                return Err(Error::Validation(format!(
                    "{} reads wire {w}, which is already consumed; fan-out needs COPY",
                    who()
                )));
            }
            Ok(())
        };
        for (i, gate) in self.gates.iter().enumerate() {
            for &w in gate.inputs() {
                read(w, next, &|| format!("gate {i} ({})", gate.kind))?;
            }
            for &w in gate.outputs() {
                if w != next {
                    return Err(Error::Validation(format!(
                        "gate {i} ({}) defines wire {w}, expected next wire {next}",
                        gate.kind
                    )));
                }
                next += 1;
            }
        }
        for (i, &w) in self.outputs.iter().enumerate() {
            read(w, next, &|| format!("output {i}"))?;
        }
        Ok(())
    }

    fn n_wires_unchecked(&self) -> usize {
        self.n_inputs + self.gates.iter().map(|g| g.kind.n_outputs()).sum::<usize>()
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[WireId] {
        &self.outputs
    }

    /// Total number of wires, inputs included.
    pub fn n_wires(&self) -> usize {
        self.n_wires_unchecked()
    }

    pub fn gate_count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    /// Evaluate on one input.
    pub fn eval(&self, input: &BitVector) -> Result<BitVector> {
        if input.width() != self.n_inputs {
            return Err(Error::width("eval input", self.n_inputs, input.width()));
        }
        let mut values = vec![false; self.n_wires()];
        values[..self.n_inputs].copy_from_slice(input.bits());
        for gate in &self.gates {
            match gate.kind {
                GateKind::Nand => {
                    values[gate.outputs[0]] = !(values[gate.inputs[0]] && values[gate.inputs[1]])
                }
                GateKind::Copy => {
                    let v = values[gate.inputs[0]];
                    values[gate.outputs[0]] = v;
                    values[gate.outputs[1]] = v;
                }
                GateKind::True => values[gate.outputs[0]] = true,
                GateKind::False => values[gate.outputs[0]] = false,
            }
        }
        Ok(self.outputs.iter().map(|&w| values[w]).collect())
    }

    /// Evaluate 64 inputs at once; word `i` carries input wire `i` in each lane.
    pub fn eval_packed(&self, inputs: &[u64]) -> Result<Vec<u64>> {
        if inputs.len() != self.n_inputs {
            return Err(Error::width(
                "packed eval input",
                self.n_inputs,
                inputs.len(),
            ));
        }
        let mut values = vec![0u64; self.n_wires()];
        values[..self.n_inputs].copy_from_slice(inputs);
        for gate in &self.gates {
            match gate.kind {
                GateKind::Nand => {
                    values[gate.outputs[0]] = !(values[gate.inputs[0]] & values[gate.inputs[1]])
                }
                GateKind::Copy => {
                    let v = values[gate.inputs[0]];
                    values[gate.outputs[0]] = v;
                    values[gate.outputs[1]] = v;
                }
                GateKind::True => values[gate.outputs[0]] = u64::MAX,
                GateKind::False => values[gate.outputs[0]] = 0,
            }
        }
        Ok(self.outputs.iter().map(|&w| values[w]).collect())
    }

    /// Outputs for every input, in increasing input order.
    ///
    /// Only sensible for small input widths; callers apply their own budget.
    pub fn truth_table(&self) -> Vec<BitVector> {
        let width = self.n_inputs;
        let total = 1u64 << width;
        let mut rows = Vec::with_capacity(total as usize);
        let mut base = 0;
        while base < total {
            let out = self
                .eval_packed(&packed_inputs(width, base))
                .expect("packed inputs have the circuit's width");
            let live = lane_mask(width, base).count_ones() as u64;
            for lane in 0..live {
                rows.push(out.iter().map(|w| (w >> lane) & 1 == 1).collect());
            }
            base += 64;
        }
        rows
    }
}
