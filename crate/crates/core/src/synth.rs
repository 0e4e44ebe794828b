//! Lowering truth tables to circuits, plus the structural MATCH and filter
//! circuits.
//!
//! Synthesis is deliberately naive: each output bit becomes the OR of one
//! point filter per minterm, and the input bus is copied once per output
//! bit. Nothing is minimized.

use crate::bits::BitVector;
use crate::budget::Budget;
use crate::circuit::{
    constant, copy_bus, derived_gate, discard, identity, seq, tensor, tensor_all, Circuit,
    CircuitBuilder, DerivedGate,
};
use crate::error::Result;
use crate::graph::{source_table, target_table, vertex_table, Enumeration, Graph};
use crate::table::TruthTable;

pub fn synth(table: &TruthTable) -> Result<Circuit> {
    synth_with_budget(table, &Budget::default())
}

pub fn synth_with_budget(table: &TruthTable, budget: &Budget) -> Result<Circuit> {
    budget.check_table_width(table.in_width())?;
    let width = table.in_width();
    if width == 0 {
        return Ok(constant(&BitVector::from_value(
            table.row(0),
            table.out_width(),
        )));
    }
    let per_bit: Vec<Circuit> = (0..table.out_width())
        .map(|bit| {
            let minterms: Vec<u64> = table.minterms(bit).collect();
            minterm_cover(width, &minterms)
        })
        .collect();
    seq(&copy_bus(width, table.out_width()), &tensor_all(&per_bit))
}

/// One output bit: the OR of the point filters of `minterms`.
fn minterm_cover(width: usize, minterms: &[u64]) -> Circuit {
    if minterms.is_empty() {
        return tensor(&discard(width), &constant(&BitVector::zeros(1)));
    }
    let filters: Vec<Circuit> = minterms
        .iter()
        .map(|&m| filter_circuit(&BitVector::from_value(m, width)))
        .collect();
    let fan = seq(&copy_bus(width, minterms.len()), &tensor_all(&filters))
        .expect("one filter per bus copy");
    seq(&fan, &derived_gate(DerivedGate::OrN(minterms.len()))).expect("one bit per filter")
}

/// Point function of `s`: 1 exactly when the input equals `s`.
///
/// Zero positions go through NOT, then every bit meets in a left-leaning
/// AND tree.
pub fn filter_circuit(s: &BitVector) -> Circuit {
    let mut b = CircuitBuilder::new(s.width());
    let literals: Vec<_> = s
        .bits()
        .iter()
        .enumerate()
        .map(|(w, &bit)| if bit { w } else { b.not(w) })
        .collect();
    let out = b.and_all(&literals);
    b.finish(vec![out])
}

/// `2w` inputs, one output: 1 iff both `w`-bit halves are equal and not all
/// zero. For `w == 0` both halves are the zero code, so the output is 0.
pub fn match_circuit(w: usize) -> Circuit {
    let mut b = CircuitBuilder::new(2 * w);
    let mut equal = Vec::with_capacity(w);
    let mut nonzero = Vec::with_capacity(w);
    for i in 0..w {
        let (x_eq, x_nz) = b.copy(i);
        let differ = b.xor(x_eq, w + i);
        equal.push(b.not(differ));
        nonzero.push(x_nz);
    }
    let all_equal = b.and_all(&equal);
    let any_set = b.or_all(&nonzero);
    let out = b.and(all_equal, any_set);
    b.finish(vec![out])
}

/// Edge code in, source vertex code out; zero for unassigned codes.
pub fn source_circuit(g: &Graph, en: &Enumeration) -> Result<Circuit> {
    synth(&source_table(en, g))
}

/// Edge code in, target vertex code out; zero for unassigned codes.
pub fn target_circuit(g: &Graph, en: &Enumeration) -> Result<Circuit> {
    synth(&target_table(en, g))
}

/// Vertex code in, 1 out iff it names a vertex.
pub fn vertex_check_circuit(en: &Enumeration) -> Result<Circuit> {
    synth(&vertex_table(en))
}

/// `w` wires in; the wires back out together with the value of `check` on
/// them, check first.
pub(crate) fn guarded(check: &Circuit, w: usize) -> Circuit {
    seq(&copy_bus(w, 2), &tensor(check, &identity(w))).expect("check reads a w-bit bus")
}
