//! Circuits with a validity flag and witness inputs, and the path verifiers
//! built from them.
//!
//! A [`KpMorphism`] from `A` to `B` is a circuit `A ++ witness -> flag ++ B`.
//! Composition ANDs the flags and concatenates the witnesses, so a chain of
//! step checks accepts only if every step does.

use crate::bits::BitVector;
use crate::circuit::{
    constant, copy_bus, derived_gate, identity, primitive, seq, tensor, tensor_all, Circuit,
    DerivedGate, GateKind,
};
use crate::error::{Error, Result};
use crate::graph::{Enumeration, Graph, Path, Step};
use crate::synth::{guarded, match_circuit, source_circuit, target_circuit, vertex_check_circuit};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KpMorphism {
    in_width: usize,
    witness_width: usize,
    out_width: usize,
    circuit: Circuit,
}

impl KpMorphism {
    /// Wrap a circuit with inputs `in_width + witness_width` and outputs
    /// `1 + out_width`, flag first.
    pub fn new(
        in_width: usize,
        witness_width: usize,
        out_width: usize,
        circuit: Circuit,
    ) -> Result<Self> {
        if circuit.n_inputs() != in_width + witness_width {
            return Err(Error::width(
                "kp morphism inputs",
                in_width + witness_width,
                circuit.n_inputs(),
            ));
        }
        if circuit.n_outputs() != 1 + out_width {
            return Err(Error::width(
                "kp morphism outputs",
                1 + out_width,
                circuit.n_outputs(),
            ));
        }
        Ok(KpMorphism {
            in_width,
            witness_width,
            out_width,
            circuit,
        })
    }

    pub fn in_width(&self) -> usize {
        self.in_width
    }

    pub fn witness_width(&self) -> usize {
        self.witness_width
    }

    pub fn out_width(&self) -> usize {
        self.out_width
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn into_circuit(self) -> Circuit {
        self.circuit
    }

    /// Returns the flag and the state output.
    pub fn eval(&self, state: &BitVector, witness: &BitVector) -> Result<(bool, BitVector)> {
        if state.width() != self.in_width {
            return Err(Error::width("kp state input", self.in_width, state.width()));
        }
        if witness.width() != self.witness_width {
            return Err(Error::width(
                "kp witness",
                self.witness_width,
                witness.width(),
            ));
        }
        let out = self.circuit.eval(&state.concat(witness))?;
        let (flag, rest) = out.split_at(1);
        Ok((flag.bits()[0], rest))
    }
}

/// `TRUE ⊗ Id`: accepts everything and passes the state through.
pub fn kp_identity(w: usize) -> KpMorphism {
    KpMorphism {
        in_width: w,
        witness_width: 0,
        out_width: w,
        circuit: tensor(&primitive(GateKind::True), &identity(w)),
    }
}

/// `f ; g` as `(f ⊗ Id) ; (Id ⊗ g) ; (AND ⊗ Id)`. The witness of `f` comes
/// first.
pub fn kp_compose(f: &KpMorphism, g: &KpMorphism) -> Result<KpMorphism> {
    if f.out_width != g.in_width {
        return Err(Error::width("kp_compose", f.out_width, g.in_width));
    }
    let run_f = tensor(&f.circuit, &identity(g.witness_width));
    let run_g = tensor(&identity(1), &g.circuit);
    let join = tensor(&derived_gate(DerivedGate::And), &identity(g.out_width));
    let circuit = seq(&seq(&run_f, &run_g)?, &join)?;
    KpMorphism::new(
        f.in_width,
        f.witness_width + g.witness_width,
        g.out_width,
        circuit,
    )
}

/// `(Id ⊗ COPY) ; (Id ⊗ S_G ⊗ T_G) ; (MATCH ⊗ Id)` on `vertex ++ edge`.
fn step_circuit(g: &Graph, en: &Enumeration) -> Result<Circuit> {
    let (v, e) = (en.v_bits(), en.e_bits());
    let split = tensor(&identity(v), &copy_bus(e, 2));
    let lookup = tensor_all([
        &identity(v),
        &source_circuit(g, en)?,
        &target_circuit(g, en)?,
    ]);
    let check = tensor(&match_circuit(v), &identity(v));
    seq(&seq(&split, &lookup)?, &check)
}

/// One step with the edge code supplied as a witness: flags whether the
/// input vertex is the edge's source and outputs the edge's target.
pub fn step_verifier(g: &Graph, en: &Enumeration) -> Result<KpMorphism> {
    KpMorphism::new(en.v_bits(), en.e_bits(), en.v_bits(), step_circuit(g, en)?)
}

/// The step circuit with the code of `step` wired in as a constant.
pub fn edge_evaluator(g: &Graph, en: &Enumeration, step: Step) -> Result<KpMorphism> {
    if !g.contains_step(step) {
        return Err(Error::Lookup {
            kind: "step",
            name: format!("{step:?}"),
        });
    }
    let v = en.v_bits();
    let with_code = tensor(&identity(v), &constant(&en.step_code(step)));
    let circuit = seq(&with_code, &step_circuit(g, en)?)?;
    KpMorphism::new(v, 0, v, circuit)
}

/// Accepts exactly the vertex codes that name a vertex, passing them through.
/// This is the zero-step path verifier.
pub fn start_guard(en: &Enumeration) -> Result<KpMorphism> {
    let v = en.v_bits();
    KpMorphism::new(v, 0, v, guarded(&vertex_check_circuit(en)?, v))
}

/// Verifier for walks of exactly `k` coded steps, the `k`-fold left-associated
/// composite of [`step_verifier`]. Shorter paths fit after identity padding.
pub fn path_verifier(g: &Graph, en: &Enumeration, k: usize) -> Result<KpMorphism> {
    if k == 0 {
        return start_guard(en);
    }
    let step = step_verifier(g, en)?;
    let mut acc = step.clone();
    for _ in 1..k {
        acc = kp_compose(&acc, &step)?;
    }
    Ok(acc)
}

/// Gate count of `path_verifier(g, en, k)` without building it.
pub fn path_verifier_gate_count(g: &Graph, en: &Enumeration, k: usize) -> Result<u128> {
    if k == 0 {
        return Ok(start_guard(en)?.circuit.gates().len() as u128);
    }
    let step = step_circuit(g, en)?.gates().len() as u128;
    let and = derived_gate(DerivedGate::And).gates().len() as u128;
    Ok(k as u128 * step + (k as u128 - 1) * and)
}

/// Step codes of `p` followed by identities on its end vertex, `k` in all.
pub fn pad_path(g: &Graph, en: &Enumeration, p: &Path, k: usize) -> Result<Vec<BitVector>> {
    if p.steps.len() > k {
        return Err(Error::Length {
            length: p.steps.len(),
            limit: k,
        });
    }
    if p.start.0 >= g.n_vertices() {
        return Err(Error::Lookup {
            kind: "vertex",
            name: format!("#{}", p.start.0),
        });
    }
    if let Some(bad) = p.steps.iter().find(|s| !g.contains_step(**s)) {
        return Err(Error::Lookup {
            kind: "step",
            name: format!("{bad:?}"),
        });
    }
    let pad = en.step_code(Step::Identity(p.end(g)));
    let mut codes: Vec<BitVector> = p.steps.iter().map(|&s| en.step_code(s)).collect();
    codes.resize(k, pad);
    Ok(codes)
}

/// Single-output circuit over `state ++ witness ++ claim`: 1 iff the flag is
/// set and the actual output matches the nonzero claim.
///
/// Built as `(f ⊗ Id_B) ; (Id ⊗ MATCH_B) ; AND`.
pub fn snarkize(f: &KpMorphism) -> Circuit {
    snark_wrap(&f.circuit, f.out_width)
}

pub(crate) fn snark_wrap(circuit: &Circuit, out_width: usize) -> Circuit {
    let run = tensor(circuit, &identity(out_width));
    let check = tensor(&identity(1), &match_circuit(out_width));
    seq(
        &seq(&run, &check).expect("flag plus two B buses"),
        &derived_gate(DerivedGate::And),
    )
    .expect("two bits into AND")
}
