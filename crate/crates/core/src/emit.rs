//! Circuit serialization: a lossless JSON document and Bristol Fashion export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::circuit::{Circuit, Gate, GateKind, WireId};
use crate::error::{Error, Result};
use crate::graph::{Enumeration, Graph, Step, VertexId};
use crate::kp::{snarkize, KpMorphism};
use crate::universal::{zkp_snarkize, ZkpMorphism};

pub const FORMAT_VERSION: &str = "1";

/// Documents declaring more wires than this are rejected before validation.
const MAX_DOCUMENT_WIRES: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRecord {
    pub op: String,
    #[serde(rename = "in")]
    pub inputs: Vec<WireId>,
    pub out: Vec<WireId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CircuitKind {
    Plain,
    Kp,
    Zkp,
    SnarkKp,
    SnarkZkp,
}

/// How the input and output wires split into buses. Inputs are laid out
/// `state_in ++ spec ++ witness ++ claim`; outputs are the flag (for `kp`
/// and `zkp`) followed by `state_out`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WirePartition {
    pub state_in: usize,
    pub spec: usize,
    pub witness: usize,
    pub claim: usize,
    pub flag: usize,
    pub state_out: usize,
}

impl WirePartition {
    pub fn input_groups(&self) -> Vec<usize> {
        [self.state_in, self.spec, self.witness, self.claim]
            .into_iter()
            .filter(|&w| w > 0)
            .collect()
    }

    pub fn output_groups(&self) -> Vec<usize> {
        [self.flag, self.state_out]
            .into_iter()
            .filter(|&w| w > 0)
            .collect()
    }

    fn n_inputs(&self) -> usize {
        self.state_in + self.spec + self.witness + self.claim
    }

    fn n_outputs(&self) -> usize {
        self.flag + self.state_out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Capacity {
    pub max_edges: usize,
    pub max_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeEntry {
    pub name: String,
    pub code: String,
}

/// The codes a graph-specific verifier was compiled against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationRecord {
    pub v_bits: usize,
    pub e_bits: usize,
    pub vertices: Vec<CodeEntry>,
    pub steps: Vec<CodeEntry>,
}

impl EnumerationRecord {
    pub fn new(g: &Graph, en: &Enumeration) -> Self {
        let vertices = (0..g.n_vertices()).map(VertexId);
        let steps = vertices
            .clone()
            .map(Step::Identity)
            .chain((0..g.n_edges()).map(|e| Step::Edge(crate::graph::EdgeId(e))));
        EnumerationRecord {
            v_bits: en.v_bits(),
            e_bits: en.e_bits(),
            vertices: vertices
                .map(|v| CodeEntry {
                    name: g.vertex_name(v).to_string(),
                    code: en.vertex_code(v).to_string(),
                })
                .collect(),
            steps: steps
                .map(|s| CodeEntry {
                    name: g.step_name(s),
                    code: en.step_code(s).to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub kind: CircuitKind,
    pub partition: WirePartition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_sha256: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacity: Option<Capacity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationRecord>,
}

impl Metadata {
    /// Metadata for a graph-specific path verifier.
    pub fn for_kp(g: &Graph, en: &Enumeration, length: usize, f: &KpMorphism) -> Self {
        Metadata {
            kind: CircuitKind::Kp,
            partition: WirePartition {
                state_in: f.in_width(),
                witness: f.witness_width(),
                flag: 1,
                state_out: f.out_width(),
                ..WirePartition::default()
            },
            graph_sha256: Some(graph_sha256(g)),
            length: Some(length),
            capacity: None,
            enumeration: Some(EnumerationRecord::new(g, en)),
        }
    }

    /// Metadata for a universal verifier.
    pub fn for_zkp(capacity: Capacity, length: usize, f: &ZkpMorphism) -> Self {
        Metadata {
            kind: CircuitKind::Zkp,
            partition: WirePartition {
                state_in: f.in_width(),
                spec: f.spec_width(),
                witness: f.witness_width(),
                flag: 1,
                state_out: f.out_width(),
                ..WirePartition::default()
            },
            graph_sha256: None,
            length: Some(length),
            capacity: Some(capacity),
            enumeration: None,
        }
    }
}

/// SHA-256 of the canonical JSON form of `g`, lowercase hex.
pub fn graph_sha256(g: &Graph) -> String {
    hex::encode(Sha256::digest(g.to_json().as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    pub format_version: String,
    pub n_inputs: usize,
    pub n_outputs: usize,
    pub gates: Vec<GateRecord>,
    pub output_map: Vec<WireId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl CircuitDocument {
    pub fn new(c: &Circuit, metadata: Option<Metadata>) -> Self {
        CircuitDocument {
            format_version: FORMAT_VERSION.to_string(),
            n_inputs: c.n_inputs(),
            n_outputs: c.n_outputs(),
            gates: c
                .gates()
                .iter()
                .map(|g| GateRecord {
                    op: g.kind().name().to_string(),
                    inputs: g.inputs().to_vec(),
                    out: g.outputs().to_vec(),
                })
                .collect(),
            output_map: c.outputs().to_vec(),
            metadata,
        }
    }

    /// Parse without checking the circuit; see [`CircuitDocument::circuit`].
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    /// Rebuild and validate the circuit, checking it against the declared
    /// counts and the metadata's wire partition.
    pub fn circuit(&self) -> Result<Circuit> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Validation(format!(
                "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
                self.format_version
            )));
        }
        if self.n_inputs > MAX_DOCUMENT_WIRES || self.gates.len() > MAX_DOCUMENT_WIRES {
            return Err(Error::Validation(format!(
                "document declares more than {MAX_DOCUMENT_WIRES} wires"
            )));
        }
        if self.output_map.len() != self.n_outputs {
            return Err(Error::Validation(format!(
                "n_outputs is {} but output_map lists {} wires",
                self.n_outputs,
                self.output_map.len()
            )));
        }
        let gates = self
            .gates
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let kind = GateKind::from_name(&r.op)
                    .ok_or_else(|| Error::Validation(format!("gate {i}: unknown op {:?}", r.op)))?;
                Gate::new(kind, &r.inputs, &r.out)
                    .map_err(|e| Error::Validation(format!("gate {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let circuit = Circuit::new(self.n_inputs, gates, self.output_map.clone())?;
        if let Some(meta) = &self.metadata {
            let p = meta.partition;
            if p.n_inputs() != self.n_inputs || p.n_outputs() != self.n_outputs {
                return Err(Error::Validation(format!(
                    "wire partition covers {} inputs and {} outputs, circuit has {} and {}",
                    p.n_inputs(),
                    p.n_outputs(),
                    self.n_inputs,
                    self.n_outputs
                )));
            }
        }
        Ok(circuit)
    }
}

pub fn to_json(c: &Circuit) -> String {
    CircuitDocument::new(c, None).to_json()
}

pub fn from_json(text: &str) -> Result<Circuit> {
    CircuitDocument::from_json(text)?.circuit()
}

/// Wrap a `kp` or `zkp` document with the claim check, keeping its metadata
/// with the state output moved to the claim input.
pub fn snarkize_document(doc: &CircuitDocument) -> Result<CircuitDocument> {
    let circuit = doc.circuit()?;
    let meta = doc
        .metadata
        .as_ref()
        .ok_or_else(|| Error::Validation("document has no metadata to snarkize".into()))?;
    let p = meta.partition;
    let (wrapped, kind) = match meta.kind {
        CircuitKind::Kp => (
            snarkize(&KpMorphism::new(
                p.state_in,
                p.witness,
                p.state_out,
                circuit,
            )?),
            CircuitKind::SnarkKp,
        ),
        CircuitKind::Zkp => (
            zkp_snarkize(&ZkpMorphism::new(
                p.state_in,
                p.spec,
                p.witness,
                p.state_out,
                circuit,
            )?),
            CircuitKind::SnarkZkp,
        ),
        other => {
            return Err(Error::Validation(format!(
                "cannot snarkize a {} circuit",
                serde_json::to_string(&other).expect("kind serializes")
            )))
        }
    };
    let meta = Metadata {
        kind,
        partition: WirePartition {
            claim: p.state_out,
            flag: 1,
            state_out: 0,
            ..p
        },
        ..meta.clone()
    };
    Ok(CircuitDocument::new(&wrapped, Some(meta)))
}

fn fresh(next: &mut usize) -> usize {
    *next += 1;
    *next - 1
}

/// Bristol Fashion text with all inputs in one group and all outputs in one.
pub fn to_bristol(c: &Circuit) -> String {
    let group = |n: usize| if n == 0 { vec![] } else { vec![n] };
    to_bristol_grouped(c, &group(c.n_inputs()), &group(c.n_outputs()))
        .expect("single groups cover every wire")
}

/// Bristol Fashion text with the given input and output group widths.
///
/// Inputs keep wire ids `0..n`. NAND lowers to AND then INV, COPY to two EQW,
/// constants to EQ with a literal source. Outputs occupy the last wires; any
/// output not already there is moved with EQW.
pub fn to_bristol_grouped(
    c: &Circuit,
    input_groups: &[usize],
    output_groups: &[usize],
) -> Result<String> {
    if input_groups.iter().sum::<usize>() != c.n_inputs() {
        return Err(Error::width(
            "bristol input groups",
            c.n_inputs(),
            input_groups.iter().sum(),
        ));
    }
    if output_groups.iter().sum::<usize>() != c.n_outputs() {
        return Err(Error::width(
            "bristol output groups",
            c.n_outputs(),
            output_groups.iter().sum(),
        ));
    }
    let mut map: Vec<usize> = (0..c.n_wires()).collect();
    let mut next = c.n_inputs();
    let mut lines = Vec::with_capacity(c.gates().len() * 2);
    for gate in c.gates() {
        let ins: Vec<usize> = gate.inputs().iter().map(|&w| map[w]).collect();
        match gate.kind() {
            GateKind::Nand => {
                let t = fresh(&mut next);
                let out = fresh(&mut next);
                lines.push(format!("2 1 {} {} {t} AND", ins[0], ins[1]));
                lines.push(format!("1 1 {t} {out} INV"));
                map[gate.outputs()[0]] = out;
            }
            GateKind::Copy => {
                for &o in gate.outputs() {
                    let out = fresh(&mut next);
                    lines.push(format!("1 1 {} {out} EQW", ins[0]));
                    map[o] = out;
                }
            }
            GateKind::True | GateKind::False => {
                let out = fresh(&mut next);
                let literal = (gate.kind() == GateKind::True) as u8;
                lines.push(format!("1 1 {literal} {out} EQ"));
                map[gate.outputs()[0]] = out;
            }
        }
    }
    let outs: Vec<usize> = c.outputs().iter().map(|&w| map[w]).collect();
    let in_place = outs
        .iter()
        .enumerate()
        .all(|(i, &w)| w == next - outs.len() + i)
        && outs.len() <= next - c.n_inputs();
    if !in_place {
        for w in outs {
            let out = fresh(&mut next);
            lines.push(format!("1 1 {w} {out} EQW"));
        }
    }
    let join = |groups: &[usize]| {
        std::iter::once(groups.len())
            .chain(groups.iter().copied())
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut text = String::new();
    writeln!(text, "{} {next}", lines.len()).unwrap();
    writeln!(text, "{}", join(input_groups)).unwrap();
    writeln!(text, "{}", join(output_groups)).unwrap();
    text.push('\n');
    for line in lines {
        text.push_str(&line);
        text.push('\n');
    }
    Ok(text)
}
