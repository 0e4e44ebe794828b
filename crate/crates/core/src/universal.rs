//! Verifiers that take the graph itself as an input.
//!
//! A graph within capacity `(m, n)` (at most `m` edges, at most `n`
//! vertices) is serialized as its source and target tables at capacity
//! widths. The universal lookup circuits hold one filtered copy of the
//! graph-specific circuit per possible graph and OR the results: for the
//! encoding of `G` only `G`'s copy can fire.

use std::fmt;
use std::str::FromStr;

use crate::bits::{code_width, BitVector};
use crate::budget::Budget;
use crate::circuit::{
    copy_bus, derived_gate, discard, identity, primitive, seq, symmetry, tensor, tensor_all,
    wiring, Circuit, DerivedGate, GateKind,
};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, count_graphs, source_table, target_table, Enumeration, Graph};
use crate::kp::snark_wrap;
use crate::synth::{
    filter_circuit, match_circuit, source_circuit, target_circuit, vertex_check_circuit,
};

/// Encodings wider than this are refused outright.
const MAX_SPEC_BITS: u128 = 1 << 32;

/// Vertex code width at capacity: `ceil(log2(n + 1))`, at least 1.
pub fn vertex_code_bits(n: usize) -> usize {
    code_width(n as u64 + 1)
}

/// Edge code width at capacity: `ceil(log2(m + n))`, at least 1.
pub fn edge_code_bits(m: usize, n: usize) -> usize {
    code_width(m as u64 + n as u64)
}

/// `f(m, n) = 2 · 2^E · V`: both tables, every row, at capacity widths.
pub fn spec_width(m: usize, n: usize) -> Result<usize> {
    let rows = 1u128
        .checked_shl(edge_code_bits(m, n) as u32)
        .unwrap_or(u128::MAX);
    let bits = rows.saturating_mul(2 * vertex_code_bits(n) as u128);
    if bits > MAX_SPEC_BITS {
        return Err(Error::Budget {
            what: "graph encoding width",
            requested: bits,
            limit: MAX_SPEC_BITS,
        });
    }
    Ok(bits as usize)
}

/// The source table rows followed by the target table rows of a graph,
/// enumerated at capacity `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphEncoding {
    m: usize,
    n: usize,
    bits: BitVector,
}

impl GraphEncoding {
    pub fn new(m: usize, n: usize, bits: BitVector) -> Result<Self> {
        let expected = spec_width(m, n)?;
        if bits.width() != expected {
            return Err(Error::width("graph encoding", expected, bits.width()));
        }
        Ok(GraphEncoding { m, n, bits })
    }

    pub fn max_edges(&self) -> usize {
        self.m
    }

    pub fn max_vertices(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    /// Lowercase hex of the bits, most significant nibble first.
    pub fn to_hex(&self) -> String {
        let nibbles: Vec<u8> = self
            .bits
            .bits()
            .chunks(4)
            .map(|c| c.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
            .collect();
        let bytes: Vec<u8> = nibbles
            .chunks(2)
            .map(|p| (p[0] << 4) | p.get(1).copied().unwrap_or(0))
            .collect();
        let mut hex = hex::encode(bytes);
        hex.truncate(nibbles.len());
        hex
    }
}

impl fmt::Display for GraphEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {}", self.m, self.n, self.to_hex())
    }
}

impl FromStr for GraphEncoding {
    type Err = Error;

    /// Parse `"(m,n) <hex>"` as printed by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let header_end = s
            .find(')')
            .ok_or_else(|| Error::parse("header", "expected `(m,n)`"))?;
        let header = s[..header_end]
            .strip_prefix('(')
            .ok_or_else(|| Error::parse("header", "expected `(`"))?;
        let (m, n) = header
            .split_once(',')
            .ok_or_else(|| Error::parse("header", "expected `m,n`"))?;
        let number = |what: &str, text: &str| -> Result<usize> {
            text.trim().parse().map_err(|_| {
                Error::parse(
                    "header",
                    format!("{what} `{}` is not a number", text.trim()),
                )
            })
        };
        let (m, n) = (number("m", m)?, number("n", n)?);
        let hex = s[header_end + 1..].trim();
        let width = spec_width(m, n)?;
        if width % 4 != 0 || hex.len() != width / 4 {
            return Err(Error::parse(
                "payload",
                format!(
                    "expected {} hex digits for capacity ({m},{n}), found {}",
                    width.div_ceil(4),
                    hex.len()
                ),
            ));
        }
        let mut bits = Vec::with_capacity(width);
        for (i, c) in hex.chars().enumerate() {
            let d = c.to_digit(16).ok_or_else(|| {
                Error::parse(format!("payload digit {i}"), format!("{c:?} is not hex"))
            })?;
            bits.extend((0..4).rev().map(|shift| (d >> shift) & 1 == 1));
        }
        GraphEncoding::new(m, n, BitVector::new(bits))
    }
}

/// Serialize `g` at capacity `m` edges, `n` vertices.
pub fn encode_graph(g: &Graph, m: usize, n: usize) -> Result<GraphEncoding> {
    spec_width(m, n)?;
    let en = Enumeration::with_capacity(g, m, n)?;
    let v = en.v_bits();
    let rows = |t: crate::table::TruthTable| -> Vec<BitVector> {
        t.rows()
            .iter()
            .map(|&r| BitVector::from_value(r, v))
            .collect()
    };
    let mut all = rows(source_table(&en, g));
    all.extend(rows(target_table(&en, g)));
    GraphEncoding::new(m, n, all.iter().collect())
}

/// Number of graphs within capacity: `sum n'^(2m')` over `n' <= n`, `m' <= m`.
pub fn count_capacity_graphs(m: usize, n: usize) -> u128 {
    (0..=n)
        .flat_map(|nv| (0..=m).map(move |ne| count_graphs(nv, ne)))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

/// Every graph with at most `n` vertices and `m` edges, by vertex count then
/// edge count, each group in [`all_graphs`] order.
pub fn capacity_graphs(m: usize, n: usize, budget: &Budget) -> Result<Vec<Graph>> {
    budget.check_graphs(count_capacity_graphs(m, n))?;
    let mut graphs = Vec::new();
    for nv in 0..=n {
        for ne in 0..=m {
            graphs.extend(all_graphs(nv, ne, budget)?);
        }
    }
    Ok(graphs)
}

/// `spec ++ key -> out`: `inner` when the spec equals `spec`, zero otherwise.
///
/// The filter's bit is copied once per output bit and ANDed in.
fn filtered(spec: &BitVector, inner: &Circuit) -> Circuit {
    let o = inner.n_outputs();
    let gate = tensor(&filter_circuit(spec), inner);
    let spread = tensor(&derived_gate(DerivedGate::CopyN(o)), &identity(o));
    let pairs: Vec<usize> = (0..o).flat_map(|i| [i, o + i]).collect();
    let pair_up = wiring(2 * o, &pairs).expect("interleaving is a permutation");
    let and = derived_gate(DerivedGate::And);
    let ands = tensor_all(std::iter::repeat_n(&and, o));
    [spread, pair_up, ands]
        .iter()
        .try_fold(gate, |acc, next| seq(&acc, next))
        .expect("widths line up by construction")
}

/// One filtered copy of `per_graph(G)` for each graph within capacity, all
/// ORed together bit by bit. Inputs are `spec ++ key`.
fn universal_lookup(
    m: usize,
    n: usize,
    key_width: usize,
    out_width: usize,
    budget: &Budget,
    per_graph: impl Fn(&Graph, &Enumeration) -> Result<Circuit>,
) -> Result<Circuit> {
    let f = spec_width(m, n)?;
    let graphs = capacity_graphs(m, n, budget)?;
    let count = graphs.len();
    let branches = graphs
        .iter()
        .map(|g| {
            let en = Enumeration::with_capacity(g, m, n)?;
            Ok(filtered(encode_graph(g, m, n)?.bits(), &per_graph(g, &en)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let fan = tensor(&copy_bus(f, count), &copy_bus(key_width, count));
    let route: Vec<usize> = (0..count)
        .flat_map(|i| {
            (i * f..(i + 1) * f).chain((0..key_width).map(move |j| count * f + i * key_width + j))
        })
        .collect();
    let route = wiring(count * (f + key_width), &route)?;
    let by_bit: Vec<usize> = (0..out_width)
        .flat_map(|bit| (0..count).map(move |i| i * out_width + bit))
        .collect();
    let by_bit = wiring(count * out_width, &by_bit)?;
    let or = derived_gate(DerivedGate::OrN(count));
    let ors = tensor_all(std::iter::repeat_n(&or, out_width));
    [route, tensor_all(&branches), by_bit, ors]
        .iter()
        .try_fold(fan, |acc, next| seq(&acc, next))
}

/// `spec ++ edge code -> source vertex code` for any graph within capacity.
pub fn universal_source(m: usize, n: usize, budget: &Budget) -> Result<Circuit> {
    universal_lookup(
        m,
        n,
        edge_code_bits(m, n),
        vertex_code_bits(n),
        budget,
        source_circuit,
    )
}

/// `spec ++ edge code -> target vertex code` for any graph within capacity.
pub fn universal_target(m: usize, n: usize, budget: &Budget) -> Result<Circuit> {
    universal_lookup(
        m,
        n,
        edge_code_bits(m, n),
        vertex_code_bits(n),
        budget,
        target_circuit,
    )
}

/// `spec ++ vertex code -> 1` iff the code names a vertex of the encoded graph.
pub fn universal_vertex_check(m: usize, n: usize, budget: &Budget) -> Result<Circuit> {
    universal_lookup(m, n, vertex_code_bits(n), 1, budget, |_, en| {
        vertex_check_circuit(en)
    })
}

/// A flagged circuit `state ++ spec ++ witness -> flag ++ state` whose spec
/// input is shared, not concatenated, under composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZkpMorphism {
    in_width: usize,
    spec_width: usize,
    witness_width: usize,
    out_width: usize,
    circuit: Circuit,
}

impl ZkpMorphism {
    pub fn new(
        in_width: usize,
        spec_width: usize,
        witness_width: usize,
        out_width: usize,
        circuit: Circuit,
    ) -> Result<Self> {
        let inputs = in_width + spec_width + witness_width;
        if circuit.n_inputs() != inputs {
            return Err(Error::width(
                "zkp morphism inputs",
                inputs,
                circuit.n_inputs(),
            ));
        }
        if circuit.n_outputs() != 1 + out_width {
            return Err(Error::width(
                "zkp morphism outputs",
                1 + out_width,
                circuit.n_outputs(),
            ));
        }
        Ok(ZkpMorphism {
            in_width,
            spec_width,
            witness_width,
            out_width,
            circuit,
        })
    }

    pub fn in_width(&self) -> usize {
        self.in_width
    }

    pub fn spec_width(&self) -> usize {
        self.spec_width
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

    pub fn eval(
        &self,
        state: &BitVector,
        spec: &BitVector,
        witness: &BitVector,
    ) -> Result<(bool, BitVector)> {
        if state.width() != self.in_width {
            return Err(Error::width(
                "zkp state input",
                self.in_width,
                state.width(),
            ));
        }
        if spec.width() != self.spec_width {
            return Err(Error::width(
                "zkp spec input",
                self.spec_width,
                spec.width(),
            ));
        }
        if witness.width() != self.witness_width {
            return Err(Error::width(
                "zkp witness",
                self.witness_width,
                witness.width(),
            ));
        }
        let out = self.circuit.eval(&state.concat(spec).concat(witness))?;
        let (flag, rest) = out.split_at(1);
        Ok((flag.bits()[0], rest))
    }
}

/// Accepts everything, passes the state through and drops the spec.
pub fn zkp_identity(w: usize, spec_width: usize) -> ZkpMorphism {
    let circuit = tensor_all([
        &primitive(GateKind::True),
        &identity(w),
        &discard(spec_width),
    ]);
    ZkpMorphism {
        in_width: w,
        spec_width,
        witness_width: 0,
        out_width: w,
        circuit,
    }
}

/// Composite feeding one copy of the spec to each side:
/// `(Id ⊗ COPY ⊗ Id) ; (Id ⊗ σ ⊗ Id) ; (f ⊗ Id) ; (Id ⊗ g) ; (AND ⊗ Id)`.
pub fn zkp_compose(f: &ZkpMorphism, g: &ZkpMorphism) -> Result<ZkpMorphism> {
    if f.out_width != g.in_width {
        return Err(Error::width("zkp_compose state", f.out_width, g.in_width));
    }
    if f.spec_width != g.spec_width {
        return Err(Error::width("zkp_compose spec", f.spec_width, g.spec_width));
    }
    let (a, k, n0, n1) = (f.in_width, f.spec_width, f.witness_width, g.witness_width);
    let share = tensor_all([&identity(a), &copy_bus(k, 2), &identity(n0 + n1)]);
    let route = tensor_all([&identity(a + k), &symmetry(k, n0), &identity(n1)]);
    let run_f = tensor(&f.circuit, &identity(k + n1));
    let run_g = tensor(&identity(1), &g.circuit);
    let join = tensor(&derived_gate(DerivedGate::And), &identity(g.out_width));
    let circuit = [route, run_f, run_g, join]
        .iter()
        .try_fold(share, |acc, next| seq(&acc, next))?;
    ZkpMorphism::new(a, k, n0 + n1, g.out_width, circuit)
}

/// One step against whatever graph the spec encodes.
pub fn universal_step(m: usize, n: usize, budget: &Budget) -> Result<ZkpMorphism> {
    let (v, e, f) = (vertex_code_bits(n), edge_code_bits(m, n), spec_width(m, n)?);
    let share = tensor_all([&identity(v), &copy_bus(f, 2), &copy_bus(e, 2)]);
    let route = tensor_all([&identity(v + f), &symmetry(f, e), &identity(e)]);
    let lookup = tensor_all([
        &identity(v),
        &universal_source(m, n, budget)?,
        &universal_target(m, n, budget)?,
    ]);
    let check = tensor(&match_circuit(v), &identity(v));
    let circuit = [route, lookup, check]
        .iter()
        .try_fold(share, |acc, next| seq(&acc, next))?;
    ZkpMorphism::new(v, f, e, v, circuit)
}

/// Accepts exactly the vertex codes naming a vertex of the encoded graph.
/// This is the zero-step universal verifier.
pub fn universal_start_guard(m: usize, n: usize, budget: &Budget) -> Result<ZkpMorphism> {
    let (v, f) = (vertex_code_bits(n), spec_width(m, n)?);
    let split = tensor(&copy_bus(v, 2), &identity(f));
    let order: Vec<usize> = (2 * v..2 * v + f).chain(0..2 * v).collect();
    let route = wiring(2 * v + f, &order)?;
    let check = tensor(&universal_vertex_check(m, n, budget)?, &identity(v));
    let circuit = [route, check]
        .iter()
        .try_fold(split, |acc, next| seq(&acc, next))?;
    ZkpMorphism::new(v, f, 0, v, circuit)
}

/// Verifier for `k`-step walks in any graph within capacity.
pub fn universal_verifier(m: usize, n: usize, k: usize, budget: &Budget) -> Result<ZkpMorphism> {
    if k == 0 {
        return universal_start_guard(m, n, budget);
    }
    let step = universal_step(m, n, budget)?;
    budget.check_gates(universal_gate_count(&step, k))?;
    let mut acc = step.clone();
    for _ in 1..k {
        acc = zkp_compose(&acc, &step)?;
    }
    Ok(acc)
}

/// Gate count of the `k`-fold composite of `step`.
pub fn universal_gate_count(step: &ZkpMorphism, k: usize) -> u128 {
    let per_join = (copy_bus(step.spec_width, 2).gates().len()
        + derived_gate(DerivedGate::And).gates().len()) as u128;
    let k = k as u128;
    k * step.circuit.gates().len() as u128 + k.saturating_sub(1) * per_join
}

/// Single-output circuit over `state ++ spec ++ witness ++ claim`.
pub fn zkp_snarkize(f: &ZkpMorphism) -> Circuit {
    snark_wrap(&f.circuit, f.out_width)
}
