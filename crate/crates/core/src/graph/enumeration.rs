use super::{EdgeId, Graph, Step, VertexId};
use crate::bits::{code_width, BitVector};
use crate::error::{Error, Result};
use crate::table::TruthTable;

/// Binary codes for the vertices, identities and edges of a graph.
///
/// Vertex `i` (declaration order, counting from 1) gets code `i`; code 0 is
/// reserved for "undefined". The identity on vertex `i` gets edge code
/// `i - 1`, and edge `j` (counting from 1) gets edge code `|V| + j - 1`.
/// Every other code is unassigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Enumeration {
    n_vertices: usize,
    n_edges: usize,
    v_bits: usize,
    e_bits: usize,
}

impl Enumeration {
    /// Smallest widths for `g`: `ceil(log2(|V|+1))` and `ceil(log2(|E|+|V|))`,
    /// each at least 1.
    pub fn new(g: &Graph) -> Self {
        Enumeration {
            n_vertices: g.n_vertices(),
            n_edges: g.n_edges(),
            v_bits: vertex_bits(g.n_vertices()),
            e_bits: edge_bits(g.n_edges(), g.n_vertices()),
        }
    }

    /// Enumerate `g` at the widths of a graph with `max_edges` edges and
    /// `max_vertices` vertices; the spare codes stay unassigned.
    pub fn with_capacity(g: &Graph, max_edges: usize, max_vertices: usize) -> Result<Self> {
        if g.n_vertices() > max_vertices || g.n_edges() > max_edges {
            return Err(Error::Capacity {
                vertices: g.n_vertices(),
                edges: g.n_edges(),
                max_vertices,
                max_edges,
            });
        }
        Ok(Enumeration {
            n_vertices: g.n_vertices(),
            n_edges: g.n_edges(),
            v_bits: vertex_bits(max_vertices),
            e_bits: edge_bits(max_edges, max_vertices),
        })
    }

    pub fn v_bits(&self) -> usize {
        self.v_bits
    }

    pub fn e_bits(&self) -> usize {
        self.e_bits
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn vertex_value(&self, v: VertexId) -> u64 {
        debug_assert!(v.0 < self.n_vertices);
        v.0 as u64 + 1
    }

    pub fn step_value(&self, step: Step) -> u64 {
        match step {
            Step::Identity(v) => {
                debug_assert!(v.0 < self.n_vertices);
                v.0 as u64
            }
            Step::Edge(e) => {
                debug_assert!(e.0 < self.n_edges);
                (self.n_vertices + e.0) as u64
            }
        }
    }

    pub fn vertex_code(&self, v: VertexId) -> BitVector {
        BitVector::from_value(self.vertex_value(v), self.v_bits)
    }

    pub fn step_code(&self, step: Step) -> BitVector {
        BitVector::from_value(self.step_value(step), self.e_bits)
    }

    pub fn undefined_vertex(&self) -> BitVector {
        BitVector::zeros(self.v_bits)
    }

    pub fn decode_vertex(&self, code: u64) -> Option<VertexId> {
        (code >= 1 && code <= self.n_vertices as u64).then(|| VertexId(code as usize - 1))
    }

    pub fn decode_step(&self, code: u64) -> Option<Step> {
        let n = self.n_vertices as u64;
        if code < n {
            Some(Step::Identity(VertexId(code as usize)))
        } else if code < n + self.n_edges as u64 {
            Some(Step::Edge(EdgeId((code - n) as usize)))
        } else {
            None
        }
    }

    /// Number of edge codes, `2^e_bits`.
    pub fn edge_code_count(&self) -> u64 {
        1 << self.e_bits
    }

    pub fn vertex_code_count(&self) -> u64 {
        1 << self.v_bits
    }
}

fn vertex_bits(n_vertices: usize) -> usize {
    code_width(n_vertices as u64 + 1)
}

fn edge_bits(n_edges: usize, n_vertices: usize) -> usize {
    code_width((n_edges + n_vertices) as u64)
}

fn step_table(en: &Enumeration, g: &Graph, endpoint: impl Fn(Step) -> VertexId) -> TruthTable {
    debug_assert_eq!((g.n_vertices(), g.n_edges()), (en.n_vertices, en.n_edges));
    TruthTable::from_fn(en.e_bits, en.v_bits, |code| match en.decode_step(code) {
        Some(step) => en.vertex_value(endpoint(step)),
        None => 0,
    })
    .expect("enumeration widths are small enough for a table")
}

/// Edge code to the code of its source vertex; unassigned codes map to zero.
pub fn source_table(en: &Enumeration, g: &Graph) -> TruthTable {
    step_table(en, g, |s| g.step_source(s))
}

/// Edge code to the code of its target vertex; unassigned codes map to zero.
pub fn target_table(en: &Enumeration, g: &Graph) -> TruthTable {
    step_table(en, g, |s| g.step_target(s))
}

/// Vertex code to 1 when it names a vertex, 0 otherwise.
pub fn vertex_table(en: &Enumeration) -> TruthTable {
    TruthTable::from_fn(en.v_bits, 1, |code| en.decode_vertex(code).is_some() as u64)
        .expect("enumeration widths are small enough for a table")
}
