//! State graphs of finite state machines and paths through them.

mod enumeration;
mod generate;
mod hom;
mod oracle;

pub use enumeration::{source_table, target_table, vertex_table, Enumeration};
pub use generate::{all_graphs, count_graphs};
pub use hom::{map_path, GraphHom};
pub use oracle::{path_oracle, Verdict};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph with named vertices and edges.
///
/// Declaration order is significant: it fixes the binary codes handed out by
/// [`Enumeration`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// One step of a path: a real edge, or the identity on a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Identity(VertexId),
    Edge(EdgeId),
}

/// A start vertex and a sequence of steps. Whether the steps chain up is
/// for the oracle and the circuits to decide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: VertexId,
    pub steps: Vec<Step>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if let Some(first) = seen.insert(v.as_str(), i) {
                return Err(Error::parse(
                    format!("vertices[{i}]"),
                    format!("duplicate vertex name `{v}` (first declared at vertices[{first}])"),
                ));
            }
        }
        let mut edge_names = HashMap::new();
        let mut out = Vec::with_capacity(edges.len());
        for (i, (name, src, tgt)) in edges.into_iter().enumerate() {
            for (what, idx) in [("source", src), ("target", tgt)] {
                if idx >= vertices.len() {
                    return Err(Error::parse(
                        format!("edges[{i}]"),
                        format!(
                            "{what} index {idx} out of range for {} vertices",
                            vertices.len()
                        ),
                    ));
                }
            }
            if let Some(first) = edge_names.insert(name.clone(), i) {
                return Err(Error::parse(
                    format!("edges[{i}]"),
                    format!("duplicate edge name `{name}` (first declared at edges[{first}])"),
                ));
            }
            out.push(Edge {
                name,
                source: VertexId(src),
                target: VertexId(tgt),
            });
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    /// Parse the JSON form `{"vertices": [..], "edges": [[name, src, tgt], ..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        let index: HashMap<&str, usize> = doc
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, (name, src, tgt)) in doc.edges.iter().enumerate() {
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| {
                    Error::parse(
                        format!("edges[{i}]"),
                        format!("edge `{name}` names unknown vertex `{v}`"),
                    )
                })
            };
            edges.push((name.clone(), lookup(src)?, lookup(tgt)?));
        }
        Graph::new(doc.vertices, edges)
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDocument {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        e.name.clone(),
                        self.vertices[e.source.0].clone(),
                        self.vertices[e.target.0].clone(),
                    )
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("graph documents always serialize")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .map(VertexId)
            .ok_or_else(|| Error::Lookup {
                kind: "vertex",
                name: name.to_string(),
            })
    }

    pub fn edge(&self, name: &str) -> Result<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .map(EdgeId)
            .ok_or_else(|| Error::Lookup {
                kind: "edge",
                name: name.to_string(),
            })
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    /// Source of a step; identities start and end at their vertex.
    pub fn step_source(&self, step: Step) -> VertexId {
        match step {
            Step::Identity(v) => v,
            Step::Edge(e) => self.edges[e.0].source,
        }
    }

    pub fn step_target(&self, step: Step) -> VertexId {
        match step {
            Step::Identity(v) => v,
            Step::Edge(e) => self.edges[e.0].target,
        }
    }

    pub fn contains_step(&self, step: Step) -> bool {
        match step {
            Step::Identity(v) => v.0 < self.n_vertices(),
            Step::Edge(e) => e.0 < self.n_edges(),
        }
    }

    pub fn step_name(&self, step: Step) -> String {
        match step {
            Step::Identity(v) => format!("id:{}", self.vertices[v.0]),
            Step::Edge(e) => self.edges[e.0].name.clone(),
        }
    }

    /// Resolve a step by name: an edge name, or `id:<vertex>` for an identity.
    pub fn step(&self, name: &str) -> Result<Step> {
        match name.strip_prefix("id:") {
            Some(v) if self.edge(name).is_err() => Ok(Step::Identity(self.vertex(v)?)),
            _ => Ok(Step::Edge(self.edge(name)?)),
        }
    }

    /// Does `path` chain up: every step leaves from where the previous ended?
    pub fn is_walk(&self, path: &Path) -> bool {
        if path.start.0 >= self.n_vertices() {
            return false;
        }
        let mut at = path.start;
        for &step in &path.steps {
            if !self.contains_step(step) || self.step_source(step) != at {
                return false;
            }
            at = self.step_target(step);
        }
        true
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl Path {
    pub fn new(start: VertexId, steps: Vec<Step>) -> Self {
        Path { start, steps }
    }

    pub fn empty(start: VertexId) -> Self {
        Path {
            start,
            steps: Vec::new(),
        }
    }

    /// Build from a start vertex name and step names (see [`Graph::step`]).
    pub fn from_names<S: AsRef<str>>(g: &Graph, start: &str, steps: &[S]) -> Result<Self> {
        Ok(Path {
            start: g.vertex(start)?,
            steps: steps
                .iter()
                .map(|s| g.step(s.as_ref()))
                .collect::<Result<_>>()?,
        })
    }

    /// Where the path ends if followed step by step: the target of the last
    /// step, or the start when there are no steps.
    pub fn end(&self, g: &Graph) -> VertexId {
        self.steps
            .last()
            .map_or(self.start, |&step| g.step_target(step))
    }
}

/// Length of a path as a morphism of the counting category: edges count 1,
/// identity steps count 0.
pub fn path_length(path: &Path) -> usize {
    path.steps
        .iter()
        .filter(|s| matches!(s, Step::Edge(_)))
        .count()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
}
