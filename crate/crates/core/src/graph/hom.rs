use super::{EdgeId, Graph, Path, Step, VertexId};
use crate::error::{Error, Result};

/// A structure-preserving map between two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphHom {
    vmap: Vec<VertexId>,
    emap: Vec<EdgeId>,
}

impl GraphHom {
    /// Check that `vmap`/`emap` send every edge of `dom` to an edge of `cod`
    /// between the images of its endpoints.
    pub fn new(dom: &Graph, cod: &Graph, vmap: Vec<VertexId>, emap: Vec<EdgeId>) -> Result<Self> {
        if vmap.len() != dom.n_vertices() || emap.len() != dom.n_edges() {
            return Err(Error::Hom(format!(
                "maps cover {} vertices and {} edges, domain has {} and {}",
                vmap.len(),
                emap.len(),
                dom.n_vertices(),
                dom.n_edges()
            )));
        }
        if let Some(v) = vmap.iter().find(|v| v.0 >= cod.n_vertices()) {
            return Err(Error::Hom(format!("vertex image {} out of range", v.0)));
        }
        for (i, (edge, image)) in dom.edges().iter().zip(&emap).enumerate() {
            let Some(target_edge) = cod.edges().get(image.0) else {
                return Err(Error::Hom(format!("edge image {} out of range", image.0)));
            };
            if vmap[edge.source.0] != target_edge.source
                || vmap[edge.target.0] != target_edge.target
            {
                return Err(Error::Hom(format!(
                    "edge {i} (`{}`) is not sent to an edge between the images of its endpoints",
                    edge.name
                )));
            }
        }
        Ok(GraphHom { vmap, emap })
    }

    pub fn identity(g: &Graph) -> Self {
        GraphHom {
            vmap: (0..g.n_vertices()).map(VertexId).collect(),
            emap: (0..g.n_edges()).map(EdgeId).collect(),
        }
    }

    /// Every homomorphism from `dom` to `cod`.
    pub fn all(dom: &Graph, cod: &Graph) -> Vec<GraphHom> {
        let mut homs = Vec::new();
        let n = cod.n_vertices();
        if dom.n_vertices() > 0 && n == 0 {
            return homs;
        }
        let mut vmap = vec![0usize; dom.n_vertices()];
        loop {
            extend_edges(dom, cod, &vmap, &mut Vec::new(), &mut homs);
            if !advance(&mut vmap, n) {
                break;
            }
        }
        homs
    }

    pub fn vertex(&self, v: VertexId) -> VertexId {
        self.vmap[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> EdgeId {
        self.emap[e.0]
    }

    pub fn step(&self, step: Step) -> Step {
        match step {
            Step::Identity(v) => Step::Identity(self.vertex(v)),
            Step::Edge(e) => Step::Edge(self.edge(e)),
        }
    }
}

fn extend_edges(
    dom: &Graph,
    cod: &Graph,
    vmap: &[usize],
    emap: &mut Vec<EdgeId>,
    out: &mut Vec<GraphHom>,
) {
    let Some(edge) = dom.edges().get(emap.len()) else {
        out.push(GraphHom {
            vmap: vmap.iter().copied().map(VertexId).collect(),
            emap: emap.clone(),
        });
        return;
    };
    let (s, t) = (vmap[edge.source.0], vmap[edge.target.0]);
    for (j, candidate) in cod.edges().iter().enumerate() {
        if candidate.source.0 == s && candidate.target.0 == t {
            emap.push(EdgeId(j));
            extend_edges(dom, cod, vmap, emap, out);
            emap.pop();
        }
    }
}

/// Odometer increment over `digits` in base `base`; false after the last value.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Image of a path under a homomorphism; identities go to identities.
pub fn map_path(h: &GraphHom, p: &Path) -> Path {
    Path {
        start: h.vertex(p.start),
        steps: p.steps.iter().map(|&s| h.step(s)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_length;

    fn graph(json: &str) -> Graph {
        Graph::from_json(json).unwrap()
    }

    #[test]
    fn validation() {
        let dom = graph(r#"{"vertices":["a","b"],"edges":[["e","a","b"]]}"#);
        let cod = graph(r#"{"vertices":["x"],"edges":[["l","x","x"]]}"#);
        assert!(GraphHom::new(&dom, &cod, vec![VertexId(0); 2], vec![EdgeId(0)]).is_ok());
        let line = graph(r#"{"vertices":["x","y"],"edges":[["f","x","y"]]}"#);
        assert!(matches!(
            GraphHom::new(&dom, &line, vec![VertexId(1), VertexId(0)], vec![EdgeId(0)]),
            Err(Error::Hom(_))
        ));
        assert!(GraphHom::new(&dom, &line, vec![VertexId(0)], vec![EdgeId(0)]).is_err());
    }

    #[test]
    fn enumerates_all() {
        let dom = graph(r#"{"vertices":["a","b"],"edges":[["e","a","b"]]}"#);
        let cod =
            graph(r#"{"vertices":["x","y"],"edges":[["f","x","y"],["g","x","y"],["l","x","x"]]}"#);
        // a,b -> x,y via f or g; a,b -> x,x via l
        assert_eq!(GraphHom::all(&dom, &cod).len(), 3);
        let empty = graph(r#"{"vertices":[],"edges":[]}"#);
        assert_eq!(GraphHom::all(&empty, &cod).len(), 1);
        assert_eq!(GraphHom::all(&cod, &empty).len(), 0);
    }

    #[test]
    fn identity_hom_fixes_paths() {
        let g = graph(r#"{"vertices":["a","b"],"edges":[["e","a","b"],["r","b","a"]]}"#);
        let p = Path::from_names(&g, "a", &["e", "id:b", "r"]).unwrap();
        let mapped = map_path(&GraphHom::identity(&g), &p);
        assert_eq!(mapped, p);
        assert_eq!(path_length(&mapped), path_length(&p));
    }
}
