#![allow(dead_code)]

pub mod bristol;

use pathcirc::bits::{lane_mask, packed_inputs};
use pathcirc::graph::{all_graphs, EdgeId, Path, Step, VertexId};
use pathcirc::kp::KpMorphism;
use pathcirc::{Budget, Circuit, CircuitBuilder, Graph};
use rand::Rng;

/// Output value of `c` for every input value, outputs read most significant
/// first. Needs at most 64 outputs.
pub fn rows(c: &Circuit) -> Vec<u64> {
    let (w, o) = (c.n_inputs(), c.n_outputs());
    assert!(o <= 64 && w < 30);
    let total = 1u64 << w;
    let mut rows = Vec::with_capacity(total as usize);
    let mut base = 0;
    while base < total {
        let out = c.eval_packed(&packed_inputs(w, base)).unwrap();
        for lane in 0..lane_mask(w, base).count_ones() {
            rows.push(
                out.iter()
                    .fold(0u64, |acc, word| (acc << 1) | ((word >> lane) & 1)),
            );
        }
        base += 64;
    }
    rows
}

/// Every graph with at most `n` vertices and at most `m` edges.
pub fn small_graphs(n: usize, m: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for nv in 0..=n {
        for ne in 0..=m {
            graphs.extend(all_graphs(nv, ne, &Budget::default()).unwrap());
        }
    }
    graphs
}

/// Every edge-only walk of exactly `len` steps starting at `start`.
pub fn walks(g: &Graph, start: VertexId, len: usize) -> Vec<Path> {
    let mut out = vec![Path::empty(start)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let at = p.end(g);
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(move |(_, e)| e.source == at)
                    .map(move |(j, _)| {
                        let mut steps = p.steps.clone();
                        steps.push(Step::Edge(EdgeId(j)));
                        Path::new(p.start, steps)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// A random valid circuit: gates drawn over a pool of unread wires, outputs
/// picked from what is left, topped up with constants when short.
pub fn random_circuit(
    rng: &mut impl Rng,
    n_inputs: usize,
    n_outputs: usize,
    n_gates: usize,
) -> Circuit {
    let mut b = CircuitBuilder::new(n_inputs);
    let mut pool = b.inputs();
    let take =
        |rng: &mut _, pool: &mut Vec<usize>| pool.swap_remove(Rng::gen_range(rng, 0..pool.len()));
    for _ in 0..n_gates {
        match rng.gen_range(0..8) {
            0..=3 if pool.len() >= 2 => {
                let x = take(rng, &mut pool);
                let y = take(rng, &mut pool);
                pool.push(b.nand(x, y));
            }
            4..=5 if !pool.is_empty() => {
                let x = take(rng, &mut pool);
                let (p, q) = b.copy(x);
                pool.extend([p, q]);
            }
            _ => pool.push(b.constant(rng.gen())),
        }
    }
    while pool.len() < n_outputs {
        pool.push(b.constant(rng.gen()));
    }
    let outputs = (0..n_outputs).map(|_| take(rng, &mut pool)).collect();
    b.build(outputs).unwrap()
}

pub fn random_kp(rng: &mut impl Rng, a: usize, n: usize, out: usize) -> KpMorphism {
    let gates = rng.gen_range(0..24);
    KpMorphism::new(a, n, out, random_circuit(rng, a + n, 1 + out, gates)).unwrap()
}
