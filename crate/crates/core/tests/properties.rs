mod common;

use common::bristol::Bristol;
use common::{random_circuit, rows};
use pathcirc::circuit::{ext_equal, identity, seq, symmetry, tensor};
use pathcirc::emit::{from_json, to_bristol, to_json};
use pathcirc::graph::{source_table, target_table, EdgeId, Step, VertexId};
use pathcirc::synth::synth;
use pathcirc::universal::{encode_graph, GraphEncoding};
use pathcirc::{BitVector, Circuit, Enumeration, Graph, TruthTable};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn circuit(seed: u64, n_inputs: usize, n_outputs: usize, gates: usize) -> Circuit {
    random_circuit(
        &mut ChaCha8Rng::seed_from_u64(seed),
        n_inputs,
        n_outputs,
        gates,
    )
}

fn arb_circuit(max_in: usize, max_out: usize) -> impl Strategy<Value = Circuit> {
    (any::<u64>(), 0..=max_in, 0..=max_out, 0usize..40).prop_map(|(s, i, o, g)| circuit(s, i, o, g))
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..5).prop_flat_map(|n| {
        let edges = if n == 0 {
            Just(vec![]).boxed()
        } else {
            prop::collection::vec((0..n, 0..n), 0..6).boxed()
        };
        edges.prop_map(move |pairs| {
            let vertices = (0..n).map(|i| format!("s{i}")).collect();
            let edges = pairs
                .into_iter()
                .enumerate()
                .map(|(j, (s, t))| (format!("t{j}"), s, t))
                .collect();
            Graph::new(vertices, edges).unwrap()
        })
    })
}

fn bits(x: u64, w: usize) -> BitVector {
    BitVector::from_value(x, w)
}

proptest! {
    #[test]
    fn packed_and_scalar_eval_agree(c in arb_circuit(6, 4)) {
        let table = rows(&c);
        for (x, &row) in table.iter().enumerate() {
            let out = c.eval(&bits(x as u64, c.n_inputs())).unwrap();
            prop_assert_eq!(out, bits(row, c.n_outputs()));
        }
    }

    #[test]
    fn seq_is_function_composition(seed in any::<u64>(), a in 0usize..5, b in 0usize..5, c in 0usize..4) {
        let f = circuit(seed, a, b, 20);
        let g = circuit(seed ^ 1, b, c, 20);
        let fg = seq(&f, &g).unwrap();
        let (rf, rg, rfg) = (rows(&f), rows(&g), rows(&fg));
        for x in 0..rf.len() {
            prop_assert_eq!(rfg[x], rg[rf[x] as usize]);
        }
    }

    #[test]
    fn seq_is_associative_and_unital(seed in any::<u64>(), w in 0usize..4) {
        let f = circuit(seed, w, w, 15);
        let g = circuit(seed ^ 2, w, w, 15);
        let h = circuit(seed ^ 3, w, w, 15);
        let left = seq(&seq(&f, &g).unwrap(), &h).unwrap();
        let right = seq(&f, &seq(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&seq(&identity(w), &f).unwrap(), &f);
        prop_assert_eq!(&seq(&f, &identity(w)).unwrap(), &f);
    }

    #[test]
    fn tensor_is_parallel(seed in any::<u64>(), a in 0usize..4, b in 0usize..4) {
        let f = circuit(seed, a, 2, 15);
        let g = circuit(seed ^ 5, b, 3, 15);
        let fg = tensor(&f, &g);
        let (rf, rg, rfg) = (rows(&f), rows(&g), rows(&fg));
        for (x, &row) in rfg.iter().enumerate() {
            let (hi, lo) = (x >> b, x & ((1 << b) - 1));
            prop_assert_eq!(row, (rf[hi] << 3) | rg[lo]);
        }
    }

    #[test]
    fn interchange_law(seed in any::<u64>(), a in 0usize..3, b in 0usize..3) {
        let f1 = circuit(seed, a, 2, 10);
        let g1 = circuit(seed ^ 7, 2, 1, 10);
        let f2 = circuit(seed ^ 11, b, 2, 10);
        let g2 = circuit(seed ^ 13, 2, 2, 10);
        let lhs = seq(&tensor(&f1, &f2), &tensor(&g1, &g2)).unwrap();
        let rhs = tensor(&seq(&f1, &g1).unwrap(), &seq(&f2, &g2).unwrap());
        prop_assert!(ext_equal(&lhs, &rhs, 12).unwrap());
    }

    #[test]
    fn symmetry_is_involutive(a in 0usize..5, b in 0usize..5) {
        let twice = seq(&symmetry(a, b), &symmetry(b, a)).unwrap();
        prop_assert!(ext_equal(&twice, &identity(a + b), 12).unwrap());
    }

    #[test]
    fn json_round_trip(c in arb_circuit(8, 6)) {
        let text = to_json(&c);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn bristol_matches_eval(c in arb_circuit(8, 6)) {
        let b = Bristol::parse(&to_bristol(&c));
        prop_assert_eq!(b.n_inputs(), c.n_inputs());
        prop_assert_eq!(b.n_outputs(), c.n_outputs());
        for (x, &row) in rows(&c).iter().enumerate() {
            let input = bits(x as u64, c.n_inputs());
            prop_assert_eq!(b.eval(input.bits()), bits(row, c.n_outputs()).into_bits());
        }
    }

    #[test]
    fn bitstring_round_trip(v in prop::collection::vec(any::<bool>(), 0..80)) {
        let bv = BitVector::new(v);
        prop_assert_eq!(bv.to_string().parse::<BitVector>().unwrap(), bv);
    }

    #[test]
    fn synth_is_exact(w in 0usize..6, o in 1usize..5, seed in any::<u64>()) {
        let t = TruthTable::from_fn(w, o, |x| (x.wrapping_mul(seed | 1) >> 7) & ((1 << o) - 1)).unwrap();
        prop_assert_eq!(rows(&synth(&t).unwrap()), t.rows().to_vec());
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph()) {
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn enumeration_is_injective_and_decodes(g in arb_graph()) {
        let en = Enumeration::new(&g);
        let mut seen = std::collections::HashSet::new();
        for v in (0..g.n_vertices()).map(VertexId) {
            let code = en.vertex_value(v);
            prop_assert!(code != 0);
            prop_assert!(code < 1 << en.v_bits());
            prop_assert_eq!(en.decode_vertex(code), Some(v));
        }
        let steps = (0..g.n_vertices())
            .map(|v| Step::Identity(VertexId(v)))
            .chain((0..g.n_edges()).map(|e| Step::Edge(EdgeId(e))));
        for s in steps {
            let code = en.step_value(s);
            prop_assert!(code < 1 << en.e_bits());
            prop_assert!(seen.insert(code));
            prop_assert_eq!(en.decode_step(code), Some(s));
            let (src, tgt) = (source_table(&en, &g), target_table(&en, &g));
            prop_assert_eq!(src.row(code), en.vertex_value(g.step_source(s)));
            prop_assert_eq!(tgt.row(code), en.vertex_value(g.step_target(s)));
        }
        for code in 0..1u64 << en.e_bits() {
            if en.decode_step(code).is_none() {
                prop_assert_eq!(source_table(&en, &g).row(code), 0);
            }
        }
    }

    #[test]
    fn graph_encoding_round_trip(g in arb_graph(), extra_m in 0usize..2, extra_n in 0usize..2) {
        let (m, n) = (g.n_edges() + extra_m, g.n_vertices() + extra_n);
        let enc = encode_graph(&g, m, n).unwrap();
        let text = enc.to_string();
        prop_assert_eq!(text.parse::<GraphEncoding>().unwrap(), enc.clone());
        let en = Enumeration::with_capacity(&g, m, n).unwrap();
        let src = source_table(&en, &g);
        let v = en.v_bits();
        for (row, &value) in src.rows().iter().enumerate() {
            prop_assert_eq!(enc.bits().slice(row * v..(row + 1) * v), bits(value, v));
        }
    }
}

fn mutate(base: &str, cuts: &[(usize, char)]) -> String {
    let mut chars: Vec<char> = base.chars().collect();
    for &(at, c) in cuts {
        if chars.is_empty() {
            break;
        }
        let i = at % chars.len();
        if c == '\u{0}' {
            chars.remove(i);
        } else {
            chars[i] = c;
        }
    }
    chars.into_iter().collect()
}

proptest! {
    #[test]
    fn decoders_never_panic(text in "\\PC{0,200}") {
        let _ = Graph::from_json(&text);
        let _ = from_json(&text);
        let _ = text.parse::<GraphEncoding>();
        let _ = text.parse::<BitVector>();
        let _ = pathcirc::Budget::default().with_overrides(&text);
    }

    #[test]
    fn mutated_documents_never_panic(
        cuts in prop::collection::vec((any::<usize>(), prop::sample::select(vec!['\u{0}', '0', '9', '"', ',', ']', '}', '-', 'f'])), 1..6)
    ) {
        let graph = r#"{"vertices":["a","b"],"edges":[["e","a","b"]]}"#;
        let _ = Graph::from_json(&mutate(graph, &cuts));
        let doc = to_json(&pathcirc::synth::match_circuit(2));
        if let Ok(c) = from_json(&mutate(&doc, &cuts)) {
            prop_assert_eq!(from_json(&to_json(&c)).unwrap(), c);
        }
        let _ = mutate("(1,2) 6468", &cuts).parse::<GraphEncoding>();
    }
}
