mod common;

use common::{random_circuit, rows, small_graphs, walks};
use pathcirc::circuit::{constant, discard, ext_equal, identity, primitive, seq, tensor_all};
use pathcirc::graph::VertexId;
use pathcirc::kp::{edge_evaluator, kp_compose, kp_identity, path_verifier};
use pathcirc::universal::{
    universal_step, universal_verifier, zkp_compose, zkp_identity, ZkpMorphism,
};
use pathcirc::{Budget, Enumeration, GateKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_zkp(rng: &mut ChaCha8Rng, a: usize, k: usize, out: usize) -> ZkpMorphism {
    let n = rng.gen_range(0..=1);
    let gates = rng.gen_range(0..30);
    ZkpMorphism::new(a, k, n, out, random_circuit(rng, a + k + n, 1 + out, gates)).unwrap()
}

#[test]
fn zkp_association_is_ext_irrelevant() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let (a, b, c, d, k) = (
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        );
        let f = random_zkp(&mut rng, a, k, b);
        let g = random_zkp(&mut rng, b, k, c);
        let h = random_zkp(&mut rng, c, k, d);
        let left = zkp_compose(&zkp_compose(&f, &g).unwrap(), &h).unwrap();
        let right = zkp_compose(&f, &zkp_compose(&g, &h).unwrap()).unwrap();
        assert!(ext_equal(left.circuit(), right.circuit(), 12).unwrap());
        let id_a = zkp_identity(a, k);
        let id_b = zkp_identity(b, k);
        let lu = zkp_compose(&id_a, &f).unwrap();
        let ru = zkp_compose(&f, &id_b).unwrap();
        assert!(ext_equal(lu.circuit(), f.circuit(), 12).unwrap());
        assert!(ext_equal(ru.circuit(), f.circuit(), 12).unwrap());
    }
}

#[test]
fn both_sides_see_the_same_spec() {
    // reads the spec into the state, drops its own state
    let k = 3;
    let grab = tensor_all([&discard(k), &primitive(GateKind::True), &identity(k)]);
    let grab = ZkpMorphism::new(
        k,
        k,
        0,
        k,
        seq(&tensor_all([&identity(k), &identity(k)]), &grab).unwrap(),
    )
    .unwrap();
    // checks that the state equals the spec bit by bit
    let mut b = pathcirc::CircuitBuilder::new(2 * k);
    let eq: Vec<_> = (0..k)
        .map(|i| {
            let x = b.xor(i, k + i);
            b.not(x)
        })
        .collect();
    let all = b.and_all(&eq);
    let check = ZkpMorphism::new(k, k, 0, 0, b.build(vec![all]).unwrap()).unwrap();
    let both = zkp_compose(&grab, &check).unwrap();
    assert!(rows(both.circuit()).iter().all(|&r| r == 1));
}

#[test]
fn composed_edge_evaluators_match_path_verifier() {
    for g in small_graphs(2, 2) {
        let en = Enumeration::new(&g);
        for v in 0..g.n_vertices() {
            for len in 1..=3 {
                for p in walks(&g, VertexId(v), len) {
                    let composed = p.steps.iter().fold(kp_identity(en.v_bits()), |acc, &s| {
                        kp_compose(&acc, &edge_evaluator(&g, &en, s).unwrap()).unwrap()
                    });
                    let codes: pathcirc::BitVector = p
                        .steps
                        .iter()
                        .map(|&s| en.step_code(s))
                        .collect::<Vec<_>>()
                        .iter()
                        .collect();
                    let pv = path_verifier(&g, &en, len).unwrap();
                    let fixed = seq(
                        &tensor_all([&identity(en.v_bits()), &constant(&codes)]),
                        pv.circuit(),
                    )
                    .unwrap();
                    assert!(ext_equal(composed.circuit(), &fixed, 12).unwrap());
                }
            }
        }
    }
}

#[test]
fn invalid_spec_rejects_every_step() {
    let step = universal_step(1, 2, &Budget::default()).unwrap();
    // an encoding whose first source row is nonzero but matches no graph
    let mut spec = vec![true; step.spec_width()];
    spec[0] = false;
    let feed = tensor_all([
        &identity(step.in_width()),
        &constant(&spec.into_iter().collect()),
        &identity(step.witness_width()),
    ]);
    let fixed = seq(&feed, step.circuit()).unwrap();
    assert!(rows(&fixed).iter().all(|r| r >> step.out_width() == 0));
}

#[test]
fn universal_budget_is_enforced() {
    let tight = Budget {
        max_gates: 100,
        ..Budget::default()
    };
    assert!(matches!(
        universal_verifier(1, 2, 2, &tight),
        Err(pathcirc::Error::Budget { .. })
    ));
}
