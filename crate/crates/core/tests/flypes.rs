//! Flypes against independent recomputation of invariants and the crossing-change square.

use knotadj::invariants::Fingerprint;
use knotadj::moves::{
    apply_flype, enumerate_flypes, flype_orbit, inverse_flype, transport_crossing_change,
    TransportCase,
};
use knotadj::{Diagram, DtCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn table(max_crossings: usize) -> Vec<(String, Diagram)> {
    include_str!("../fixtures/knots.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once('\t'))
        .map(|(n, c)| (n.to_string(), Diagram::from_dt(&c.parse::<DtCode>().unwrap()).unwrap()))
        .filter(|(_, d)| d.crossings() <= max_crossings)
        .collect()
}

fn scramble(d: &Diagram, rng: &mut ChaCha8Rng) -> Diagram {
    (0..d.crossings()).fold(d.clone(), |e, c| if rng.gen() { e.change_crossing(c) } else { e })
}

#[test]
fn flypes_preserve_fingerprints() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nontrivial = 0;
    let mut new_shapes = 0;
    for (name, d) in table(10) {
        for d in [d.clone(), scramble(&d, &mut rng)] {
            let fp = Fingerprint::of(&d).unwrap();
            for f in enumerate_flypes(&d) {
                let e = apply_flype(&d, &f).unwrap();
                assert_eq!(e.crossings(), d.crossings());
                assert_eq!(e.is_reduced(), d.is_reduced());
                assert_eq!(Fingerprint::of(&e).unwrap(), fp, "{name} {d} {f}");
                let g = inverse_flype(&d, &f).unwrap();
                assert!(apply_flype(&e, &g).unwrap().isomorphic(&d), "{name} {f}");
                if f.tangle.len() > 1 {
                    nontrivial += 1;
                    if !e.shadow_isomorphic(&d) {
                        new_shapes += 1;
                    }
                }
            }
        }
    }
    eprintln!("nontrivial {nontrivial} new shapes {new_shapes}");
    assert!(nontrivial > 0 && new_shapes > 0);
}

#[test]
fn crossing_change_square_commutes() {
    let mut cases = [0usize; 3];
    for (_, d) in table(8) {
        for f in enumerate_flypes(&d) {
            let e = apply_flype(&d, &f).unwrap();
            for i in 0..d.crossings() {
                let t = transport_crossing_change(&d, &f, i).unwrap();
                let left = apply_flype(&d.change_crossing(i), &t.flype).unwrap();
                let right = e.change_crossing(t.crossing);
                assert!(left.isomorphic(&right), "{d} {f} {i}");
                cases[match t.case {
                    TransportCase::Outside => 0,
                    TransportCase::InsideTangle => 1,
                    TransportCase::FlypedCrossing => 2,
                }] += 1;
            }
        }
    }
    assert!(cases.iter().all(|&c| c > 0));
}

#[test]
fn flype_reaches_a_different_diagram_of_7_6() {
    let d = Diagram::from_dt(&"[4,8,12,2,14,6,10]".parse().unwrap()).unwrap();
    let fp = Fingerprint::of(&d).unwrap();
    let moved: Vec<Diagram> = enumerate_flypes(&d)
        .iter()
        .map(|f| apply_flype(&d, f).unwrap())
        .filter(|e| !e.shadow_isomorphic(&d))
        .collect();
    assert!(!moved.is_empty());
    for e in &moved {
        assert_eq!(Fingerprint::of(e).unwrap(), fp);
    }
    assert_eq!(flype_orbit(&d, 100).unwrap().len(), 3);
}
