//! Reidemeister moves checked against recomputed invariants, and the unknot search against
//! diagrams built from the crossingless one.

use knotadj::invariants::Fingerprint;
use knotadj::moves::{
    apply_move, detect_unknot, enumerate_moves, Growth, MoveKind, ReidemeisterMove,
    UnknotBudget, UnknotResult,
};
use knotadj::{Diagram, DtCode};
use proptest::prelude::*;

fn table() -> Vec<Diagram> {
    include_str!("../fixtures/knots.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once('\t'))
        .map(|(_, c)| Diagram::from_dt(&c.parse::<DtCode>().unwrap()).unwrap())
        .filter(|d| d.crossings() <= 9)
        .collect()
}

/// Random walk of moves chosen by `picks`, capped at `max_crossings`.
fn walk(d: &Diagram, picks: &[usize], max_crossings: usize) -> (Diagram, Vec<ReidemeisterMove>) {
    let mut d = d.clone();
    let mut log = Vec::new();
    for &p in picks {
        let moves: Vec<_> = enumerate_moves(&d, Growth::All)
            .into_iter()
            .filter(|m| d.crossings() as i64 + m.delta() <= max_crossings as i64)
            .collect();
        if moves.is_empty() {
            continue;
        }
        let m = moves[p % moves.len()].clone();
        d = apply_move(&d, &m).unwrap();
        log.push(m);
    }
    (d, log)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_preserve_fingerprint(k in 0usize..84, picks in prop::collection::vec(any::<usize>(), 1..6)) {
        let knots = table();
        let d = &knots[k % knots.len()];
        let (e, _) = walk(d, &picks, d.crossings() + 4);
        prop_assert!(e.is_planar());
        prop_assert_eq!(Fingerprint::of(&e).unwrap(), Fingerprint::of(d).unwrap());
    }

    #[test]
    fn unknot_walks_are_certified(picks in prop::collection::vec(any::<usize>(), 1..12)) {
        let (d, log) = walk(&Diagram::unknot(), &picks, 8);
        match detect_unknot(&d, UnknotBudget::default()) {
            UnknotResult::Unknot(cert) => prop_assert!(cert.verify(&d)),
            other => prop_assert!(false, "{d} after {log:?}: {other:?}"),
        }
    }

    #[test]
    fn crossing_change_is_an_involution(k in 0usize..84, c in any::<usize>()) {
        let knots = table();
        let d = &knots[k % knots.len()];
        let c = c % d.crossings();
        let e = d.change_crossing(c);
        prop_assert_eq!(&e.change_crossing(c), d);
        prop_assert_eq!((e.writhe() - d.writhe()).abs(), 2);
        prop_assert!(e.shadow_isomorphic(d));
    }
}

#[test]
fn reduced_alternating_trefoil_has_no_simplifying_moves() {
    let d = Diagram::from_dt(&"[4,6,2]".parse().unwrap()).unwrap();
    assert!(enumerate_moves(&d, Growth::None)
        .iter()
        .all(|m| !matches!(m.kind(), MoveKind::R1Remove | MoveKind::R2Remove)));
    assert!(enumerate_moves(&Diagram::unknot(), Growth::None).is_empty());
}

#[test]
fn r3_is_its_own_inverse() {
    let mut seen = 0;
    for d in table() {
        for m in enumerate_moves(&d.change_crossing(0), Growth::None) {
            if m.kind() != MoveKind::R3 {
                continue;
            }
            let src = d.change_crossing(0);
            let e = apply_move(&src, &m).unwrap();
            let back = enumerate_moves(&e, Growth::None)
                .into_iter()
                .filter(|b| b.kind() == MoveKind::R3)
                .any(|b| apply_move(&e, &b).unwrap().isomorphic(&src));
            assert!(back, "{src} {m}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}
