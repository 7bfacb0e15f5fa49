//! Weak and strong numbers on the full run through eight crossings.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use knotadj::bj::{
    bj_set_of, check_lemma_chain, small_scale_records, strong_bj_interval, weak_bj_numbers,
    BjError, BjRecord, BjSet, Bound, GapPolicy, WeakOptions,
};
use knotadj::identify::{identify, FactLedger, KnotId, KnotTable};
use knotadj::moves::{apply_flype, enumerate_flypes, search_unknot, UnknotBudget};
use knotadj::tabulate::{enumerate_reference_diagrams, TabulateLimits};

fn records() -> &'static BTreeMap<String, BjRecord> {
    static R: OnceLock<BTreeMap<String, BjRecord>> = OnceLock::new();
    R.get_or_init(|| {
        small_scale_records(8, KnotTable::bundled(), UnknotBudget::default(), TabulateLimits::default())
            .unwrap()
    })
}

#[test]
fn every_knot_through_eight_crossings_has_a_record() {
    let t = KnotTable::bundled();
    let expected: BTreeSet<&str> = t
        .entries()
        .iter()
        .filter(|e| e.crossing_number <= 8)
        .map(|e| e.name.as_str())
        .collect();
    let got: BTreeSet<&str> = records().keys().map(String::as_str).collect();
    assert_eq!(got, expected);
    let r = &records()["3_1"];
    assert_eq!(r.bj_set.members, BTreeSet::from([KnotId::Unknot]));
    assert!(records()["3_1#3_1"].notes[0].starts_with("composite-policy"));
    assert!(r.to_string().starts_with("knot 3_1\ncrossing_number 3\nminimal_diagrams 1\n"));
}

#[test]
fn weak_numbers_satisfy_the_recursion() {
    let w = weak_bj_numbers(records(), KnotTable::bundled(), &BTreeMap::new(), WeakOptions::default())
        .unwrap();
    assert!(w.violations.is_empty(), "{:?}", w.violations);
    for k in ["3_1", "6_3", "8_13"] {
        assert_eq!(w.values[k], Bound::exact(1));
    }
    assert_eq!(w.values["7_1"], Bound::exact(3));
    assert!(w.values.values().all(|b| b.value().is_some()));
}

#[test]
fn lemma_chain_holds() {
    let w = weak_bj_numbers(records(), KnotTable::bundled(), &BTreeMap::new(), WeakOptions::default())
        .unwrap();
    let rep = check_lemma_chain(records(), &w, FactLedger::bundled()).unwrap();
    assert!(rep.holds(), "{rep}");
    assert!(rep.weak_failures.is_empty());
    assert_eq!(rep.lines[0], "unknot\tu=0\ts=0\tw=0");
}

#[test]
fn missing_records_are_reported() {
    let mut partial = records().clone();
    partial.remove("5_2");
    let t = KnotTable::bundled();
    let err = weak_bj_numbers(&partial, t, &BTreeMap::new(), WeakOptions::default()).unwrap_err();
    assert_eq!(err, BjError::MissingBjRecord("5_2".into()));
    let w = weak_bj_numbers(&partial, t, &BTreeMap::new(), WeakOptions { lenient: true }).unwrap();
    assert_eq!(w.values["7_4"], Bound { lo: 2, hi: Some(2) });
    assert!(w.notes.iter().any(|n| n.contains("5_2")));
}

#[test]
fn strong_intervals() {
    let l = FactLedger::bundled();
    let set = |names: &[&str]| BjSet {
        members: names.iter().map(|n| KnotId::Named(n.to_string())).collect(),
        ..Default::default()
    };
    let trefoil = BjSet {
        members: BTreeSet::from([KnotId::Unknot]),
        ..Default::default()
    };
    assert_eq!(strong_bj_interval(&trefoil, l).unwrap(), Bound::exact(1));
    assert_eq!(strong_bj_interval(&BjSet::default(), l).unwrap(), Bound::exact(0));
    assert_eq!(strong_bj_interval(&set(&["K12n288", "7_4"]), l).unwrap(), Bound { lo: 2, hi: Some(3) });
    assert!(matches!(strong_bj_interval(&set(&["nope"]), l), Err(BjError::MissingFact(_))));
}

/// A flype carries the neighbours of a minimal diagram to the neighbours of its image.
#[test]
fn bj_sets_are_flype_invariant() {
    let t = KnotTable::bundled();
    let b = UnknotBudget::default();
    for r in records().values().filter(|r| !r.knot.contains('#')) {
        for d in &r.minimal_diagrams {
            let base = bj_set_of(std::slice::from_ref(d), t, b, GapPolicy::Fatal).unwrap();
            for f in enumerate_flypes(d) {
                let e = apply_flype(d, &f).unwrap();
                let moved = bj_set_of(&[e], t, b, GapPolicy::Fatal).unwrap();
                assert_eq!(moved.members, base.members, "{} {f}", r.knot);
            }
        }
    }
}

/// Some set of at most half the crossings of each reference diagram unknots it: make the
/// diagram descending from the base point, or ascending if that changes fewer.
#[test]
fn half_the_crossings_suffice() {
    for n in 3..=8 {
        for d in enumerate_reference_diagrams(n, TabulateLimits::default()).unwrap().diagrams() {
            let change: Vec<usize> = (0..n)
                .filter(|&c| {
                    let first = d.visits(c).into_iter().min().unwrap();
                    !d.visit_over(first)
                })
                .collect();
            let change: Vec<usize> = if 2 * change.len() <= n {
                change
            } else {
                (0..n).filter(|c| !change.contains(c)).collect()
            };
            assert!(2 * change.len() <= n);
            let u = change.iter().fold(d.clone(), |e, &c| e.change_crossing(c));
            let cert = search_unknot(&u, UnknotBudget::default()).expect("descending diagrams unknot");
            assert!(cert.verify(&u));
        }
    }
}

#[test]
fn identification_gaps_are_fatal_by_default() {
    let small = KnotTable::ingest("3_1\t[4,6,2]\n").unwrap();
    let d = knotadj::Diagram::from_dt(&"[4,8,10,12,2,6]".parse().unwrap()).unwrap();
    assert!(matches!(
        bj_set_of(std::slice::from_ref(&d), &small, UnknotBudget::default(), GapPolicy::Fatal),
        Err(BjError::IdentificationGap { .. })
    ));
    let marked = bj_set_of(std::slice::from_ref(&d), &small, UnknotBudget::default(), GapPolicy::Mark).unwrap();
    assert!(marked.members.contains(&KnotId::Unrecognized));
    assert!(marked.members.contains(&KnotId::Unknot));
    assert_eq!(identify(&d, &small, UnknotBudget::default()).unwrap().id, KnotId::Unrecognized);
}
