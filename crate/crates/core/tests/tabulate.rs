//! Reference diagrams against the published counts, flype orbits and crossing-change sets.

use std::collections::{BTreeMap, BTreeSet};

use knotadj::bj::minimal_diagrams_of;
use knotadj::fixtures;
use knotadj::identify::{identify, KnotId, KnotTable};
use knotadj::invariants::Fingerprint;
use knotadj::moves::{flype_orbit, UnknotBudget};
use knotadj::tabulate::{
    alternating_diagram_codes, crossing_change_closure, enumerate_reference_diagrams,
    ReferenceSet, TabulateLimits,
};
use knotadj::Diagram;

#[test]
fn counts_match_table() {
    let counts: BTreeMap<usize, usize> = fixtures::alternating_counts().into_iter().collect();
    for k in 3..=10 {
        let r = enumerate_reference_diagrams(k, TabulateLimits::default()).unwrap();
        assert_eq!(r.len(), counts[&k], "k={k}");
        for d in r.diagrams() {
            assert!(d.is_alternating() && d.is_reduced() && d.is_prime());
            assert_eq!(Fingerprint::of(&d).unwrap().jones_span(), k as i64);
        }
    }
}

/// Every reduced prime alternating diagram lies in the flype orbit of exactly one reference
/// diagram, and diagrams of one orbit are exactly those naming the same knot.
#[test]
fn orbits_partition_alternating_diagrams() {
    let table = KnotTable::bundled();
    for k in 3..=8 {
        let all: BTreeSet<_> = alternating_diagram_codes(k).into_iter().collect();
        let refs = enumerate_reference_diagrams(k, TabulateLimits::default()).unwrap();
        let mut covered = BTreeSet::new();
        let mut names = BTreeSet::new();
        for d in refs.diagrams() {
            let orbit = flype_orbit(&d, 10_000).unwrap();
            let name = identify(&d, table, UnknotBudget::default()).unwrap().id;
            assert!(matches!(name, KnotId::Named(_)));
            for (code, e) in &orbit {
                assert!(covered.insert(code.clone()), "orbits overlap at {code}");
                assert_eq!(identify(e, table, UnknotBudget::default()).unwrap().id, name);
            }
            assert!(names.insert(name));
        }
        assert_eq!(covered, all, "k={k}");
    }
}

#[test]
fn closure_order_and_size() {
    let r = enumerate_reference_diagrams(7, TabulateLimits::default()).unwrap();
    let vs: Vec<_> = crossing_change_closure(&r).collect();
    assert_eq!(vs.len(), 7 << 6);
    assert!(vs.iter().all(|v| v.mask & 1 == 0));
    assert!(vs.windows(2).all(|w| (w[0].reference, w[0].mask) < (w[1].reference, w[1].mask)));
    let base = &r.diagrams()[0];
    assert_eq!(vs[0].diagram, *base);
    assert_eq!(vs[1].diagram, base.change_crossing(1));
}

/// The minimal diagrams of each bundled family, rebuilt from the reference diagrams of its
/// shadows, correspond to the bundled list under flypes.
#[test]
fn families_from_reference_variants() {
    let table = KnotTable::bundled();
    let expected = [("K11n21", 23), ("K12n288", 24), ("K12n491", 9), ("K12n501", 18), ("K13n3370", 24)];
    for (name, count) in expected {
        let fam = fixtures::family(name).unwrap();
        let k = fam[0].crossings();
        let refs = ReferenceSet::from_shadows(k, &fam, 10_000).unwrap();
        let ds = minimal_diagrams_of(name, &refs, table, UnknotBudget::default()).unwrap();
        assert_eq!(ds.len(), count, "{name}");
        let listed: BTreeSet<_> = fam.iter().map(Diagram::canonical_dt).collect();
        for d in &ds {
            let orbit = flype_orbit(d, 10_000).unwrap();
            assert!(orbit.keys().any(|c| listed.contains(c)), "{name}: {}", d.to_dt());
        }
    }
}

#[test]
fn trefoil_minimal_diagrams() {
    let r = enumerate_reference_diagrams(3, TabulateLimits::default()).unwrap();
    let ds = minimal_diagrams_of("3_1", &r, KnotTable::bundled(), UnknotBudget::default()).unwrap();
    assert_eq!(ds.len(), 1);
    assert!(ds[0].is_alternating());
}
