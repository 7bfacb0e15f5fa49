//! Identification of the bundled fixtures.

use std::collections::BTreeSet;

use knotadj::identify::{identify, KnotId, KnotTable};
use knotadj::invariants::Fingerprint;
use knotadj::moves::UnknotBudget;
use knotadj::{Diagram, DtCode};

fn family(name: &str) -> Vec<Diagram> {
    let path = format!("{}/fixtures/families/{name}.dt", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| Diagram::from_dt(&l.parse::<DtCode>().unwrap()).unwrap())
        .collect()
}

#[test]
fn named_descents() {
    let t = KnotTable::bundled();
    for line in include_str!("../fixtures/descents.tsv").lines().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let code: DtCode = f[1].parse().unwrap();
        let entry: usize = f[2].parse().unwrap();
        let d = Diagram::from_dt(&code).unwrap();
        assert_eq!(identify(&d, t, UnknotBudget::default()).unwrap().id, KnotId::Named(f[0].into()));
        let e = Diagram::from_dt(&code.flip(entry - 1)).unwrap();
        let id = identify(&e, t, UnknotBudget::default()).unwrap().id;
        assert_eq!(id, KnotId::Named(f[3].into()), "{}", f[0]);
    }
}

#[test]
fn family_diagrams_identify() {
    let t = KnotTable::bundled();
    for name in ["K11n21", "K12n288", "K12n491", "K12n501", "K13n3370"] {
        let ds = family(name);
        let fp = Fingerprint::of(&ds[0]).unwrap();
        for d in &ds {
            assert_eq!(Fingerprint::of(d).unwrap().insensitive(), fp.insensitive());
            assert_eq!(identify(d, t, UnknotBudget::default()).unwrap().id, KnotId::Named(name.into()));
        }
    }
}

#[test]
fn k13n3370_neighbours() {
    let t = KnotTable::bundled();
    let mut ids = BTreeSet::new();
    let mut fps = BTreeSet::new();
    let mut count = 0;
    for d in family("K13n3370") {
        for c in 0..d.crossings() {
            let i = identify(&d.change_crossing(c), t, UnknotBudget::default()).unwrap();
            ids.insert(i.id);
            fps.insert(i.fingerprint.insensitive());
            count += 1;
        }
    }
    assert_eq!(count, 312);
    assert_eq!(fps.len(), 13);
    let expected: BTreeSet<KnotId> = [
        "7_4", "8_8", "10_34", "K11a211", "K11n91", "K11n132", "K12a1118", "K12n288", "K12n333",
        "K12n469", "K12n491", "K12n501", "K12n512",
    ]
    .into_iter()
    .map(|n| KnotId::Named(n.into()))
    .collect();
    assert_eq!(ids, expected);
}

#[test]
fn bundled_table_has_no_collisions() {
    let t = KnotTable::bundled();
    assert!(t.collisions().is_empty(), "{:?}", t.collisions());
    assert!(t.get("3_1#3_1").is_some() && t.get("3_1#3_1*").is_some());
    assert!(t.get("3_1#4_1*").is_none());
}

#[test]
fn braid_closure_matches_published_code() {
    let t = KnotTable::bundled();
    let braid: knotadj::BraidWord = "{1,1,-3,4,-3,-5,5,-6,-6,4,-5,2,4,-6,3,4,-1,3,5,2}".parse().unwrap();
    let b = Diagram::from_braid(&knotadj::BraidWord::new(7, braid.letters().to_vec()).unwrap()).unwrap();
    let line = include_str!("../fixtures/descents.tsv").lines().nth(1).unwrap();
    let d = Diagram::from_dt(&line.split('\t').nth(1).unwrap().parse().unwrap()).unwrap();
    assert_eq!(Fingerprint::of(&b).unwrap().insensitive(), Fingerprint::of(&d).unwrap().insensitive());
    assert_eq!(identify(&b, t, UnknotBudget::default()).unwrap().id, KnotId::Named("K13n3370".into()));
}
