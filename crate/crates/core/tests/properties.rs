//! Codec round trips and invariant identities on random diagrams.

use knotadj::fixtures;
use knotadj::invariants::{alexander_polynomial, determinant, jones_polynomial, signature, Fingerprint};
use knotadj::{BraidWord, Diagram, DtCode};
use num_bigint::BigInt;
use proptest::prelude::*;

fn pool() -> Vec<Diagram> {
    include_str!("../fixtures/knots.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once('\t'))
        .map(|(_, c)| Diagram::from_dt(&c.parse::<DtCode>().unwrap()).unwrap())
        .filter(|d| d.crossings() <= 10)
        .collect()
}

/// A tabulated diagram with the crossings in `mask` changed.
fn pick(k: usize, mask: u64) -> Diagram {
    let p = pool();
    let d = &p[k % p.len()];
    (0..d.crossings()).filter(|c| mask >> c & 1 == 1).fold(d.clone(), |e, c| e.change_crossing(c))
}

fn abs(x: BigInt) -> BigInt {
    if x < BigInt::from(0) {
        -x
    } else {
        x
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dt_round_trip(k in 0usize..500, mask in any::<u64>()) {
        let d = pick(k, mask);
        let code = d.to_dt();
        prop_assert_eq!(code.to_string().parse::<DtCode>().unwrap(), code.clone());
        let e = Diagram::from_dt(&code).unwrap();
        prop_assert_eq!(e.to_dt().canonical(), code.canonical());
        // a DT code fixes the diagram only up to reflection
        prop_assert!(e.isomorphic(&d) || e.isomorphic(&d.reflect()));
        prop_assert!(e.shadow_isomorphic(&d) || e.shadow_isomorphic(&d.reflect()));
    }

    #[test]
    fn gauss_round_trip(k in 0usize..500, mask in any::<u64>()) {
        let d = pick(k, mask);
        let g = d.to_gauss();
        let e = Diagram::from_gauss(&g.to_string().parse().unwrap()).unwrap();
        prop_assert_eq!(e.to_gauss(), g);
    }

    #[test]
    fn canonical_code_ignores_base_point(k in 0usize..500, mask in any::<u64>(), s in any::<usize>(), rev in any::<bool>()) {
        let d = pick(k, mask);
        let e = d.retraverse(s % d.positions(), rev);
        prop_assert_eq!(e.canonical_dt(), d.canonical_dt());
        prop_assert_eq!(d.canonical_dt().canonical(), d.canonical_dt());
    }

    #[test]
    fn determinant_identities(k in 0usize..500, mask in any::<u64>()) {
        let d = pick(k, mask);
        let det = determinant(&d);
        prop_assert_eq!(abs(jones_polynomial(&d).unwrap().eval_unit(-1)), det.clone());
        let alex = alexander_polynomial(&d).unwrap();
        prop_assert_eq!(abs(alex.eval_unit(-1)), det);
        prop_assert_eq!(abs(alex.eval_unit(1)), BigInt::from(1));
        prop_assert_eq!(signature(&d) % 2, 0);
    }

    #[test]
    fn mirror_identities(k in 0usize..500, mask in any::<u64>()) {
        let d = pick(k, mask);
        let m = d.mirror();
        prop_assert_eq!(jones_polynomial(&m).unwrap(), jones_polynomial(&d).unwrap().substitute_power(-1));
        prop_assert_eq!(signature(&m), -signature(&d));
        prop_assert_eq!(determinant(&m), determinant(&d));
        prop_assert_eq!(alexander_polynomial(&m).unwrap(), alexander_polynomial(&d).unwrap());
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(Fingerprint::of(&m).unwrap(), Fingerprint::of(&d).unwrap().mirror());
    }

    #[test]
    fn connected_sums_multiply(a in 0usize..500, b in 0usize..500, ma in any::<u64>(), mb in any::<u64>()) {
        let (x, y) = (pick(a, ma), pick(b, mb));
        let s = x.connected_sum(&y);
        prop_assert_eq!(s.crossings(), x.crossings() + y.crossings());
        prop_assert_eq!(jones_polynomial(&s).unwrap(), &jones_polynomial(&x).unwrap() * &jones_polynomial(&y).unwrap());
        prop_assert_eq!(alexander_polynomial(&s).unwrap(), &alexander_polynomial(&x).unwrap() * &alexander_polynomial(&y).unwrap());
        prop_assert_eq!(determinant(&s), determinant(&x) * determinant(&y));
        prop_assert_eq!(signature(&s), signature(&x) + signature(&y));
    }

    /// Appending a generator and its inverse is an R2 move on the closure.
    #[test]
    fn braid_r2_stability(strands in 2u32..6, letters in prop::collection::vec(1i32..6, 1..12), signs in any::<u16>(), at in 1i32..6) {
        let letters: Vec<i32> = letters
            .into_iter()
            .enumerate()
            .map(|(i, l)| (1 + (l - 1) % (strands as i32 - 1)) * if signs >> (i % 16) & 1 == 1 { -1 } else { 1 })
            .collect();
        let w = BraidWord::new(strands, letters.clone()).unwrap();
        if let Ok(d) = Diagram::from_braid(&w) {
            let g = 1 + (at - 1) % (strands as i32 - 1);
            let longer = BraidWord::new(strands, [letters, vec![g, -g]].concat()).unwrap();
            let e = Diagram::from_braid(&longer).unwrap();
            prop_assert_eq!(e.crossings(), d.crossings() + 2);
            prop_assert_eq!(Fingerprint::of(&e).unwrap(), Fingerprint::of(&d).unwrap());
        }
    }
}

#[test]
fn bundled_braids_are_r2_stable() {
    for b in fixtures::braids() {
        let d = Diagram::from_braid(&b.word).unwrap();
        let longer =
            BraidWord::new(b.word.strands(), [b.word.letters(), &[1, -1]].concat()).unwrap();
        let e = Diagram::from_braid(&longer).unwrap();
        assert_eq!(Fingerprint::of(&e).unwrap(), Fingerprint::of(&d).unwrap(), "{}", b.name);
    }
}

#[test]
fn parse_rejects_invalid_codes() {
    for bad in ["[4,6,5]", "[4,4,2]", "[0,4,2]", "[4,6,2", "4,6,2]"] {
        assert!(bad.parse::<DtCode>().is_err(), "{bad}");
    }
    assert!(Diagram::from_braid(&"3:{1,1,1}".parse().unwrap()).is_err());
    assert_eq!(Diagram::from_braid(&"1:{}".parse().unwrap()).unwrap().crossings(), 0);
}
