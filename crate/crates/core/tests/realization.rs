//! Realization of codes checked against a brute-force search over all rotation systems.

use knotadj::{CodecError, Diagram, DtCode};

fn permutations(n: usize) -> Vec<Vec<i32>> {
    fn rec(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n as i32).map(|k| 2 * k).collect(), &mut Vec::new(), &mut out);
    out
}

/// Builds the diagram with rotation bits `mask` and reports whether it is planar.
fn planar_with(code: &DtCode, mask: u32) -> bool {
    let n = code.len();
    let mut visits = vec![(0usize, false); 2 * n];
    let mut signs = vec![0i8; n];
    for (i, &a) in code.entries().iter().enumerate() {
        let q = a.unsigned_abs() as usize - 1;
        visits[2 * i] = (i, a > 0);
        visits[q] = (i, a < 0);
        let rot = mask >> i & 1 == 1;
        let odd_over = a > 0;
        signs[i] = if rot == odd_over { 1 } else { -1 };
    }
    Diagram::from_signed_visits(&visits, &signs).is_ok()
}

#[test]
fn realization_agrees_with_brute_force() {
    let mut rejected = 0;
    for n in 1..=7 {
        for p in permutations(n) {
            let code = DtCode::new(p).unwrap();
            let brute = (0..1u32 << n).any(|mask| planar_with(&code, mask));
            match Diagram::from_dt(&code) {
                Ok(d) => {
                    assert!(brute, "{code} realized but no rotation is planar");
                    assert!(d.is_planar());
                    assert_eq!(d.to_dt(), code);
                    assert!(d.crossings() == 0 || d.sign(0) > 0);
                }
                Err(CodecError::NonRealizable) => {
                    assert!(!brute, "{code} rejected but realizable");
                    if rejected == 0 {
                        println!("first rejected code: {code}");
                    }
                    rejected += 1;
                }
                Err(e) => panic!("{code}: {e}"),
            }
        }
    }
    assert!(rejected > 0);
}
