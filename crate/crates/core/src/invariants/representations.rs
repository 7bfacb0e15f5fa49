//! Counts of homomorphisms from the knot group to a symmetric group that send meridians to a
//! fixed conjugacy class. These separate some knots whose polynomial invariants agree.

use crate::diagram::Diagram;

/// Permutation of at most eight points, stored as images.
type Perm = [u8; 8];

fn compose(a: &Perm, b: &Perm, n: usize) -> Perm {
    // (a ∘ b)(i) = a(b(i))
    let mut out = [0u8; 8];
    for i in 0..n {
        out[i] = a[b[i] as usize];
    }
    out
}

fn inverse(a: &Perm, n: usize) -> Perm {
    let mut out = [0u8; 8];
    for i in 0..n {
        out[a[i] as usize] = i as u8;
    }
    out
}

fn cycle_type(p: &Perm, n: usize) -> Vec<usize> {
    let mut seen = [false; 8];
    let mut t = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        t.push(len);
    }
    t.sort_unstable();
    t
}

/// All permutations of `n` points with the given cycle type (sorted cycle lengths).
fn class(n: usize, shape: &[usize]) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut want = shape.to_vec();
    want.sort_unstable();
    loop {
        let mut a = [0u8; 8];
        a[..n].copy_from_slice(&p);
        if cycle_type(&a, n) == want {
            out.push(a);
        }
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// A Wirtinger relation: arc `out = over^s · in · over^-s` with `s` the crossing sign.
#[derive(Clone, Copy)]
struct Rel {
    over: usize,
    inc: usize,
    out: usize,
    sign: i8,
}

fn wirtinger(d: &Diagram) -> (usize, Vec<Rel>) {
    let m = d.positions();
    let unders: Vec<usize> = (0..m).filter(|&p| !d.visit_over(p)).collect();
    let arcs = unders.len();
    let arc = |p: usize| {
        let k = unders.partition_point(|&u| u < p);
        if k == arcs {
            0
        } else {
            k
        }
    };
    let rels = (0..d.crossings())
        .map(|c| {
            let [p, q] = d.visits(c);
            let (o, u) = if d.visit_over(p) { (p, q) } else { (q, p) };
            Rel {
                over: arc(o),
                inc: arc(u),
                out: (arc(u) + 1) % arcs,
                sign: d.sign(c),
            }
        })
        .collect();
    (arcs, rels)
}

struct Search<'a> {
    n: usize,
    rels: &'a [Rel],
    /// Relations touching each arc.
    touching: Vec<Vec<usize>>,
    class: &'a [Perm],
    count: u64,
}

impl Search<'_> {
    fn conj(&self, x: &Perm, y: &Perm, s: i8) -> Perm {
        let xi = inverse(x, self.n);
        if s > 0 {
            compose(&compose(x, y, self.n), &xi, self.n)
        } else {
            compose(&compose(&xi, y, self.n), x, self.n)
        }
    }

    /// Fills arcs forced by relations, starting from the relations at `arc`; `false` on a
    /// contradiction.
    fn propagate(&self, val: &mut [Option<Perm>], arc: usize) -> bool {
        let mut work = vec![arc];
        while let Some(a) = work.pop() {
            for &k in &self.touching[a] {
                let r = self.rels[k];
                let Some(x) = val[r.over] else { continue };
                match (val[r.inc], val[r.out]) {
                    (Some(a), Some(b)) => {
                        if self.conj(&x, &a, r.sign) != b {
                            return false;
                        }
                    }
                    (Some(a), None) => {
                        val[r.out] = Some(self.conj(&x, &a, r.sign));
                        work.push(r.out);
                    }
                    (None, Some(b)) => {
                        val[r.inc] = Some(self.conj(&x, &b, -r.sign));
                        work.push(r.inc);
                    }
                    (None, None) => {}
                }
            }
        }
        true
    }

    fn run(&mut self, mut val: Vec<Option<Perm>>, arc: usize) {
        if self.propagate(&mut val, arc) {
            // branch on the unknown over arc of the most relations with a known strand
            let mut score = vec![0usize; val.len()];
            for r in self.rels {
                if val[r.over].is_none() {
                    score[r.over] += 1 + 2 * usize::from(val[r.inc].is_some() || val[r.out].is_some());
                }
            }
            let next = (0..val.len())
                .filter(|&a| val[a].is_none())
                .max_by_key(|&a| (score[a], std::cmp::Reverse(a)));
            match next {
                None => self.count += 1,
                Some(a) => {
                    for g in self.class {
                        let mut v = val.clone();
                        v[a] = Some(*g);
                        self.run(v, a);
                    }
                }
            }
        }
    }
}

/// Number of homomorphisms from the knot group to `S_n` (`n ≤ 8`) sending every meridian to a
/// permutation of cycle type `shape`.
pub fn count_representations(d: &Diagram, n: usize, shape: &[usize]) -> u64 {
    assert!(n <= 8 && shape.iter().sum::<usize>() == n, "cycle type must partition n ≤ 8");
    let class = class(n, shape);
    if d.crossings() == 0 {
        return class.len() as u64;
    }
    let (arcs, rels) = wirtinger(d);
    let mut touching = vec![Vec::new(); arcs];
    for (k, r) in rels.iter().enumerate() {
        for a in [r.over, r.inc, r.out] {
            if !touching[a].contains(&k) {
                touching[a].push(k);
            }
        }
    }
    let mut s = Search {
        n,
        rels: &rels,
        touching,
        class: &class,
        count: 0,
    };
    // all meridians are conjugate, so fix the first one and scale
    let mut val = vec![None; arcs];
    val[0] = Some(class[0]);
    s.run(val, 0);
    s.count * class.len() as u64
}

/// The counts recorded in fingerprints: meridians go to permutations of `S_5` made of a
/// disjoint 2-cycle and 3-cycle, then to 5-cycles.
pub fn s5_counts(d: &Diagram) -> [u64; 2] {
    [count_representations(d, 5, &[2, 3]), count_representations(d, 5, &[5])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_counts() {
        let d = Diagram::from_dt(&"[4,6,2]".parse().unwrap()).unwrap();
        // S_3 transpositions: 3 abelian plus 6 surjective
        assert_eq!(count_representations(&d, 3, &[1, 2]), 9);
        assert_eq!(count_representations(&Diagram::unknot(), 3, &[1, 2]), 3);
        assert_eq!(count_representations(&d.mirror(), 4, &[1, 1, 2]), count_representations(&d, 4, &[1, 1, 2]));
    }
}
