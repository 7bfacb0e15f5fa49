use std::collections::VecDeque;

use super::Diagram;
use crate::codecs::{BraidWord, DtCode};
use crate::error::CodecError;

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn common(&self, other: &Self) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
}

impl Diagram {
    /// Realizes a code as a planar diagram, choosing the mirror in which crossing 0 is positive.
    ///
    /// Rotations are propagated through the interlacement graph: for interlaced crossings
    /// `i`, `j` the product of rotations is `+1` exactly when an odd number of crossings is
    /// interlaced with both. Each connected component of that graph is rooted at `+1`, and
    /// the result must pass the face count.
    pub fn from_dt(code: &DtCode) -> Result<Self, CodecError> {
        let n = code.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        let partner: Vec<u32> = (0..n).map(|i| code.even_position(i) as u32).collect();
        let even_over: Vec<bool> = code.entries().iter().map(|&a| a < 0).collect();
        let spans: Vec<(usize, usize)> = (0..n)
            .map(|i| {
                let q = partner[i] as usize;
                ((2 * i).min(q), (2 * i).max(q))
            })
            .collect();
        let mut inter: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            let (lo, hi) = spans[i];
            for (j, &(a, b)) in spans.iter().enumerate() {
                if j != i && ((lo < a && a < hi) != (lo < b && b < hi)) {
                    inter[i].insert(j);
                }
            }
        }
        let mut rot: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if rot[root].is_some() {
                continue;
            }
            rot[root] = Some(true);
            queue.push_back(root);
            while let Some(i) = queue.pop_front() {
                let ri = rot[i].expect("queued crossings are assigned");
                for j in 0..n {
                    if !inter[i].contains(j) {
                        continue;
                    }
                    let same = inter[i].common(&inter[j]) % 2 == 1;
                    let want = if same { ri } else { !ri };
                    match rot[j] {
                        None => {
                            rot[j] = Some(want);
                            queue.push_back(j);
                        }
                        Some(r) if r != want => return Err(CodecError::NonRealizable),
                        Some(_) => {}
                    }
                }
            }
        }
        let rot = rot.into_iter().map(|r| r.expect("all assigned")).collect();
        let d = Diagram::from_raw(partner, even_over, rot);
        if !d.is_planar() {
            return Err(CodecError::NonRealizable);
        }
        Ok(if d.sign(0) < 0 { d.reflect() } else { d })
    }

    /// The closure of a braid, drawn with strands running upward and the closing arcs on
    /// one side. A positive letter is a positive crossing.
    pub fn from_braid(word: &BraidWord) -> Result<Self, CodecError> {
        let s = word.strands() as usize;
        let letters = word.letters();
        let len = letters.len();
        // permutation of strand positions after one pass through the word
        let mut cycles = 0;
        let mut seen = vec![false; s + 1];
        for start in 1..=s {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = pass(letters, p);
            }
        }
        if cycles != 1 {
            return Err(CodecError::MultiComponent(cycles));
        }
        if len == 0 {
            return Ok(Diagram::unknot());
        }
        let mut visits = Vec::with_capacity(2 * len);
        let mut pos = 1usize;
        loop {
            for (k, &l) in letters.iter().enumerate() {
                let g = l.unsigned_abs() as usize;
                if pos == g {
                    visits.push((k, l > 0));
                    pos = g + 1;
                } else if pos == g + 1 {
                    visits.push((k, l < 0));
                    pos = g;
                }
            }
            if pos == 1 {
                break;
            }
        }
        let signs: Vec<i8> = letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).collect();
        Ok(Diagram::from_signed_visits(&visits, &signs)?.0)
    }
}

fn pass(letters: &[i32], mut p: usize) -> usize {
    for &l in letters {
        let g = l.unsigned_abs() as usize;
        if p == g {
            p = g + 1;
        } else if p == g + 1 {
            p = g;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonplanar_codes() {
        let c: DtCode = "[4,6,8,10,2]".parse().unwrap();
        assert!(matches!(Diagram::from_dt(&c), Err(CodecError::NonRealizable)));
    }

    #[test]
    fn braid_trefoil() {
        let b: BraidWord = "2:{1,1,1}".parse().unwrap();
        let d = Diagram::from_braid(&b).unwrap();
        assert_eq!(d.crossings(), 3);
        assert_eq!(d.signs(), vec![1, 1, 1]);
        assert!(d.is_alternating());
        let b: BraidWord = "3:{1,2}".parse().unwrap();
        assert_eq!(Diagram::from_braid(&b).unwrap().crossings(), 2);
        let b: BraidWord = "3:{1,1}".parse().unwrap();
        assert!(matches!(Diagram::from_braid(&b), Err(CodecError::MultiComponent(_))));
    }
}
