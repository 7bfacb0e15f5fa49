use super::Diagram;
use crate::codecs::DtCode;

/// Complete isomorphism invariant of a diagram up to base point, direction and
/// orientation-preserving homeomorphism of the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey(Vec<u32>);

/// Like [`DiagramKey`] but forgetting over/under information.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShadowKey(Vec<u32>);

impl Diagram {
    /// Per-crossing codes of the diagram re-read from `start` in the given direction.
    fn traversal_code(&self, start: usize, reverse: bool, shadow: bool, out: &mut [u32]) {
        let m = self.positions();
        let map = |p: usize| if reverse { (start + m - p) % m } else { (p + m - start) % m };
        let flip = start % 2 == 1;
        for c in 0..self.crossings() {
            let [p, q] = self.visits(c);
            let (a, b) = (map(p), map(q));
            let (odd_new, even_new, even_old) = if a % 2 == 0 { (a, b, q) } else { (b, a, p) };
            let mag = even_new as u32 + 1;
            let eps = self.rot[c] != flip;
            out[odd_new / 2] = if shadow {
                mag << 1 | eps as u32
            } else {
                mag << 2 | (self.visit_over(even_old) as u32) << 1 | eps as u32
            };
        }
    }

    fn min_code(&self, shadow: bool) -> (Vec<u32>, usize, bool) {
        let n = self.crossings();
        let mut best = (Vec::new(), 0, false);
        let mut cand = vec![0u32; n];
        for s in 0..self.positions() {
            for rev in [false, true] {
                self.traversal_code(s, rev, shadow, &mut cand);
                if best.0.is_empty() || cand < best.0 {
                    best = (cand.clone(), s, rev);
                }
            }
        }
        best
    }

    pub fn canonical_key(&self) -> DiagramKey {
        DiagramKey(self.min_code(false).0)
    }

    pub fn shadow_key(&self) -> ShadowKey {
        ShadowKey(self.min_code(true).0)
    }

    pub fn isomorphic(&self, other: &Self) -> bool {
        self.crossings() == other.crossings() && self.canonical_key() == other.canonical_key()
    }

    pub fn shadow_isomorphic(&self, other: &Self) -> bool {
        self.crossings() == other.crossings() && self.shadow_key() == other.shadow_key()
    }

    /// The representative read from the base point and direction minimizing the key.
    pub fn canonical_form(&self) -> Self {
        if self.crossings() == 0 {
            return self.clone();
        }
        let (_, s, rev) = self.min_code(false);
        self.retraverse(s, rev)
    }

    /// Minimal code over all base points and directions.
    pub fn canonical_dt(&self) -> DtCode {
        self.to_dt().canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_is_traversal_invariant() {
        let d = Diagram::from_dt(&"[4,10,-16,-20,2,-18,-22,-8,-24,-14,-6,-12]".parse().unwrap())
            .unwrap();
        let k = d.canonical_key();
        for s in 0..d.positions() {
            assert_eq!(d.retraverse(s, s % 3 == 0).canonical_key(), k);
        }
        assert_eq!(d.canonical_form().canonical_key(), k);
        assert_ne!(d.change_crossing(3).canonical_key(), k);
        assert_eq!(d.change_crossing(3).shadow_key(), d.shadow_key());
    }
}
