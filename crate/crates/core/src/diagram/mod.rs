//! Planar knot diagrams.
//!
//! A diagram with `n` crossings is traversed from a base point through `2n` visit
//! positions. Crossing `i` is the one whose odd-labelled visit sits at position `2i`
//! (labels are positions plus one, matching Dowker-Thistlethwaite numbering). Each
//! crossing stores the position of its even-labelled visit, whether that visit is the
//! over-strand, and a rotation bit giving the cyclic order of its four half-edges.
//!
//! With `p` the odd-labelled visit and `q` the even-labelled one, the counterclockwise
//! half-edge order is `[in p, in q, out p, out q]` for rotation `+1` and
//! `[in p, out q, out p, in q]` for rotation `-1`.

mod canonical;
mod realize;

pub use canonical::{DiagramKey, ShadowKey};

use std::fmt;

use crate::codecs::{DtCode, GaussCode, GaussVisit};
use crate::error::CodecError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    partner: Vec<u32>,
    even_over: Vec<bool>,
    rot: Vec<bool>,
    at: Vec<u32>,
}

/// A half-edge at a crossing: the incoming or outgoing end of the strand at a visit position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot(pub u32);

impl Slot {
    pub fn new(pos: usize, outgoing: bool) -> Self {
        Slot(2 * pos as u32 + outgoing as u32)
    }
    pub fn pos(self) -> usize {
        (self.0 / 2) as usize
    }
    pub fn outgoing(self) -> bool {
        self.0 % 2 == 1
    }
}

/// A complementary region, given by the half-edges along which its boundary leaves each corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Slot>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }

    /// Edges along the boundary as `(edge, forward)`; edge `e` joins positions `e` and `e+1`.
    pub fn edges(&self, d: &Diagram) -> Vec<(usize, bool)> {
        let m = d.positions();
        self.corners
            .iter()
            .map(|s| {
                if s.outgoing() {
                    (s.pos(), true)
                } else {
                    ((s.pos() + m - 1) % m, false)
                }
            })
            .collect()
    }

    pub fn crossings(&self, d: &Diagram) -> Vec<usize> {
        self.corners.iter().map(|s| d.crossing_at(s.pos())).collect()
    }
}

/// Faces together with the two faces incident to every edge.
#[derive(Clone, Debug)]
pub struct FaceStructure {
    pub faces: Vec<Face>,
    /// `edge_faces[e] = [face traversing e forward, face traversing e backward]`.
    pub edge_faces: Vec<[usize; 2]>,
    /// Face leaving each corner along a half-edge, indexed by `Slot.0`. The corner between
    /// consecutive counterclockwise half-edges `a`, `b` at a crossing belongs to `slot_face[b]`.
    pub slot_face: Vec<usize>,
}

impl Diagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Self {
            partner: Vec::new(),
            even_over: Vec::new(),
            rot: Vec::new(),
            at: Vec::new(),
        }
    }

    pub(crate) fn from_raw(partner: Vec<u32>, even_over: Vec<bool>, rot: Vec<bool>) -> Self {
        let n = partner.len();
        let mut at = vec![0u32; 2 * n];
        for (i, &q) in partner.iter().enumerate() {
            at[2 * i] = i as u32;
            at[q as usize] = i as u32;
        }
        Self {
            partner,
            even_over,
            rot,
            at,
        }
    }

    pub fn crossings(&self) -> usize {
        self.partner.len()
    }

    pub fn positions(&self) -> usize {
        self.at.len()
    }

    pub fn crossing_at(&self, pos: usize) -> usize {
        self.at[pos] as usize
    }

    /// The two visit positions of crossing `c`: odd-labelled first.
    pub fn visits(&self, c: usize) -> [usize; 2] {
        [2 * c, self.partner[c] as usize]
    }

    pub fn other_visit(&self, pos: usize) -> usize {
        let c = self.crossing_at(pos);
        if pos == 2 * c {
            self.partner[c] as usize
        } else {
            2 * c
        }
    }

    pub fn visit_over(&self, pos: usize) -> bool {
        let c = self.crossing_at(pos);
        (pos == 2 * c) != self.even_over[c]
    }

    /// Rotation of crossing `c` as `+1` or `-1`.
    pub fn rotation(&self, c: usize) -> i8 {
        if self.rot[c] {
            1
        } else {
            -1
        }
    }

    /// Handedness of crossing `c` for the traversal orientation.
    pub fn sign(&self, c: usize) -> i8 {
        if self.even_over[c] {
            -self.rotation(c)
        } else {
            self.rotation(c)
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.crossings()).map(|c| self.sign(c)).collect()
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings()).map(|c| self.sign(c) as i64).sum()
    }

    pub fn even_over(&self) -> &[bool] {
        &self.even_over
    }

    pub fn to_dt(&self) -> DtCode {
        let entries = (0..self.crossings())
            .map(|c| {
                let lab = self.partner[c] as i32 + 1;
                if self.even_over[c] {
                    -lab
                } else {
                    lab
                }
            })
            .collect();
        DtCode::new(entries).expect("diagram pairing is a valid code")
    }

    pub fn to_gauss(&self) -> GaussCode {
        let visits = (0..self.positions())
            .map(|p| GaussVisit {
                crossing: self.crossing_at(p) as u32 + 1,
                over: self.visit_over(p),
            })
            .collect();
        GaussCode::new(visits).expect("diagram yields a valid Gauss code")
    }

    /// Realizes a Gauss code, fixing the mirror so that crossing 0 is positive.
    pub fn from_gauss(code: &GaussCode) -> Result<Self, CodecError> {
        let v = code.visits();
        let n = code.crossings();
        let mut first = vec![usize::MAX; n];
        let mut entries = vec![0i32; n];
        let mut seen_even = vec![usize::MAX; n];
        for (p, g) in v.iter().enumerate() {
            let c = g.crossing as usize - 1;
            if p % 2 == 0 {
                if seen_even[c] != usize::MAX {
                    return Err(CodecError::NonRealizable);
                }
                seen_even[c] = p;
            }
            if first[c] == usize::MAX {
                first[c] = p;
            }
        }
        for (p, g) in v.iter().enumerate() {
            if p % 2 == 1 {
                let c = g.crossing as usize - 1;
                let e = seen_even[c];
                if e == usize::MAX {
                    return Err(CodecError::NonRealizable);
                }
                entries[e / 2] = if g.over { -(p as i32 + 1) } else { p as i32 + 1 };
            }
        }
        Self::from_dt(&DtCode::new(entries)?)
    }

    /// Builds a diagram from visits `(crossing id, over)` in traversal order and the handedness
    /// of every crossing id. Also returns the new index of every crossing id.
    pub fn from_signed_visits(
        visits: &[(usize, bool)],
        signs: &[i8],
    ) -> Result<(Self, Vec<usize>), CodecError> {
        let m = visits.len();
        if m % 2 != 0 {
            return Err(CodecError::Malformed("odd number of visits".into()));
        }
        let ids = signs.len();
        let mut even_at = vec![usize::MAX; ids];
        let mut odd_at = vec![usize::MAX; ids];
        for (p, &(c, _)) in visits.iter().enumerate() {
            if c >= ids {
                return Err(CodecError::Malformed(format!("crossing id {c} has no sign")));
            }
            let slot = if p % 2 == 0 { &mut even_at[c] } else { &mut odd_at[c] };
            if *slot != usize::MAX {
                return Err(CodecError::NonRealizable);
            }
            *slot = p;
        }
        let n = m / 2;
        let mut partner = vec![0u32; n];
        let mut even_over = vec![false; n];
        let mut rot = vec![false; n];
        let mut index = vec![usize::MAX; ids];
        for c in 0..ids {
            match (even_at[c], odd_at[c]) {
                (usize::MAX, usize::MAX) => continue,
                (e, o) if e != usize::MAX && o != usize::MAX => {
                    if visits[e].1 == visits[o].1 {
                        return Err(CodecError::Malformed(format!(
                            "crossing {c} needs one over and one under visit"
                        )));
                    }
                    let i = e / 2;
                    index[c] = i;
                    partner[i] = o as u32;
                    even_over[i] = visits[o].1;
                    let s = signs[c];
                    rot[i] = (s > 0) == visits[e].1;
                }
                _ => return Err(CodecError::NonRealizable),
            }
        }
        let d = Self::from_raw(partner, even_over, rot);
        if !d.is_planar() {
            return Err(CodecError::NonRealizable);
        }
        Ok((d, index))
    }

    /// Visits `(crossing, over)` in traversal order.
    pub fn visit_list(&self) -> Vec<(usize, bool)> {
        (0..self.positions())
            .map(|p| (self.crossing_at(p), self.visit_over(p)))
            .collect()
    }

    pub fn change_crossing(&self, c: usize) -> Self {
        let mut d = self.clone();
        d.even_over[c] = !d.even_over[c];
        d
    }

    /// Changes every crossing.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        d.even_over.iter_mut().for_each(|b| *b = !*b);
        d
    }

    /// Reflects the plane, reversing every rotation. Represents the mirror knot.
    pub fn reflect(&self) -> Self {
        let mut d = self.clone();
        d.rot.iter_mut().for_each(|b| *b = !*b);
        d
    }

    /// Same shadow with the given over/under choice (`even_over[i]` for crossing `i`).
    pub fn with_even_over(&self, even_over: Vec<bool>) -> Self {
        assert_eq!(even_over.len(), self.crossings());
        let mut d = self.clone();
        d.even_over = even_over;
        d
    }

    /// The alternating diagram on this shadow whose base point starts on an over-passage.
    pub fn alternating_resolution(&self) -> Self {
        self.with_even_over(vec![false; self.crossings()])
    }

    pub fn is_alternating(&self) -> bool {
        self.even_over.iter().all(|&b| b == self.even_over[0])
    }

    fn interlaced(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = span(self.visits(a));
        let inside = |p: usize| lo < p && p < hi;
        let [x, y] = self.visits(b);
        inside(x) != inside(y)
    }

    /// No crossing is nugatory (every crossing is interlaced with another one).
    pub fn is_reduced(&self) -> bool {
        let n = self.crossings();
        (0..n).all(|a| (0..n).any(|b| b != a && self.interlaced(a, b)))
    }

    /// No proper arc of the traversal with at least one crossing on each side contains
    /// both visits of every crossing it meets.
    pub fn is_prime(&self) -> bool {
        let m = self.positions();
        let n = self.crossings();
        let mut cnt = vec![0u8; n];
        for s in 0..m {
            cnt.iter_mut().for_each(|x| *x = 0);
            let mut open = 0usize;
            for len in 1..m - 1 {
                let c = self.crossing_at((s + len - 1) % m);
                cnt[c] += 1;
                if cnt[c] == 1 {
                    open += 1;
                } else {
                    open -= 1;
                }
                if open == 0 && len >= 2 && len <= m - 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Counterclockwise half-edge order at crossing `c`.
    pub fn rotation_slots(&self, c: usize) -> [Slot; 4] {
        let p = 2 * c;
        let q = self.partner[c] as usize;
        if self.rot[c] {
            [Slot::new(p, false), Slot::new(q, false), Slot::new(p, true), Slot::new(q, true)]
        } else {
            [Slot::new(p, false), Slot::new(q, true), Slot::new(p, true), Slot::new(q, false)]
        }
    }

    pub fn next_ccw(&self, s: Slot) -> Slot {
        let r = self.rotation_slots(self.crossing_at(s.pos()));
        let k = r.iter().position(|&x| x == s).expect("slot belongs to its crossing");
        r[(k + 1) % 4]
    }

    /// The half-edge reached by travelling along the edge leaving at `s`.
    pub fn across(&self, s: Slot) -> Slot {
        let m = self.positions();
        if s.outgoing() {
            Slot::new((s.pos() + 1) % m, false)
        } else {
            Slot::new((s.pos() + m - 1) % m, true)
        }
    }

    pub fn face_structure(&self) -> FaceStructure {
        let m = self.positions();
        if m == 0 {
            return FaceStructure {
                faces: vec![Face { corners: vec![] }, Face { corners: vec![] }],
                edge_faces: vec![],
                slot_face: vec![],
            };
        }
        let mut face_of = vec![usize::MAX; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut corners = Vec::new();
            let mut s = Slot(start as u32);
            while face_of[s.0 as usize] == usize::MAX {
                face_of[s.0 as usize] = id;
                corners.push(s);
                s = self.next_ccw(self.across(s));
            }
            faces.push(Face { corners });
        }
        let mut edge_faces = vec![[usize::MAX; 2]; m];
        for e in 0..m {
            edge_faces[e][0] = face_of[Slot::new(e, true).0 as usize];
            edge_faces[e][1] = face_of[Slot::new((e + 1) % m, false).0 as usize];
        }
        FaceStructure {
            faces,
            edge_faces,
            slot_face: face_of,
        }
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_structure().faces
    }

    /// Euler characteristic check: a connected 4-valent graph with `n` vertices embeds in the
    /// sphere with this rotation system iff it has `n + 2` faces.
    pub fn is_planar(&self) -> bool {
        self.crossings() == 0 || self.faces().len() == self.crossings() + 2
    }

    /// Connected sum along the edges entering both base points.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let n1 = self.crossings();
        let mut visits = self.visit_list();
        visits.extend(other.visit_list().into_iter().map(|(c, o)| (c + n1, o)));
        let mut signs = self.signs();
        signs.extend(other.signs());
        Self::from_signed_visits(&visits, &signs)
            .expect("connected sum of planar diagrams is planar")
            .0
    }

    /// Re-reads the diagram from base point `start`, optionally in the reverse direction.
    pub fn retraverse(&self, start: usize, reverse: bool) -> Self {
        let m = self.positions();
        if m == 0 {
            return self.clone();
        }
        let visits: Vec<(usize, bool)> = (0..m)
            .map(|k| {
                let p = if reverse { (start + m - k) % m } else { (start + k) % m };
                (self.crossing_at(p), self.visit_over(p))
            })
            .collect();
        Self::from_signed_visits(&visits, &self.signs())
            .expect("retraversal preserves planarity")
            .0
    }
}

fn span([a, b]: [usize; 2]) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl fmt::Display for Diagram {
    /// The code followed by the rotation signs, e.g. `[4,6,2] +++`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.to_dt())?;
        for &r in &self.rot {
            f.write_str(if r { "+" } else { "-" })?;
        }
        Ok(())
    }
}
