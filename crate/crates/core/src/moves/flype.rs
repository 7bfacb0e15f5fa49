//! Flypes: a crossing next to a tangle is moved to the tangle's far side while the tangle is
//! turned over about the axis through both.
//!
//! A flype is found from a crossing `c` and two counterclockwise-consecutive half-edges of
//! `c` whose edges enter the tangle `T`. The four edges leaving `T` form a cycle of four
//! distinct faces in the dual graph, so `T` sits in a disk. The two edges of `T` not at `c`
//! are called the far edges; `c`'s other two half-edges must lead to crossings outside
//! `T ∪ {c}`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::codecs::DtCode;
use crate::diagram::{Diagram, FaceStructure, Slot};
use crate::error::MoveError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlypeMove {
    pub crossing: usize,
    /// Crossings of the tangle, sorted.
    pub tangle: Vec<usize>,
    /// `+1` when the over-strand at `crossing` enters the tangle through the first of the two
    /// tangle-side half-edges in counterclockwise order, `-1` otherwise. Changing the crossing
    /// reverses the turn of the tangle needed to carry it across.
    pub twist: i8,
}

impl fmt::Display for FlypeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tangle.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "flype {} {{{}}} {}",
            self.crossing,
            t.join(","),
            if self.twist > 0 { '+' } else { '-' }
        )
    }
}

/// Geometry of a flype site read off the current diagram.
struct Site {
    /// Counterclockwise index `k` of the first tangle-side half-edge of the crossing.
    k: usize,
    in_tangle: Vec<bool>,
    /// Far edge on the face shared with the corner between half-edges `k+1` and `k+2`.
    far_north: usize,
    far_south: usize,
}

fn edge_of(d: &Diagram, s: Slot) -> usize {
    let m = d.positions();
    if s.outgoing() {
        s.pos()
    } else {
        (s.pos() + m - 1) % m
    }
}

/// Crossing at the other end of the edge leaving through `s`.
fn neighbour(d: &Diagram, s: Slot) -> usize {
    d.crossing_at(d.across(s).pos())
}

fn other_face(fs: &FaceStructure, e: usize, f: usize) -> Option<usize> {
    let [a, b] = fs.edge_faces[e];
    match (a == f, b == f) {
        (true, false) => Some(b),
        (false, true) => Some(a),
        _ => None,
    }
}

/// Crossings reachable from `start` without using the edges in `cut`.
fn flood(d: &Diagram, start: usize, cut: &[usize]) -> Vec<bool> {
    let m = d.positions();
    let mut seen = vec![false; d.crossings()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for p in d.visits(x) {
            for e in [p, (p + m - 1) % m] {
                if cut.contains(&e) {
                    continue;
                }
                for q in [e, (e + 1) % m] {
                    let y = d.crossing_at(q);
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    seen
}

/// Validates the cut around `tangle` and locates the flype site.
fn site(d: &Diagram, fs: &FaceStructure, c: usize, tangle: &[usize]) -> Result<Site, String> {
    let n = d.crossings();
    if tangle.is_empty() || tangle.contains(&c) || tangle.iter().any(|&t| t >= n) || c >= n {
        return Err("tangle must be a nonempty set of crossings without the flyped one".into());
    }
    let mut in_tangle = vec![false; n];
    for &t in tangle {
        in_tangle[t] = true;
    }
    let m = d.positions();
    let cut: Vec<usize> = (0..m)
        .filter(|&e| in_tangle[d.crossing_at(e)] != in_tangle[d.crossing_at((e + 1) % m)])
        .collect();
    if cut.len() != 4 {
        return Err(format!("tangle has {} boundary edges", cut.len()));
    }
    let r = d.rotation_slots(c);
    let k = (0..4)
        .find(|&k| in_tangle[neighbour(d, r[k])] && in_tangle[neighbour(d, r[(k + 1) % 4])])
        .ok_or("crossing is not next to the tangle")?;
    let outside = |x: usize| x != c && !in_tangle[x];
    if !outside(neighbour(d, r[(k + 2) % 4])) || !outside(neighbour(d, r[(k + 3) % 4])) {
        return Err("the rest of the diagram must separate the crossing from the tangle".into());
    }
    let near = [edge_of(d, r[k]), edge_of(d, r[(k + 1) % 4])];
    let far: Vec<usize> = cut.iter().copied().filter(|e| !near.contains(e)).collect();
    if far.len() != 2 {
        return Err("tangle boundary is not a 4-cut".into());
    }
    for &e in &far {
        let ends = [d.crossing_at(e), d.crossing_at((e + 1) % m)];
        if ends.contains(&c) {
            return Err("far edge meets the flyped crossing".into());
        }
    }
    let west = fs.slot_face[r[(k + 1) % 4].0 as usize];
    let north = fs.slot_face[r[(k + 2) % 4].0 as usize];
    let south = fs.slot_face[r[k].0 as usize];
    let touches = |e: usize, f: usize| fs.edge_faces[e].contains(&f);
    let (far_north, far_south) = if touches(far[0], north) && touches(far[1], south) {
        (far[0], far[1])
    } else if touches(far[1], north) && touches(far[0], south) {
        (far[1], far[0])
    } else {
        return Err("far edges do not meet the faces beside the crossing".into());
    };
    let east = other_face(fs, far_north, north).ok_or("far edge borders one face twice")?;
    let faces: BTreeSet<usize> = [west, north, south, east].into();
    if faces.len() != 4 || other_face(fs, far_south, south) != Some(east) {
        return Err("tangle boundary does not bound a disk".into());
    }
    Ok(Site {
        k,
        in_tangle,
        far_north,
        far_south,
    })
}

fn twist_of(d: &Diagram, c: usize, k: usize) -> i8 {
    let first = d.rotation_slots(c)[k];
    if d.visit_over(first.pos()) {
        1
    } else {
        -1
    }
}

/// All flypes of `d`, including those whose tangle is a single crossing.
pub fn enumerate_flypes(d: &Diagram) -> Vec<FlypeMove> {
    let mut out = BTreeSet::new();
    if d.crossings() < 3 {
        return Vec::new();
    }
    let fs = d.face_structure();
    for c in 0..d.crossings() {
        let r = d.rotation_slots(c);
        for k in 0..4 {
            let (a, b) = (r[k], r[(k + 1) % 4]);
            let (ta, tb) = (neighbour(d, a), neighbour(d, b));
            if ta == c || tb == c {
                continue;
            }
            let (ea, eb) = (edge_of(d, b), edge_of(d, a));
            let north = fs.slot_face[r[(k + 2) % 4].0 as usize];
            let south = fs.slot_face[a.0 as usize];
            for (ex, _) in fs.faces[north].edges(d) {
                let Some(east) = other_face(&fs, ex, north) else { continue };
                for (ey, _) in fs.faces[south].edges(d) {
                    if other_face(&fs, ey, south) != Some(east) {
                        continue;
                    }
                    let cut = [ea, eb, ex, ey];
                    if cut.iter().collect::<BTreeSet<_>>().len() != 4 {
                        continue;
                    }
                    let side = flood(d, ta, &cut);
                    if side[c] || !side[tb] {
                        continue;
                    }
                    let tangle: Vec<usize> = (0..d.crossings()).filter(|&x| side[x]).collect();
                    if let Ok(s) = site(d, &fs, c, &tangle) {
                        if s.k == k {
                            out.insert(FlypeMove {
                                crossing: c,
                                twist: twist_of(d, c, k),
                                tangle,
                            });
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Applies a flype and returns the new index of every old crossing; the flyped crossing keeps
/// its index in the map although it now sits on the other side of the tangle.
pub fn apply_flype_with_map(d: &Diagram, f: &FlypeMove) -> Result<(Diagram, Vec<usize>), MoveError> {
    let bad = |why: String| MoveError::InapplicableFlype(why);
    let fs = d.face_structure();
    let s = site(d, &fs, f.crossing, &f.tangle).map_err(bad)?;
    let c = f.crossing;
    if twist_of(d, c, s.k) != f.twist {
        return Err(bad("twist does not match the crossing".into()));
    }
    let m = d.positions();
    let in_x = |p: usize| {
        let x = d.crossing_at(p);
        x == c || s.in_tangle[x]
    };
    // rotate so that position 0 lies outside the flyped region
    let start = (0..m).find(|&p| !in_x(p)).expect("the rest of the diagram is nonempty");
    let mut visits = Vec::with_capacity(m);
    let mut p = start;
    let mut left = m;
    while left > 0 {
        if !in_x(p) {
            visits.push((d.crossing_at(p), d.visit_over(p)));
            p = (p + 1) % m;
            left -= 1;
            continue;
        }
        let entry = (p + m - 1) % m;
        let mut run = Vec::new();
        while in_x(p) {
            run.push(p);
            p = (p + 1) % m;
            left -= 1;
        }
        let exit = (p + m - 1) % m;
        let far_over = if f.twist > 0 { s.far_south } else { s.far_north };
        let push_flyped = |e: usize, visits: &mut Vec<(usize, bool)>| {
            if e == s.far_north || e == s.far_south {
                visits.push((c, e == far_over));
            }
        };
        push_flyped(entry, &mut visits);
        for &q in &run {
            if d.crossing_at(q) != c {
                visits.push((d.crossing_at(q), !d.visit_over(q)));
            }
        }
        push_flyped(exit, &mut visits);
    }
    Diagram::from_signed_visits(&visits, &d.signs())
        .map_err(|e| bad(format!("flyped diagram is not planar: {e}")))
}

pub fn apply_flype(d: &Diagram, f: &FlypeMove) -> Result<Diagram, MoveError> {
    apply_flype_with_map(d, f).map(|(e, _)| e)
}

/// The flype taking `apply_flype(d, f)` back to `d`.
pub fn inverse_flype(d: &Diagram, f: &FlypeMove) -> Result<FlypeMove, MoveError> {
    let (e, map) = apply_flype_with_map(d, f)?;
    let c = map[f.crossing];
    let mut tangle: Vec<usize> = f.tangle.iter().map(|&t| map[t]).collect();
    tangle.sort_unstable();
    enumerate_flypes(&e)
        .into_iter()
        .find(|g| g.crossing == c && g.tangle == tangle)
        .ok_or_else(|| MoveError::InapplicableFlype("no inverse flype".into()))
}

/// Where a crossing change sits relative to a flype.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransportCase {
    Outside,
    InsideTangle,
    FlypedCrossing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    pub case: TransportCase,
    /// The flype to apply after changing the crossing.
    pub flype: FlypeMove,
    /// The crossing to change after applying the original flype.
    pub crossing: usize,
}

/// For a crossing change at `i` followed by a flype, the equivalent flype followed by a
/// crossing change: `apply_flype(change_crossing(d, i), t.flype)` equals
/// `change_crossing(apply_flype(d, f), t.crossing)`. When `i` is the flyped crossing the
/// tangle has to be turned the other way.
pub fn transport_crossing_change(
    d: &Diagram,
    f: &FlypeMove,
    i: usize,
) -> Result<Transport, MoveError> {
    if i >= d.crossings() {
        return Err(MoveError::InapplicableFlype(format!("no crossing {i}")));
    }
    let (_, map) = apply_flype_with_map(d, f)?;
    let (case, flype) = if i == f.crossing {
        let mut g = f.clone();
        g.twist = -g.twist;
        (TransportCase::FlypedCrossing, g)
    } else if f.tangle.binary_search(&i).is_ok() {
        (TransportCase::InsideTangle, f.clone())
    } else {
        (TransportCase::Outside, f.clone())
    };
    Ok(Transport {
        case,
        flype,
        crossing: map[i],
    })
}

/// Diagrams reachable from `d` by flypes, keyed by canonical DT code. Fails once more than
/// `cap` distinct codes are found.
pub fn flype_orbit(d: &Diagram, cap: usize) -> Result<BTreeMap<DtCode, Diagram>, MoveError> {
    let mut orbit = BTreeMap::new();
    orbit.insert(d.canonical_dt(), d.clone());
    let mut queue = VecDeque::from([d.clone()]);
    while let Some(x) = queue.pop_front() {
        for f in enumerate_flypes(&x) {
            let y = apply_flype(&x, &f)?;
            let key = y.canonical_dt();
            if orbit.contains_key(&key) {
                continue;
            }
            if orbit.len() >= cap {
                return Err(MoveError::OrbitCapExceeded(cap));
            }
            orbit.insert(key, y.clone());
            queue.push_back(y);
        }
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::jones_polynomial;

    fn dt(s: &str) -> Diagram {
        Diagram::from_dt(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn trefoil_has_only_single_crossing_tangles() {
        let d = dt("[4,6,2]");
        let fl = enumerate_flypes(&d);
        assert!(!fl.is_empty());
        assert!(fl.iter().all(|f| f.tangle.len() == 1));
        assert_eq!(flype_orbit(&d, 10).unwrap().len(), 1);
        assert!(enumerate_flypes(&Diagram::unknot()).is_empty());
    }

    #[test]
    fn flypes_preserve_jones_and_invert() {
        for code in ["[4,8,10,2,6]", "[4,10,14,12,2,8,6]", "[6,10,12,14,2,4,8]"] {
            let d = dt(code);
            let j = jones_polynomial(&d).unwrap();
            for f in enumerate_flypes(&d) {
                let e = apply_flype(&d, &f).unwrap();
                assert_eq!(jones_polynomial(&e).unwrap(), j, "{code} {f}");
                let g = inverse_flype(&d, &f).unwrap();
                assert!(apply_flype(&e, &g).unwrap().isomorphic(&d), "{code} {f}");
            }
        }
    }
}
