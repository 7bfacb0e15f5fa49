//! Reidemeister moves on traversal-ordered diagrams. Edge `e` runs from visit position `e`
//! to `e + 1`; moves name the edges they act on in the current diagram.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{Diagram, FaceStructure};
use crate::error::{MoveError, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReidemeisterMove {
    /// Removes the kink formed by edge `edge`.
    R1Remove { edge: usize },
    /// Inserts a kink into edge `edge`; with `edge = 0` on the crossingless diagram.
    R1Add { edge: usize, over_first: bool, sign: i8 },
    /// Removes the bigon bounded by the two edges.
    R2Remove { edges: [usize; 2] },
    /// Pushes edge `over` across edge `under`, creating crossings of sign `sign` and `-sign`.
    /// `reversed` reverses the order of the new crossings along `under`.
    R2Add { over: usize, under: usize, reversed: bool, sign: i8 },
    /// Slides a strand across the triangular face bounded by the three edges.
    R3 { edges: [usize; 3] },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

impl ReidemeisterMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            Self::R1Remove { .. } => MoveKind::R1Remove,
            Self::R1Add { .. } => MoveKind::R1Add,
            Self::R2Remove { .. } => MoveKind::R2Remove,
            Self::R2Add { .. } => MoveKind::R2Add,
            Self::R3 { .. } => MoveKind::R3,
        }
    }

    /// Change in crossing number.
    pub fn delta(&self) -> i64 {
        match self.kind() {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::R1Add => "R1+",
            MoveKind::R1Remove => "R1-",
            MoveKind::R2Add => "R2+",
            MoveKind::R2Remove => "R2-",
            MoveKind::R3 => "R3",
        })
    }
}

fn pm(b: bool) -> char {
    if b {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for ReidemeisterMove {
    /// One line per move, e.g. `R3 4 9 12` or `R2+ 3 7 rev=- sign=+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.kind())?;
        match self {
            Self::R1Remove { edge } => write!(f, "{edge}"),
            Self::R1Add { edge, over_first, sign } => {
                write!(f, "{edge} over={} sign={}", pm(*over_first), pm(*sign > 0))
            }
            Self::R2Remove { edges: [a, b] } => write!(f, "{a} {b}"),
            Self::R2Add { over, under, reversed, sign } => {
                write!(f, "{over} {under} rev={} sign={}", pm(*reversed), pm(*sign > 0))
            }
            Self::R3 { edges: [a, b, c] } => write!(f, "{a} {b} {c}"),
        }
    }
}

impl FromStr for ReidemeisterMove {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| ParseError::new(s, why);
        let mut toks = s.split_whitespace();
        let kind = toks.next().ok_or_else(|| err("empty move"))?;
        let mut nums = Vec::new();
        let mut flags = Vec::new();
        for t in toks {
            if let Some((_, v)) = t.split_once('=') {
                flags.push(match v {
                    "+" => true,
                    "-" => false,
                    _ => return Err(err("flag must be + or -")),
                });
            } else {
                nums.push(t.parse::<usize>().map_err(|_| err("bad edge index"))?);
            }
        }
        let sign = |b: bool| if b { 1 } else { -1 };
        let need = |n: usize, k: usize| {
            if nums.len() == n && flags.len() == k {
                Ok(())
            } else {
                Err(err("wrong number of fields"))
            }
        };
        Ok(match kind {
            "R1-" => {
                need(1, 0)?;
                Self::R1Remove { edge: nums[0] }
            }
            "R1+" => {
                need(1, 2)?;
                Self::R1Add { edge: nums[0], over_first: flags[0], sign: sign(flags[1]) }
            }
            "R2-" => {
                need(2, 0)?;
                Self::R2Remove { edges: [nums[0], nums[1]] }
            }
            "R2+" => {
                need(2, 2)?;
                Self::R2Add {
                    over: nums[0],
                    under: nums[1],
                    reversed: flags[0],
                    sign: sign(flags[1]),
                }
            }
            "R3" => {
                need(3, 0)?;
                Self::R3 { edges: [nums[0], nums[1], nums[2]] }
            }
            _ => return Err(err("unknown move kind")),
        })
    }
}

fn inapplicable(why: impl Into<String>) -> MoveError {
    MoveError::InapplicableMove(why.into())
}

/// Face whose boundary edges are exactly `edges` (in any order), if any.
fn face_with_edges(d: &Diagram, fs: &FaceStructure, edges: &[usize]) -> Option<usize> {
    let f = fs.edge_faces.get(edges[0])?;
    f.iter().copied().find(|&fi| {
        let mut have: Vec<usize> = fs.faces[fi].edges(d).iter().map(|e| e.0).collect();
        let mut want = edges.to_vec();
        have.sort_unstable();
        want.sort_unstable();
        have == want
    })
}

fn rebuild(visits: &[(usize, bool)], signs: &[i8]) -> Result<Diagram, MoveError> {
    Diagram::from_signed_visits(visits, signs)
        .map(|(d, _)| d)
        .map_err(|e| inapplicable(format!("result is not a planar diagram: {e}")))
}

fn r2_condition(d: &Diagram, a: usize, b: usize) -> bool {
    let m = d.positions();
    let (a1, b1) = ((a + 1) % m, (b + 1) % m);
    let xs = [d.crossing_at(a), d.crossing_at(a1)];
    let ys = [d.crossing_at(b), d.crossing_at(b1)];
    xs[0] != xs[1]
        && (xs == ys || xs == [ys[1], ys[0]])
        && d.visit_over(a) == d.visit_over(a1)
        && [a, a1, b, b1].iter().collect::<std::collections::HashSet<_>>().len() == 4
}

fn r3_condition(d: &Diagram, edges: [usize; 3]) -> bool {
    let m = d.positions();
    let mut xs: Vec<usize> = edges
        .iter()
        .flat_map(|&e| [d.crossing_at(e), d.crossing_at((e + 1) % m)])
        .collect();
    xs.sort_unstable();
    xs.dedup();
    xs.len() == 3
        && edges
            .iter()
            .all(|&e| d.crossing_at(e) != d.crossing_at((e + 1) % m))
        && edges
            .iter()
            .any(|&e| d.visit_over(e) && d.visit_over((e + 1) % m))
}

/// Applies a move; the result is renumbered from the same base point where possible.
pub fn apply_move(d: &Diagram, mv: &ReidemeisterMove) -> Result<Diagram, MoveError> {
    let m = d.positions();
    let n = d.crossings();
    let visits = d.visit_list();
    let signs = d.signs();
    let edge_ok = |e: usize| e < m;
    match *mv {
        ReidemeisterMove::R1Remove { edge } => {
            if !edge_ok(edge) || m < 2 || d.crossing_at(edge) != d.crossing_at((edge + 1) % m) {
                return Err(inapplicable("edge is not a kink"));
            }
            let gone = [edge, (edge + 1) % m];
            let kept: Vec<_> = (0..m).filter(|p| !gone.contains(p)).map(|p| visits[p]).collect();
            rebuild(&kept, &signs)
        }
        ReidemeisterMove::R1Add { edge, over_first, sign } => {
            if !(edge_ok(edge) || (m == 0 && edge == 0)) || sign == 0 {
                return Err(inapplicable("no such edge"));
            }
            let mut v = visits.clone();
            let at = if m == 0 { 0 } else { edge + 1 };
            v.insert(at, (n, !over_first));
            v.insert(at, (n, over_first));
            let mut s = signs.clone();
            s.push(sign.signum());
            rebuild(&v, &s)
        }
        ReidemeisterMove::R2Remove { edges: [a, b] } => {
            if !edge_ok(a) || !edge_ok(b) || !r2_condition(d, a, b) {
                return Err(inapplicable("edges do not form a removable bigon"));
            }
            let fs = d.face_structure();
            if face_with_edges(d, &fs, &[a, b]).is_none() {
                return Err(inapplicable("edges do not bound a face"));
            }
            let gone = [a, (a + 1) % m, b, (b + 1) % m];
            let kept: Vec<_> = (0..m).filter(|p| !gone.contains(p)).map(|p| visits[p]).collect();
            rebuild(&kept, &signs)
        }
        ReidemeisterMove::R2Add { over, under, reversed, sign } => {
            if !edge_ok(over) || !edge_ok(under) || over == under || sign == 0 {
                return Err(inapplicable("R2 needs two distinct edges"));
            }
            let (x, y) = (n, n + 1);
            let mut v: Vec<(usize, bool)> = Vec::with_capacity(m + 4);
            for (p, &vis) in visits.iter().enumerate() {
                v.push(vis);
                if p == over {
                    v.push((x, true));
                    v.push((y, true));
                }
                if p == under {
                    let pair = if reversed { [y, x] } else { [x, y] };
                    v.push((pair[0], false));
                    v.push((pair[1], false));
                }
            }
            let mut s = signs.clone();
            s.push(sign.signum());
            s.push(-sign.signum());
            let (out, idx) = Diagram::from_signed_visits(&v, &s)
                .map_err(|e| inapplicable(format!("result is not planar: {e}")))?;
            // the new crossings must bound a bigon that R2- would remove again
            let (nx, ny) = (idx[x], idx[y]);
            let fs = out.face_structure();
            let ok = fs.faces.iter().any(|f| {
                if f.degree() != 2 {
                    return false;
                }
                let mut cs = f.crossings(&out);
                cs.sort_unstable();
                let mut want = vec![nx, ny];
                want.sort_unstable();
                let es = f.edges(&out);
                cs == want && r2_condition(&out, es[0].0, es[1].0)
            });
            if ok {
                Ok(out)
            } else {
                Err(inapplicable("pushed edges do not bound a bigon"))
            }
        }
        ReidemeisterMove::R3 { edges } => {
            if edges.iter().any(|&e| !edge_ok(e)) || !r3_condition(d, edges) {
                return Err(inapplicable("not an R3 triangle"));
            }
            let fs = d.face_structure();
            if face_with_edges(d, &fs, &edges).is_none() {
                return Err(inapplicable("edges do not bound a triangular face"));
            }
            let mut v = visits.clone();
            for &e in &edges {
                v.swap(e, (e + 1) % m);
            }
            rebuild(&v, &signs)
        }
    }
}

/// Which insertions to generate besides the complete set of simplifying moves and R3 moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    None,
    /// R2+ across faces sharing a crossing with a triangular face, and no R1+.
    NearTriangles,
    /// R2+ across every face and R1+ on every edge.
    All,
}

/// All applicable R1-, R2- and R3 moves, plus insertions allowed by `growth`.
pub fn enumerate_moves(d: &Diagram, growth: Growth) -> Vec<ReidemeisterMove> {
    let m = d.positions();
    let mut out = Vec::new();
    if m == 0 {
        if growth == Growth::All {
            for over_first in [true, false] {
                for sign in [1, -1] {
                    out.push(ReidemeisterMove::R1Add { edge: 0, over_first, sign });
                }
            }
        }
        return out;
    }
    let fs = d.face_structure();
    let mut near_triangle = vec![false; d.crossings()];
    let mut kinked = vec![false; d.crossings()];
    for f in &fs.faces {
        let es: Vec<usize> = f.edges(d).iter().map(|e| e.0).collect();
        match f.degree() {
            // both loops of a lone crossing remove the same crossing
            1 => {
                let c = d.crossing_at(es[0]);
                if !kinked[c] {
                    kinked[c] = true;
                    out.push(ReidemeisterMove::R1Remove { edge: es[0] });
                }
            }
            2 => {
                if r2_condition(d, es[0], es[1]) {
                    let mut e = [es[0], es[1]];
                    e.sort_unstable();
                    out.push(ReidemeisterMove::R2Remove { edges: e });
                }
            }
            3 => {
                let e = [es[0], es[1], es[2]];
                if r3_condition(d, e) {
                    let mut e = e;
                    e.sort_unstable();
                    out.push(ReidemeisterMove::R3 { edges: e });
                }
                for c in f.crossings(d) {
                    near_triangle[c] = true;
                }
            }
            _ => {}
        }
    }
    out.dedup();
    if growth == Growth::None {
        return out;
    }
    for f in &fs.faces {
        if growth == Growth::NearTriangles
            && (f.degree() < 2 || !f.crossings(d).iter().any(|&c| near_triangle[c]))
        {
            continue;
        }
        let es: Vec<usize> = f.edges(d).iter().map(|e| e.0).collect();
        for (i, &a) in es.iter().enumerate() {
            for &b in &es[i + 1..] {
                if a == b {
                    continue;
                }
                for (over, under) in [(a, b), (b, a)] {
                    for reversed in [false, true] {
                        for sign in [1, -1] {
                            let mv = ReidemeisterMove::R2Add { over, under, reversed, sign };
                            if apply_move(d, &mv).is_ok() {
                                out.push(mv);
                            }
                        }
                    }
                }
            }
        }
    }
    if growth == Growth::All {
        for edge in 0..m {
            for over_first in [true, false] {
                for sign in [1, -1] {
                    out.push(ReidemeisterMove::R1Add { edge, over_first, sign });
                }
            }
        }
    }
    out
}
