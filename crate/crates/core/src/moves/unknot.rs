//! Unknot detection: invariant witnesses first, then a bounded search over Reidemeister moves.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::reidemeister::{apply_move, enumerate_moves, Growth, ReidemeisterMove};
use crate::diagram::{Diagram, DiagramKey};
use crate::error::MoveError;
use crate::invariants::{alexander_polynomial, goeritz, jones_polynomial};
use crate::poly::LaurentPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknotBudget {
    /// Distinct diagrams the search may visit.
    pub max_states: usize,
    /// How far above the best crossing count seen so far insertions may climb.
    pub max_extra_crossings: usize,
}

impl Default for UnknotBudget {
    fn default() -> Self {
        Self {
            max_states: 100_000,
            max_extra_crossings: 2,
        }
    }
}

/// A move sequence taking a diagram to the crossingless one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub moves: Vec<ReidemeisterMove>,
}

impl Certificate {
    pub fn replay(&self, d: &Diagram) -> Result<Diagram, MoveError> {
        self.moves.iter().try_fold(d.clone(), |d, m| apply_move(&d, m))
    }

    /// Replays the moves and checks that no crossings remain.
    pub fn verify(&self, d: &Diagram) -> bool {
        self.replay(d).is_ok_and(|e| e.crossings() == 0)
    }

    /// Parses the one-move-per-line log written by `Display`.
    pub fn parse(text: &str) -> Result<Self, crate::error::ParseError> {
        let moves = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        Ok(Self { moves })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An invariant whose value differs from the unknot's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Determinant(BigInt),
    Jones(LaurentPolynomial),
    Alexander(LaurentPolynomial),
    Signature(i64),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Determinant(d) => write!(f, "determinant = {d}"),
            Witness::Jones(p) => write!(f, "jones = {}", p.pretty("t")),
            Witness::Alexander(p) => write!(f, "alexander = {}", p.pretty("t")),
            Witness::Signature(s) => write!(f, "signature = {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnknotResult {
    Unknot(Certificate),
    NotUnknot(Witness),
    /// All invariants are trivial but the search ran out of budget.
    Undetermined,
}

impl UnknotResult {
    pub fn is_unknot(&self) -> bool {
        matches!(self, UnknotResult::Unknot(_))
    }
}

/// Some invariant separating `d` from the unknot, cheapest first.
pub fn nontrivial_witness(d: &Diagram) -> Option<Witness> {
    if d.crossings() < 3 {
        return None;
    }
    let (det, sig) = goeritz::goeritz_invariants(d, false);
    if !det.is_one() {
        return Some(Witness::Determinant(det));
    }
    if let Ok(j) = jones_polynomial(d) {
        if !j.is_one() {
            return Some(Witness::Jones(j));
        }
    }
    if let Ok(a) = alexander_polynomial(d) {
        if !a.is_one() {
            return Some(Witness::Alexander(a));
        }
    }
    (sig != 0).then_some(Witness::Signature(sig))
}

/// Applies crossing-reducing moves while any exist.
fn descend(d: &Diagram, path: &mut Vec<ReidemeisterMove>) -> Diagram {
    let mut d = d.clone();
    while let Some(m) = enumerate_moves(&d, Growth::None)
        .into_iter()
        .find(|m| m.delta() < 0)
    {
        d = apply_move(&d, &m).expect("enumerated moves apply");
        path.push(m);
    }
    d
}

struct Node {
    diagram: Diagram,
    parent: Option<usize>,
    /// Moves leading here from the parent.
    moves: Vec<ReidemeisterMove>,
}

fn path_to(nodes: &[Node], mut i: usize) -> Vec<ReidemeisterMove> {
    let mut segs = Vec::new();
    loop {
        segs.push(nodes[i].moves.clone());
        match nodes[i].parent {
            Some(p) => i = p,
            None => break,
        }
    }
    segs.into_iter().rev().flatten().collect()
}

/// Looks for a move sequence to the crossingless diagram: greedy descent, then best-first
/// search through R3 moves and local R2 insertions, restarting from every new record low.
pub fn search_unknot(d: &Diagram, budget: UnknotBudget) -> Option<Certificate> {
    let mut first = Vec::new();
    let start = descend(d, &mut first);
    let mut best = start.crossings();
    let mut nodes = vec![Node {
        diagram: start,
        parent: None,
        moves: first,
    }];
    if best == 0 {
        return Some(Certificate {
            moves: path_to(&nodes, 0),
        });
    }
    let mut seen: HashSet<DiagramKey> = HashSet::new();
    seen.insert(nodes[0].diagram.canonical_key());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((best, 0usize)));
    let mut growth = Growth::NearTriangles;
    let mut round = 0;
    loop {
        while let Some(Reverse((_, i))) = heap.pop() {
            let d = nodes[i].diagram.clone();
            let n = d.crossings();
            for m in enumerate_moves(&d, growth) {
                if m.delta() > 0 && n + m.delta() as usize > best + budget.max_extra_crossings {
                    continue;
                }
                let Ok(next) = apply_move(&d, &m) else { continue };
                let mut moves = vec![m];
                let next = if moves[0].delta() <= 0 {
                    descend(&next, &mut moves)
                } else {
                    next
                };
                if !seen.insert(next.canonical_key()) {
                    continue;
                }
                let c = next.crossings();
                nodes.push(Node {
                    diagram: next,
                    parent: Some(i),
                    moves,
                });
                let id = nodes.len() - 1;
                if c == 0 {
                    return Some(Certificate {
                        moves: path_to(&nodes, id),
                    });
                }
                if c < best {
                    best = c;
                    heap.clear();
                    heap.push(Reverse((c, id)));
                    break;
                }
                heap.push(Reverse((c, id)));
                if nodes.len() >= budget.max_states {
                    return None;
                }
            }
        }
        // the local insertions were exhausted: widen to every insertion once
        round += 1;
        if round > 1 {
            return None;
        }
        growth = Growth::All;
        seen.clear();
        let (i, _) = nodes
            .iter()
            .enumerate()
            .min_by_key(|(i, nd)| (nd.diagram.crossings(), *i))
            .expect("nodes is nonempty");
        seen.insert(nodes[i].diagram.canonical_key());
        heap.push(Reverse((nodes[i].diagram.crossings(), i)));
    }
}

/// Classifies `d` as the unknot (with a replayable certificate), a nontrivial knot (with a
/// witness), or undetermined when the invariants are trivial and the search budget runs out.
pub fn detect_unknot(d: &Diagram, budget: UnknotBudget) -> UnknotResult {
    if let Some(w) = nontrivial_witness(d) {
        return UnknotResult::NotUnknot(w);
    }
    match search_unknot(d, budget) {
        Some(c) => UnknotResult::Unknot(c),
        None => UnknotResult::Undetermined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dt(s: &str) -> Diagram {
        Diagram::from_dt(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn trefoil_changes_unknot() {
        let d = dt("[4,6,2]");
        assert_eq!(
            detect_unknot(&d, UnknotBudget::default()),
            UnknotResult::NotUnknot(Witness::Determinant(3.into()))
        );
        for c in 0..3 {
            let e = d.change_crossing(c);
            let UnknotResult::Unknot(cert) = detect_unknot(&e, UnknotBudget::default()) else {
                panic!("change {c} is not certified");
            };
            assert!(cert.verify(&e));
            assert_eq!(Certificate::parse(&cert.to_string()).unwrap(), cert);
        }
        assert_eq!(
            detect_unknot(&Diagram::unknot(), UnknotBudget::default()),
            UnknotResult::Unknot(Certificate::default())
        );
    }
}
