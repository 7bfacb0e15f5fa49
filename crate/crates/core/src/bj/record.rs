use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::BjError;
use crate::diagram::{Diagram, DiagramKey};
use crate::identify::{identify, KnotId, KnotTable};
use crate::invariants::{determinant, Fingerprint};
use crate::moves::UnknotBudget;
use crate::tabulate::{
    crossing_change_closure, enumerate_reference_diagrams, ReferenceSet, TabulateLimits,
};

/// What to do with a diagram that matches no table entry, or several.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GapPolicy {
    #[default]
    Fatal,
    /// Keep it as an unrecognized (or ambiguous) nontrivial knot.
    Mark,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BjSet {
    pub members: BTreeSet<KnotId>,
    /// Single-crossing-change neighbours examined.
    pub neighbours: usize,
    /// Distinct fingerprints among neighbours that matched no table entry.
    pub unrecognized: usize,
}

#[derive(Clone, Debug)]
pub struct BjRecord {
    pub knot: String,
    pub crossing_number: usize,
    pub minimal_diagrams: Vec<Diagram>,
    pub bj_set: BjSet,
    pub notes: Vec<String>,
}

impl fmt::Display for BjRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot {}", self.knot)?;
        writeln!(f, "crossing_number {}", self.crossing_number)?;
        writeln!(f, "minimal_diagrams {}", self.minimal_diagrams.len())?;
        for d in &self.minimal_diagrams {
            writeln!(f, "  {}", d.to_dt())?;
        }
        writeln!(f, "neighbours {}", self.bj_set.neighbours)?;
        writeln!(f, "bj_set {}", self.bj_set.members.len())?;
        for m in &self.bj_set.members {
            match m {
                KnotId::Unrecognized => {
                    writeln!(f, "  unrecognized ({} fingerprints)", self.bj_set.unrecognized)?
                }
                _ => writeln!(f, "  {m}")?,
            }
        }
        for n in &self.notes {
            writeln!(f, "note {n}")?;
        }
        Ok(())
    }
}

fn classify(
    d: &Diagram,
    table: &KnotTable,
    budget: UnknotBudget,
    policy: GapPolicy,
) -> Result<(KnotId, Fingerprint), BjError> {
    let ident = identify(d, table, budget)?;
    let gap = !ident.id.is_resolved() && (ident.undetermined || policy == GapPolicy::Fatal);
    if gap {
        return Err(BjError::IdentificationGap {
            diagram: d.to_dt(),
            id: ident.id,
        });
    }
    Ok((ident.id, ident.fingerprint))
}

/// Maps `f` over a stream in parallel chunks, keeping stream order.
fn par_stream<T, R, I, F>(items: I, f: F) -> Result<Vec<R>, BjError>
where
    I: Iterator<Item = T>,
    T: Send,
    R: Send,
    F: Fn(T) -> Result<Option<R>, BjError> + Sync,
{
    const CHUNK: usize = 4096;
    let mut out = Vec::new();
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        let done = chunk
            .into_par_iter()
            .map(&f)
            .collect::<Result<Vec<_>, _>>()?;
        out.extend(done.into_iter().flatten());
    }
    Ok(out)
}

/// The crossing-change variants of `refs` that identify as `knot`, in stream order.
pub fn minimal_diagrams_of(
    knot: &str,
    refs: &ReferenceSet,
    table: &KnotTable,
    budget: UnknotBudget,
) -> Result<Vec<Diagram>, BjError> {
    let entry = table.get(knot).ok_or_else(|| BjError::UnknownKnot(knot.into()))?;
    let det = &entry.fingerprint.determinant;
    par_stream(crossing_change_closure(refs), |v| {
        if determinant(&v.diagram) != *det {
            return Ok(None);
        }
        let id = identify(&v.diagram, table, budget)?.id;
        match &id {
            KnotId::Named(n) if n == knot => Ok(Some(v.diagram)),
            KnotId::Ambiguous(names) if names.iter().any(|n| n == knot) => {
                Err(BjError::IdentificationGap {
                    diagram: v.diagram.to_dt(),
                    id,
                })
            }
            _ => Ok(None),
        }
    })
}

/// Identifies every single-crossing-change neighbour of the given diagrams.
pub fn bj_set_of(
    diagrams: &[Diagram],
    table: &KnotTable,
    budget: UnknotBudget,
    policy: GapPolicy,
) -> Result<BjSet, BjError> {
    let neighbours: Vec<Diagram> = diagrams
        .iter()
        .flat_map(|d| (0..d.crossings()).map(move |c| d.change_crossing(c)))
        .collect();
    let ids = neighbours
        .par_iter()
        .map(|d| classify(d, table, budget, policy))
        .collect::<Result<Vec<_>, _>>()?;
    let unrecognized: BTreeSet<&Fingerprint> = ids
        .iter()
        .filter(|(id, _)| !id.is_resolved())
        .map(|(_, fp)| fp)
        .collect();
    Ok(BjSet {
        neighbours: neighbours.len(),
        unrecognized: unrecognized.len(),
        members: ids.iter().map(|(id, _)| id.clone()).collect(),
    })
}

fn mirror_free_key(d: &Diagram) -> DiagramKey {
    d.canonical_key().min(d.mirror().canonical_key())
}

/// Connected sums of minimal diagrams of two summands, joined at every pair of edges, with
/// both orientations of the second summand and with it turned over, keeping those that
/// identify as `knot`. Diagrams and their mirror images are counted once.
pub fn composite_minimal_diagrams(
    knot: &str,
    first: &[Diagram],
    second: &[Diagram],
    table: &KnotTable,
    budget: UnknotBudget,
) -> Result<Vec<Diagram>, BjError> {
    let both = |ds: &[Diagram]| -> Vec<Diagram> {
        ds.iter().flat_map(|d| [d.clone(), d.mirror()]).collect()
    };
    let (a_all, b_all) = (both(first), both(second));
    let mut sums: BTreeMap<DiagramKey, Diagram> = BTreeMap::new();
    for a in &a_all {
        for b in &b_all {
            for turned in [false, true] {
                let b = if turned { b.reflect().mirror() } else { b.clone() };
                for s in 0..a.positions() {
                    let a = a.retraverse(s, false);
                    for t in 0..b.positions() {
                        for rev in [false, true] {
                            let x = a.connected_sum(&b.retraverse(t, rev));
                            sums.entry(mirror_free_key(&x)).or_insert(x);
                        }
                    }
                }
            }
        }
    }
    let kept = sums
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let id = identify(&d, table, budget)?.id;
            Ok((id.name() == Some(knot)).then_some(d))
        })
        .collect::<Result<Vec<_>, BjError>>()?;
    Ok(kept.into_iter().flatten().collect())
}

/// Records for every tabulated knot with crossing number from 3 to `n_max`, from the
/// enumerated reference diagrams. Composite knots also get the connected sums of their
/// summands' minimal diagrams.
pub fn small_scale_records(
    n_max: usize,
    table: &KnotTable,
    budget: UnknotBudget,
    limits: TabulateLimits,
) -> Result<BTreeMap<String, BjRecord>, BjError> {
    let mut records: BTreeMap<String, BjRecord> = BTreeMap::new();
    for n in 3..=n_max {
        let refs = enumerate_reference_diagrams(n, limits)?;
        let named = par_stream(crossing_change_closure(&refs), |v| {
            let (id, _) = classify(&v.diagram, table, budget, GapPolicy::Fatal)?;
            Ok(match id {
                KnotId::Named(name) => Some((name, v.diagram)),
                _ => None,
            })
        })?;
        let mut by_knot: BTreeMap<String, Vec<Diagram>> = BTreeMap::new();
        for (name, d) in named {
            by_knot.entry(name).or_default().push(d);
        }
        let level: Vec<_> = table.entries().iter().filter(|e| e.crossing_number == n).collect();
        for e in level {
            let mut diagrams = by_knot.remove(&e.name).unwrap_or_default();
            let mut notes = Vec::new();
            if e.is_composite() {
                let summand = |s: &str| -> Result<&[Diagram], BjError> {
                    let base = s.trim_end_matches('*');
                    records
                        .get(base)
                        .map(|r| r.minimal_diagrams.as_slice())
                        .ok_or_else(|| BjError::MissingBjRecord(base.into()))
                };
                let sums = composite_minimal_diagrams(
                    &e.name,
                    summand(&e.summands[0])?,
                    summand(&e.summands[1])?,
                    table,
                    budget,
                )?;
                notes.push(format!(
                    "composite-policy: {} connected sums of summand minimal diagrams",
                    sums.len()
                ));
                diagrams.extend(sums);
            }
            if diagrams.is_empty() {
                return Err(BjError::NoMinimalDiagrams(e.name.clone()));
            }
            let bj_set = bj_set_of(&diagrams, table, budget, GapPolicy::Fatal)?;
            records.insert(
                e.name.clone(),
                BjRecord {
                    knot: e.name.clone(),
                    crossing_number: n,
                    minimal_diagrams: diagrams,
                    bj_set,
                    notes,
                },
            );
        }
    }
    Ok(records)
}
