//! Naming knots by fingerprint lookup in a table, with unknot certificates from move search.

mod facts;
mod table;

use std::fmt;

use thiserror::Error;

pub use facts::{Fact, FactLedger};
pub use table::{KnotEntry, KnotTable};

use crate::diagram::Diagram;
use crate::error::ResourceLimit;
use crate::invariants::Fingerprint;
use crate::moves::unknot::{search_unknot, Certificate, UnknotBudget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentifyError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: code is not realizable")]
    NonRealizableCode { line: usize },
    #[error("line {line}: lower bound exceeds upper bound for {name}")]
    InvertedBounds { line: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotId {
    Unknot,
    Named(String),
    Unrecognized,
    Ambiguous(Vec<String>),
}

impl KnotId {
    pub fn name(&self) -> Option<&str> {
        match self {
            KnotId::Named(n) => Some(n),
            _ => None,
        }
    }

    /// Named or the unknot.
    pub fn is_resolved(&self) -> bool {
        matches!(self, KnotId::Unknot | KnotId::Named(_))
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Unknot => f.write_str("unknot"),
            KnotId::Named(n) => f.write_str(n),
            KnotId::Unrecognized => f.write_str("unrecognized"),
            KnotId::Ambiguous(names) => write!(f, "ambiguous({})", names.join("|")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Identification {
    pub id: KnotId,
    pub fingerprint: Fingerprint,
    /// Present exactly when `id` is `Unknot`.
    pub certificate: Option<Certificate>,
    /// The invariants were all trivial but the unknot search ran out of budget.
    pub undetermined: bool,
}

/// Names the knot of `d` up to mirror image. Only knots whose crossing number is at most the
/// crossing count of `d` are candidates.
pub fn identify(
    d: &Diagram,
    table: &KnotTable,
    budget: UnknotBudget,
) -> Result<Identification, ResourceLimit> {
    let fingerprint = Fingerprint::of(d)?;
    if fingerprint.is_trivial() {
        let certificate = search_unknot(d, budget);
        return Ok(Identification {
            id: if certificate.is_some() {
                KnotId::Unknot
            } else {
                KnotId::Unrecognized
            },
            undetermined: certificate.is_none(),
            fingerprint,
            certificate,
        });
    }
    let mut names: Vec<String> = table
        .lookup(&fingerprint)
        .into_iter()
        .filter(|e| e.crossing_number <= d.crossings())
        .map(|e| e.name.clone())
        .collect();
    names.sort();
    let id = match names.len() {
        0 => KnotId::Unrecognized,
        1 => KnotId::Named(names.pop().expect("one name")),
        _ => KnotId::Ambiguous(names),
    };
    Ok(Identification {
        id,
        fingerprint,
        certificate: None,
        undetermined: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let t = KnotTable::ingest("3_1\t[4,6,2]\n4_1\t[4,6,8,2]\n").unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.collisions().is_empty());
        assert!(KnotTable::ingest("").unwrap().is_empty());
        assert!(matches!(
            KnotTable::ingest("x\t[4,6,8,10,2]"),
            Err(IdentifyError::NonRealizableCode { line: 1 })
        ));
        let d = Diagram::from_dt(&"[4,6,2]".parse().unwrap()).unwrap();
        let b = UnknotBudget::default();
        assert_eq!(identify(&d.mirror(), &t, b).unwrap().id, KnotId::Named("3_1".into()));
        let u = identify(&d.change_crossing(1), &t, b).unwrap();
        assert_eq!(u.id, KnotId::Unknot);
        assert!(u.certificate.unwrap().verify(&d.change_crossing(1)));
    }
}
