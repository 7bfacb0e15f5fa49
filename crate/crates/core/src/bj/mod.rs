//! Minimal diagrams, single-crossing-change neighbours and the Bernhard-Jablan numbers.

mod record;
mod strong;
mod weak;

use thiserror::Error;

pub use record::{
    bj_set_of, composite_minimal_diagrams, minimal_diagrams_of, small_scale_records, BjRecord,
    BjSet, GapPolicy,
};
pub use strong::{adjacency_upper_bound, check_lemma_chain, strong_bj_interval, LemmaReport};
pub use weak::{overrides_from_ledger, weak_bj_numbers, Bound, Override, WeakOptions, WeakReport};

use crate::codecs::DtCode;
use crate::error::ResourceLimit;
use crate::identify::KnotId;
use crate::tabulate::TabulateError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BjError {
    #[error("diagram {diagram} could not be identified ({id})")]
    IdentificationGap { diagram: DtCode, id: KnotId },
    #[error("no record for {0} and no override")]
    MissingBjRecord(String),
    #[error("no unknotting bounds for {0}")]
    MissingFact(String),
    #[error("{0} is not in the knot table")]
    UnknownKnot(String),
    #[error("{0} has no minimal diagram among the reference variants")]
    NoMinimalDiagrams(String),
    #[error("the passes left {0} without a value")]
    Unresolved(String),
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error(transparent)]
    Tabulate(#[from] TabulateError),
}
