//! Reidemeister moves, unknot detection by move search, and flypes.

pub mod flype;
pub mod reidemeister;
pub mod unknot;

pub use reidemeister::{apply_move, enumerate_moves, Growth, MoveKind, ReidemeisterMove};
pub use unknot::{detect_unknot, nontrivial_witness, search_unknot, Certificate, UnknotBudget, UnknotResult, Witness};
pub use flype::{
    apply_flype, enumerate_flypes, flype_orbit, inverse_flype, transport_crossing_change, FlypeMove,
    Transport, TransportCase,
};
