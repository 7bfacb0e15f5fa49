//! Computational machinery for crossing changes on minimal knot diagrams: codes and
//! diagrams, Reidemeister moves and flypes, polynomial and matrix invariants, knot
//! identification against a table, tabulation of alternating knots, and the weak and
//! strong Bernhard-Jablan unknotting numbers.

pub mod bj;
pub mod codecs;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod identify;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod tabulate;

pub use codecs::{BraidWord, DtCode, GaussCode};
pub use diagram::Diagram;
pub use error::{CodecError, MoveError, ParseError, ResourceLimit};
pub use poly::LaurentPolynomial;
