//! Knot invariants computed from diagrams.

pub mod alexander;
pub mod bracket;
pub mod goeritz;
pub mod representations;
pub mod fingerprint;

pub use alexander::alexander_polynomial;
pub use bracket::{jones_polynomial, kauffman_bracket};
pub use goeritz::{determinant, signature};
pub use fingerprint::{Chirality, Fingerprint};
