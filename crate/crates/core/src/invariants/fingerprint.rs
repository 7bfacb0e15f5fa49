use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{alexander_polynomial, goeritz, jones_polynomial, representations};
use crate::diagram::Diagram;
use crate::error::ResourceLimit;
use crate::poly::LaurentPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    /// Values as computed from the diagram.
    Sensitive,
    /// The smaller of the fingerprint and its mirror image.
    Insensitive,
}

/// The invariant tuple used to compare knots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub jones: LaurentPolynomial,
    pub signature: i64,
    pub determinant: BigInt,
    pub alexander: LaurentPolynomial,
    /// Homomorphisms from the knot group to `S_5` taking meridians to (2,3)-cycles and to
    /// 5-cycles.
    pub s5_counts: [u64; 2],
    pub chirality: Chirality,
}

impl Fingerprint {
    pub fn of(d: &Diagram) -> Result<Self, ResourceLimit> {
        let (determinant, signature) = goeritz::goeritz_invariants(d, false);
        Ok(Self {
            jones: jones_polynomial(d)?,
            signature,
            determinant,
            alexander: alexander_polynomial(d)?,
            s5_counts: representations::s5_counts(d),
            chirality: Chirality::Sensitive,
        })
    }

    /// Fingerprint of the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            jones: self.jones.substitute_power(-1),
            signature: -self.signature,
            ..self.clone()
        }
    }

    /// Forgets chirality by taking the minimum of the pair `{self, mirror}`.
    pub fn insensitive(&self) -> Self {
        let mut a = self.clone();
        let mut b = self.mirror();
        a.chirality = Chirality::Insensitive;
        b.chirality = Chirality::Insensitive;
        a.min(b)
    }

    pub fn is_trivial(&self) -> bool {
        self.determinant.is_one()
            && self.signature == 0
            && self.s5_counts == [20, 24]
            && self.jones.is_one()
            && self.alexander.is_one()
    }

    pub fn jones_span(&self) -> i64 {
        self.jones.span()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "det={} sig={} jones=[{}] alexander=[{}] s5={},{}",
            self.determinant,
            self.signature,
            self.jones,
            self.alexander,
            self.s5_counts[0],
            self.s5_counts[1]
        )
    }
}
