//! Laurent polynomials in one variable with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// A Laurent polynomial `sum c_e x^e`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds a polynomial from a dense coefficient slice whose first entry has exponent `low`.
    pub fn from_dense(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (low + i as i64, *c)),
        )
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponent; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `x -> x^k`. With `k = -1` this is the mirror substitution.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Substitutes `x -> x^(1/k)`; fails if some exponent is not divisible by `k`.
    pub fn divide_exponents(&self, k: i64) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            out.insert(e / k, c.clone());
        }
        Some(Self { terms: out })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Evaluates at an integer point; negative exponents require `x = ±1`.
    pub fn eval_unit(&self, x: i64) -> BigInt {
        assert!(x == 1 || x == -1, "eval_unit needs x = 1 or x = -1");
        self.terms
            .iter()
            .map(|(e, c)| if x == -1 && e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .sum()
    }

    /// Parses the `exponent:coefficient` serialization.
    pub fn parse_pairs(s: &str) -> Result<Self, ParseError> {
        let mut p = Self::zero();
        for tok in s.split_whitespace() {
            let (e, c) = tok
                .split_once(':')
                .ok_or_else(|| ParseError::new(tok, "expected exponent:coefficient"))?;
            let e: i64 = e.parse().map_err(|_| ParseError::new(tok, "bad exponent"))?;
            let c: BigInt = c.parse().map_err(|_| ParseError::new(tok, "bad coefficient"))?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Human-readable rendering in the variable `var`, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Sorted `exponent:coefficient` pairs separated by spaces; `0` renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{e}:{c}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_pairs(s)
    }
}

impl Ord for LaurentPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for LaurentPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_cancellation() {
        let a = LaurentPolynomial::from_terms([(-1, 1), (1, 1)]);
        let b = LaurentPolynomial::from_terms([(-1, 1), (1, -1)]);
        let prod = &a * &b;
        assert_eq!(prod, LaurentPolynomial::from_terms([(-2, 1), (2, -1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(prod.span(), 4);
    }

    #[test]
    fn serialization_round_trip() {
        let p = LaurentPolynomial::from_terms([(3, -1), (-4, 7), (0, 2)]);
        assert_eq!(p.to_string(), "-4:7 0:2 3:-1");
        assert_eq!(p.to_string().parse::<LaurentPolynomial>().unwrap(), p);
        assert_eq!(LaurentPolynomial::zero().to_string(), "");
    }

    #[test]
    fn pretty_and_eval() {
        let p = LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]);
        assert_eq!(p.pretty("t"), "-t^4 + t^3 + t");
        assert_eq!(p.eval_unit(-1), BigInt::from(-3));
        assert_eq!(p.substitute_power(-1).min_exp(), Some(-4));
    }
}
