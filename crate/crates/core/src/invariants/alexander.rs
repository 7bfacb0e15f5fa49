//! Alexander polynomial from the Fox-calculus presentation matrix of the Wirtinger group.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bracket::exact_div;
use crate::diagram::Diagram;
use crate::error::ResourceLimit;
use crate::poly::LaurentPolynomial;

/// Polynomials in `t` with non-negative exponents and checked 128-bit coefficients.
#[derive(Clone, Debug, PartialEq)]
struct Small(Vec<i128>);

fn overflow() -> ResourceLimit {
    ResourceLimit("Alexander coefficient overflow".into())
}

impl Small {
    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, o: &Self) -> Result<Self, ResourceLimit> {
        if self.is_zero() || o.is_zero() {
            return Ok(Small(vec![]));
        }
        let mut out = vec![0i128; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                let p = a.checked_mul(b).ok_or_else(overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or_else(overflow)?;
            }
        }
        Ok(Small(out).trim())
    }
    fn sub(&self, o: &Self) -> Result<Self, ResourceLimit> {
        let mut out = vec![0i128; self.0.len().max(o.0.len())];
        for (i, &a) in self.0.iter().enumerate() {
            out[i] = a;
        }
        for (i, &b) in o.0.iter().enumerate() {
            out[i] = out[i].checked_sub(b).ok_or_else(overflow)?;
        }
        Ok(Small(out).trim())
    }
    /// Exact quotient; the caller guarantees divisibility.
    fn div(&self, d: &Self) -> Result<Self, ResourceLimit> {
        let mut rem = self.0.clone();
        let dl = d.0.len();
        let lc = *d.0.last().expect("nonzero divisor");
        if rem.len() < dl {
            return Ok(Small(vec![]));
        }
        let mut q = vec![0i128; rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + dl - 1];
            if top % lc != 0 {
                return Err(ResourceLimit("inexact division in elimination".into()));
            }
            let c = top / lc;
            q[k] = c;
            if c != 0 {
                for (j, &dv) in d.0.iter().enumerate() {
                    let p = c.checked_mul(dv).ok_or_else(overflow)?;
                    rem[k + j] = rem[k + j].checked_sub(p).ok_or_else(overflow)?;
                }
            }
        }
        Ok(Small(q).trim())
    }
}

/// Fraction-free Gaussian elimination over `Z[t]`.
fn bareiss(mut m: Vec<Vec<Small>>) -> Result<Small, ResourceLimit> {
    let n = m.len();
    if n == 0 {
        return Ok(Small(vec![1]));
    }
    let mut prev = Small(vec![1]);
    let mut negate = false;
    for k in 0..n {
        let Some(piv) = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| m[r][k].0.len())
        else {
            return Ok(Small(vec![]));
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul(&m[k][k])?;
                let b = m[i][k].mul(&m[k][j])?;
                m[i][j] = a.sub(&b)?.div(&prev)?;
            }
            m[i][k] = Small(vec![]);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate {
        Small(vec![]).sub(&det)?
    } else {
        det
    })
}

/// Same elimination with arbitrary-precision coefficients, used when 128 bits overflow.
fn bareiss_big(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut prev = LaurentPolynomial::one();
    let mut negate = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPolynomial::zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&num, &prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = LaurentPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Arc index of every visit: the arc containing position `p` ends at the first under-visit
/// at or after `p`.
fn arcs(d: &Diagram) -> Vec<usize> {
    let m = d.positions();
    let unders: Vec<usize> = (0..m).filter(|&p| !d.visit_over(p)).collect();
    (0..m)
        .map(|p| {
            let k = unders.partition_point(|&u| u < p);
            if k == unders.len() {
                0
            } else {
                k
            }
        })
        .collect()
}

/// Rows of the Alexander matrix: `(over arc, incoming under arc, outgoing under arc, sign)`.
fn relations(d: &Diagram) -> Vec<(usize, usize, usize, i8)> {
    let n = d.crossings();
    let arc = arcs(d);
    (0..n)
        .map(|c| {
            let [p, q] = d.visits(c);
            let (o, u) = if d.visit_over(p) { (p, q) } else { (q, p) };
            (arc[o], arc[u], (arc[u] + 1) % n, d.sign(c))
        })
        .collect()
}

/// Normalizes up to units: symmetric exponents and positive leading coefficient.
fn normalize(p: LaurentPolynomial) -> LaurentPolynomial {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return p;
    };
    debug_assert!((lo + hi) % 2 == 0, "knot Alexander polynomials have even span");
    let q = p.shift(-(lo + hi) / 2);
    if q.leading_coeff().is_some_and(|c| c.is_negative()) {
        -q
    } else {
        q
    }
}

pub fn alexander_polynomial(d: &Diagram) -> Result<LaurentPolynomial, ResourceLimit> {
    let n = d.crossings();
    if n <= 1 {
        return Ok(LaurentPolynomial::one());
    }
    let rels = relations(d);
    let mut m = vec![vec![[0i128; 2]; n]; n];
    for (r, &(k, i, j, s)) in rels.iter().enumerate() {
        if s > 0 {
            m[r][k][0] += 1;
            m[r][k][1] -= 1;
            m[r][i][1] += 1;
            m[r][j][0] -= 1;
        } else {
            m[r][k][1] += 1;
            m[r][k][0] -= 1;
            m[r][i][0] += 1;
            m[r][j][1] -= 1;
        }
    }
    let minor: Vec<Vec<Small>> = m[..n - 1]
        .iter()
        .map(|row| row[..n - 1].iter().map(|c| Small(c.to_vec()).trim()).collect())
        .collect();
    let det = match bareiss(minor.clone()) {
        Ok(det) => LaurentPolynomial::from_terms(
            det.0.iter().enumerate().map(|(e, &c)| (e as i64, BigInt::from(c))),
        ),
        Err(_) => bareiss_big(
            minor
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| {
                            LaurentPolynomial::from_terms(
                                c.0.iter().enumerate().map(|(e, &v)| (e as i64, BigInt::from(v))),
                            )
                        })
                        .collect()
                })
                .collect(),
        ),
    };
    if det.is_zero() {
        return Err(ResourceLimit("vanishing Alexander minor".into()));
    }
    Ok(normalize(det))
}

/// `|Δ(-1)|`, which equals the determinant of the knot.
pub fn alexander_determinant(p: &LaurentPolynomial) -> BigInt {
    let v = p.eval_unit(-1);
    if v.is_negative() {
        -v
    } else if v.is_zero() {
        BigInt::zero()
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alex(s: &str) -> String {
        let d = Diagram::from_dt(&s.parse().unwrap()).unwrap();
        alexander_polynomial(&d).unwrap().to_string()
    }

    #[test]
    fn small_knots() {
        assert_eq!(alex("[4,6,2]"), "-1:1 0:-1 1:1");
        assert_eq!(alex("[4,6,8,2]"), "-1:1 0:-3 1:1");
        assert_eq!(alex("[4,2]"), "0:1");
    }
}
