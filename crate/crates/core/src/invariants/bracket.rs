//! Kauffman bracket by contracting crossings one at a time over planar matchings of the
//! open edges, and the Jones polynomial derived from it.

use std::collections::HashMap;

use crate::diagram::{Diagram, Slot};
use crate::error::ResourceLimit;
use crate::poly::LaurentPolynomial;

/// Upper bound on simultaneous boundary matchings before giving up.
const MAX_STATES: usize = 4_000_000;

/// Dense polynomial in `A` with exponents `-off..=off`.
#[derive(Clone)]
struct Dense {
    c: Vec<i128>,
}

fn overflow() -> ResourceLimit {
    ResourceLimit("bracket coefficient overflow".into())
}

impl Dense {
    fn zero(len: usize) -> Self {
        Dense { c: vec![0; len] }
    }

    /// `self += other * A^shift * d^loops` with `d = -A^2 - A^-2`.
    fn add_scaled(&mut self, other: &Dense, shift: i64, loops: u32) -> Result<(), ResourceLimit> {
        let mut buf: Vec<i128> = other.c.clone();
        for _ in 0..loops {
            let mut next = vec![0i128; buf.len()];
            for (i, &v) in buf.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                if i + 2 >= next.len() || i < 2 {
                    return Err(ResourceLimit("bracket exponent range exceeded".into()));
                }
                next[i + 2] = next[i + 2].checked_sub(v).ok_or_else(overflow)?;
                next[i - 2] = next[i - 2].checked_sub(v).ok_or_else(overflow)?;
            }
            buf = next;
        }
        for (i, &v) in buf.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let j = i as i64 + shift;
            if j < 0 || j as usize >= self.c.len() {
                return Err(ResourceLimit("bracket exponent range exceeded".into()));
            }
            let slot = &mut self.c[j as usize];
            *slot = slot.checked_add(v).ok_or_else(overflow)?;
        }
        Ok(())
    }
}

/// Edge carried by a half-edge: the outgoing end of visit `v` starts edge `v`, the incoming
/// end finishes edge `v - 1`.
fn slot_edge(d: &Diagram, s: Slot) -> usize {
    let m = d.positions();
    if s.outgoing() {
        s.pos()
    } else {
        (s.pos() + m - 1) % m
    }
}

/// Edge pairs joined by the A- and B-smoothings of crossing `c`.
///
/// The A-smoothing merges the two regions swept when the over-strand turns counterclockwise.
pub(crate) fn smoothings(d: &Diagram, c: usize) -> [[(usize, usize); 2]; 2] {
    let r = d.rotation_slots(c);
    let e: Vec<usize> = r.iter().map(|&s| slot_edge(d, s)).collect();
    // r[0], r[2] belong to the odd-labelled visit
    let odd_over = d.visit_over(2 * c);
    let p = [(e[1], e[2]), (e[3], e[0])];
    let q = [(e[0], e[1]), (e[2], e[3])];
    if odd_over {
        [p, q]
    } else {
        [q, p]
    }
}

/// Joins `x` and `y` by an arc inside the processed region; returns whether a loop closed.
fn connect(mate: &mut [u16], x: usize, y: usize) -> bool {
    const NONE: u16 = u16::MAX;
    if x == y {
        if mate[x] == NONE {
            return true;
        }
        unreachable!("an edge is only reconnected to itself before it opens");
    }
    match (mate[x] != NONE, mate[y] != NONE) {
        (true, true) => {
            if mate[x] as usize == y {
                mate[x] = NONE;
                mate[y] = NONE;
                true
            } else {
                let (a, b) = (mate[x] as usize, mate[y] as usize);
                mate[x] = NONE;
                mate[y] = NONE;
                mate[a] = b as u16;
                mate[b] = a as u16;
                false
            }
        }
        (true, false) => {
            let a = mate[x] as usize;
            mate[x] = NONE;
            mate[a] = y as u16;
            mate[y] = a as u16;
            false
        }
        (false, true) => connect(mate, y, x),
        (false, false) => {
            mate[x] = y as u16;
            mate[y] = x as u16;
            false
        }
    }
}

/// Greedy order keeping the boundary of the processed region small.
fn contraction_order(d: &Diagram) -> Vec<usize> {
    let n = d.crossings();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let neighbours = |c: usize| -> Vec<usize> {
        d.visits(c)
            .iter()
            .flat_map(|&p| {
                let m = d.positions();
                [d.crossing_at((p + 1) % m), d.crossing_at((p + m - 1) % m)]
            })
            .collect()
    };
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| (links[c], std::cmp::Reverse(c)))
            .expect("an unprocessed crossing remains");
        done[next] = true;
        order.push(next);
        for nb in neighbours(next) {
            links[nb] += 1;
        }
    }
    order
}

/// The Kauffman bracket `<D>` in the variable `A`, normalized so that `<O> = 1`.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPolynomial, ResourceLimit> {
    let n = d.crossings();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let m = d.positions();
    if m >= u16::MAX as usize {
        return Err(ResourceLimit("diagram too large".into()));
    }
    let off = 3 * n + 6;
    let len = 2 * off + 1;
    let mut one = Dense::zero(len);
    one.c[off] = 1;
    let mut states: HashMap<Vec<u16>, Dense> = HashMap::new();
    states.insert(vec![u16::MAX; m], one);
    for c in contraction_order(d) {
        let sm = smoothings(d, c);
        let mut next: HashMap<Vec<u16>, Dense> = HashMap::with_capacity(states.len() * 2);
        for (mate, poly) in &states {
            for (k, arcs) in sm.iter().enumerate() {
                let mut mt = mate.clone();
                let mut loops = 0;
                for &(x, y) in arcs {
                    loops += connect(&mut mt, x, y) as u32;
                }
                let shift = if k == 0 { 1 } else { -1 };
                let slot = next.entry(mt).or_insert_with(|| Dense::zero(len));
                slot.add_scaled(poly, shift, loops)?;
            }
        }
        if next.len() > MAX_STATES {
            return Err(ResourceLimit(format!("{} boundary states", next.len())));
        }
        states = next;
    }
    let total = states
        .into_values()
        .next()
        .expect("contraction ends in the empty matching");
    // every loop contributed a factor d; the normalization uses one fewer
    let p = LaurentPolynomial::from_dense(-(off as i64), &to_i64(&total.c)?);
    let dpoly = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    Ok(exact_div(&p, &dpoly).expect("bracket sum is divisible by the loop value"))
}

fn to_i64(c: &[i128]) -> Result<Vec<i64>, ResourceLimit> {
    c.iter()
        .map(|&v| i64::try_from(v).map_err(|_| overflow()))
        .collect()
}

/// Exact division of Laurent polynomials, if the quotient is a Laurent polynomial.
pub(crate) fn exact_div(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Option<LaurentPolynomial> {
    use num_integer::Integer;
    let mut rem = p.clone();
    let mut quot = LaurentPolynomial::zero();
    let qhi = q.max_exp()?;
    let qlc = q.leading_coeff()?.clone();
    let qlo = q.min_exp()?;
    while !rem.is_zero() {
        let rhi = rem.max_exp()?;
        if rhi - qhi < rem.min_exp()? - qlo {
            return None;
        }
        let (c, r) = rem.leading_coeff()?.div_rem(&qlc);
        if !num_traits::Zero::is_zero(&r) {
            return None;
        }
        let t = LaurentPolynomial::monomial(c, rhi - qhi);
        rem = &rem - &(&t * q);
        quot = &quot + &t;
    }
    Some(quot)
}

/// Jones polynomial in `t`: `(-A^3)^(-w) <D>` with `t = A^(-4)`.
pub fn jones_polynomial(d: &Diagram) -> Result<LaurentPolynomial, ResourceLimit> {
    let b = kauffman_bracket(d)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = b.shift(-3 * w).scale(&sign.into());
    Ok(f
        .substitute_power(-1)
        .divide_exponents(4)
        .expect("Jones exponents of a knot are integral"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jones(s: &str) -> String {
        let d = Diagram::from_dt(&s.parse().unwrap()).unwrap();
        jones_polynomial(&d).unwrap().to_string()
    }

    #[test]
    fn small_knots() {
        assert_eq!(jones("[4,6,2]"), "1:1 3:1 4:-1");
        assert_eq!(jones("[4,6,8,2]"), "-2:1 -1:-1 0:1 1:-1 2:1");
        assert_eq!(jones("[2]"), "0:1");
        assert_eq!(jones("[4,2]"), "0:1");
    }

    #[test]
    fn exact_division() {
        let a = LaurentPolynomial::from_terms([(-1, 2), (3, 1)]);
        let b = LaurentPolynomial::from_terms([(0, 1), (2, -5), (-3, 1)]);
        assert_eq!(exact_div(&(&a * &b), &b), Some(a.clone()));
        assert_eq!(exact_div(&(&(&a * &b) + &LaurentPolynomial::one()), &b), None);
    }
}
