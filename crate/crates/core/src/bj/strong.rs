use std::collections::BTreeMap;
use std::fmt;

use super::record::{BjRecord, BjSet};
use super::weak::{Bound, WeakReport};
use super::BjError;
use crate::identify::{Fact, FactLedger, KnotId};

fn member_bounds(m: &KnotId, ledger: &FactLedger) -> Result<Bound, BjError> {
    match m {
        KnotId::Unknot => Ok(Bound::exact(0)),
        KnotId::Named(x) => {
            let f = ledger.get(x).ok_or_else(|| BjError::MissingFact(x.clone()))?;
            Ok(Bound {
                lo: f.lower,
                hi: Some(f.upper),
            })
        }
        KnotId::Unrecognized | KnotId::Ambiguous(_) => Ok(Bound::at_least(1)),
    }
}

/// Bounds on the strong number: one more than the least unknotting number over the set,
/// taken separately on lower and upper ledger bounds. The empty set (the unknot) gives 0.
pub fn strong_bj_interval(bj_set: &BjSet, ledger: &FactLedger) -> Result<Bound, BjError> {
    if bj_set.members.is_empty() {
        return Ok(Bound::exact(0));
    }
    let b = bj_set
        .members
        .iter()
        .map(|m| member_bounds(m, ledger))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Bound {
        lo: 1 + b.iter().map(|x| x.lo).min().expect("nonempty"),
        hi: b.iter().filter_map(|x| x.hi).min().map(|h| h + 1),
    })
}

/// Upper bound on the unknotting number of a knot one crossing change away from a knot with
/// the given bounds.
pub fn adjacency_upper_bound(neighbour: &Fact) -> u32 {
    neighbour.upper + 1
}

#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    pub lines: Vec<String>,
    pub violations: Vec<String>,
    /// Knots whose unknotting number is provably below their weak number.
    pub weak_failures: Vec<String>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        for w in &self.weak_failures {
            writeln!(f, "strict {w}")?;
        }
        Ok(())
    }
}

/// Checks `u <= u_BJ^s <= u_BJ^w` for every record against the ledger, and that ledger values
/// of adjacent knots differ by at most one where both are pinned.
pub fn check_lemma_chain(
    records: &BTreeMap<String, BjRecord>,
    weak: &WeakReport,
    ledger: &FactLedger,
) -> Result<LemmaReport, BjError> {
    let mut rep = LemmaReport::default();
    rep.lines.push("unknot\tu=0\ts=0\tw=0".into());
    let le = |a: u32, b: Option<u32>| b.map_or(true, |b| a <= b);
    for (k, r) in records {
        let Some(u) = ledger.get(k) else {
            rep.lines.push(format!("{k}\tno ledger bounds"));
            continue;
        };
        let s = strong_bj_interval(&r.bj_set, ledger)?;
        let w = *weak
            .values
            .get(k)
            .ok_or_else(|| BjError::MissingBjRecord(k.clone()))?;
        rep.lines.push(format!("{k}\tu=[{},{}]\ts={s}\tw={w}", u.lower, u.upper));
        if !le(u.lower, s.hi) {
            rep.violations.push(format!("{k}: u >= {} exceeds u_BJ^s = {s}", u.lower));
        }
        if !le(s.lo, w.hi) {
            rep.violations.push(format!("{k}: u_BJ^s = {s} exceeds u_BJ^w = {w}"));
        }
        if u.upper < w.lo {
            rep.weak_failures
                .push(format!("{k}: u <= {} < {} <= u_BJ^w", u.upper, w.lo));
        }
        let pinned = (u.lower == u.upper).then_some(u.lower);
        for m in &r.bj_set.members {
            let mb = member_bounds(m, ledger)?;
            if let (Some(a), Some(b)) = (pinned, mb.value()) {
                if a.abs_diff(b) > 1 {
                    rep.violations
                        .push(format!("{k} (u={a}) is adjacent to {m} (u={b})"));
                }
            }
        }
    }
    Ok(rep)
}
