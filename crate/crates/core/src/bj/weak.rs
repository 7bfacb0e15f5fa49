use std::collections::BTreeMap;
use std::fmt;

use super::record::BjRecord;
use super::BjError;
use crate::identify::{FactLedger, KnotId, KnotTable};

/// An interval of possible values; `hi: None` is unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bound {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Bound {
    pub fn exact(v: u32) -> Self {
        Self { lo: v, hi: Some(v) }
    }

    pub fn at_least(v: u32) -> Self {
        Self { lo: v, hi: None }
    }

    pub fn value(&self) -> Option<u32> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value(), self.hi) {
            (Some(v), _) => write!(f, "{v}"),
            (None, Some(h)) => write!(f, "[{},{h}]", self.lo),
            (None, None) => write!(f, "[{},inf)", self.lo),
        }
    }
}

/// An externally known lower bound on the weak number, from `u <= u_BJ^w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Override {
    pub lower: u32,
    pub citation: String,
}

/// Overrides for `names` from the ledger's lower bounds on the unknotting number.
pub fn overrides_from_ledger(
    ledger: &FactLedger,
    names: &[&str],
) -> Result<BTreeMap<String, Override>, BjError> {
    names
        .iter()
        .map(|&n| {
            let f = ledger.get(n).ok_or_else(|| BjError::MissingFact(n.into()))?;
            Ok((
                n.to_string(),
                Override {
                    lower: f.lower,
                    citation: f.citation.clone(),
                },
            ))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct WeakOptions {
    /// Give knots without a record or override, and unrecognized members, the bound
    /// `[1, inf)` of a nontrivial knot instead of failing.
    pub lenient: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pass {
    pub crossings: usize,
    pub level: u32,
    pub assigned: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct WeakReport {
    pub values: BTreeMap<String, Bound>,
    /// Passes of the run on lower bounds.
    pub passes: Vec<Pass>,
    pub notes: Vec<String>,
    /// Knots whose value is not one more than the minimum over their set.
    pub violations: Vec<String>,
}

impl fmt::Display for WeakReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.passes {
            writeln!(f, "pass n={} l={}: {}", p.crossings, p.level, p.assigned.join(" "))?;
        }
        for (k, v) in &self.values {
            writeln!(f, "{k}\t{v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note {n}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
enum Entry {
    Num(Bound),
    Sym(usize),
}

/// The pass procedure on one crossing number: at pass `l`, every knot whose set contains the
/// value `l` gets `l + 1`, all at once. `None` entries in `num` never match.
fn passes(t: &[Vec<Entry>], num: impl Fn(Bound) -> Option<u32>) -> Vec<(u32, Vec<usize>)> {
    let mut assigned: Vec<Option<u32>> = vec![None; t.len()];
    let ceiling = t
        .iter()
        .flatten()
        .filter_map(|e| match e {
            Entry::Num(b) => num(*b),
            Entry::Sym(_) => None,
        })
        .max()
        .unwrap_or(0)
        + t.len() as u32;
    let mut log = Vec::new();
    for l in 0..=ceiling {
        let hits: Vec<usize> = (0..t.len())
            .filter(|&i| assigned[i].is_none())
            .filter(|&i| {
                t[i].iter().any(|e| match e {
                    Entry::Num(b) => num(*b) == Some(l),
                    Entry::Sym(j) => assigned[*j] == Some(l),
                })
            })
            .collect();
        for &i in &hits {
            assigned[i] = Some(l + 1);
        }
        if !hits.is_empty() {
            log.push((l, hits));
        }
        if assigned.iter().all(Option::is_some) {
            break;
        }
    }
    log
}

fn min_plus_one(values: &[Bound]) -> Bound {
    Bound {
        lo: 1 + values.iter().map(|b| b.lo).min().unwrap_or(0),
        hi: values.iter().filter_map(|b| b.hi).min().map(|h| h + 1),
    }
}

/// Weak numbers of every recorded knot, by induction on crossing number and passes within
/// each crossing number. Values are intervals: knots known only through overrides or as
/// unrecognized members contribute their bounds, and the procedure is run once on lower and
/// once on upper ends.
pub fn weak_bj_numbers(
    records: &BTreeMap<String, BjRecord>,
    table: &KnotTable,
    overrides: &BTreeMap<String, Override>,
    options: WeakOptions,
) -> Result<WeakReport, BjError> {
    let mut report = WeakReport::default();
    for (k, o) in overrides.iter().filter(|(k, _)| !records.contains_key(*k)) {
        report.values.insert(k.clone(), Bound::at_least(o.lower));
        report
            .notes
            .push(format!("override {k} >= {} ({})", o.lower, o.citation));
    }
    let mut levels: BTreeMap<usize, Vec<&BjRecord>> = BTreeMap::new();
    for r in records.values() {
        levels.entry(r.crossing_number).or_default().push(r);
    }
    let crossing_number = |name: &str| {
        table
            .get(name)
            .map(|e| e.crossing_number)
            .ok_or_else(|| BjError::UnknownKnot(name.into()))
    };
    for (&n, level) in &levels {
        let index: BTreeMap<&str, usize> =
            level.iter().enumerate().map(|(i, r)| (r.knot.as_str(), i)).collect();
        let mut t: Vec<Vec<Entry>> = Vec::with_capacity(level.len());
        for r in level {
            let mut entries = Vec::new();
            for m in &r.bj_set.members {
                let e = match m {
                    KnotId::Unknot => Entry::Num(Bound::exact(0)),
                    KnotId::Named(x) => {
                        if let (Some(&j), true) = (index.get(x.as_str()), crossing_number(x)? == n) {
                            Entry::Sym(j)
                        } else if let Some(b) = report.values.get(x) {
                            Entry::Num(*b)
                        } else if options.lenient {
                            report.notes.push(format!(
                                "{}: no record for member {x}, taken as [1,inf)",
                                r.knot
                            ));
                            Entry::Num(Bound::at_least(1))
                        } else {
                            return Err(BjError::MissingBjRecord(x.clone()));
                        }
                    }
                    KnotId::Unrecognized | KnotId::Ambiguous(_) => {
                        report.notes.push(format!(
                            "{}: {} unidentified members taken as [1,inf)",
                            r.knot,
                            r.bj_set.unrecognized.max(1)
                        ));
                        Entry::Num(Bound::at_least(1))
                    }
                };
                entries.push(e);
            }
            t.push(entries);
        }
        let mut lo = vec![None; level.len()];
        for (l, hits) in passes(&t, |b| Some(b.lo)) {
            for &i in &hits {
                lo[i] = Some(l + 1);
            }
            report.passes.push(Pass {
                crossings: n,
                level: l,
                assigned: hits.iter().map(|&i| level[i].knot.clone()).collect(),
            });
        }
        let mut hi = vec![None; level.len()];
        for (l, hits) in passes(&t, |b| b.hi) {
            for &i in &hits {
                hi[i] = Some(l + 1);
            }
        }
        for (i, r) in level.iter().enumerate() {
            let lo = lo[i].ok_or_else(|| BjError::Unresolved(r.knot.clone()))?;
            let mut b = Bound { lo, hi: hi[i] };
            if let Some(o) = overrides.get(&r.knot) {
                if o.lower > b.lo {
                    report
                        .notes
                        .push(format!("override {} >= {} ({})", r.knot, o.lower, o.citation));
                    b.lo = o.lower;
                }
                if b.hi.is_some_and(|h| h < o.lower) {
                    report.violations.push(format!(
                        "{}: computed {b} is below the override {}",
                        r.knot, o.lower
                    ));
                }
            }
            report.values.insert(r.knot.clone(), b);
        }
        // post hoc: each value is one more than the minimum over its set
        for (i, r) in level.iter().enumerate() {
            let members: Vec<Bound> = t[i]
                .iter()
                .map(|e| match e {
                    Entry::Num(b) => *b,
                    Entry::Sym(j) => report.values[&level[*j].knot],
                })
                .collect();
            let want = min_plus_one(&members);
            let got = report.values[&r.knot];
            let overridden = overrides.get(&r.knot).is_some_and(|o| o.lower > want.lo);
            if got != want && !overridden {
                report
                    .violations
                    .push(format!("{}: value {got}, recursion gives {want}", r.knot));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_are_simultaneous() {
        // a: {0}, b: {a}, c: {b, 5}, d: {c, inf}
        let t = vec![
            vec![Entry::Num(Bound::exact(0))],
            vec![Entry::Sym(0)],
            vec![Entry::Sym(1), Entry::Num(Bound::exact(5))],
            vec![Entry::Sym(2), Entry::Num(Bound::at_least(1))],
        ];
        let log = passes(&t, |b| b.hi);
        assert_eq!(log, vec![(0, vec![0]), (1, vec![1]), (2, vec![2]), (3, vec![3])]);
        let lo = passes(&t, |b| Some(b.lo));
        assert_eq!(lo[..2], [(0, vec![0]), (1, vec![1, 3])]);
    }

    #[test]
    fn order_does_not_matter() {
        let t = vec![
            vec![Entry::Sym(1), Entry::Num(Bound::exact(3))],
            vec![Entry::Sym(2)],
            vec![Entry::Num(Bound::exact(1)), Entry::Sym(0)],
        ];
        // the same system with knots listed in reverse
        let r = vec![
            vec![Entry::Num(Bound::exact(1)), Entry::Sym(2)],
            vec![Entry::Sym(0)],
            vec![Entry::Sym(1), Entry::Num(Bound::exact(3))],
        ];
        let value = |log: Vec<(u32, Vec<usize>)>, n: usize| {
            let mut v = vec![0; n];
            for (l, hits) in log {
                hits.into_iter().for_each(|i| v[i] = l + 1);
            }
            v
        };
        let a = value(passes(&t, |b| b.hi), 3);
        let mut b = value(passes(&r, |b| b.hi), 3);
        b.reverse();
        assert_eq!(a, b);
        assert_eq!(a, vec![4, 3, 2]);
    }
}
