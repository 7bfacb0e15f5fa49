//! Reference diagrams: one reduced alternating diagram per prime alternating knot of a given
//! crossing number, and the diagrams obtained from them by crossing changes.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::codecs::DtCode;
use crate::diagram::Diagram;
use crate::error::{MoveError, ResourceLimit};
use crate::invariants::Fingerprint;
use crate::moves::flype_orbit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TabulateError {
    #[error("enumeration at {k} crossings exceeds the ceiling of {max}")]
    AboveCeiling { k: usize, max: usize },
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error(transparent)]
    Flype(#[from] MoveError),
    #[error("reference diagram {0} has jones span different from its crossing count")]
    SpanMismatch(DtCode),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Enumerated,
    Ingested,
}

/// Canonical codes of reference diagrams at one crossing number, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceSet {
    pub k: usize,
    pub codes: Vec<DtCode>,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug)]
pub struct TabulateLimits {
    pub max_k: usize,
    pub orbit_cap: usize,
}

impl Default for TabulateLimits {
    fn default() -> Self {
        Self {
            max_k: 10,
            orbit_cap: 10_000,
        }
    }
}

impl ReferenceSet {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn diagrams(&self) -> Vec<Diagram> {
        self.codes
            .iter()
            .map(|c| Diagram::from_dt(c).expect("reference codes are realizable"))
            .collect()
    }

    /// Reference set spanned by the alternating resolutions of the given `k`-crossing diagrams,
    /// one code per flype orbit. Used where full enumeration is out of reach.
    pub fn from_shadows<'a>(
        k: usize,
        diagrams: impl IntoIterator<Item = &'a Diagram>,
        orbit_cap: usize,
    ) -> Result<Self, TabulateError> {
        let mut seen = HashSet::new();
        let mut codes = Vec::new();
        for d in diagrams {
            if d.crossings() != k {
                return Err(TabulateError::Malformed {
                    line: 0,
                    reason: format!("diagram {} does not have {k} crossings", d.to_dt()),
                });
            }
            let alt = d.alternating_resolution();
            if seen.contains(&alt.canonical_dt()) {
                continue;
            }
            let orbit = flype_orbit(&alt, orbit_cap)?;
            codes.push(orbit.keys().next().expect("orbit contains its seed").clone());
            seen.extend(orbit.into_keys());
        }
        codes.sort();
        Ok(Self {
            k,
            codes,
            provenance: Provenance::Ingested,
        })
    }
}

impl fmt::Display for ReferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={} count={}", self.k, self.codes.len())?;
        for c in &self.codes {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ReferenceSet {
    type Err = TabulateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let malformed = |line, reason: &str| TabulateError::Malformed {
            line,
            reason: reason.into(),
        };
        let (hl, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
        let field = |name: &str| -> Result<usize, TabulateError> {
            header
                .split_whitespace()
                .find_map(|t| t.strip_prefix(name)?.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| malformed(hl, "expected `k=<int> count=<int>`"))
        };
        let (k, count) = (field("k")?, field("count")?);
        let mut codes = Vec::new();
        for (line, text) in lines {
            let code: DtCode = text.parse().map_err(|e| malformed(line, &format!("{e}")))?;
            if code.len() != k {
                return Err(malformed(line, "code length differs from k"));
            }
            if Diagram::from_dt(&code).is_err() {
                return Err(malformed(line, "code is not realizable"));
            }
            codes.push(code);
        }
        if codes.len() != count {
            return Err(malformed(hl, "count does not match the number of codes"));
        }
        codes.sort();
        Ok(Self {
            k,
            codes,
            provenance: Provenance::Ingested,
        })
    }
}

/// Diagrammatic primality: no two edges of the shadow cut off a part containing crossings on
/// both sides.
pub fn primality_check(d: &Diagram) -> bool {
    d.is_prime()
}

/// Positive codes of length `k` that are canonical, realizable, reduced and prime: every
/// reduced prime alternating `k`-crossing diagram once, up to mirror image.
pub fn alternating_diagram_codes(k: usize) -> Vec<DtCode> {
    // odd label 2i+1 may not pair with an adjacent even label (a kink)
    let allowed = |i: usize, e: i32| {
        let e = e as usize;
        e != 2 * i && e != 2 * i + 2 && !(i == 0 && e == 2 * k)
    };
    fn extend(
        k: usize,
        prefix: &mut Vec<i32>,
        used: &mut [bool],
        allowed: &dyn Fn(usize, i32) -> bool,
        out: &mut Vec<DtCode>,
    ) {
        let i = prefix.len();
        if i == k {
            let code = DtCode::new(prefix.clone()).expect("a pairing is a valid code");
            if code.canonical() == code {
                if let Ok(d) = Diagram::from_dt(&code) {
                    if d.is_reduced() && primality_check(&d) {
                        out.push(code);
                    }
                }
            }
            return;
        }
        for j in 0..k {
            let e = 2 * (j as i32 + 1);
            if used[j] || !allowed(i, e) {
                continue;
            }
            used[j] = true;
            prefix.push(e);
            extend(k, prefix, used, allowed, out);
            prefix.pop();
            used[j] = false;
        }
    }
    let firsts: Vec<i32> = (1..=k as i32).map(|j| 2 * j).filter(|&e| allowed(0, e)).collect();
    let mut out: Vec<DtCode> = firsts
        .into_par_iter()
        .flat_map_iter(|e| {
            let mut used = vec![false; k];
            used[e as usize / 2 - 1] = true;
            let mut prefix = vec![e];
            let mut out = Vec::new();
            extend(k, &mut prefix, &mut used, &allowed, &mut out);
            out
        })
        .collect();
    out.sort();
    out
}

/// One reduced prime alternating diagram per `k`-crossing alternating knot, up to mirror
/// image. Candidates are bucketed by fingerprint and each bucket is split into flype orbits;
/// the smallest code of each orbit is kept.
pub fn enumerate_reference_diagrams(
    k: usize,
    limits: TabulateLimits,
) -> Result<ReferenceSet, TabulateError> {
    if k > limits.max_k {
        return Err(TabulateError::AboveCeiling { k, max: limits.max_k });
    }
    if k == 0 {
        return Ok(ReferenceSet {
            k,
            codes: vec![DtCode::new(vec![]).expect("empty code")],
            provenance: Provenance::Enumerated,
        });
    }
    let cands = alternating_diagram_codes(k);
    let fingerprints = cands
        .par_iter()
        .map(|c| {
            let d = Diagram::from_dt(c).expect("candidates are realizable");
            Ok((Fingerprint::of(&d)?.insensitive(), c.clone()))
        })
        .collect::<Result<Vec<_>, ResourceLimit>>()?;
    let mut buckets: BTreeMap<Fingerprint, Vec<DtCode>> = BTreeMap::new();
    for (fp, c) in fingerprints {
        if fp.jones_span() != k as i64 {
            return Err(TabulateError::SpanMismatch(c));
        }
        buckets.entry(fp).or_default().push(c);
    }
    let reps = buckets
        .into_par_iter()
        .map(|(_, bucket)| {
            let mut seen: BTreeSet<DtCode> = BTreeSet::new();
            let mut reps = Vec::new();
            for c in bucket {
                if seen.contains(&c) {
                    continue;
                }
                let d = Diagram::from_dt(&c).expect("candidates are realizable");
                seen.extend(flype_orbit(&d, limits.orbit_cap)?.into_keys());
                reps.push(c);
            }
            Ok(reps)
        })
        .collect::<Result<Vec<_>, TabulateError>>()?;
    let mut codes: Vec<DtCode> = reps.into_iter().flatten().collect();
    codes.sort();
    Ok(ReferenceSet {
        k,
        codes,
        provenance: Provenance::Enumerated,
    })
}

/// A reference diagram with the crossings in `mask` changed.
#[derive(Clone, Debug)]
pub struct Variant {
    pub reference: usize,
    /// Bit `i` set means crossing `i` is changed; bit 0 is never set.
    pub mask: u64,
    pub diagram: Diagram,
}

/// All crossing-change variants of each reference diagram, leaving the first crossing alone,
/// in order of reference then mask.
pub fn crossing_change_closure(refs: &ReferenceSet) -> impl Iterator<Item = Variant> + '_ {
    refs.codes.iter().enumerate().flat_map(|(r, code)| {
        let base = Diagram::from_dt(code).expect("reference codes are realizable");
        let n = base.crossings();
        let variants = if n == 0 { 1u64 } else { 1u64 << (n - 1) };
        (0..variants).map(move |half| {
            let mask = half << 1;
            let mut even_over = base.even_over().to_vec();
            for (c, b) in even_over.iter_mut().enumerate() {
                if mask >> c & 1 == 1 {
                    *b = !*b;
                }
            }
            Variant {
                reference: r,
                mask,
                diagram: base.with_even_over(even_over),
            }
        })
    })
}
