use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::IdentifyError;
use crate::codecs::DtCode;
use crate::diagram::Diagram;
use crate::invariants::Fingerprint;

#[derive(Clone, Debug)]
pub struct KnotEntry {
    pub name: String,
    pub code: DtCode,
    pub diagram: Diagram,
    /// Chirality-sensitive fingerprint of `diagram`.
    pub fingerprint: Fingerprint,
    pub crossing_number: usize,
    /// Names of the prime summands, empty for prime knots.
    pub summands: Vec<String>,
}

impl KnotEntry {
    pub fn is_composite(&self) -> bool {
        !self.summands.is_empty()
    }
}

/// Named knots indexed by chirality-insensitive fingerprint.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    entries: Vec<KnotEntry>,
    by_name: HashMap<String, usize>,
    by_fingerprint: HashMap<Fingerprint, Vec<usize>>,
}

impl KnotTable {
    /// Parses `name<TAB>dt_code` lines; `#` starts a comment line.
    pub fn ingest(text: &str) -> Result<Self, IdentifyError> {
        let mut parsed = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: String| IdentifyError::MalformedLine { line: k + 1, reason };
            let (name, code) = line
                .split_once('\t')
                .ok_or_else(|| malformed("expected name<TAB>code".into()))?;
            let code: DtCode = code.trim().parse().map_err(|e| malformed(format!("{e}")))?;
            parsed.push((k + 1, name.trim().to_string(), code));
        }
        let entries = parsed
            .into_par_iter()
            .map(|(line, name, code)| {
                let diagram = Diagram::from_dt(&code)
                    .map_err(|_| IdentifyError::NonRealizableCode { line })?;
                let fingerprint = Fingerprint::of(&diagram)
                    .map_err(|e| IdentifyError::MalformedLine { line, reason: e.to_string() })?;
                Ok(KnotEntry {
                    crossing_number: code.len(),
                    name,
                    code,
                    diagram,
                    fingerprint,
                    summands: Vec::new(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut t = Self::default();
        for e in entries {
            t.push(e);
        }
        Ok(t)
    }

    fn push(&mut self, e: KnotEntry) {
        let i = self.entries.len();
        self.by_name.insert(e.name.clone(), i);
        self.by_fingerprint
            .entry(e.fingerprint.insensitive())
            .or_default()
            .push(i);
        self.entries.push(e);
    }

    /// Adds two-summand composites of prime entries up to `max_crossings` in total, named
    /// `A#B` for the sum of the tabulated diagrams and `A#B*` when the second summand is
    /// mirrored. The mirrored version is skipped when it has the same fingerprint.
    pub fn with_composites(mut self, max_crossings: usize) -> Self {
        let primes: Vec<KnotEntry> = self
            .entries
            .iter()
            .filter(|e| !e.is_composite() && e.crossing_number <= max_crossings)
            .cloned()
            .collect();
        let mut pairs = Vec::new();
        for (i, a) in primes.iter().enumerate() {
            for b in &primes[i..] {
                if a.crossing_number + b.crossing_number <= max_crossings {
                    pairs.push((a, b));
                }
            }
        }
        let built: Vec<Vec<KnotEntry>> = pairs
            .par_iter()
            .map(|(a, b)| {
                let mut out = Vec::new();
                let mut seen = Vec::new();
                for mirrored in [false, true] {
                    let second = if mirrored { b.diagram.mirror() } else { b.diagram.clone() };
                    let diagram = a.diagram.connected_sum(&second);
                    let fingerprint = Fingerprint::of(&diagram).expect("small composites");
                    let key = fingerprint.insensitive();
                    if seen.contains(&key) {
                        continue;
                    }
                    seen.push(key);
                    let star = if mirrored { "*" } else { "" };
                    out.push(KnotEntry {
                        name: format!("{}#{}{star}", a.name, b.name),
                        code: diagram.canonical_dt(),
                        crossing_number: a.crossing_number + b.crossing_number,
                        summands: vec![a.name.clone(), format!("{}{star}", b.name)],
                        diagram,
                        fingerprint,
                    });
                }
                out
            })
            .collect();
        for e in built.into_iter().flatten() {
            self.push(e);
        }
        self
    }

    /// The bundled table: prime knots through ten crossings, the larger knots needed for the
    /// bundled fixtures, and composites through ten crossings.
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            KnotTable::ingest(include_str!("../../fixtures/knots.tsv"))
                .expect("bundled table parses")
                .with_composites(10)
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&KnotEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    /// Entries whose fingerprint matches `fp` up to mirror image.
    pub fn lookup(&self, fp: &Fingerprint) -> Vec<&KnotEntry> {
        self.by_fingerprint
            .get(&fp.insensitive())
            .map(|v| v.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }

    /// Groups of names that share a fingerprint up to mirror image.
    pub fn collisions(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .by_fingerprint
            .values()
            .filter(|v| v.len() > 1)
            .map(|v| v.iter().map(|&i| self.entries[i].name.clone()).collect())
            .collect();
        out.sort();
        out
    }
}
