use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::table::KnotTable;
use super::IdentifyError;

/// Bounds on the unknotting number of one knot, with their source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub lower: u32,
    pub upper: u32,
    pub citation: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactLedger {
    facts: BTreeMap<String, Fact>,
}

impl FactLedger {
    /// Parses `name lower upper citation` lines (tab or space separated, the citation may
    /// contain spaces); `#` starts a comment line.
    pub fn ingest(text: &str) -> Result<Self, IdentifyError> {
        let mut facts = BTreeMap::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: &str| IdentifyError::MalformedLine {
                line: k + 1,
                reason: reason.into(),
            };
            let mut rest = line;
            let mut field = || {
                let t = rest.trim_start();
                let end = t.find(char::is_whitespace).unwrap_or(t.len());
                rest = &t[end..];
                &t[..end]
            };
            let name = field().to_string();
            let lower: u32 = field().parse().map_err(|_| malformed("bad lower bound"))?;
            let upper: u32 = field().parse().map_err(|_| malformed("bad upper bound"))?;
            let citation = rest.trim().to_string();
            if name.is_empty() || citation.is_empty() {
                return Err(malformed("expected name, lower, upper and citation"));
            }
            if lower > upper {
                return Err(IdentifyError::InvertedBounds { line: k + 1, name });
            }
            facts.insert(name, Fact { lower, upper, citation });
        }
        Ok(Self { facts })
    }

    /// Adds bounds for the composite entries of `table`: at least 2 for any composite knot,
    /// at least half the absolute signature, and at most the sum of the summands' upper bounds.
    pub fn with_composites(mut self, table: &KnotTable) -> Self {
        for e in table.entries().iter().filter(|e| e.is_composite()) {
            let uppers: Option<u32> = e
                .summands
                .iter()
                .map(|s| self.facts.get(s.trim_end_matches('*')).map(|f| f.upper))
                .sum();
            let Some(upper) = uppers else { continue };
            let lower = 2.max(e.fingerprint.signature.unsigned_abs() as u32 / 2);
            self.facts.insert(
                e.name.clone(),
                Fact {
                    lower: lower.min(upper),
                    upper,
                    citation: "composite: scharlemann85 lower bound, summand sum upper bound"
                        .into(),
                },
            );
        }
        self
    }

    pub fn bundled() -> &'static FactLedger {
        static LEDGER: OnceLock<FactLedger> = OnceLock::new();
        LEDGER.get_or_init(|| {
            FactLedger::ingest(include_str!("../../fixtures/facts.tsv"))
                .expect("bundled ledger parses")
                .with_composites(KnotTable::bundled())
        })
    }

    pub fn get(&self, name: &str) -> Option<&Fact> {
        self.facts.get(name)
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Fact)> {
        self.facts.iter().map(|(k, v)| (k.as_str(), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let l = FactLedger::ingest("K11n21 1 1 knotinfo\n7_4\t2\t2\tlickorish\n").unwrap();
        assert_eq!(l.get("K11n21").unwrap().upper, 1);
        assert_eq!(l.get("7_4").unwrap().citation, "lickorish");
        assert!(FactLedger::ingest("").unwrap().is_empty());
        assert!(matches!(
            FactLedger::ingest("x 3 2 y"),
            Err(IdentifyError::InvertedBounds { .. })
        ));
        assert!(FactLedger::ingest("x 1").is_err());
    }
}
