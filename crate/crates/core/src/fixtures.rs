//! Bundled data: minimal-diagram families, braid words, named descents and the counts of
//! prime alternating knots.

use crate::codecs::{BraidWord, DtCode};
use crate::diagram::Diagram;

/// Families of minimal diagrams shipped with the crate, by knot name.
pub const FAMILIES: [&str; 5] = ["K11n21", "K12n288", "K12n491", "K12n501", "K13n3370"];

fn family_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "K11n21" => include_str!("../fixtures/families/K11n21.dt"),
        "K12n288" => include_str!("../fixtures/families/K12n288.dt"),
        "K12n491" => include_str!("../fixtures/families/K12n491.dt"),
        "K12n501" => include_str!("../fixtures/families/K12n501.dt"),
        "K13n3370" => include_str!("../fixtures/families/K13n3370.dt"),
        _ => return None,
    })
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Codes of a bundled family in file order.
pub fn family_codes(name: &str) -> Option<Vec<DtCode>> {
    family_text(name).map(|t| {
        data_lines(t)
            .map(|l| l.parse().expect("bundled codes parse"))
            .collect()
    })
}

pub fn family(name: &str) -> Option<Vec<Diagram>> {
    family_codes(name).map(|cs| {
        cs.iter()
            .map(|c| Diagram::from_dt(c).expect("bundled codes are realizable"))
            .collect()
    })
}

#[derive(Clone, Debug)]
pub struct NamedBraid {
    pub name: String,
    pub word: BraidWord,
}

pub fn braids() -> Vec<NamedBraid> {
    data_lines(include_str!("../fixtures/braids.tsv"))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let strands = f[1].parse().expect("strand count");
            NamedBraid {
                name: f[0].to_string(),
                word: BraidWord::parse_with_strands(f[2], Some(strands)).expect("bundled braid"),
            }
        })
        .collect()
}

pub fn braid(name: &str) -> Option<BraidWord> {
    braids().into_iter().find(|b| b.name == name).map(|b| b.word)
}

/// The pairs of braids that differ in the sign of one letter.
pub const ADJACENT_BRAIDS: [(&str, &str); 3] = [
    ("K13n1669", "K14n23648"),
    ("K13n1587", "10_113"),
    ("K14a2539", "K14n1045"),
];

/// A single crossing change on a named diagram, with the knot it is known to produce.
#[derive(Clone, Debug)]
pub struct Descent {
    pub knot: String,
    pub code: DtCode,
    /// 1-based DT entry whose sign is flipped.
    pub entry: usize,
    pub expected: String,
}

pub fn descents() -> Vec<Descent> {
    data_lines(include_str!("../fixtures/descents.tsv"))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            Descent {
                knot: f[0].to_string(),
                code: f[1].parse().expect("bundled code"),
                entry: f[2].parse().expect("entry index"),
                expected: f[3].to_string(),
            }
        })
        .collect()
}

/// Number of prime alternating knots up to mirror image, by crossing number.
pub fn alternating_counts() -> Vec<(usize, usize)> {
    data_lines(include_str!("../fixtures/alternating_counts.tsv"))
        .map(|l| {
            let (a, b) = l.split_once('\t').expect("two columns");
            (a.parse().expect("crossings"), b.parse().expect("count"))
        })
        .collect()
}

/// Every bundled data file with its path relative to the crate, for digests.
pub fn bundled_files() -> Vec<(&'static str, &'static str)> {
    vec![
        ("fixtures/knots.tsv", include_str!("../fixtures/knots.tsv")),
        ("fixtures/facts.tsv", include_str!("../fixtures/facts.tsv")),
        ("fixtures/braids.tsv", include_str!("../fixtures/braids.tsv")),
        ("fixtures/descents.tsv", include_str!("../fixtures/descents.tsv")),
        ("fixtures/alternating_counts.tsv", include_str!("../fixtures/alternating_counts.tsv")),
        ("fixtures/families/K11n21.dt", include_str!("../fixtures/families/K11n21.dt")),
        ("fixtures/families/K12n288.dt", include_str!("../fixtures/families/K12n288.dt")),
        ("fixtures/families/K12n491.dt", include_str!("../fixtures/families/K12n491.dt")),
        ("fixtures/families/K12n501.dt", include_str!("../fixtures/families/K12n501.dt")),
        ("fixtures/families/K13n3370.dt", include_str!("../fixtures/families/K13n3370.dt")),
    ]
}
