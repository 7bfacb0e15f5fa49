//! Textual knot codes: Dowker-Thistlethwaite codes, braid words and Gauss codes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{CodecError, ParseError};

fn parse_int_list(s: &str, open: char, close: char) -> Result<Vec<i64>, ParseError> {
    let t = s.trim();
    let inner = t
        .strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .unwrap_or(t);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| ParseError::new(s, format!("`{tok}` is not an integer")))
        })
        .collect()
}

/// A Dowker-Thistlethwaite code. Entry `i` (0-based) is the even label paired with
/// the odd label `2i+1`; it is negative when the even-labelled passage is the over-strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DtCode(Vec<i32>);

impl DtCode {
    pub fn new(entries: Vec<i32>) -> Result<Self, CodecError> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &a in &entries {
            let m = a.unsigned_abs() as usize;
            if m % 2 != 0 || m < 2 || m > 2 * n {
                return Err(CodecError::Malformed(format!(
                    "entry {a} is not an even label in 2..={}",
                    2 * n
                )));
            }
            if std::mem::replace(&mut seen[m / 2 - 1], true) {
                return Err(CodecError::Malformed(format!("label {m} repeated")));
            }
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position of the even-labelled visit of crossing `i` (labels start at 1, positions at 0).
    pub(crate) fn even_position(&self, i: usize) -> usize {
        self.0[i].unsigned_abs() as usize - 1
    }

    /// Flips the sign of entry `i` (0-based).
    pub fn flip(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] = -e[i];
        Self(e)
    }

    pub fn is_alternating(&self) -> bool {
        self.0.iter().all(|&a| a > 0) || self.0.iter().all(|&a| a < 0)
    }

    /// Minimum of the codes read from all `4n` base points and directions, compared entrywise
    /// by magnitude with the positive entry first on ties.
    pub fn canonical(&self) -> Self {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let m = 2 * n;
        let mut over = vec![false; m];
        let mut pos = vec![[0usize; 2]; n];
        for (i, &a) in self.0.iter().enumerate() {
            let q = self.even_position(i);
            pos[i] = [2 * i, q];
            over[q] = a < 0;
            over[2 * i] = a > 0;
        }
        let mut best: Option<Vec<i32>> = None;
        let mut cand = vec![0i32; n];
        for s in 0..m {
            for rev in [false, true] {
                let map = |p: usize| if rev { (s + m - p) % m } else { (p + m - s) % m };
                for c in 0..n {
                    let (a, b) = (map(pos[c][0]), map(pos[c][1]));
                    let (odd_pos, even_pos, even_old) =
                        if a % 2 == 0 { (a, b, pos[c][1]) } else { (b, a, pos[c][0]) };
                    let lab = (even_pos + 1) as i32;
                    cand[odd_pos / 2] = if over[even_old] { -lab } else { lab };
                }
                if best.as_ref().map_or(true, |b| dt_cmp(&cand, b) == Ordering::Less) {
                    best = Some(cand.clone());
                }
            }
        }
        Self(best.expect("n > 0"))
    }
}

/// Order on codes used for canonical forms: entrywise by magnitude, positive before negative.
pub fn dt_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let key = |x: &i32| (x.unsigned_abs(), *x < 0);
    a.iter().map(key).cmp(b.iter().map(key))
}

impl Ord for DtCode {
    /// Shorter codes first, then `dt_cmp`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| dt_cmp(&self.0, &other.0))
    }
}

impl PartialOrd for DtCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for DtCode {
    type Err = CodecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        // 13-crossing tables wrap the code in parentheses: [(a, b, ...)]
        let t = t.replace(['(', ')'], "");
        let vals = parse_int_list(&t, '[', ']')?;
        let entries = vals
            .into_iter()
            .map(|v| i32::try_from(v).map_err(|_| ParseError::new(s, "entry out of range")))
            .collect::<Result<Vec<_>, _>>()?;
        DtCode::new(entries)
    }
}

/// A braid word on a fixed number of strands. Letter `k > 0` is the generator crossing
/// strand positions `k` and `k+1` positively; `-k` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self, CodecError> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() >= strands {
                return Err(CodecError::Malformed(format!(
                    "letter {l} invalid on {strands} strands"
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Uses the smallest strand count that accommodates every letter.
    pub fn with_min_strands(letters: Vec<i32>) -> Result<Self, CodecError> {
        let s = letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0) + 1;
        Self::new(s, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Letter positions at which two words differ; `None` if lengths or strand
    /// counts differ.
    pub fn letter_differences(&self, other: &Self) -> Option<Vec<usize>> {
        if self.strands != other.strands || self.letters.len() != other.letters.len() {
            return None;
        }
        Some(
            self.letters
                .iter()
                .zip(&other.letters)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// Parses `{l1,...}` together with a strand count, or `s:{l1,...}`.
    pub fn parse_with_strands(s: &str, strands: Option<u32>) -> Result<Self, CodecError> {
        let (prefix, word) = match s.split_once(':') {
            Some((p, w)) => (Some(p.trim()), w),
            None => (None, s),
        };
        let letters = parse_int_list(word, '{', '}')?
            .into_iter()
            .map(|v| i32::try_from(v).map_err(|_| ParseError::new(s, "letter out of range")))
            .collect::<Result<Vec<_>, _>>()?;
        let strands = match (prefix, strands) {
            (Some(p), _) => Some(
                p.parse::<u32>()
                    .map_err(|_| ParseError::new(s, "bad strand count"))?,
            ),
            (None, st) => st,
        };
        match strands {
            Some(st) => Self::new(st, letters),
            None => Self::with_min_strands(letters),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{{", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for BraidWord {
    type Err = CodecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with_strands(s, None)
    }
}

/// One passage through a crossing in a Gauss code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussVisit {
    /// 1-based crossing label.
    pub crossing: u32,
    pub over: bool,
}

/// A Gauss code: crossing labels in traversal order, positive for over and negative for under.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode(Vec<GaussVisit>);

impl GaussCode {
    pub fn new(visits: Vec<GaussVisit>) -> Result<Self, CodecError> {
        let n = visits.len() / 2;
        let mut count = vec![(0u8, 0u8); n];
        for v in &visits {
            let c = v.crossing as usize;
            if c == 0 || c > n || visits.len() % 2 != 0 {
                return Err(CodecError::Malformed(format!("crossing label {c} out of range")));
            }
            if v.over {
                count[c - 1].0 += 1;
            } else {
                count[c - 1].1 += 1;
            }
        }
        if count.iter().any(|&(o, u)| o != 1 || u != 1) {
            return Err(CodecError::Malformed(
                "every crossing needs one over and one under visit".into(),
            ));
        }
        Ok(Self(visits))
    }

    pub fn visits(&self) -> &[GaussVisit] {
        &self.0
    }

    pub fn crossings(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let c = v.crossing as i64;
            write!(f, "{}", if v.over { c } else { -c })?;
        }
        f.write_str("]")
    }
}

impl FromStr for GaussCode {
    type Err = CodecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let visits = parse_int_list(s, '[', ']')?
            .into_iter()
            .map(|v| {
                if v == 0 {
                    return Err(ParseError::new(s, "zero label").into());
                }
                let crossing = u32::try_from(v.unsigned_abs())
                    .map_err(|_| CodecError::from(ParseError::new(s, "label out of range")))?;
                Ok(GaussVisit {
                    crossing,
                    over: v > 0,
                })
            })
            .collect::<Result<Vec<_>, CodecError>>()?;
        Self::new(visits)
    }
}
