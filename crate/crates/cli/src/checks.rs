//! The verification harness: one check per claim, each producing a deterministic report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use knotadj::bj::{
    adjacency_upper_bound, bj_set_of, check_lemma_chain, minimal_diagrams_of,
    overrides_from_ledger, small_scale_records, strong_bj_interval, weak_bj_numbers, BjError,
    BjRecord, Bound, GapPolicy, WeakOptions, WeakReport,
};
use knotadj::fixtures;
use knotadj::identify::{identify, FactLedger, KnotId, KnotTable};
use knotadj::invariants::{alexander_polynomial, determinant, jones_polynomial, signature, Fingerprint};
use knotadj::moves::{
    apply_flype, apply_move, detect_unknot, enumerate_flypes, enumerate_moves,
    search_unknot, transport_crossing_change, Growth, UnknotBudget, UnknotResult,
};
use knotadj::tabulate::{
    crossing_change_closure, enumerate_reference_diagrams, ReferenceSet, TabulateLimits,
};
use knotadj::Diagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Knots adjacent to K13n3370 whose unknotting number is known to be at least two.
pub const LOWER_BOUNDED: [&str; 10] = [
    "7_4", "8_8", "10_34", "K11a211", "K11n91", "K11n132", "K12a1118", "K12n333", "K12n469",
    "K12n512",
];

pub const TWELVE: [&str; 3] = ["K12n288", "K12n491", "K12n501"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// A resource limit or an unidentified diagram stopped the check.
    Gap,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Gap => "GAP",
        })
    }
}

/// Findings of one check. A check fails if any claim failed and has a gap if it could not
/// finish.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub failures: Vec<String>,
    pub gaps: Vec<String>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn ensure(&mut self, ok: bool, claim: impl Into<String>) {
        let claim = claim.into();
        if ok {
            self.lines.push(format!("ok: {claim}"));
        } else {
            self.failures.push(claim);
        }
    }

    fn error(&mut self, e: BjError) {
        match e {
            BjError::IdentificationGap { .. } | BjError::Resource(_) => self.gaps.push(e.to_string()),
            _ => self.failures.push(e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub number: u8,
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub report: Report,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    /// One line per check; elapsed time is left out so reports are reproducible.
    pub fn summary(&self) -> String {
        format!("criterion {:>2} {:<24} {}  {}", self.number, self.id, self.status, self.title)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for l in &self.report.lines {
            writeln!(f, "    {l}")?;
        }
        for l in &self.report.failures {
            writeln!(f, "    FAILED: {l}")?;
        }
        for l in &self.report.gaps {
            writeln!(f, "    GAP: {l}")?;
        }
        Ok(())
    }
}

/// Budgets and results shared between checks.
pub struct Context {
    pub budget: UnknotBudget,
    pub limits: TabulateLimits,
    pub table: &'static KnotTable,
    pub ledger: &'static FactLedger,
    small: OnceLock<Result<BTreeMap<String, BjRecord>, BjError>>,
    families: OnceLock<Result<BTreeMap<String, BjRecord>, BjError>>,
}

impl Default for Context {
    fn default() -> Self {
        Self::new(UnknotBudget::default(), TabulateLimits::default())
    }
}

impl Context {
    pub fn new(budget: UnknotBudget, limits: TabulateLimits) -> Self {
        Self {
            budget,
            limits,
            table: KnotTable::bundled(),
            ledger: FactLedger::bundled(),
            small: OnceLock::new(),
            families: OnceLock::new(),
        }
    }

    /// Records for every knot through eight crossings.
    pub fn small_records(&self) -> Result<&BTreeMap<String, BjRecord>, BjError> {
        self.small
            .get_or_init(|| small_scale_records(8, self.table, self.budget, self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Records for the three 12-crossing knots and K13n3370, from reference diagrams of the
    /// shadows of their bundled minimal diagrams.
    pub fn family_records(&self) -> Result<&BTreeMap<String, BjRecord>, BjError> {
        self.families
            .get_or_init(|| {
                let mut out = BTreeMap::new();
                for name in TWELVE.into_iter().chain(["K13n3370"]) {
                    out.insert(name.to_string(), family_record(name, self)?);
                }
                Ok(out)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn weak_numbers(&self) -> Result<WeakReport, BjError> {
        let mut records = self.small_records()?.clone();
        records.extend(self.family_records()?.clone());
        let overrides = overrides_from_ledger(self.ledger, &LOWER_BOUNDED)?;
        weak_bj_numbers(&records, self.table, &overrides, WeakOptions { lenient: true })
    }
}

pub fn family_record(name: &str, cx: &Context) -> Result<BjRecord, BjError> {
    let fam = fixtures::family(name).ok_or_else(|| BjError::UnknownKnot(name.into()))?;
    let k = fam[0].crossings();
    let refs = ReferenceSet::from_shadows(k, &fam, cx.limits.orbit_cap)?;
    let diagrams = minimal_diagrams_of(name, &refs, cx.table, cx.budget)?;
    let bj_set = bj_set_of(&diagrams, cx.table, cx.budget, GapPolicy::Mark)?;
    Ok(BjRecord {
        knot: name.into(),
        crossing_number: k,
        notes: vec![format!(
            "reference diagrams from the shadows of {} bundled diagrams: {}",
            fam.len(),
            refs.len()
        )],
        minimal_diagrams: diagrams,
        bj_set,
    })
}

type CheckFn = fn(&Context, &mut Report) -> Result<(), BjError>;

pub struct Check {
    pub number: u8,
    pub id: &'static str,
    pub title: &'static str,
    pub limit: Duration,
    run: CheckFn,
}

impl Check {
    pub fn run(&self, cx: &Context) -> Outcome {
        let start = Instant::now();
        let mut report = Report::default();
        if let Err(e) = (self.run)(cx, &mut report) {
            report.error(e);
        }
        let elapsed = start.elapsed();
        if elapsed > self.limit {
            report.failures.push(format!("exceeded the time limit of {:?}", self.limit));
        }
        let status = if !report.failures.is_empty() {
            Status::Fail
        } else if !report.gaps.is_empty() {
            Status::Gap
        } else {
            Status::Pass
        };
        Outcome {
            number: self.number,
            id: self.id,
            title: self.title,
            status,
            report,
            elapsed,
            limit: self.limit,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn all_checks() -> Vec<Check> {
    vec![
        Check { number: 1, id: "fixture-integrity", title: "K13n3370 code against its braid closure", limit: secs(5), run: fixture_integrity },
        Check { number: 2, id: "counterexample-adjacency", title: "one change takes K13n3370 to K11n21", limit: secs(5), run: counterexample_adjacency },
        Check { number: 3, id: "k11n21-unknotting", title: "every minimal diagram of K11n21 unknots in one change", limit: secs(120), run: k11n21_unknotting },
        Check { number: 4, id: "k13n3370-bj-set", title: "thirteen knots adjacent to K13n3370", limit: secs(600), run: k13n3370_bj_set },
        Check { number: 5, id: "no-unknot", title: "no change on the 12-crossing diagrams unknots", limit: secs(600), run: no_unknot },
        Check { number: 6, id: "named-descents", title: "descents to 3_1, 6_3 and 8_13", limit: secs(300), run: named_descents },
        Check { number: 7, id: "weak-bj-number", title: "weak and strong numbers of K13n3370", limit: secs(900), run: weak_bj_number },
        Check { number: 8, id: "tabulation", title: "reference diagram counts through nine crossings", limit: secs(1800), run: tabulation },
        Check { number: 9, id: "property-suites", title: "randomized and exhaustive property checks", limit: secs(1800), run: property_suites },
        Check { number: 10, id: "braid-adjacency", title: "adjacent braid pairs", limit: secs(60), run: braid_adjacency },
    ]
}

/// Runs the selected checks (all when `only` is empty) in order.
pub fn run_checks(cx: &Context, only: &[String]) -> Result<Vec<Outcome>, String> {
    let checks = all_checks();
    for o in only {
        if !checks.iter().any(|c| c.id == o || c.number.to_string() == *o) {
            return Err(format!("unknown check `{o}`"));
        }
    }
    Ok(checks
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| c.id == o || c.number.to_string() == *o))
        .map(|c| c.run(cx))
        .collect())
}

fn insensitive(d: &Diagram) -> Result<Fingerprint, BjError> {
    Ok(Fingerprint::of(d)?.insensitive())
}

fn family(name: &str) -> Vec<Diagram> {
    fixtures::family(name).expect("bundled family")
}

fn descent(knot: &str) -> fixtures::Descent {
    fixtures::descents()
        .into_iter()
        .find(|d| d.knot == knot)
        .expect("bundled descent")
}

fn fixture_integrity(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let code = descent("K13n3370").code;
    let d = match Diagram::from_dt(&code) {
        Ok(d) => d,
        Err(e) => {
            r.failures.push(format!("{code}: {e}"));
            return Ok(());
        }
    };
    r.ensure(d.is_reduced(), format!("{code} is realizable and reduced, {} crossings", d.crossings()));
    let word = fixtures::braid("K13n3370").expect("bundled braid");
    let b = Diagram::from_braid(&word).map_err(|e| BjError::UnknownKnot(e.to_string()))?;
    let (fd, fb) = (insensitive(&d)?, insensitive(&b)?);
    r.line(format!("braid {word} closes to a {}-crossing diagram", b.crossings()));
    r.line(format!("fingerprint {fd}"));
    r.ensure(fd == fb, "fingerprints agree up to mirror image");
    let id = identify(&d, cx.table, cx.budget)?.id;
    r.ensure(id == KnotId::Named("K13n3370".into()), format!("the code identifies as {id}"));
    Ok(())
}

fn counterexample_adjacency(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let s = descent("K13n3370");
    let d = Diagram::from_dt(&s.code.flip(s.entry - 1)).map_err(|e| BjError::UnknownKnot(e.to_string()))?;
    let id = identify(&d, cx.table, cx.budget)?.id;
    r.ensure(id.name() == Some(s.expected.as_str()), format!("flipping entry {} gives {id}", s.entry));
    let fact = cx
        .ledger
        .get(&s.expected)
        .ok_or_else(|| BjError::MissingFact(s.expected.clone()))?;
    r.ensure(fact.upper == 1, format!("u({}) = {} ({})", s.expected, fact.upper, fact.citation));
    let bound = adjacency_upper_bound(fact);
    r.ensure(bound == 2, format!("u(K13n3370) <= {bound}"));
    Ok(())
}

fn mutually_equal(ds: &[Diagram], r: &mut Report, name: &str) -> Result<(), BjError> {
    let fps = ds.par_iter().map(insensitive).collect::<Result<BTreeSet<_>, _>>()?;
    r.ensure(fps.len() == 1, format!("the {} diagrams of {name} share one fingerprint", ds.len()));
    Ok(())
}

fn k11n21_unknotting(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let fam = family("K11n21");
    r.ensure(fam.len() == 23, format!("{} bundled diagrams", fam.len()));
    mutually_equal(&fam, r, "K11n21")?;
    let results: Vec<Vec<UnknotResult>> = fam
        .par_iter()
        .map(|d| (0..d.crossings()).map(|c| detect_unknot(&d.change_crossing(c), cx.budget)).collect())
        .collect();
    let mut certified = 0;
    let mut undetermined = 0;
    let mut detections = 0;
    for (i, (d, res)) in fam.iter().zip(&results).enumerate() {
        let mut here = 0;
        for (c, x) in res.iter().enumerate() {
            detections += 1;
            match x {
                UnknotResult::Unknot(cert) if cert.verify(&d.change_crossing(c)) => here += 1,
                UnknotResult::Unknot(_) => r.failures.push(format!("diagram {}: certificate does not replay", i + 1)),
                UnknotResult::Undetermined => undetermined += 1,
                UnknotResult::NotUnknot(_) => {}
            }
        }
        if here == 0 {
            r.failures.push(format!("diagram {} ({}) has no certified unknotting change", i + 1, d.to_dt()));
        }
        certified += here;
    }
    r.line(format!("{detections} detections, {certified} certified unknots, {undetermined} undetermined"));
    r.ensure(detections == 253, "253 single changes examined");
    Ok(())
}

fn k13n3370_bj_set(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let fam = family("K13n3370");
    r.ensure(fam.len() == 24, format!("{} bundled diagrams", fam.len()));
    mutually_equal(&fam, r, "K13n3370")?;
    let neighbours: Vec<Diagram> = fam
        .iter()
        .flat_map(|d| (0..d.crossings()).map(move |c| d.change_crossing(c)))
        .collect();
    r.ensure(neighbours.len() == 312, format!("{} neighbours", neighbours.len()));
    let ids = neighbours
        .par_iter()
        .map(|d| Ok((insensitive(d)?, identify(d, cx.table, cx.budget)?.id)))
        .collect::<Result<Vec<_>, BjError>>()?;
    let by_fp: BTreeMap<&Fingerprint, &KnotId> = ids.iter().map(|(f, i)| (f, i)).collect();
    r.ensure(by_fp.len() == 13, format!("{} distinct fingerprints", by_fp.len()));
    let expected: BTreeSet<&str> = LOWER_BOUNDED.into_iter().chain(TWELVE).collect();
    let mut named = BTreeSet::new();
    for id in by_fp.values() {
        match id.name() {
            Some(n) => {
                named.insert(n);
            }
            None => r.line(format!("member without a table entry: {id} (fingerprint level)")),
        }
    }
    r.line(format!("members: {}", named.iter().copied().collect::<Vec<_>>().join(" ")));
    r.ensure(named == expected, "the members are exactly the expected thirteen knots");
    Ok(())
}

fn no_unknot(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let mut diagrams = Vec::new();
    for name in TWELVE {
        let fam = family(name);
        mutually_equal(&fam, r, name)?;
        diagrams.extend(fam);
    }
    r.ensure(diagrams.len() == 51, format!("{} diagrams", diagrams.len()));
    let results: Vec<UnknotResult> = diagrams
        .par_iter()
        .flat_map_iter(|d| (0..d.crossings()).map(move |c| detect_unknot(&d.change_crossing(c), cx.budget)))
        .collect();
    let not = results.iter().filter(|x| matches!(x, UnknotResult::NotUnknot(_))).count();
    let undetermined = results.iter().filter(|x| matches!(x, UnknotResult::Undetermined)).count();
    r.ensure(results.len() == 612, format!("{} neighbours", results.len()));
    r.ensure(not == results.len(), format!("{not} carry a nontrivial invariant"));
    if undetermined > 0 {
        r.gaps.push(format!("{undetermined} undetermined"));
    }
    Ok(())
}

fn named_descents(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    for name in TWELVE {
        let s = descent(name);
        let d = Diagram::from_dt(&s.code.flip(s.entry - 1)).map_err(|e| BjError::UnknownKnot(e.to_string()))?;
        let id = identify(&d, cx.table, cx.budget)?.id;
        r.ensure(id.name() == Some(s.expected.as_str()), format!("{name} entry {} gives {id}", s.entry));
    }
    let w = weak_bj_numbers(cx.small_records()?, cx.table, &BTreeMap::new(), WeakOptions::default())?;
    r.ensure(w.violations.is_empty(), "weak numbers through eight crossings satisfy the recursion");
    for k in ["3_1", "6_3", "8_13"] {
        let v = w.values.get(k).copied();
        r.ensure(v == Some(Bound::exact(1)), format!("u_BJ^w({k}) = {}", v.map_or("?".into(), |b| b.to_string())));
    }
    Ok(())
}

fn weak_bj_number(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let fams = cx.family_records()?;
    for (name, want) in [("K12n288", 24), ("K12n491", 9), ("K12n501", 18), ("K13n3370", 24)] {
        let got = fams[name].minimal_diagrams.len();
        r.ensure(got == want, format!("{name}: {got} minimal diagrams from reference variants"));
    }
    let k13 = &fams["K13n3370"].bj_set;
    r.ensure(
        TWELVE.iter().all(|n| k13.members.contains(&KnotId::Named(n.to_string()))),
        "K12n288, K12n491 and K12n501 are adjacent to K13n3370",
    );
    for n in TWELVE {
        r.ensure(!fams[n].bj_set.members.contains(&KnotId::Unknot), format!("no change on a minimal diagram of {n} unknots"));
    }
    let w = cx.weak_numbers()?;
    r.ensure(w.violations.is_empty(), "weak numbers satisfy the recursion");
    for o in w.notes.iter().filter(|n| n.starts_with("override")) {
        r.line(o.clone());
    }
    for n in TWELVE {
        let v = w.values[n];
        r.ensure(v == Bound::exact(2), format!("u_BJ^w({n}) = {v}"));
    }
    let v = w.values["K13n3370"];
    r.ensure(v == Bound::exact(3), format!("u_BJ^w(K13n3370) = {v}"));
    let s = strong_bj_interval(k13, cx.ledger)?;
    r.ensure(s == Bound { lo: 2, hi: Some(3) }, format!("u_BJ^s(K13n3370) in {s}"));
    for n in TWELVE {
        let s = strong_bj_interval(&fams[n].bj_set, cx.ledger)?;
        r.ensure(s == Bound::exact(2), format!("u_BJ^s({n}) = {s}"));
    }
    let u = cx.ledger.get("K11n21").map(adjacency_upper_bound).unwrap_or(u32::MAX);
    r.ensure(u < v.lo, format!("u(K13n3370) <= {u} < {} = u_BJ^w(K13n3370)", v.lo));
    r.line("if u = u_BJ^s held for the three 12-crossing knots, each would have u = 2, so \
            u_BJ^s(K13n3370) = 3 > 2 >= u(K13n3370); at least one of the four knots has u < u_BJ^s");
    let (a, b) = (fixtures::braid("K12n512"), fixtures::braid("9_38"));
    if let (Some(a), Some(b)) = (a, b) {
        let ids = [&a, &b]
            .iter()
            .map(|w| Ok(identify(&Diagram::from_braid(w).map_err(|e| BjError::UnknownKnot(e.to_string()))?, cx.table, cx.budget)?.id.to_string()))
            .collect::<Result<Vec<_>, BjError>>()?;
        r.ensure(
            a.letter_differences(&b).is_some_and(|d| d.len() == 1) && ids == ["K12n512", "9_38"],
            "K12n512 is one crossing change from 9_38",
        );
    }
    Ok(())
}

fn tabulation(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let counts: BTreeMap<usize, usize> = fixtures::alternating_counts().into_iter().collect();
    for k in 3..=9 {
        let refs = enumerate_reference_diagrams(k, cx.limits)?;
        let spans = refs
            .diagrams()
            .par_iter()
            .map(|d| Ok(jones_polynomial(d)?.span()))
            .collect::<Result<Vec<_>, BjError>>()?;
        r.ensure(
            refs.len() == counts[&k] && spans.iter().all(|&s| s == k as i64),
            format!("k={k}: {} reference diagrams (table {}), every jones span {k}", refs.len(), counts[&k]),
        );
    }
    Ok(())
}

fn random_diagram(rng: &mut ChaCha8Rng, pool: &[Diagram]) -> Diagram {
    let d = &pool[rng.gen_range(0..pool.len())];
    (0..d.crossings()).fold(d.clone(), |e, c| if rng.gen() { e.change_crossing(c) } else { e })
}

fn property_suites(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    let pool: Vec<Diagram> = cx
        .table
        .entries()
        .iter()
        .filter(|e| !e.is_composite() && e.crossing_number <= 9)
        .map(|e| e.diagram.clone())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    // invariants under random moves and flypes
    let starts: Vec<(Diagram, Vec<u64>)> = (0..1000)
        .map(|_| (random_diagram(&mut rng, &pool), (0..6).map(|_| rng.gen()).collect()))
        .collect();
    let changed = starts
        .par_iter()
        .map(|(d, picks)| {
            let mut e = d.clone();
            for (i, &p) in picks.iter().enumerate() {
                if i % 3 == 2 {
                    let fl = enumerate_flypes(&e);
                    if !fl.is_empty() {
                        e = apply_flype(&e, &fl[p as usize % fl.len()]).expect("enumerated flypes apply");
                    }
                    continue;
                }
                let moves: Vec<_> = enumerate_moves(&e, Growth::All)
                    .into_iter()
                    .filter(|m| e.crossings() as i64 + m.delta() <= d.crossings() as i64 + 3)
                    .collect();
                if !moves.is_empty() {
                    e = apply_move(&e, &moves[p as usize % moves.len()]).expect("enumerated moves apply");
                }
            }
            let same = jones_polynomial(&e)? == jones_polynomial(d)?
                && alexander_polynomial(&e)? == alexander_polynomial(d)?
                && determinant(&e) == determinant(d)
                && signature(&e) == signature(d);
            Ok(usize::from(!same))
        })
        .collect::<Result<Vec<_>, BjError>>()?;
    let bad: usize = changed.iter().sum();
    r.ensure(bad == 0, format!("1000 perturbed diagrams keep jones, alexander, determinant and signature ({bad} differ)"));

    // crossing changes
    let mut bad = 0;
    for _ in 0..1000 {
        let d = random_diagram(&mut rng, &pool);
        let c = rng.gen_range(0..d.crossings());
        let e = d.change_crossing(c);
        if e.change_crossing(c) != d || (e.writhe() - d.writhe()).abs() != 2 || e.writhe() - d.writhe() != -2 * d.sign(c) as i64 {
            bad += 1;
        }
    }
    r.ensure(bad == 0, "1000 crossing changes are involutions moving the writhe by 2");

    // transport square on every minimal diagram through eight crossings
    let mut diagrams = Vec::new();
    for n in 3..=8 {
        let refs = enumerate_reference_diagrams(n, cx.limits)?;
        diagrams.extend(crossing_change_closure(&refs).map(|v| v.diagram));
    }
    let counts = diagrams
        .par_iter()
        .map(|d| {
            let mut triples = 0usize;
            let mut bad = 0usize;
            for f in enumerate_flypes(d) {
                let e = apply_flype(d, &f).expect("enumerated flypes apply");
                for i in 0..d.crossings() {
                    triples += 1;
                    let ok = transport_crossing_change(d, &f, i).is_ok_and(|t| {
                        apply_flype(&d.change_crossing(i), &t.flype)
                            .is_ok_and(|left| left.isomorphic(&e.change_crossing(t.crossing)))
                    });
                    bad += usize::from(!ok);
                }
            }
            (triples, bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    r.ensure(
        counts.1 == 0,
        format!("crossing change commutes with flypes on {} triples over {} diagrams", counts.0, diagrams.len()),
    );

    // lemma chain
    let small = cx.small_records()?;
    let w = weak_bj_numbers(small, cx.table, &BTreeMap::new(), WeakOptions::default())?;
    let chain = check_lemma_chain(small, &w, cx.ledger)?;
    r.ensure(chain.holds(), format!("u <= u_BJ^s <= u_BJ^w for the {} knots through eight crossings", small.len()));
    for v in &chain.violations {
        r.failures.push(v.clone());
    }

    // half the crossings suffice
    let mut checked = 0;
    let mut bad = 0;
    for n in 3..=8 {
        for d in enumerate_reference_diagrams(n, cx.limits)?.diagrams() {
            let mut change: Vec<usize> = (0..n)
                .filter(|&c| !d.visit_over(d.visits(c).into_iter().min().expect("two visits")))
                .collect();
            if 2 * change.len() > n {
                change = (0..n).filter(|c| !change.contains(c)).collect();
            }
            let u = change.iter().fold(d.clone(), |e, &c| e.change_crossing(c));
            checked += 1;
            let ok = 2 * change.len() <= n && search_unknot(&u, cx.budget).is_some_and(|c| c.verify(&u));
            bad += usize::from(!ok);
        }
    }
    r.ensure(bad == 0, format!("{checked} reference diagrams unknot by changing at most half their crossings"));
    Ok(())
}

fn braid_adjacency(cx: &Context, r: &mut Report) -> Result<(), BjError> {
    for (a_name, b_name) in fixtures::ADJACENT_BRAIDS {
        let (a, b) = (
            fixtures::braid(a_name).expect("bundled braid"),
            fixtures::braid(b_name).expect("bundled braid"),
        );
        let diff = a.letter_differences(&b).unwrap_or_default();
        let one_sign = diff.len() == 1 && a.letters()[diff[0]] == -b.letters()[diff[0]];
        r.ensure(one_sign, format!("{a_name} / {b_name}: words differ in the sign of one letter"));
        let to = |w| Diagram::from_braid(w).map_err(|e| BjError::UnknownKnot(e.to_string()));
        let (da, db) = (to(&a)?, to(&b)?);
        let changes = (0..da.crossings())
            .filter(|&c| da.change_crossing(c).isomorphic(&db))
            .count();
        r.ensure(changes == 1, format!("{a_name} / {b_name}: closures differ by one crossing change"));
        let (fa, fb) = (insensitive(&da)?, insensitive(&db)?);
        r.ensure(fa != fb, format!("{a_name} / {b_name}: fingerprints differ"));
        for (label, d) in [(a_name, &da), (b_name, &db)] {
            let id = identify(d, cx.table, cx.budget)?.id;
            match id.name() {
                Some(n) if n == label => r.line(format!("{label} closure identifies as {n}")),
                Some(n) => r.line(format!("note: the word listed for {label} closes to {n}")),
                None => r.line(format!("{label} closure: no table entry, compared by fingerprint only")),
            }
        }
    }
    let entry = cx.table.get("10_113").ok_or_else(|| BjError::UnknownKnot("10_113".into()))?;
    let target = entry.fingerprint.insensitive();
    let pair = ["K13n1587", "10_113"];
    let mut hits = Vec::new();
    for n in pair {
        let d = Diagram::from_braid(&fixtures::braid(n).expect("bundled braid"))
            .map_err(|e| BjError::UnknownKnot(e.to_string()))?;
        if insensitive(&d)? == target {
            hits.push(n);
        }
    }
    r.ensure(hits.len() == 1, "exactly one closure of the K13n1587 / 10_113 pair matches the table entry of 10_113");
    Ok(())
}
