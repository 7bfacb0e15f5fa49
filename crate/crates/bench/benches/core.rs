use criterion::{black_box, criterion_group, criterion_main, Criterion};
use knotadj::fixtures;
use knotadj::identify::{identify, KnotTable};
use knotadj::invariants::Fingerprint;
use knotadj::moves::{detect_unknot, flype_orbit, UnknotBudget};
use knotadj::tabulate::{enumerate_reference_diagrams, TabulateLimits};

fn fingerprint(c: &mut Criterion) {
    let d = fixtures::family("K13n3370").unwrap().remove(0);
    c.bench_function("fingerprint 13 crossings", |b| b.iter(|| Fingerprint::of(black_box(&d)).unwrap()));
    let table = KnotTable::bundled();
    c.bench_function("identify 13 crossings", |b| {
        b.iter(|| identify(black_box(&d), table, UnknotBudget::default()).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("reference diagrams");
    g.sample_size(10);
    for k in [6, 8] {
        g.bench_function(format!("k={k}"), |b| {
            b.iter(|| enumerate_reference_diagrams(k, TabulateLimits::default()).unwrap())
        });
    }
    g.finish();
}

fn orbit(c: &mut Criterion) {
    let d = fixtures::family("K12n288").unwrap().remove(0).alternating_resolution();
    c.bench_function("flype orbit 12 crossings", |b| b.iter(|| flype_orbit(black_box(&d), 10_000).unwrap()));
}

fn unknot(c: &mut Criterion) {
    let d = fixtures::family("K11n21").unwrap().remove(0);
    let changed: Vec<_> = (0..d.crossings()).map(|i| d.change_crossing(i)).collect();
    c.bench_function("detect unknot on K11n21 neighbours", |b| {
        b.iter(|| {
            changed
                .iter()
                .filter(|e| detect_unknot(e, UnknotBudget::default()).is_unknot())
                .count()
        })
    });
}

criterion_group!(benches, fingerprint, enumeration, orbit, unknot);
criterion_main!(benches);
