use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use plausible_core::corpus::{random_formulas, DEFAULT_SEED};
use plausible_core::folp::{check_axioms, PlausibleStructure};
use plausible_core::pseudotopology::PseudoTopology;
use plausible_core::{enumerate_algebras, enumerate_spaces, find_countermodel, parse, prove};

fn tableau(c: &mut Criterion) {
    let mut group = c.benchmark_group("prove");
    for goal in [
        "~#(p & ~p)",
        "#(#p -> #p)",
        "#p -> #(p | q)",
        "#(p & q) <-> #(q & p)",
        "(#p & #q) -> #(p & q)",
        "#p -> #q",
    ] {
        let f = parse(goal).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(goal), &f, |b, f| {
            b.iter(|| prove(&[], black_box(f)).unwrap())
        });
    }
    group.finish();

    let corpus = random_formulas(DEFAULT_SEED, 100, 12);
    c.bench_function("prove/corpus-100", |b| {
        b.iter(|| {
            corpus
                .iter()
                .filter(|f| prove(&[], f).map(|r| r.is_closed()).unwrap_or(false))
                .count()
        })
    });
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in 1..=3 {
        group.bench_with_input(BenchmarkId::new("algebras", n), &n, |b, &n| {
            b.iter(|| enumerate_algebras(n).unwrap().len())
        });
    }
    for n in 1..=4 {
        group.bench_with_input(BenchmarkId::new("spaces", n), &n, |b, &n| {
            b.iter(|| enumerate_spaces(n).unwrap().len())
        });
    }
    group.finish();

    let valid = parse("#(p & q) -> #(p | r)").unwrap();
    let invalid = parse("#p -> #q").unwrap();
    let mut group = c.benchmark_group("countermodel");
    group.sample_size(10);
    group.bench_function("valid-up-to-3", |b| b.iter(|| find_countermodel(&valid, 3).unwrap()));
    group.bench_function("first-witness", |b| b.iter(|| find_countermodel(&invalid, 3).unwrap()));
    group.finish();
}

fn first_order(c: &mut Criterion) {
    let omega = PseudoTopology::principal(3, 0);
    let m = PlausibleStructure::unary(3, &[("R", 0b011), ("S", 0b110)], &omega).unwrap();
    let phi = plausible_core::parse_fo("R(x)").unwrap();
    let psi = plausible_core::parse_fo("S(x) | exists y. R(y) & ~S(y)").unwrap();
    c.bench_function("folp/check-axioms", |b| {
        b.iter(|| check_axioms(&m, black_box(&phi), black_box(&psi), "x").unwrap())
    });
}

criterion_group!(benches, tableau, oracles, first_order);
criterion_main!(benches);
