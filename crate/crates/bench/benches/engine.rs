use criterion::{black_box, criterion_group, criterion_main, Criterion};
use edgereg::graph::{canonical_form, induced_matching_number, matching_number};
use edgereg::resolution::{betti_table, betti_table_with, EngineConfig, HomologyRoute};
use edgereg::{Field, Graph, MonomialIdeal};

fn powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    group.sample_size(10);
    for (name, g, k) in [
        ("C5^2", Graph::cycle(5).unwrap(), 2),
        ("C6^2", Graph::cycle(6).unwrap(), 2),
        ("K5^2", Graph::complete(5).unwrap(), 2),
        ("P6^3", Graph::path(6).unwrap(), 3),
    ] {
        let ideal = MonomialIdeal::edge_ideal(&g).unwrap().power(k).unwrap();
        group.bench_function(format!("{name} upper-koszul"), |b| {
            b.iter(|| betti_table(black_box(&ideal), Field::Rationals).unwrap())
        });
        group.bench_function(format!("{name} gf2"), |b| {
            b.iter(|| betti_table(black_box(&ideal), Field::Prime(2)).unwrap())
        });
    }
    let ideal = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap()).unwrap().power(2).unwrap();
    let cfg = EngineConfig {
        route: HomologyRoute::OrderComplex,
        ..EngineConfig::default()
    };
    group.bench_function("C5^2 order-complex", |b| {
        b.iter(|| betti_table_with(black_box(&ideal), Field::Rationals, &cfg).unwrap())
    });
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let g = Graph::from_builder_spec("anticycle:8").unwrap();
    c.bench_function("matching number anticycle:8", |b| b.iter(|| matching_number(black_box(&g))));
    c.bench_function("induced matching anticycle:8", |b| {
        b.iter(|| induced_matching_number(black_box(&g)).unwrap())
    });
    c.bench_function("canonical form anticycle:8", |b| b.iter(|| canonical_form(black_box(&g))));
}

criterion_group!(benches, powers, graphs);
criterion_main!(benches);
