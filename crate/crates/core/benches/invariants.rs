use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qmq_core::builtin::{builtin_link, TABLE_LINKS};
use qmq_core::coloring::enumerate_colorings_with;
use qmq_core::diagram::LinkDiagram;
use qmq_core::module::{module_polynomial_with, QuandleModule};
use qmq_core::quandle::{conjugation_quandle, Endomorphism, GroupTable, Quandle};
use qmq_core::quiver::PushPolicy;
use qmq_core::table::{batch_table, orientation_variants, TableConfig};
use qmq_core::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn q5() -> (Quandle, QuandleModule, Vec<Endomorphism>) {
    let q = Quandle::parse(include_str!("../data/quandles/q5.qnd")).unwrap();
    let m = QuandleModule::parse(include_str!("../data/modules/q5_z3.mod")).unwrap();
    let f = Endomorphism::new(&q, Endomorphism::parse_one_based("3,3,4,3,3").unwrap()).unwrap();
    (q, m, vec![f])
}

fn table_links() -> Vec<LinkDiagram> {
    TABLE_LINKS
        .iter()
        .map(|n| builtin_link(n).unwrap())
        .collect()
}

fn colorings(c: &mut Criterion) {
    let q = conjugation_quandle(&GroupTable::symmetric(4).unwrap()).unwrap();
    let d = builtin_link("L7a7").unwrap();
    let mut g = c.benchmark_group("colorings_L7a7_S4");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| enumerate_colorings_with(black_box(&d), &q, exec))
        });
    }
    g.finish();
}

fn module_polynomials(c: &mut Criterion) {
    let (q, m, _) = q5();
    let mut g = c.benchmark_group("module_polynomial_q5");
    for d in [builtin_link("L6a4").unwrap(), builtin_link("L7a7").unwrap()] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, &d.name), &d, |b, d| {
                b.iter(|| module_polynomial_with(d, &q, &m, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn tables(c: &mut Criterion) {
    let (q, m, f) = q5();
    let links = table_links();
    let l6a4 = builtin_link("L6a4").unwrap();
    let mut g = c.benchmark_group("quiver_table_q5");
    g.sample_size(20);
    for (name, exec) in MODES {
        let cfg = TableConfig {
            quandle: &q,
            module: &m,
            endomorphisms: &f,
            policy: PushPolicy::RequireEndomorphism,
            exec,
        };
        g.bench_function(BenchmarkId::new("batch", name), |b| {
            b.iter(|| batch_table(&cfg, black_box(&links)).unwrap())
        });
        g.bench_function(BenchmarkId::new("variants_L6a4", name), |b| {
            b.iter(|| orientation_variants(&cfg, black_box(&l6a4)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, colorings, module_polynomials, tables);
criterion_main!(benches);
