use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use spk_bench::{golden, small_family, wide};
use spk_core::matrix::{build_matrix, linear_spanning_set, spanning_set};
use spk_core::net::{build_skeleton, contract, dr_check, enumerate_linkings, find_proof_net};
use spk_core::{crosscheck_family, decompose, prove, CrossConfig, LogicId, Sequent};

fn inputs() -> Vec<Sequent> {
    golden().into_iter().chain(wide()).collect()
}

fn label(s: &Sequent) -> String {
    format!("{} {}", s.logic().name(), s)
}

fn bench_prover(c: &mut Criterion) {
    let mut g = c.benchmark_group("prove");
    for s in inputs() {
        g.bench_with_input(BenchmarkId::from_parameter(label(&s)), &s, |b, s| b.iter(|| prove(black_box(s))));
    }
    g.finish();
}

fn bench_matrix(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix");
    for s in inputs().into_iter().filter(|s| matches!(s.logic(), LogicId::Classical | LogicId::Mll | LogicId::Mill)) {
        let m = build_matrix(&decompose(&s)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(label(&s)), &m, |b, m| {
            b.iter(|| match s.logic() {
                LogicId::Classical => spanning_set(black_box(m)).is_some(),
                _ => linear_spanning_set(black_box(m)).is_some(),
            })
        });
    }
    g.finish();
}

fn bench_net_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("net-search");
    for s in inputs().into_iter().filter(|s| s.logic() != LogicId::Classical) {
        g.bench_with_input(BenchmarkId::from_parameter(label(&s)), &s, |b, s| b.iter(|| find_proof_net(black_box(s))));
    }
    g.finish();
}

/// Both graph criteria over every linking of one sequent.
fn bench_criteria(c: &mut Criterion) {
    let s = spk_bench::sequent("(A*A)*(A*A) => (A*A)*(A*A)", LogicId::Mll);
    let linkings: Vec<_> = enumerate_linkings(&build_skeleton(&s), false).collect();
    let mut g = c.benchmark_group("criteria");
    g.bench_function("switching", |b| b.iter(|| linkings.iter().filter(|ps| dr_check(ps).is_net).count()));
    g.bench_function("contraction", |b| b.iter(|| linkings.iter().filter(|ps| contract(ps).verdict.is_net).count()));
    g.finish();
}

fn bench_crosscheck(c: &mut Criterion) {
    let mut g = c.benchmark_group("crosscheck");
    g.sample_size(10);
    for logic in [LogicId::Mll, LogicId::LambekL, LogicId::Nl] {
        let spec = small_family(logic);
        g.bench_with_input(BenchmarkId::from_parameter(logic.name()), &spec, |b, spec| {
            b.iter(|| crosscheck_family(spec, &CrossConfig::default()))
        });
    }
    g.finish();
}

criterion_group!(engines, bench_prover, bench_matrix, bench_net_search, bench_criteria);
criterion_group!(families, bench_crosscheck);
criterion_main!(engines, families);
