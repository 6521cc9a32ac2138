use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use coconn_core::clutter::Clutter;
use coconn_core::complex::sigma_r;
use coconn_core::decomp::{find_shelling, is_vertex_decomposable, vd_sigma_via_ordering};
use coconn_core::fixtures;
use coconn_core::graph::{canonical_key, enumerate_graphs, Family};
use coconn_core::homology::{is_cohen_macaulay, FieldSpec};
use coconn_core::{Limits, VertexSet};

const L: Limits = Limits::DEFAULT;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_r");
    for n in [8, 12, 16] {
        let g = Family::Cycle(n).build().unwrap();
        group.bench_with_input(BenchmarkId::new("cycle_r3", n), &g, |b, g| {
            b.iter(|| sigma_r(black_box(g), VertexSet::EMPTY, 3).unwrap())
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let g = fixtures::gap_free_example_graph();
    let s = sigma_r(&g, VertexSet::EMPTY, 3).unwrap();
    c.bench_function("shelling/gap_free_example", |b| {
        b.iter(|| find_shelling(black_box(&s), L.max_shelling_facets, L.max_faces).unwrap())
    });
    c.bench_function("vd_generic/gap_free_example", |b| {
        b.iter(|| is_vertex_decomposable(black_box(&s), L.max_vd_facets).unwrap())
    });
    let grid = Family::Grid3(3).build().unwrap();
    c.bench_function("vd_ordering/grid3_r6", |b| b.iter(|| vd_sigma_via_ordering(black_box(&grid), 6).unwrap()));
}

fn homology(c: &mut Criterion) {
    let d = sigma_r(&Family::Cycle(8).build().unwrap(), VertexSet::EMPTY, 3).unwrap();
    for field in [FieldSpec::Q, FieldSpec::F2] {
        c.bench_function(&format!("cohen_macaulay/cycle8_r3/{field:?}"), |b| {
            b.iter(|| is_cohen_macaulay(black_box(&d), field, L.max_faces).unwrap())
        });
    }
}

fn clutters_and_graphs(c: &mut Criterion) {
    let g = Family::Ladder(5).build().unwrap();
    let complement = Clutter::con_r(&g, 4).complement();
    c.bench_function("chordal_clutter/ladder5_r4", |b| {
        b.iter(|| black_box(&complement).is_chordal(L.max_circuits).unwrap())
    });
    let graphs = enumerate_graphs(6, false, L.max_canon_n).unwrap();
    c.bench_function("canonical_key/all_n6", |b| {
        b.iter(|| graphs.iter().map(|g| canonical_key(g).unwrap()).collect::<Vec<_>>())
    });
}

criterion_group!(benches, construction, decomposition, homology, clutters_and_graphs);
criterion_main!(benches);
