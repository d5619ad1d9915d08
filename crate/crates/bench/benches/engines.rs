use criterion::{black_box, criterion_group, criterion_main, Criterion};
use grp_core::atlas::{gl, gsp_extension, qutrit_normalizer, sym, wreath};
use grp_core::bounds::{cs_bounds, g89_min_length};
use grp_core::fpalgebra::spin_all_lines;
use grp_core::group::{derived_series, enumerate_closure};
use grp_core::perm::schreier_sims;
use grp_core::GroupContext;

fn bsgs(c: &mut Criterion) {
    let s4 = sym(4).unwrap();
    let w = wreath(&s4, &s4).unwrap();
    c.bench_function("schreier_sims S4 wr S4", |b| b.iter(|| schreier_sims(black_box(w.generators())).unwrap().order()));
    let s7 = sym(7).unwrap();
    c.bench_function("schreier_sims S7", |b| b.iter(|| schreier_sims(black_box(s7.generators())).unwrap().order()));
}

fn closure(c: &mut Criterion) {
    let g = gl(2, 3).unwrap();
    let ctx = GroupContext::default();
    c.bench_function("closure GL2(3)", |b| b.iter(|| enumerate_closure(g.identity(), g.generators(), &ctx).unwrap().len()));
    let s6 = sym(6).unwrap();
    c.bench_function("closure S6", |b| b.iter(|| enumerate_closure(s6.identity(), s6.generators(), &ctx).unwrap().len()));
}

fn series(c: &mut Criterion) {
    let gsp = gsp_extension(&gl(2, 3).unwrap(), 3, 1).unwrap();
    c.bench_function("derived series GL2(3) x E3", |b| {
        b.iter(|| derived_series(&gsp.subgroup(gsp.generators().to_vec())).unwrap().report.d)
    });
    let s4 = sym(4).unwrap();
    let w = wreath(&s4, &s4).unwrap();
    c.bench_function("derived series S4 wr S4", |b| {
        b.iter(|| derived_series(&w.subgroup(w.generators().to_vec())).unwrap().report.d)
    });
}

fn linear(c: &mut Criterion) {
    let (_, model) = qutrit_normalizer(7).unwrap();
    let gens = model.generators();
    c.bench_function("spin all lines F7^3", |b| b.iter(|| spin_all_lines(black_box(&gens)).unwrap().irreducible));
}

fn bounds(c: &mut Criterion) {
    c.bench_function("cs_bounds 1..100", |b| b.iter(|| (1..100).map(|d| cs_bounds(black_box(d)).upper.bits()).sum::<u64>()));
    c.bench_function("g89_min_length 500", |b| b.iter(|| g89_min_length(black_box(500))));
}

criterion_group!(benches, bsgs, closure, series, linear, bounds);
criterion_main!(benches);
