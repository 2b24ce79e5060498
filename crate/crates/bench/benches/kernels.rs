use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kitaev::graphs::{reduce_to_standard, scramble, valid_slides};
use kitaev::hopf::{builtin, characters, GroupLike};
use kitaev::protect::{group_oracle, protected_space, protected_space_with, Strategy};
use kitaev_bench::{graph, protected_spec, space};

fn graphs(c: &mut Criterion) {
    let base = graph(2, 1);
    c.bench_function("scramble and reduce Φ(2,1)", |b| {
        let mut seed = 0;
        b.iter(|| {
            seed += 1;
            let (moved, _) = scramble(&base, 20, seed).unwrap();
            black_box(reduce_to_standard(&moved).unwrap())
        })
    });
}

fn lattice(c: &mut Criterion) {
    let torus = space("group:S3", 1, 0);
    c.bench_function("cilium modules S3 Φ(1,0)", |b| b.iter(|| black_box(torus.cilium_modules().unwrap())));
    let s = space("group:S3", 1, 1);
    let (x, y) = valid_slides(s.graph())[0];
    c.bench_function("edge slide S3 Φ(1,1)", |b| b.iter(|| black_box(s.mu_slide(x, y).unwrap())));
}

fn protect(c: &mut Criterion) {
    let torus = protected_spec("sweedler", 1, 0);
    c.bench_function("Prot sweedler Φ(1,0)", |b| b.iter(|| black_box(protected_space(&torus).unwrap().dim)));
    let s3 = protected_spec("group:S3", 1, 1);
    let mut group = c.benchmark_group("Prot S3 Φ(1,1)");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| black_box(protected_space(&s3).unwrap().dim)));
    group.bench_function("one-shot", |b| {
        b.iter(|| black_box(protected_space_with(&s3, &Strategy::OneShot).unwrap().dim))
    });
    group.finish();
    let h = builtin("group:S3").unwrap();
    let one = GroupLike { element: h.one().clone() };
    let chi = characters(&h).remove(0);
    c.bench_function("group oracle S3 genus 2", |b| b.iter(|| black_box(group_oracle(&h, &one, &chi, 2).unwrap())));
}

criterion_group!(benches, graphs, lattice, protect);
criterion_main!(benches);
