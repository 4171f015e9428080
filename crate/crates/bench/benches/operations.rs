use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use thompson_core::folner::ball_profile;
use thompson_core::{
    ball, class_of, concat_product, diagram_to_nf, nf_multiply, nf_to_diagram, reduce_to_normal_form,
    subgraph_density,
};
use thompson_core::words::{reduce_with, Strategy};

fn normal_forms(c: &mut Criterion) {
    let xs = thompson_bench::elements(256, 20);
    c.bench_function("nf_multiply/256 pairs", |b| {
        b.iter(|| {
            for pair in xs.windows(2) {
                black_box(nf_multiply(&pair[0], &pair[1]));
            }
        })
    });
    let words: Vec<_> = xs.iter().map(|g| g.to_word().concat(&g.inverse().to_word())).collect();
    let mut group = c.benchmark_group("reduce g*g^-1");
    for strategy in [Strategy::Incremental, Strategy::Leftmost, Strategy::Rightmost] {
        group.bench_function(format!("{strategy:?}"), |b| {
            b.iter(|| {
                for w in &words {
                    black_box(reduce_with(w, strategy));
                }
            })
        });
    }
    group.finish();
    c.bench_function("reduce_to_normal_form/256", |b| {
        b.iter(|| {
            for w in &words {
                black_box(reduce_to_normal_form(w));
            }
        })
    });
}

fn diagrams(c: &mut Criterion) {
    let xs = thompson_bench::elements(256, 20);
    let ds: Vec<_> = xs.iter().map(nf_to_diagram).collect();
    c.bench_function("nf_to_diagram/256", |b| {
        b.iter(|| {
            for g in &xs {
                black_box(nf_to_diagram(g));
            }
        })
    });
    c.bench_function("concat_product/256 pairs", |b| {
        b.iter(|| {
            for pair in ds.windows(2) {
                black_box(concat_product(&pair[0], &pair[1]));
            }
        })
    });
    c.bench_function("diagram_to_nf/256", |b| {
        b.iter(|| {
            for d in &ds {
                black_box(diagram_to_nf(d).unwrap());
            }
        })
    });
    c.bench_function("class_of/256", |b| {
        b.iter(|| {
            for g in &xs {
                black_box(class_of(g));
            }
        })
    });
}

fn cayley(c: &mut Criterion) {
    let mut group = c.benchmark_group("cayley");
    group.sample_size(10);
    group.bench_function("ball(6)", |b| b.iter(|| black_box(ball(6).unwrap())));
    group.bench_function("ball_profile(7)", |b| b.iter(|| black_box(ball_profile(7, usize::MAX).unwrap())));
    group.bench_function("subgraph_density(ball(6))", |b| {
        b.iter_batched(|| ball(6).unwrap(), |s| black_box(subgraph_density(&s).unwrap()), BatchSize::LargeInput)
    });
    group.finish();
}

criterion_group!(benches, normal_forms, diagrams, cayley);
criterion_main!(benches);
