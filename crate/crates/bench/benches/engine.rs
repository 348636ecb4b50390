use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use heiscat::bimodcat::{decompose_right, run_suite, BimodContext, Relation};
use heiscat::heisenberg::normal_form;
use heiscat::wreath::mult;
use heiscat::CartanData;
use heiscat_bench::{busy_element, dense_scalar, reversed_word};

fn cyclo_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclo_mul");
    for level in [2u32, 3, 5, 6] {
        let (a, b) = (dense_scalar(level, 2), dense_scalar(level, 5));
        group.bench_with_input(BenchmarkId::from_parameter(level), &level, |bench, _| {
            bench.iter(|| black_box(&a) * black_box(&b))
        });
    }
    group.finish();
}

fn wreath_mult(c: &mut Criterion) {
    let mut group = c.benchmark_group("wreath_mult");
    for (n, ell) in [(2usize, 1u32), (3, 1), (3, 2)] {
        let (x, y) = (busy_element(n, ell, 4), busy_element(n, ell, 5));
        group
            .bench_function(format!("n{n}_l{ell}"), |bench| bench.iter(|| mult(black_box(&x), black_box(&y)).unwrap()));
    }
    group.finish();
}

fn heisenberg_normal_form(c: &mut Criterion) {
    let a2 = CartanData::type_a(2);
    let mut group = c.benchmark_group("normal_form");
    for (len, level) in [(4usize, 2u32), (6, 2), (6, 3)] {
        let w = reversed_word(len, level);
        group.bench_function(format!("len{len}_level{level}"), |bench| {
            bench.iter(|| normal_form(black_box(&w), &a2).unwrap())
        });
    }
    group.finish();
}

fn relation_suite(c: &mut Criterion) {
    let ctx = BimodContext::new(1).unwrap();
    let mut group = c.benchmark_group("relation_suite");
    group.sample_size(10);
    group.bench_function("H3_n1_l1", |bench| bench.iter(|| run_suite(&ctx, Relation::H(3), 1).unwrap()));
    group.bench_function("isotopy1_n1_l1", |bench| bench.iter(|| run_suite(&ctx, Relation::Isotopy(1), 1).unwrap()));
    group.finish();
}

fn free_decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose_right");
    for (n, ell) in [(2usize, 1u32), (3, 2)] {
        let x = busy_element(n, ell, 6);
        group.bench_function(format!("n{n}_l{ell}"), |bench| bench.iter(|| decompose_right(black_box(&x)).unwrap()));
    }
    group.finish();
}

criterion_group!(scalars, cyclo_mul);
criterion_group!(algebra, wreath_mult, heisenberg_normal_form, free_decomposition);
criterion_group!(suites, relation_suite);
criterion_main!(scalars, algebra, suites);
