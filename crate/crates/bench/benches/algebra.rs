use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use dsl_bench::{all_words, lie_element, ls_generator, word};
use dsl_core::brackets::{ari, ihara};
use dsl_core::comparison::theta_10_of;
use dsl_core::freelie::lie_basis;
use dsl_core::hopf::coproduct;
use dsl_core::Alphabet;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("products");
    for m in [3u32, 4, 5] {
        let x = all_words(Alphabet::X, m);
        g.bench_with_input(BenchmarkId::new("shuffle", m), &x, |b, x| {
            b.iter(|| black_box(x.shuffle(x).unwrap()))
        });
        let y = all_words(Alphabet::Y, m);
        g.bench_with_input(BenchmarkId::new("stuffle", m), &y, |b, y| {
            b.iter(|| black_box(y.stuffle(y).unwrap()))
        });
        let bb = all_words(Alphabet::B, m);
        g.bench_with_input(BenchmarkId::new("balanced", m), &bb, |b, p| {
            b.iter(|| black_box(p.balanced_stuffle(p).unwrap()))
        });
    }
    g.finish();
}

fn coproducts(c: &mut Criterion) {
    let mut g = c.benchmark_group("coproduct");
    for m in [6u32, 8, 10] {
        let p = lie_element(Alphabet::X, m, 2);
        g.bench_with_input(BenchmarkId::new("lie_x_depth2", m), &p, |b, p| {
            b.iter(|| black_box(coproduct(p)))
        });
    }
    g.finish();
}

fn brackets(c: &mut Criterion) {
    let mut g = c.benchmark_group("brackets");
    for (p, q) in [(3u32, 5u32), (3, 7), (5, 7)] {
        let (a, b) = (ls_generator(p), ls_generator(q));
        g.bench_function(BenchmarkId::new("ihara", format!("{p}x{q}")), |bch| {
            bch.iter(|| black_box(ihara(&a, &b).unwrap()))
        });
        let (ta, tb) = (theta_10_of(&a).unwrap(), theta_10_of(&b).unwrap());
        g.bench_function(BenchmarkId::new("ari", format!("{p}x{q}")), |bch| {
            bch.iter(|| black_box(ari(&ta, &tb).unwrap()))
        });
    }
    let b1 = word(Alphabet::B, &[1]);
    let b0b2 = lie_element(Alphabet::B, 3, 1);
    g.bench_function("ari_small", |bch| {
        bch.iter(|| black_box(ari(&b1, &b0b2).unwrap()))
    });
    g.finish();
}

fn lyndon(c: &mut Criterion) {
    let mut g = c.benchmark_group("lie_basis");
    for m in [8u32, 10] {
        g.bench_with_input(BenchmarkId::new("x_depth3", m), &m, |b, &m| {
            b.iter(|| black_box(lie_basis(Alphabet::X, m, 3)))
        });
    }
    g.bench_function("b_weight6_depth3", |b| {
        b.iter(|| black_box(lie_basis(Alphabet::B, 6, 3)))
    });
    g.finish();
}

criterion_group!(benches, products, coproducts, brackets, lyndon);
criterion_main!(benches);
