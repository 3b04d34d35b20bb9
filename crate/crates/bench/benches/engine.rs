use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qtri_bench::{a2, a2_braiding, a2_operands, geometric_fractions};
use qtri_core::nichols_analysis;
use qtri_core::normalform::DoubleAlgebra;

fn symmetrizer(c: &mut Criterion) {
    let b = a2_braiding();
    c.bench_function("symmetrizer A2 through degree 5", |bench| bench.iter(|| nichols_analysis(black_box(&b), 5)));
}

fn normal_form(c: &mut Criterion) {
    let data = a2();
    c.bench_function("normal-form multiply A2", |bench| {
        bench.iter(|| {
            // fresh algebra so the straightening memo starts empty
            let a = DoubleAlgebra::new(&data);
            let (x, y) = a2_operands(&a);
            a.multiply(black_box(&x), black_box(&y))
        })
    });
}

fn scalar_gcd(c: &mut Criterion) {
    let terms = geometric_fractions(12);
    c.bench_function("rational function sum of 1/(q^k - 1)", |bench| {
        bench.iter(|| terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + black_box(t)))
    });
}

criterion_group!(benches, symmetrizer, normal_form, scalar_gcd);
criterion_main!(benches);
