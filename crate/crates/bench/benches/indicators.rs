use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fsind_core::constructors::builtin;
use fsind_core::formulas::{fs_via_symmetric, symmetric_form_data};
use fsind_core::pivotal::fs_indicator;
use fsind_core::qsl2::qsl2_indicator;
use fsind_core::{FieldTag, Matrix};

fn definition_path(c: &mut Criterion) {
    let mut group = c.benchmark_group("definition");
    for (name, module) in [("S3", "std"), ("D4", "V2"), ("Q8", "V2")] {
        let doc = builtin(name).unwrap().build().unwrap();
        let v = doc.module(module).unwrap().clone();
        group.bench_function(BenchmarkId::new(name, module), |b| {
            b.iter(|| fs_indicator(&doc.algebra, &v, None).unwrap())
        });
    }
    group.finish();
}

fn symmetric_path(c: &mut Criterion) {
    let doc = builtin("Q8").unwrap().build().unwrap();
    let v = doc.module("V2").unwrap().clone();
    let data = symmetric_form_data(&doc.algebra).unwrap();
    c.bench_function("symmetric/Q8/V2", |b| {
        b.iter(|| fs_via_symmetric(&doc.algebra, &v, &data, None).unwrap())
    });
}

fn quantum_sl2(c: &mut Criterion) {
    let mut group = c.benchmark_group("qsl2");
    group.sample_size(10);
    for two_ell in [2u32, 4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(two_ell), &two_ell, |b, &n| {
            b.iter(|| qsl2_indicator(n, false).unwrap())
        });
    }
    group.finish();
}

fn rational_kernel(c: &mut Criterion) {
    // Deterministic 24 x 30 integer matrix of rank 20.
    let f = FieldTag::Rational;
    let left = Matrix::from_fn(24, 20, f, |r, k| fsind_core::Scalar::from_int(f, ((r * 7 + k * 3) % 11) as i64 - 5));
    let right = Matrix::from_fn(20, 30, f, |k, c| fsind_core::Scalar::from_int(f, ((k * 5 + c * 13) % 9) as i64 - 4));
    let m = left.mul(&right).unwrap();
    c.bench_function("kernel/24x30", |b| b.iter(|| m.kernel_basis()));
}

criterion_group!(benches, definition_path, symmetric_path, quantum_sl2, rational_kernel);
criterion_main!(benches);
